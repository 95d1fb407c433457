#include "grmod/instance_file.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

#include "graded/presets.hpp"

namespace grmod {

using graded::Axis;
using graded::Element;
using graded::Int;
using graded::Vec;

InstanceFileError::InstanceFileError(const std::string& origin, std::size_t line, const std::string& msg)
    : std::runtime_error(origin + (line ? ":" + std::to_string(line) : std::string()) + ": " + msg), line_(line) {}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

struct Entry {
  std::string key;                // first word of the left-hand side
  std::vector<std::string> args;  // remaining words ("mul 0 1" -> {"0", "1"})
  std::string value;
  std::size_t line = 0;
};

struct Section {
  std::string kind;   // group, ring, module, submodule, instance
  std::string label;  // submodule name
  std::size_t line = 0;
  std::vector<Entry> entries;
};

class Parser {
 public:
  explicit Parser(std::string origin) : origin_(std::move(origin)) {}

  [[noreturn]] void fail(std::size_t line, const std::string& msg) const { throw InstanceFileError(origin_, line, msg); }

  std::vector<Section> sections(std::istream& in) {
    std::vector<Section> out;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
      ++lineno;
      auto hash = raw.find('#');
      std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']') fail(lineno, "unterminated section header");
        auto parts = words(line.substr(1, line.size() - 2));
        if (parts.empty()) fail(lineno, "empty section header");
        Section s;
        s.kind = parts[0];
        s.line = lineno;
        static const std::set<std::string> kinds{"instance", "group", "ring", "module", "submodule"};
        if (!kinds.count(s.kind)) fail(lineno, "unknown section [" + s.kind + "]");
        if (s.kind == "submodule") {
          if (parts.size() != 2) fail(lineno, "expected [submodule NAME]");
          s.label = parts[1];
        } else if (parts.size() != 1) {
          fail(lineno, "section [" + s.kind + "] takes no label");
        }
        out.push_back(std::move(s));
        continue;
      }
      auto eq = line.find('=');
      if (eq == std::string::npos) fail(lineno, "expected 'key = value'");
      if (out.empty()) fail(lineno, "entry outside of any section");
      auto lhs = words(line.substr(0, eq));
      if (lhs.empty()) fail(lineno, "missing key");
      Entry e;
      e.key = lhs[0];
      e.args.assign(lhs.begin() + 1, lhs.end());
      e.value = trim(line.substr(eq + 1));
      e.line = lineno;
      out.back().entries.push_back(std::move(e));
    }
    return out;
  }

  Int integer(const std::string& text, std::size_t line) const {
    Int v = 0;
    const char* b = text.data();
    const char* e = b + text.size();
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e) fail(line, "expected an integer, got '" + text + "'");
    return v;
  }

  Vec integers(const std::string& text, std::size_t line) const {
    Vec out;
    for (const std::string& w : words(text)) out.push_back(integer(w, line));
    return out;
  }

  std::size_t index(const std::string& text, std::size_t line) const {
    Int v = integer(text, line);
    if (v < 0) fail(line, "index must be non-negative");
    return static_cast<std::size_t>(v);
  }

  std::vector<Axis> axes(const std::string& text, std::size_t line) const {
    static const std::regex pair(R"(\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
    std::vector<Axis> out;
    std::string rest;
    auto it = std::sregex_iterator(text.begin(), text.end(), pair);
    std::size_t last = 0;
    for (; it != std::sregex_iterator(); ++it) {
      rest += text.substr(last, it->position() - last);
      last = it->position() + it->length();
      Axis a{integer((*it)[1], line), integer((*it)[2], line)};
      if (a.modulus < 0) fail(line, "axis modulus must be >= 0");
      out.push_back(a);
    }
    rest += text.substr(last);
    if (!trim(rest).empty() || out.empty()) fail(line, "expected axes as '(modulus,degree) ...'");
    return out;
  }

  bool boolean(const std::string& text, std::size_t line) const {
    if (text == "true") return true;
    if (text == "false") return false;
    fail(line, "expected true or false");
  }

 private:
  std::string origin_;
};

/// Single-valued and table entries of one section, with unknown-key checks.
class Fields {
 public:
  Fields(const Parser& p, const Section& s, std::set<std::string> scalar, std::set<std::string> tables,
         std::set<std::string> repeated = {})
      : p_(p), s_(s) {
    for (const Entry& e : s.entries) {
      if (tables.count(e.key)) {
        if (e.args.size() != 2) p.fail(e.line, "'" + e.key + "' needs two indices, as in '" + e.key + " 0 1 = ...'");
        tables_[e.key].push_back(&e);
        continue;
      }
      if (!e.args.empty()) p.fail(e.line, "unexpected words after key '" + e.key + "'");
      if (repeated.count(e.key)) {
        repeated_[e.key].push_back(&e);
      } else if (scalar.count(e.key)) {
        if (scalar_.count(e.key)) p.fail(e.line, "duplicate key '" + e.key + "'");
        scalar_[e.key] = &e;
      } else {
        p.fail(e.line, "unknown key '" + e.key + "' in [" + s.kind + "]");
      }
    }
  }

  const Entry* get(const std::string& key) const {
    auto it = scalar_.find(key);
    return it == scalar_.end() ? nullptr : it->second;
  }

  const Entry& require(const std::string& key) const {
    const Entry* e = get(key);
    if (!e) p_.fail(s_.line, "[" + s_.kind + "] needs '" + key + "'");
    return *e;
  }

  void forbid(const std::string& key, const std::string& why) const {
    if (const Entry* e = get(key)) p_.fail(e->line, "'" + key + "' " + why);
    auto it = tables_.find(key);
    if (it != tables_.end()) p_.fail(it->second.front()->line, "'" + key + "' " + why);
  }

  std::vector<const Entry*> table(const std::string& key) const {
    auto it = tables_.find(key);
    return it == tables_.end() ? std::vector<const Entry*>{} : it->second;
  }

  std::vector<const Entry*> all(const std::string& key) const {
    auto it = repeated_.find(key);
    return it == repeated_.end() ? std::vector<const Entry*>{} : it->second;
  }

 private:
  const Parser& p_;
  const Section& s_;
  std::map<std::string, const Entry*> scalar_;
  std::map<std::string, std::vector<const Entry*>> tables_, repeated_;
};

std::vector<std::vector<Element>> structure_table(const Parser& p, const Fields& f, const std::string& key,
                                                  std::size_t rows, std::size_t cols, std::size_t width) {
  std::vector<std::vector<Element>> t(rows, std::vector<Element>(cols, Element(Vec(width, 0))));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Entry* e : f.table(key)) {
    std::size_t i = p.index(e->args[0], e->line), j = p.index(e->args[1], e->line);
    if (i >= rows || j >= cols) p.fail(e->line, key + " index out of range");
    if (!seen.insert({i, j}).second) p.fail(e->line, "duplicate entry " + key + " " + e->args[0] + " " + e->args[1]);
    Vec v = p.integers(e->value, e->line);
    if (v.size() != width) p.fail(e->line, key + " entry needs " + std::to_string(width) + " coordinates");
    t[i][j] = Element(std::move(v));
  }
  return t;
}

graded::RingPtr build_ring(const Parser& p, const Section& s, graded::GradeGroup group) {
  Fields f(p, s, {"preset", "moduli", "modulus", "length", "axes", "unity"}, {"mul"});
  std::string preset = f.get("preset") ? f.get("preset")->value : "explicit";
  auto only = [&](std::set<std::string> allowed) {
    for (const char* k : {"moduli", "modulus", "length", "axes", "unity", "mul"})
      if (!allowed.count(k)) f.forbid(k, "does not apply to ring preset '" + preset + "'");
  };
  if (preset == "integers") {
    only({});
    return graded::integers(group);
  }
  if (preset == "componentwise-product") {
    only({"moduli"});
    const Entry& e = f.require("moduli");
    Vec m = p.integers(e.value, e.line);
    if (m.empty()) p.fail(e.line, "moduli needs at least one entry");
    return graded::product_ring(group, m);
  }
  if (preset == "gaussian") {
    only({"modulus"});
    if (group.order() != 2) p.fail(s.line, "the gaussian preset is graded by Z_2; set [group] order = 2");
    const Entry& e = f.require("modulus");
    return graded::gaussian_ring(p.integer(e.value, e.line));
  }
  if (preset == "truncated-polynomial") {
    only({"modulus", "length"});
    const Entry& m = f.require("modulus");
    const Entry& d = f.require("length");
    return graded::truncated_polynomial_ring(p.integer(m.value, m.line), p.integer(d.value, d.line), group);
  }
  if (preset != "explicit") p.fail(f.get("preset")->line, "unknown ring preset '" + preset + "'");
  only({"axes", "unity", "mul"});
  const Entry& ax = f.require("axes");
  std::vector<Axis> axes = p.axes(ax.value, ax.line);
  const Entry& u = f.require("unity");
  Vec unity = p.integers(u.value, u.line);
  if (unity.size() != axes.size()) p.fail(u.line, "unity needs one coordinate per axis");
  auto mul = structure_table(p, f, "mul", axes.size(), axes.size(), axes.size());
  try {
    return graded::GradedRing::create(group, std::move(axes), Element(std::move(unity)), std::move(mul));
  } catch (const std::invalid_argument& e) {
    p.fail(s.line, e.what());
  }
}

graded::ModulePtr build_module(const Parser& p, const Section& s, const graded::RingPtr& ring) {
  Fields f(p, s, {"preset", "axes", "factors"}, {"act"});
  std::string preset = f.get("preset") ? f.get("preset")->value : "explicit";
  try {
    if (preset == "regular") {
      f.forbid("axes", "does not apply to the regular module");
      f.forbid("factors", "does not apply to the regular module");
      f.forbid("act", "does not apply to the regular module");
      return graded::regular_module(ring);
    }
    const Entry& ax = f.require("axes");
    std::vector<Axis> axes = p.axes(ax.value, ax.line);
    if (preset == "coordinatewise-scalar") {
      f.forbid("factors", "only applies to componentwise-product");
      f.forbid("act", "does not apply to a preset module");
      return graded::scalar_module(ring, std::move(axes));
    }
    if (preset == "componentwise-product") {
      f.forbid("act", "does not apply to a preset module");
      const Entry& fe = f.require("factors");
      std::vector<std::size_t> factors;
      for (Int v : p.integers(fe.value, fe.line)) {
        if (v < 0) p.fail(fe.line, "factor indices must be non-negative");
        factors.push_back(static_cast<std::size_t>(v));
      }
      return graded::componentwise_module(ring, std::move(axes), factors);
    }
    if (preset != "explicit") p.fail(f.get("preset")->line, "unknown module preset '" + preset + "'");
    f.forbid("factors", "only applies to componentwise-product");
    auto act = structure_table(p, f, "act", ring->dim(), axes.size(), axes.size());
    return graded::GradedModule::create(ring, std::move(axes), std::move(act));
  } catch (const InstanceFileError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    p.fail(s.line, e.what());
  }
}

}  // namespace

InstanceFile parse_instance(std::istream& in, const std::string& origin) {
  Parser p(origin);
  std::vector<Section> secs = p.sections(in);

  InstanceFile out;
  out.origin = origin;
  const Section *group_s = nullptr, *ring_s = nullptr, *module_s = nullptr, *inst_s = nullptr;
  std::vector<const Section*> subs;
  std::set<std::string> sub_names;
  for (const Section& s : secs) {
    const Section** slot = s.kind == "group"      ? &group_s
                           : s.kind == "ring"     ? &ring_s
                           : s.kind == "module"   ? &module_s
                           : s.kind == "instance" ? &inst_s
                                                  : nullptr;
    if (slot) {
      if (*slot) p.fail(s.line, "duplicate section [" + s.kind + "]");
      *slot = &s;
    } else {
      if (!sub_names.insert(s.label).second) p.fail(s.line, "duplicate submodule '" + s.label + "'");
      subs.push_back(&s);
    }
  }
  if (!group_s) p.fail(0, "missing [group] section");

  if (inst_s) {
    Fields f(p, *inst_s, {"name", "description", "verify-axioms"}, {});
    if (auto e = f.get("name")) out.name = e->value;
    if (auto e = f.get("description")) out.description = e->value;
    if (auto e = f.get("verify-axioms")) out.axioms_checked = p.boolean(e->value, e->line);
  }
  if (out.name.empty()) out.name = std::filesystem::path(origin).stem().string();

  Fields gf(p, *group_s, {"order"}, {});
  const Entry& oe = gf.require("order");
  Int order = p.integer(oe.value, oe.line);
  if (order < 0) p.fail(oe.line, "group order must be >= 0 (0 means Z)");
  graded::GradeGroup group = order == 0 ? graded::GradeGroup::integers() : graded::GradeGroup::cyclic(order);

  if (!ring_s) p.fail(0, "missing [ring] section");
  if (!module_s) p.fail(0, "missing [module] section");

  graded::RingPtr ring = build_ring(p, *ring_s, group);
  if (out.axioms_checked) ring = graded::checked(ring);
  graded::ModulePtr module = build_module(p, *module_s, ring);
  if (out.axioms_checked) module = graded::checked(module);

  out.instance.family = "file";
  out.instance.id = out.name;
  out.instance.module = module;
  for (const Section* s : subs) {
    Fields f(p, *s, {"interpretation"}, {}, {"generator"});
    std::string interp = f.get("interpretation") ? f.get("interpretation")->value : "span";
    std::vector<Element> gens;
    for (const Entry* e : f.all("generator")) {
      Vec v = p.integers(e->value, e->line);
      std::size_t want = interp == "m-times-M" ? ring->dim() : module->dim();
      if (v.size() != want) p.fail(e->line, "generator needs " + std::to_string(want) + " coordinates");
      gens.push_back(interp == "m-times-M" ? ring->reduce(std::move(v)) : module->reduce(std::move(v)));
    }
    graded::SubLattice k = graded::zero_submodule(module);
    if (interp == "span") {
      k = graded::span(gens, module);
    } else if (interp == "m-times-M") {
      if (gens.size() != 1) p.fail(s->line, "m-times-M needs exactly one generator (a ring element)");
      if (!ring->homogeneous_degree(gens[0])) p.fail(s->line, "m-times-M needs a homogeneous ring element");
      k = graded::multiple_of_module(gens[0], module);
    } else {
      p.fail(f.get("interpretation")->line, "interpretation must be span or m-times-M");
    }
    out.instance.submodules.push_back({s->label, std::move(k)});
  }
  return out;
}

InstanceFile parse_instance_text(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  return parse_instance(in, origin);
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceFileError(path, 0, "cannot open file");
  return parse_instance(in, path);
}

}  // namespace grmod
