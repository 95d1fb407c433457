#include "grmod/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "graded/laws.hpp"
#include "grmod/golden.hpp"
#include "grmod/instance_file.hpp"

namespace grmod {

using namespace graded;
using Json = nlohmann::ordered_json;

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- output helpers

/// Left-aligned columns separated by two spaces.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

Json element_json(const Element& e) { return Json(e.coords); }

Json witness_json(const PredicateVerdict& v) {
  if (!v.a && !v.x) return nullptr;
  Json w = Json::object();
  if (v.a) w["a"] = element_json(*v.a);
  if (v.x) w["x"] = element_json(*v.x);
  return w;
}

std::string witness_text(const PredicateVerdict& v) {
  std::string out;
  if (v.a) out += "a=" + to_string(*v.a);
  if (v.x) out += std::string(out.empty() ? "" : " ") + "x=" + to_string(*v.x);
  return out;
}

// ---------------------------------------------------------------- shared state

struct Common {
  std::string budget_text;
  std::string json_path;
  std::optional<std::uint64_t> seed;
  bool timing = false;
};

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::int64_t millis(bool enabled) const {
    if (!enabled) return 0;
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
};

std::optional<QuantifierBudget> budget_of(const Common& c) {
  if (c.budget_text.empty()) return std::nullopt;
  try {
    return QuantifierBudget::parse(c.budget_text);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

InstanceFile load(const std::string& path) {
  try {
    return load_instance(path);
  } catch (const InstanceFileError& e) {
    throw InputError(e.what());
  } catch (const AxiomError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Analyzer make_analyzer(const ModulePtr& m, const Common& c) {
  try {
    return Analyzer(m, budget_of(c));
  } catch (const BudgetError& e) {
    throw InputError(e.what());
  }
}

const NamedSubmodule& find_submodule(const InstanceFile& f, const std::string& name) {
  for (const NamedSubmodule& s : f.instance.submodules)
    if (s.name == name) return s;
  throw InputError(f.origin + ": no submodule named '" + name + "'");
}

std::string canonical_predicate(const std::string& p) {
  static const std::map<std::string, std::string> alias{
      {"prime", "prime"},         {"prime-submodule", "prime"},   {"r", "r"},
      {"r-submodule", "r"},       {"special-r", "special-r"},     {"special-r-submodule", "special-r"},
      {"pure", "pure"},           {"hk-torsion", "hk-torsion"},   {"colon-prime", "colon-prime"},
      {"colon-r", "colon-r"},     {"graded", "graded"},
  };
  auto it = alias.find(p);
  if (it == alias.end()) throw InputError("unknown predicate '" + p + "'");
  return it->second;
}

PredicateVerdict evaluate(const std::string& pred, Analyzer& an, IdealAnalyzer& ideals, const SubLattice& k) {
  if (pred == "graded") {
    GradedCheck g = is_graded(k);
    PredicateVerdict v;
    v.value = g.graded;
    v.x = g.witness;
    v.method = "lattice/components";
    return v;
  }
  try {
    return evaluate_predicate(pred, an, ideals, k);
  } catch (const PreconditionError& e) {
    throw InputError(e.what());
  }
}

std::vector<Instance> grid_of(const std::vector<std::string>& fams, const GridOptions& opts) {
  std::vector<Instance> out;
  std::vector<std::string> names = fams;
  if (names.empty())
    for (const FamilyInfo& f : families()) names.push_back(f.name);
  for (const std::string& n : names) {
    try {
      for (Instance& i : family_instances(n, opts)) out.push_back(std::move(i));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------- commands

struct Outcome {
  int code = kOk;
  Json results = Json::array();
  Json summary = Json::object();
};

Outcome cmd_check(const Common& c, const std::string& file, const std::string& sub, const std::string& pred_in,
                  std::ostream& out) {
  InstanceFile f = load(file);
  const NamedSubmodule& s = find_submodule(f, sub);
  std::string pred = canonical_predicate(pred_in);
  Analyzer an = make_analyzer(f.instance.module, c);
  IdealAnalyzer ideals(f.instance.module->ring());
  Timer t;
  PredicateVerdict v = evaluate(pred, an, ideals, s.lattice);
  Outcome o;
  o.results.push_back({{"instance", f.name},
                       {"submodule", s.name},
                       {"predicate", pred},
                       {"value", v.value},
                       {"witness", witness_json(v)},
                       {"method", v.method},
                       {"millis", t.millis(c.timing)}});
  out << fmt::format("{} {} {}: {}\n", f.name, s.name, pred, v.value ? "true" : "false");
  std::string w = witness_text(v);
  if (!w.empty()) out << "  witness: " << w << '\n';
  out << "  method: " << v.method << '\n';
  if (!v.note.empty()) out << "  note: " << v.note << '\n';
  return o;
}

/// `side` names the carrier whose moduli the exponent is taken over.
std::string profile_text(const DivisorProfile& p, const char* side) {
  std::string s = fmt::format("{} exponent {}{}", side, p.exponent, p.has_free_part ? fmt::format(", {} has a free axis", side) : "");
  if (p.explicit_set) s += fmt::format("; {} homogeneous elements", p.explicit_set->size());
  return s;
}

Outcome cmd_classify(const Common& c, const std::string& file, std::ostream& out) {
  InstanceFile f = load(file);
  Analyzer an = make_analyzer(f.instance.module, c);
  IdealAnalyzer ideals(f.instance.module->ring());
  Outcome o;

  Timer mt;
  PredicateVerdict tf = an.torsion_free();
  PredicateVerdict faithful = an.faithful();
  DivisorProfile z = an.z_profile(), tp = an.t_profile();
  std::int64_t mms = mt.millis(c.timing);
  out << fmt::format("module {} (budget {})\n", f.name, to_string(an.budget()));
  if (!f.description.empty()) out << "  " << f.description << '\n';
  out << fmt::format("  torsion-free: {}  {}\n", yes_no(tf.value), witness_text(tf));
  out << fmt::format("  faithful: {}  {}\n", yes_no(faithful.value), witness_text(faithful));
  out << "  Z(M): " << profile_text(z, "module") << '\n';
  out << "  T(M): " << profile_text(tp, "ring") << '\n';
  for (auto [name, v] : {std::pair{"torsion-free", &tf}, std::pair{"faithful", &faithful}})
    o.results.push_back({{"instance", f.name},
                         {"submodule", nullptr},
                         {"predicate", name},
                         {"value", v->value},
                         {"witness", witness_json(*v)},
                         {"method", v->method},
                         {"millis", mms}});

  static const std::vector<std::string> preds{"prime", "r", "special-r", "pure", "hk-torsion", "colon-prime",
                                              "colon-r"};
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"submodule", "graded", "proper"};
  head.insert(head.end(), preds.begin(), preds.end());
  rows.push_back(head);
  std::vector<std::string> notes;
  for (const NamedSubmodule& s : f.instance.submodules) {
    Timer t;
    ClassificationReport rep = classify(an, &ideals, s.lattice);
    std::int64_t ms = t.millis(c.timing);
    std::vector<std::string> row{s.name, yes_no(rep.graded), yes_no(rep.proper)};
    const std::optional<PredicateVerdict>* slots[] = {&rep.prime, &rep.r,           &rep.special_r,     &rep.pure,
                                                      &rep.hk_torsion, &rep.colon_prime_ideal, &rep.colon_r_ideal};
    o.results.push_back({{"instance", f.name},
                         {"submodule", s.name},
                         {"predicate", "graded"},
                         {"value", rep.graded},
                         {"witness", nullptr},
                         {"method", "lattice/components"},
                         {"millis", ms}});
    o.results.push_back({{"instance", f.name},
                         {"submodule", s.name},
                         {"predicate", "proper"},
                         {"value", rep.proper},
                         {"witness", nullptr},
                         {"method", "lattice"},
                         {"millis", ms}});
    for (std::size_t i = 0; i < preds.size(); ++i) {
      const auto& v = *slots[i];
      row.push_back(v ? yes_no(v->value) : "-");
      if (!v) continue;
      o.results.push_back({{"instance", f.name},
                           {"submodule", s.name},
                           {"predicate", preds[i]},
                           {"value", v->value},
                           {"witness", witness_json(*v)},
                           {"method", v->method},
                           {"millis", ms}});
      std::string w = witness_text(*v);
      if (!v->value && !w.empty()) notes.push_back(fmt::format("{} not {}: {}", s.name, preds[i], w));
    }
    rows.push_back(std::move(row));
  }
  out << '\n';
  print_table(out, rows);
  if (!notes.empty()) {
    out << "\nwitnesses:\n";
    for (const std::string& n : notes) out << "  " << n << '\n';
  }
  return o;
}

Json verdict_json(const LawVerdict& v, std::int64_t ms) {
  return {{"instance", v.instance}, {"predicate", v.law}, {"value", to_string(v.status)}, {"witness", v.detail},
          {"method", "cases=" + std::to_string(v.cases)}, {"millis", ms}};
}

Outcome cmd_laws(const Common& c, const std::vector<std::string>& files, const std::vector<std::string>& fams,
                 const std::vector<std::string>& law_ids, const GridOptions& grid, bool verbose, std::ostream& out) {
  for (const std::string& id : law_ids)
    if (!find_law(id)) throw InputError("unknown law '" + id + "'");
  std::vector<Instance> instances;
  for (const std::string& path : files) instances.push_back(load(path).instance);
  if (!fams.empty() || files.empty())
    for (Instance& i : grid_of(fams, grid)) instances.push_back(std::move(i));

  LawOptions opts;
  opts.budget = budget_of(c);
  Outcome o;
  std::size_t ok = 0, bad = 0, na = 0;
  std::vector<std::vector<std::string>> rows{{"instance", "law", "status", "cases", "detail"}};
  for (const Instance& inst : instances) {
    auto axioms = verify_axioms(*inst.module);
    auto ring_axioms = verify_axioms(*inst.module->ring());
    axioms.insert(axioms.end(), ring_axioms.begin(), ring_axioms.end());
    std::optional<LawContext> ctx;
    if (axioms.empty()) {
      try {
        ctx.emplace(inst, opts);
      } catch (const BudgetError& e) {
        throw InputError(e.what());
      }
    }
    for (const Law& law : laws()) {
      if (!law_ids.empty() && std::find(law_ids.begin(), law_ids.end(), law.id) == law_ids.end()) continue;
      Timer t;
      LawVerdict v;
      if (ctx) {
        v = run_law(law, *ctx);
      } else {
        v.law = law.id;
        v.instance = inst.id;
        if (law.id == "axioms") {
          v.status = LawStatus::Violated;
          v.cases = 1;
          v.detail = to_string(axioms.front());
        } else {
          v.status = LawStatus::Inapplicable;
          v.detail = "the instance fails the axioms";
        }
      }
      std::int64_t ms = t.millis(c.timing);
      (v.status == LawStatus::Verified ? ok : v.status == LawStatus::Violated ? bad : na)++;
      o.results.push_back(verdict_json(v, ms));
      if (verbose || v.status == LawStatus::Violated)
        rows.push_back({inst.id, v.law, to_string(v.status), std::to_string(v.cases), v.detail});
    }
  }
  if (rows.size() > 1) print_table(out, rows);
  out << fmt::format("{} instances: {} verified, {} violated, {} inapplicable\n", instances.size(), ok, bad, na);
  o.summary = {{"instances", instances.size()}, {"verified", ok}, {"violated", bad}, {"inapplicable", na}};
  o.code = bad ? kViolation : kOk;
  return o;
}

Outcome cmd_examples(const Common& c, std::ostream& out) {
  Outcome o;
  Timer t;
  std::vector<GoldenRow> rows = golden_examples();
  std::int64_t ms = t.millis(c.timing);
  std::vector<std::vector<std::string>> table{{"example", "conclusion", "expected", "computed", "status"}};
  std::size_t failed = 0;
  for (const GoldenRow& r : rows) {
    for (const GoldenCheck& chk : r.checks) {
      table.push_back({r.id, chk.claim, chk.expected ? "true" : "false", chk.actual ? "true" : "false",
                       chk.ok() ? "ok" : "MISMATCH"});
      o.results.push_back({{"instance", r.id},
                           {"predicate", chk.claim},
                           {"value", chk.actual},
                           {"expected", chk.expected},
                           {"witness", chk.witness},
                           {"method", r.setting},
                           {"millis", ms}});
    }
    if (!r.ok()) ++failed;
  }
  print_table(out, table);
  out << '\n';
  for (const GoldenRow& r : rows) {
    out << fmt::format("{}: {}", r.id, r.setting);
    if (!r.note.empty()) out << " (" << r.note << ")";
    out << '\n';
  }
  out << fmt::format("\n{} of {} examples reproduced\n", rows.size() - failed, rows.size());
  o.summary = {{"examples", rows.size()}, {"failed", failed}};
  o.code = failed ? kViolation : kOk;
  return o;
}

Outcome cmd_search(const Common& c, const std::string& separation, const std::string& law_id,
                   const std::vector<std::string>& fams, const GridOptions& grid_opts, std::ostream& out) {
  if (separation.empty() == law_id.empty()) throw InputError("search needs exactly one of --separation or --law");
  std::vector<Instance> grid = grid_of(fams, grid_opts);
  if (c.seed) {
    std::mt19937_64 rng(*c.seed);
    std::shuffle(grid.begin(), grid.end(), rng);
  }
  Outcome o;
  Timer t;
  SearchReport rep;
  if (!separation.empty()) {
    std::vector<SeparationTerm> terms;
    try {
      terms = parse_separation(separation);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    rep = find_separation(terms, grid);
  } else {
    const Law* law = find_law(law_id);
    if (!law) throw InputError("unknown law '" + law_id + "'");
    LawOptions opts;
    opts.budget = budget_of(c);
    rep = find_law_violation(*law, grid, opts);
  }
  std::int64_t ms = t.millis(c.timing);
  std::string claim = separation.empty() ? law_id : separation;
  if (!rep.hit) {
    out << fmt::format("{}: none in grid ({} instances, {} candidates)\n", claim, rep.instances, rep.candidates);
    o.results.push_back({{"instance", nullptr},
                         {"predicate", claim},
                         {"value", false},
                         {"witness", nullptr},
                         {"method", "exhaustive grid search"},
                         {"millis", ms}});
  } else {
    const SearchHit& h = *rep.hit;
    Json w = Json::object();
    w["family"] = h.family;
    if (h.lattice) {
      w["submodule"] = h.submodule;
      w["basis"] = h.lattice->basis();
      Json preds = Json::object();
      for (const auto& [name, v] : h.verdicts) preds[name] = {{"value", v.value}, {"witness", witness_json(v)}};
      w["verdicts"] = preds;
      out << fmt::format("{}: found {} / {} / {} {}\n", claim, h.family, h.instance, h.submodule, to_string(*h.lattice));
      for (const auto& [name, v] : h.verdicts)
        out << fmt::format("  {}: {} {}\n", name, v.value ? "true" : "false", witness_text(v));
    }
    if (h.law) {
      w["detail"] = h.law->detail;
      out << fmt::format("{}: violated on {} / {}: {}\n", claim, h.family, h.instance, h.law->detail);
      o.code = kViolation;
    }
    o.results.push_back({{"instance", h.instance},
                         {"predicate", claim},
                         {"value", true},
                         {"witness", w},
                         {"method", "exhaustive grid search"},
                         {"millis", ms}});
  }
  o.summary = {{"instances", rep.instances}, {"candidates", rep.candidates}, {"found", rep.hit.has_value()}};
  return o;
}

Json strip_timing(Json results) {
  for (Json& r : results)
    if (r.is_object() && r.contains("millis")) r["millis"] = 0;
  return results;
}

// ---------------------------------------------------------------- dispatch

struct Invocation {
  int code = kOk;
  std::optional<Json> report;
};

Invocation dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

Outcome cmd_replay(const std::string& path, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open report");
  Json report;
  try {
    report = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  if (!report.contains("invocation") || !report.contains("results")) throw InputError(path + ": not a grmod report");
  std::vector<std::string> args = report["invocation"].get<std::vector<std::string>>();
  if (!args.empty() && args.front() == "replay") throw InputError(path + ": cannot replay a replay report");

  std::ostringstream sink;
  Invocation again = dispatch(args, sink, sink);
  Outcome o;
  if (!again.report) throw InputError("replayed command failed: " + sink.str());
  Json before = strip_timing(report["results"]);
  Json after = strip_timing((*again.report)["results"]);
  std::size_t n = std::max(before.size(), after.size()), same = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool match = i < before.size() && i < after.size() && before[i] == after[i];
    if (match) {
      ++same;
      continue;
    }
    out << fmt::format("result {} differs\n  recorded: {}\n  replayed: {}\n", i,
                       i < before.size() ? before[i].dump() : "(missing)", i < after.size() ? after[i].dump() : "(missing)");
  }
  bool code_same = report.value("exit_code", -1) == again.code;
  if (!code_same) out << fmt::format("exit code differs: recorded {}, replayed {}\n", report.value("exit_code", -1), again.code);
  out << fmt::format("replayed {} results: {} reproduced, {} differ\n", n, same, n - same);
  o.results.push_back({{"instance", path}, {"predicate", "replay"}, {"value", same == n && code_same},
                       {"witness", nullptr}, {"method", "re-run of the recorded invocation"}, {"millis", 0}});
  o.summary = {{"results", n}, {"reproduced", same}};
  o.code = same == n && code_same ? kOk : kViolation;
  return o;
}

/// Absolute paths for positional file arguments, so a report replays from
/// any working directory.
std::vector<std::string> normalized_invocation(const std::vector<std::string>& args,
                                               const std::vector<std::string>& files) {
  std::vector<std::string> out;
  for (const std::string& a : args) {
    bool is_file = std::find(files.begin(), files.end(), a) != files.end();
    out.push_back(is_file ? std::filesystem::absolute(a).lexically_normal().string() : a);
  }
  // The report destination is not part of what gets reproduced.
  for (std::size_t i = 0; i + 1 < out.size(); ++i)
    if (out[i] == "--json") {
      out.erase(out.begin() + static_cast<long>(i), out.begin() + static_cast<long>(i) + 2);
      break;
    }
  return out;
}

Invocation dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide graded submodule classes and verify their laws", "grmod"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "grmod 0.1.0");
  Common c;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget", c.budget_text, "exhaustive | divisor-witness | sampled:<B>");
    sub->add_option("--json", c.json_path, "write a JSON report to this path");
    sub->add_flag("--timing", c.timing, "record wall-clock millis in the JSON report (off keeps it byte-stable)");
  };

  std::string file, sub_name, pred;
  CLI::App* check = app.add_subcommand("check", "decide one predicate for one submodule of an instance file");
  check->add_option("file", file, "instance file")->required();
  check->add_option("submodule", sub_name, "submodule name")->required();
  check->add_option("predicate", pred, "prime | r | special-r | pure | hk-torsion | colon-prime | colon-r | graded")
      ->required();
  add_common(check);

  CLI::App* cls = app.add_subcommand("classify", "every predicate for every submodule of an instance file");
  cls->add_option("file", file, "instance file")->required();
  add_common(cls);

  std::vector<std::string> files, fams, law_ids;
  GridOptions grid;
  bool verbose = false, list = false;
  CLI::App* lw = app.add_subcommand("laws", "run the law registry over instance files or family grids");
  lw->add_option("files", files, "instance files");
  lw->add_option("--family", fams, "family grid (repeatable; default: every family when no file is given)");
  lw->add_option("--law", law_ids, "restrict to this law id (repeatable)");
  lw->add_option("--n-max", grid.n_max, "upper end of the modulus range of the grids");
  lw->add_option("--entry-max", grid.entry_max, "bound on generator entries of the lattice grids");
  lw->add_flag("--verbose,-v", verbose, "print every verdict, not only violations");
  lw->add_flag("--list", list, "list the registered laws and exit");
  add_common(lw);

  CLI::App* ex = app.add_subcommand("examples", "recompute the documented worked examples");
  add_common(ex);

  std::string separation, search_law;
  CLI::App* se = app.add_subcommand("search", "first grid instance separating two classes or violating a law");
  se->add_option("--separation", separation, "comma-separated predicates, '!' negates, e.g. r,!prime");
  se->add_option("--law", search_law, "search for a violation of this law instead");
  se->add_option("--family", fams, "family grid (repeatable; default: every family)");
  se->add_option("--n-max", grid.n_max, "upper end of the modulus range of the grids");
  se->add_option("--entry-max", grid.entry_max, "bound on generator entries of the lattice grids");
  se->add_option("--seed", c.seed, "shuffle the grid with this seed (stress mode)");
  add_common(se);

  std::string report_path;
  CLI::App* rp = app.add_subcommand("replay", "re-run the invocation recorded in a JSON report and compare");
  rp->add_option("report", report_path, "JSON report written with --json")->required();
  rp->add_option("--json", c.json_path, "write a JSON report of the comparison");

  CLI::App* fm = app.add_subcommand("families", "list the built-in family grids");

  Invocation inv;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    inv.code = app.exit(e, out, err) == 0 ? kOk : kInputError;
    return inv;
  }

  Outcome o;
  std::string cmd;
  std::vector<std::string> file_args;
  try {
    if (*check) {
      cmd = "check";
      file_args = {file};
      o = cmd_check(c, file, sub_name, pred, out);
    } else if (*cls) {
      cmd = "classify";
      file_args = {file};
      o = cmd_classify(c, file, out);
    } else if (*lw) {
      cmd = "laws";
      if (list) {
        for (const Law& l : laws()) out << fmt::format("{:32} {}\n", l.id, l.statement);
        return inv;
      }
      file_args = files;
      o = cmd_laws(c, files, fams, law_ids, grid, verbose, out);
    } else if (*ex) {
      cmd = "examples";
      o = cmd_examples(c, out);
    } else if (*se) {
      cmd = "search";
      o = cmd_search(c, separation, search_law, fams, grid, out);
    } else if (*rp) {
      cmd = "replay";
      file_args = {report_path};
      o = cmd_replay(report_path, out);
    } else if (*fm) {
      for (const FamilyInfo& f : families()) out << fmt::format("{:18} {}\n", f.name, f.description);
      return inv;
    }
  } catch (const InputError& e) {
    err << "grmod: " << e.what() << '\n';
    inv.code = kInputError;
    return inv;
  } catch (const RouteDisagreement& e) {
    err << "grmod: decision routes disagree: " << e.what() << '\n';
    inv.code = kViolation;
    return inv;
  } catch (const CapExceeded& e) {
    err << "grmod: " << e.what() << '\n';
    inv.code = kInputError;
    return inv;
  } catch (const std::invalid_argument& e) {
    err << "grmod: " << e.what() << '\n';
    inv.code = kInputError;
    return inv;
  }

  Json report;
  report["tool"] = "grmod";
  report["command"] = cmd;
  report["invocation"] = normalized_invocation(args, file_args);
  report["budget"] = c.budget_text.empty() ? Json(nullptr) : Json(c.budget_text);
  report["results"] = o.results;
  report["summary"] = o.summary;
  report["exit_code"] = o.code;
  inv.code = o.code;
  inv.report = report;
  if (!c.json_path.empty()) {
    std::ofstream f(c.json_path);
    if (!f) {
      err << "grmod: cannot write " << c.json_path << '\n';
      inv.code = kInputError;
      return inv;
    }
    f << report.dump(2) << '\n';
  }
  return inv;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return dispatch(args, out, err).code;
}

}  // namespace grmod
