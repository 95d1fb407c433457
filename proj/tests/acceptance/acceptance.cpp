// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes. Limits are fixed below and never relaxed at run time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "fixtures.hpp"
#include "graded/classify.hpp"
#include "graded/enumerate.hpp"
#include "graded/laws.hpp"
#include "grmod/golden.hpp"
#include "oracle.hpp"

using namespace graded;

namespace {

constexpr double kGoldenSeconds = 10.0;
constexpr double kSuiteSeconds = 300.0;
constexpr double kSearchSeconds = 120.0;
constexpr Int kOracleMaxElements = 10'000;
constexpr std::size_t kMinLaws = 27;
constexpr int kCanonicalTrials = 500;
// Grid submodules joining the divisor-witness comparison; the instance files
// are always compared in full.
constexpr Int kGridEStarMax = 6;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::vector<Instance> family_grid() {
  std::vector<Instance> out;
  for (const FamilyInfo& f : families())
    for (Instance& inst : family_instances(f.name)) out.push_back(std::move(inst));
  return out;
}

std::vector<Instance> file_instances() {
  std::vector<Instance> out;
  for (auto& f : fixtures::files()) out.push_back(f.instance);
  return out;
}

/// Files first, then the default grids.
std::vector<Instance> all_instances() {
  std::vector<Instance> out = file_instances();
  for (Instance& inst : family_grid()) out.push_back(std::move(inst));
  return out;
}

std::vector<SubLattice> proper_graded(const Instance& inst) {
  std::vector<SubLattice> out;
  for (const NamedSubmodule& s : inst.submodules)
    if (s.lattice.is_proper() && is_graded(s.lattice).graded) out.push_back(s.lattice);
  return out;
}

bool small_finite(const ModulePtr& m) {
  auto c = m->cardinality();
  return m->is_finite() && c && *c <= kOracleMaxElements;
}

Outcome golden() {
  auto t = Clock::now();
  auto rows = grmod::golden_examples();
  double secs = since(t);
  std::size_t ok = 0;
  std::string bad;
  for (const auto& row : rows) {
    if (row.ok()) {
      ++ok;
      continue;
    }
    for (const auto& c : row.checks)
      if (!c.ok()) bad += fmt::format("; {}: {}", row.id, c.claim);
  }
  return {ok == rows.size() && !rows.empty() && secs < kGoldenSeconds,
          fmt::format("{}/{} rows reproduced in {:.2f} s (limit {} s){}", ok, rows.size(), secs, kGoldenSeconds, bad)};
}

Outcome law_suite() {
  auto t = Clock::now();
  std::size_t verified = 0, violated = 0, inapplicable = 0, instances = 0;
  std::string first;
  for (const FamilyInfo& f : families()) {
    auto grid = family_instances(f.name);
    instances += grid.size();
    SuiteReport rep = run_suite(grid);
    verified += rep.verified;
    violated += rep.violated;
    inapplicable += rep.inapplicable;
    for (const LawVerdict& v : rep.verdicts)
      if (v.status == LawStatus::Violated && first.empty())
        first = fmt::format("; first violation {} on {}: {}", v.law, v.instance, v.detail);
  }
  double secs = since(t);
  bool pass = violated == 0 && laws().size() >= kMinLaws && secs < kSuiteSeconds;
  return {pass, fmt::format("{} laws x {} instances: {} verified, {} inapplicable, {} violated in {:.1f} s (limit {} s){}",
                            laws().size(), instances, verified, inapplicable, violated, secs, kSuiteSeconds, first)};
}

Outcome oracle_equivalence() {
  std::size_t modules = 0, checked = 0;
  std::vector<std::string> diffs;
  for (const Instance& inst : all_instances()) {
    if (!small_finite(inst.module)) continue;
    ++modules;
    for (std::string& d : oracle::compare_predicates(inst.module, enumerate_graded_submodules(inst.module), checked))
      diffs.push_back(inst.family + "/" + inst.id + ": " + d);
  }
  return {diffs.empty() && modules > 0,
          fmt::format("{} finite modules (<= {} elements), {} comparisons, {} mismatches{}", modules,
                      kOracleMaxElements, checked, diffs.size(), diffs.empty() ? "" : "; first: " + diffs.front())};
}

Outcome route_agreement() {
  std::size_t cases = 0, agree = 0;
  std::string first;
  for (const Instance& inst : all_instances()) {
    Analyzer an(inst.module);
    for (const SubLattice& k : proper_graded(inst)) {
      bool r = an.r_by_definition(k).value;
      bool r_ok = an.r_by_intersection(k).value == r && an.r_by_colon(k).value == r;
      bool s = an.special_r_by_definition(k).value;
      bool s_ok = an.special_r_by_cyclic(k).value == s && an.special_r_by_colon(k).value == s;
      cases += 2;
      agree += (r_ok ? 1 : 0) + (s_ok ? 1 : 0);
      if ((!r_ok || !s_ok) && first.empty()) first = "; first disagreement " + inst.id + " K = " + to_string(k);
    }
  }
  return {cases > 0 && agree == cases,
          fmt::format("{}/{} submodule route triples agree (r and special-r){}", agree, cases, first)};
}

Outcome divisor_witness() {
  std::size_t compared = 0, mismatched = 0;
  std::string first;
  auto compare = [&](const Instance& inst, bool whole) {
    if (inst.module->is_finite()) return;
    Analyzer dw(inst.module, QuantifierBudget::divisor_witness());
    for (const SubLattice& k : proper_graded(inst)) {
      Int e = dw.e_star(k);
      if (!whole && e > kGridEStarMax) continue;
      Analyzer s(inst.module, QuantifierBudget::sampled(e * e + 1));
      std::vector<std::pair<const char*, std::function<bool(Analyzer&)>>> preds = {
          {"prime", [&](Analyzer& a) { return a.prime_submodule(k).value; }},
          {"r", [&](Analyzer& a) { return a.r_submodule(k).value; }},
          {"special-r", [&](Analyzer& a) { return a.special_r_submodule(k).value; }},
          {"pure", [&](Analyzer& a) { return a.pure(k).value; }},
          {"hk-torsion", [&](Analyzer& a) { return a.homogeneous_part_torsion(k).value; }},
      };
      for (auto& [name, f] : preds) {
        ++compared;
        if (f(dw) != f(s)) {
          ++mismatched;
          if (first.empty()) first = fmt::format("; first: {} {} K = {} (E* = {})", inst.id, name, to_string(k), e);
        }
      }
    }
  };
  std::size_t files = 0;
  for (const Instance& inst : file_instances()) {
    if (!inst.module->is_finite()) ++files;
    compare(inst, true);
  }
  for (const Instance& inst : family_grid()) compare(inst, false);
  return {mismatched == 0 && files > 0,
          fmt::format("{} infinite fixture files plus grid submodules with E* <= {}: {} verdict pairs, {} mismatches{}",
                      files, kGridEStarMax, compared, mismatched, first)};
}

Outcome lattice_kernel() {
  std::vector<Instance> all = all_instances();
  std::mt19937_64 rng(2024);
  // Canonicality.
  std::size_t canon_fail = 0;
  for (int t = 0; t < kCanonicalTrials; ++t) {
    const ModulePtr& m = all[rng() % all.size()].module;
    std::vector<Element> gens;
    for (int i = 0, n = 1 + static_cast<int>(rng() % 4); i < n; ++i) {
      Vec v;
      for (const Axis& a : m->axes()) {
        Int x = static_cast<Int>(rng() % 25) - 12;
        v.push_back(a.modulus == 0 ? x : reduce_mod(x, a.modulus));
      }
      gens.push_back(m->reduce(v));
    }
    SubLattice k = span(gens, m);
    std::shuffle(gens.begin(), gens.end(), rng);
    for (Element& g : gens)
      if (rng() % 2) g = m->negate(g);
    if (gens.size() > 1) gens[1] = m->add(gens[1], m->scale(static_cast<Int>(rng() % 7) - 3, gens[0]));
    if (span(gens, m).basis() != k.basis()) ++canon_fail;
  }
  // Membership and colon against brute force on finite carriers.
  std::size_t brute_checks = 0, brute_fail = 0;
  for (const Instance& inst : all) {
    if (!small_finite(inst.module)) continue;
    oracle::Finite f(inst.module);
    std::vector<SubLattice> subs = enumerate_graded_submodules(inst.module);
    std::vector<SubLattice> targets{full_submodule(inst.module)};
    for (const NamedSubmodule& s : inst.submodules) targets.push_back(s.lattice);
    for (const SubLattice& k : subs) {
      oracle::Set ks = f.elements(k);
      for (const Element& x : f.all()) {
        ++brute_checks;
        if (member(x, k) != f.in(ks, x)) ++brute_fail;
      }
      for (const SubLattice& n : targets) {
        SubLattice c = colon_ring(k, n);
        oracle::Set ns = f.elements(n);
        for (const Element& r : f.ring_box()) {
          bool brute = true;
          for (const Element& x : f.all())
            if (f.in(ns, x) && !f.in(ks, f.act(r, x))) {
              brute = false;
              break;
            }
          ++brute_checks;
          if (member(r, c) != brute) ++brute_fail;
        }
      }
      for (const Element& a : f.hr()) {
        SubLattice c = colon_module(k, a);
        for (const Element& x : f.all()) {
          ++brute_checks;
          if (member(x, c) != f.in(ks, f.act(a, x))) ++brute_fail;
        }
      }
    }
  }
  // ((K :_M r) :_R M) = ((K :_R M) :_R r) on every fixture.
  std::size_t identity_checks = 0, identity_fail = 0;
  for (const Instance& inst : all) {
    Analyzer an(inst.module);
    SubLattice full = full_submodule(inst.module);
    std::vector<SubLattice> ks{zero_submodule(inst.module)};
    for (const NamedSubmodule& s : inst.submodules)
      if (is_graded(s.lattice).graded) ks.push_back(s.lattice);
    for (const SubLattice& k : ks) {
      SubLattice colon = colon_ring(k, full);
      for (const Element& r : an.domains(k).ring) {
        ++identity_checks;
        SubLattice lhs = colon_ring(colon_module(k, r), full);
        SubLattice rhs = colon_module(colon, r);
        if (lhs.basis() != rhs.basis()) ++identity_fail;
      }
    }
  }
  bool pass = canon_fail == 0 && brute_fail == 0 && identity_fail == 0 && brute_checks > 0 && identity_checks > 0;
  return {pass, fmt::format("canonical {}/{}, brute-force membership and colon {}/{}, colon identity {}/{}",
                            kCanonicalTrials - static_cast<int>(canon_fail), kCanonicalTrials, brute_checks - brute_fail,
                            brute_checks, identity_checks - identity_fail, identity_checks)};
}

Outcome separations() {
  auto t = Clock::now();
  std::vector<Instance> grid = family_grid();
  std::string found;
  bool pass = true;
  for (const char* spec : {"r,!prime", "prime,!r", "r,!special-r", "special-r,!r"}) {
    SearchReport rep = find_separation(parse_separation(spec), grid);
    if (!rep.hit) {
      pass = false;
      found += fmt::format("{}: none; ", spec);
    } else {
      found += fmt::format("{}: {}/{} {}; ", spec, rep.hit->family, rep.hit->instance, rep.hit->submodule);
    }
  }
  for (const char* spec : {"pure,!r", "special-r,!hk-torsion"}) {
    SearchReport rep = find_separation(parse_separation(spec), grid);
    if (rep.hit) {
      pass = false;
      found += fmt::format("{}: unexpected {}/{} {}; ", spec, rep.hit->family, rep.hit->instance, rep.hit->submodule);
    } else {
      found += fmt::format("{}: none in {} candidates; ", spec, rep.candidates);
    }
  }
  double secs = since(t);
  return {pass && secs < kSearchSeconds, fmt::format("{}{:.1f} s (limit {} s)", found, secs, kSearchSeconds)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"worked-example golden suite", golden},
      {"law suite over the default grids", law_suite},
      {"oracle equivalence on finite fixtures", oracle_equivalence},
      {"decision-route cross-check", route_agreement},
      {"divisor-witness versus dense sampling", divisor_witness},
      {"lattice kernel", lattice_kernel},
      {"counterexample regeneration", separations},
  };
  int passed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    passed += o.pass ? 1 : 0;
    std::printf("[%s] %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", passed, criteria.size());
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
