#include "graded/laws.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "graded/morphisms.hpp"

namespace graded {

std::string to_string(LawStatus s) {
  switch (s) {
    case LawStatus::Verified:
      return "verified";
    case LawStatus::Violated:
      return "violated";
    case LawStatus::Inapplicable:
      return "inapplicable";
  }
  return "?";
}

// ---------------------------------------------------------------- context

namespace {

void push_unique(std::vector<SubLattice>& out, SubLattice k) {
  if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(std::move(k));
}

void push_unique(std::vector<Element>& out, std::set<Element>& seen, const Element& x) {
  if (seen.insert(x).second) out.push_back(x);
}

}  // namespace

LawContext::LawContext(Instance inst, LawOptions opts)
    : inst_(std::move(inst)),
      opts_(opts),
      an_(inst_.module, opts.budget),
      ideal_an_(inst_.module->ring(), opts.budget && opts.budget->mode == BudgetMode::Sampled
                                          ? opts.budget
                                          : std::optional<QuantifierBudget>{}) {
  const ModulePtr& m = inst_.module;
  if (m->is_finite()) {
    try {
      universe_ = enumerate_graded_submodules(m, opts_.enumeration_cap);
      complete_ = true;
    } catch (const CapExceeded&) {
      universe_.clear();
    }
  }
  if (!complete_) {
    push_unique(universe_, zero_submodule(m));
    for (const NamedSubmodule& s : inst_.submodules)
      if (is_graded(s.lattice).graded) push_unique(universe_, s.lattice);
    push_unique(universe_, full_submodule(m));
  }
  for (const SubLattice& k : universe_)
    if (k.is_proper()) proper_.push_back(k);

  if (m->is_finite() && an_.budget().mode == BudgetMode::Exhaustive) {
    Domains d = an_.domains(zero_submodule(m));
    ring_domain_ = std::move(d.ring);
    module_domain_ = std::move(d.module);
  } else {
    std::set<Element> ring_seen, module_seen;
    for (const SubLattice& k : universe_) {
      Domains d = an_.domains(k);
      for (const Element& a : d.ring)
        if (ring_domain_.size() < opts_.domain_cap) push_unique(ring_domain_, ring_seen, a);
      for (const Element& x : d.module)
        if (module_domain_.size() < opts_.domain_cap) push_unique(module_domain_, module_seen, x);
    }
  }
}

const std::vector<SubLattice>& LawContext::ideal_universe() {
  if (ideals_) return *ideals_;
  std::vector<SubLattice> out;
  const ModulePtr& reg = ideal_an_.regular().module();
  bool done = false;
  if (reg->is_finite()) {
    try {
      out = enumerate_graded_submodules(reg, opts_.enumeration_cap);
      done = true;
    } catch (const CapExceeded&) {
      out.clear();
    }
  }
  if (!done) {
    for (const Element& a : ring_domain_) push_unique(out, span({a}, reg));
    for (const SubLattice& k : universe_) push_unique(out, SubLattice::from_rows(reg, an_.colon(k).basis()));
    push_unique(out, full_submodule(reg));
  }
  ideals_ = std::move(out);
  return *ideals_;
}

bool LawContext::cached(std::map<Mat, bool>& cache, const SubLattice& k, const std::function<bool()>& f) {
  auto it = cache.find(k.basis());
  if (it != cache.end()) return it->second;
  bool v = f();
  cache.emplace(k.basis(), v);
  return v;
}

bool LawContext::is_r(const SubLattice& k) {
  return cached(r_, k, [&] { return an_.r_by_definition(k).value; });
}

bool LawContext::is_special_r(const SubLattice& k) {
  return cached(sr_, k, [&] { return an_.special_r_by_definition(k).value; });
}

bool LawContext::is_prime(const SubLattice& k) {
  return cached(prime_, k, [&] { return an_.prime_submodule(k).value; });
}

bool LawContext::is_pure(const SubLattice& k) {
  return cached(pure_, k, [&] { return an_.pure(k).value; });
}

bool LawContext::torsion_part(const SubLattice& k) {
  return cached(hk_, k, [&] { return an_.homogeneous_part_torsion(k).value; });
}

bool LawContext::meets_regular(const SubLattice& p) {
  SubLattice widened = sum(p, SubLattice::from_rows(p.ambient(), an_.annihilator().basis()));
  for (const Element& a : ring_domain_)
    if (member(a, widened) && !an_.in_z(a)) return true;
  return false;
}

bool LawContext::meets_torsion_free(const SubLattice& n) {
  for (const Element& x : module_domain_)
    if (member(x, n) && !an_.in_t(x)) return true;
  return false;
}

Analyzer& LawContext::analyzer_for(const std::string& key, const ModulePtr& m) {
  auto it = others_.find(key);
  if (it == others_.end()) {
    std::optional<QuantifierBudget> b;
    if (opts_.budget && opts_.budget->mode == BudgetMode::Sampled) b = opts_.budget;
    it = others_.emplace(key, std::make_unique<Analyzer>(m, b)).first;
  }
  return *it->second;
}

// ---------------------------------------------------------------- witness constructions

FailureWitnesses r_failure_witnesses(Analyzer& an, const SubLattice& k) {
  const SubLattice& colon = an.colon(k);
  for (const Element& a : an.domains(k).ring)
    if (member(a, colon) && !an.in_z(a))
      throw PreconditionError("r_failure_witnesses: (K :_R M) contains the non-zero-divisor " + to_string(a));
  PredicateVerdict v = an.r_by_definition(k);
  if (v.value) throw PreconditionError("r_failure_witnesses: K is an r-submodule");
  const Element& a = *v.a;
  const Element& x = *v.x;

  SubLattice p = colon_ring(k, x);
  SubLattice n = colon_module(k, p);
  auto fail = [&](const std::string& what) {
    throw std::logic_error("r_failure_witnesses: " + what + " (a = " + to_string(a) + ", x = " + to_string(x) + ")");
  };
  if (!member(a, p) || an.in_z(a)) fail("P misses h(R) - Z(M)");
  if (!n.contains(k) || n == k || !member(x, n)) fail("K is not strictly inside N");
  SubLattice colon_in_p = SubLattice::from_rows(p.ambient(), colon.basis());
  if (!p.contains(colon_in_p) || p == colon_in_p) fail("(K :_R M) is not strictly inside P");
  if (!k.contains(ideal_product(p, n))) fail("PN is not inside K");
  if (!is_graded(p).graded || !is_graded(n).graded) fail("P or N is not graded");
  return {std::move(p), std::move(n), a, x};
}

FailureWitnesses special_r_failure_witnesses(Analyzer& an, const SubLattice& k) {
  PredicateVerdict hk = an.homogeneous_part_torsion(k);
  if (!hk.value)
    throw PreconditionError("special_r_failure_witnesses: K contains the torsion-free element " + to_string(*hk.a));
  PredicateVerdict v = an.special_r_by_definition(k);
  if (v.value) throw PreconditionError("special_r_failure_witnesses: K is a special r-submodule");
  const Element& r = *v.a;
  const Element& x = *v.x;

  SubLattice n = colon_module(k, r);
  SubLattice ideal = colon_ring(k, n);
  auto fail = [&](const std::string& what) {
    throw std::logic_error("special_r_failure_witnesses: " + what + " (r = " + to_string(r) + ", x = " + to_string(x) +
                           ")");
  };
  if (!member(x, n) || an.in_t(x)) fail("N misses h(M) - T(M)");
  if (!n.contains(k) || n == k) fail("K is not strictly inside N");
  SubLattice colon = SubLattice::from_rows(ideal.ambient(), an.colon(k).basis());
  if (!ideal.contains(colon) || ideal == colon || !member(r, ideal)) fail("(K :_R M) is not strictly inside I");
  if (!k.contains(ideal_product(ideal, n))) fail("IN is not inside K");
  if (!is_graded(ideal).graded || !is_graded(n).graded) fail("I or N is not graded");
  return {std::move(ideal), std::move(n), r, x};
}

// ---------------------------------------------------------------- laws

namespace {

std::string str(const SubLattice& k) { return to_string(k); }
std::string str(const Element& x) { return to_string(x); }

struct Tally {
  std::size_t cases = 0;
  std::optional<std::string> violation;
  std::optional<std::string> skipped;

  bool ok() const { return !violation && !skipped; }
  void fail(std::string s) {
    if (!violation) violation = std::move(s);
  }
  LawVerdict verdict() const {
    LawVerdict v;
    if (violation) {
      v.status = LawStatus::Violated;
      v.detail = *violation;
    } else if (skipped) {
      v.status = LawStatus::Inapplicable;
      v.detail = *skipped;
    }
    v.cases = cases;
    return v;
  }
};

LawVerdict not_applicable(std::string why) {
  LawVerdict v;
  v.status = LawStatus::Inapplicable;
  v.detail = std::move(why);
  return v;
}

const char* kIncomplete = "needs every graded submodule; the universe of this instance is partial";
const char* kInexact = "route comparison needs an exact budget";

/// Ideal over the regular module the analyzer's colons live in.
SubLattice as_ideal(const SubLattice& over, const SubLattice& like) {
  return SubLattice::from_rows(like.ambient(), over.basis());
}

LawVerdict law_axioms(LawContext& c) {
  Tally t;
  t.cases = 1;
  auto v = verify_axioms(*c.module());
  auto vr = verify_axioms(*c.module()->ring());
  v.insert(v.end(), vr.begin(), vr.end());
  if (!v.empty()) t.fail(to_string(v.front()));
  return t.verdict();
}

LawVerdict law_closure(LawContext& c) {
  Tally t;
  const ModulePtr& m = c.module();
  auto check = [&](const SubLattice& s, const std::string& what) {
    ++t.cases;
    if (!is_graded(s).graded) t.fail(what + " = " + str(s) + " is not graded");
    return t.ok();
  };
  const auto& u = c.universe();
  for (std::size_t i = 0; i < u.size() && t.ok(); ++i) {
    const SubLattice& k = u[i];
    for (std::size_t j = i; j < u.size() && t.ok(); ++j) {
      check(sum(k, u[j]), "K + N for K = " + str(k) + ", N = " + str(u[j]));
      check(intersect(k, u[j]), "K ∩ N for K = " + str(k) + ", N = " + str(u[j]));
    }
    for (const Element& a : c.ring_domain()) {
      if (!t.ok()) break;
      check(scalar_multiple(a, k), "aK for a = " + str(a) + ", K = " + str(k));
      check(colon_module(k, a), "(K :_M a) for a = " + str(a) + ", K = " + str(k));
    }
    for (const SubLattice& ideal : c.ideal_universe()) {
      if (!t.ok()) break;
      check(ideal_product(ideal, k), "IK for I = " + str(ideal) + ", K = " + str(k));
      check(colon_module(k, ideal), "(K :_M I) for I = " + str(ideal) + ", K = " + str(k));
    }
    check(colon_ring(k, full_submodule(m)), "(K :_R M) for K = " + str(k));
    check(annihilator_ring(k), "Ann_R(K) for K = " + str(k));
  }
  for (const Element& x : c.module_domain()) {
    if (!t.ok()) break;
    check(cyclic(x, m), "Rx for x = " + str(x));
  }
  for (const Element& a : c.ring_domain()) {
    if (!t.ok()) break;
    check(annihilator_module(a, m), "Ann_M(a) for a = " + str(a));
  }
  // Homomorphisms: the projection M -> M/L and the inclusion L -> M.
  for (const SubLattice& l : u) {
    if (!t.ok()) break;
    QuotientPresentation q = quotient(l);
    GradedHom pi = projection(q);
    SubmoduleModule sub = as_module(l);
    for (const SubLattice& k : u) {
      if (!t.ok()) break;
      check(pushforward(pi, k), "image of K = " + str(k) + " in M/L, L = " + str(l));
      check(preimage(sub.inclusion, k), "preimage of K = " + str(k) + " in L = " + str(l));
    }
  }
  return t.verdict();
}

LawVerdict law_quotient_gradedness(LawContext& c) {
  const ModulePtr& m = c.module();
  if (!c.complete()) return not_applicable(kIncomplete);
  auto card = m->cardinality();
  if (!card || *card > c.options().ungraded_cap) return not_applicable("module too large to enumerate every submodule");
  std::vector<SubLattice> all = enumerate_submodules(m, c.options().enumeration_cap);
  Tally t;
  for (const SubLattice& k : c.universe()) {
    QuotientPresentation q = quotient(k);
    for (const SubLattice& n : all) {
      if (!n.contains(k)) continue;
      ++t.cases;
      bool upstairs = is_graded(n).graded;
      bool downstairs = is_graded(q.image(n)).graded;
      if (upstairs != downstairs) {
        t.fail("N = " + str(n) + " over K = " + str(k) + ": N graded " + std::to_string(upstairs) + ", N/K graded " +
               std::to_string(downstairs));
        return t.verdict();
      }
    }
  }
  return t.verdict();
}

/// h(R) ∩ (K :_R M) ⊆ Z(M), over the analyzer's ring domain for K. Returns
/// the first offending element.
std::optional<Element> regular_in_colon(LawContext& c, const SubLattice& k) {
  const SubLattice& colon = c.analyzer().colon(k);
  for (const Element& a : c.analyzer().domains(k).ring)
    if (member(a, colon) && !c.analyzer().in_z(a)) return a;
  return std::nullopt;
}

LawVerdict law_r_colon_in_zero_divisors(LawContext& c) {
  Tally t;
  for (const SubLattice& k : c.proper()) {
    if (!c.is_r(k)) continue;
    ++t.cases;
    if (auto a = regular_in_colon(c, k)) {
      t.fail("r-submodule K = " + str(k) + " has (K :_R M) containing the non-zero-divisor " + str(*a));
      break;
    }
  }
  return t.verdict();
}

LawVerdict law_prime_r_criterion(LawContext& c) {
  Tally t;
  for (const SubLattice& k : c.proper()) {
    if (!c.is_prime(k)) continue;
    ++t.cases;
    bool lhs = c.is_r(k);
    bool rhs = !regular_in_colon(c, k).has_value();
    if (lhs != rhs) {
      t.fail("prime K = " + str(k) + ": r-submodule " + std::to_string(lhs) + ", (K :_R M) inside Z(M) " +
             std::to_string(rhs));
      break;
    }
  }
  return t.verdict();
}

LawVerdict law_r_intersection(LawContext& c) {
  Tally t;
  const auto& p = c.proper();
  for (std::size_t i = 0; i < p.size() && t.ok(); ++i) {
    if (!c.is_r(p[i])) continue;
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (!c.is_r(p[j])) continue;
      ++t.cases;
      SubLattice both = intersect(p[i], p[j]);
      if (!c.is_r(both)) {
        t.fail("K1 = " + str(p[i]) + ", K2 = " + str(p[j]) + " are r-submodules but K1 ∩ K2 = " + str(both) +
               " is not");
        break;
      }
    }
  }
  return t.verdict();
}

LawVerdict law_domain_r_ideals(LawContext& c) {
  IdealAnalyzer& ia = c.ideals();
  if (!ia.regular().torsion_free().value) return not_applicable("R has homogeneous zero divisors");
  Tally t;
  for (const SubLattice& p : c.ideal_universe()) {
    if (!p.is_proper()) continue;
    ++t.cases;
    bool r = ia.r_ideal_by_definition(SubLattice::from_rows(ia.regular().module(), p.basis())).value;
    if (r != p.is_zero()) {
      t.fail("graded domain with ideal P = " + str(p) + ": r-ideal " + std::to_string(r));
      break;
    }
  }
  return t.verdict();
}

LawVerdict law_r_routes(LawContext& c) {
  if (!c.analyzer().cross_checks()) return not_applicable(kInexact);
  Tally t;
  for (const SubLattice& k : c.proper()) {
    ++t.cases;
    bool d = c.analyzer().r_by_definition(k).value;
    bool col = c.analyzer().r_by_colon(k).value;
    bool in = c.analyzer().r_by_intersection(k).value;
    if (d != col || d != in) {
      t.fail("K = " + str(k) + ": definition " + std::to_string(d) + ", colon " + std::to_string(col) +
             ", intersection " + std::to_string(in));
      break;
    }
  }
  return t.verdict();
}

LawVerdict law_pure_implies_r(LawContext& c) {
  Tally t;
  for (const SubLattice& k : c.proper()) {
    if (!c.is_pure(k)) continue;
    ++t.cases;
    if (!c.is_r(k)) {
      t.fail("K = " + str(k) + " is pure but not an r-submodule");
      break;
    }
  }
  return t.verdict();
}

LawVerdict law_all_r_criterion(LawContext& c) {
  if (!c.complete()) return not_applicable(kIncomplete);
  Tally t;
  t.cases = 1;
  bool lhs = true;
  for (const SubLattice& k : c.proper()) lhs = lhs && c.is_r(k);
  bool rhs = true;
  for (const Element& a : c.ring_domain()) {
    if (c.analyzer().in_z(a)) continue;
    for (const SubLattice& k : c.universe())
      if (!(scalar_multiple(a, k) == k)) rhs = false;
  }
  if (lhs != rhs)
    t.fail("every proper graded submodule r: " + std::to_string(lhs) + "; aK = K for all regular a: " +
           std::to_string(rhs));
  return t.verdict();
}

LawVerdict law_annihilator_r(LawContext& c) {
  Tally t;
  const SubLattice& ann = c.analyzer().annihilator();
  for (const Element& a : c.ring_domain()) {
    if (member(a, ann)) continue;
    ++t.cases;
    SubLattice n = annihilator_module(a, c.module());
    if (!c.is_r(n)) {
      t.fail("Ann_M(" + str(a) + ") = " + str(n) + " is not an r-submodule");
      break;
    }
  }
  return t.verdict();
}

LawVerdict law_zero_only_r_prime(LawContext& c) {
  if (!c.complete()) return not_applicable(kIncomplete);
  if (c.module()->cardinality() == Int{1}) return not_applicable("M = 0");
  for (const SubLattice& k : c.proper())
    if (!k.is_zero() && c.is_r(k)) return not_applicable("M has a nonzero graded r-submodule");
  Tally t;
  t.cases = 1;
  SubLattice zero = zero_submodule(c.module());
  if (!c.is_prime(zero)) t.fail("0 is the only graded r-submodule but is not prime");
  IdealAnalyzer& ia = c.ideals();
  SubLattice ann = SubLattice::from_rows(ia.regular().module(), c.analyzer().annihilator().basis());
  if (t.ok() && !ia.prime(ann).value) t.fail("0 is the only graded r-submodule but Ann_R(M) = " + str(ann) + " is not prime");
  return t.verdict();
}

/// For each ideal meeting h(R) - Z(M), the products with the universe.
std::vector<std::pair<SubLattice, std::vector<SubLattice>>> regular_products(LawContext& c) {
  std::vector<std::pair<SubLattice, std::vector<SubLattice>>> out;
  for (const SubLattice& p : c.ideal_universe()) {
    if (!c.meets_regular(p)) continue;
    std::vector<SubLattice> prods;
    for (const SubLattice& n : c.universe()) prods.push_back(ideal_product(p, n));
    out.emplace_back(p, std::move(prods));
  }
  return out;
}

LawVerdict law_r_ideal_test(LawContext& c) {
  Tally t;
  auto prods = regular_products(c);
  const auto& u = c.universe();
  for (const SubLattice& k : c.proper()) {
    bool r = c.is_r(k);
    if (!r && !c.complete()) continue;
    ++t.cases;
    std::optional<std::string> counter;
    for (const auto& [p, pn] : prods) {
      for (std::size_t j = 0; j < u.size() && !counter; ++j)
        if (k.contains(pn[j]) && !k.contains(u[j])) counter = "P = " + str(p) + ", N = " + str(u[j]);
      if (counter) break;
    }
    bool test = !counter;
    if (r != test) {
      t.fail("K = " + str(k) + ": r-submodule " + std::to_string(r) + ", ideal test " + std::to_string(test) +
             (counter ? " (" + *counter + ")" : ""));
      break;
    }
  }
  return t.verdict();
}

LawVerdict law_r_cancellation(LawContext& c) {
  Tally t;
  std::vector<SubLattice> rs;
  for (const SubLattice& k : c.proper())
    if (c.is_r(k)) rs.push_back(k);
  if (rs.size() < 2) return t.verdict();
  for (const SubLattice& p : c.ideal_universe()) {
    if (!c.meets_regular(p)) continue;
    std::vector<SubLattice> prods;
    for (const SubLattice& k : rs) prods.push_back(ideal_product(p, k));
    for (std::size_t i = 0; i < rs.size() && t.ok(); ++i)
      for (std::size_t j = i + 1; j < rs.size(); ++j) {
        ++t.cases;
        if (prods[i] == prods[j]) {
          t.fail("P = " + str(p) + " gives PK = PN for distinct r-submodules K = " + str(rs[i]) + ", N = " +
                 str(rs[j]));
          break;
        }
      }
    if (!t.ok()) break;
  }
  return t.verdict();
}

LawVerdict law_r_product(LawContext& c) {
  Tally t;
  auto prods = regular_products(c);
  const auto& u = c.universe();
  for (const auto& [p, pk] : prods) {
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (!pk[j].is_proper() || !c.is_r(pk[j])) continue;
      ++t.cases;
      if (!(pk[j] == u[j]) || !c.is_r(u[j])) {
        t.fail("P = " + str(p) + ", K = " + str(u[j]) + ": PK = " + str(pk[j]) +
               " is an r-submodule but K is not PK or not r");
        return t.verdict();
      }
    }
  }
  return t.verdict();
}

LawVerdict law_r_witness_construction(LawContext& c) {
  Tally t;
  for (const SubLattice& k : c.proper()) {
    if (regular_in_colon(c, k) || c.is_r(k)) continue;
    ++t.cases;
    try {
      r_failure_witnesses(c.analyzer(), k);
    } catch (const PreconditionError&) {
      --t.cases;  // the analyzer's own domain saw a different precondition
    } catch (const std::logic_error& e) {
      t.fail("K = " + str(k) + ": " + e.what());
      break;
    }
  }
  return t.verdict();
}

LawVerdict law_special_r_torsion(LawContext& c) {
  Tally t;
  for (const SubLattice& k : c.proper()) {
    if (!c.is_special_r(k)) continue;
    ++t.cases;
    if (!c.torsion_part(k)) {
      t.fail("special r-submodule K = " + str(k) + " contains a homogeneous torsion-free element");
      break;
    }
  }
  return t.verdict();
}

/// Whether T(M) = {0} over the elements the law can see: every element of a
/// finite module, else sums of one module-domain element per degree.
std::optional<Element> nonzero_torsion(LawContext& c) {
  const GradedModule& m = *c.module();
  std::vector<Element> elements;
  if (m.is_finite()) {
    elements = m.enumerate_all();
  } else {
    elements.push_back(m.zero());
    for (Degree g : m.support()) {
      std::vector<Element> next;
      for (const Element& base : elements) {
        next.push_back(base);
        for (const Element& x : c.module_domain())
          if (!x.is_zero() && m.homogeneous_degree(x) == g) next.push_back(m.add(base, x));
      }
      elements = std::move(next);
    }
  }
  for (const Element& x : elements)
    if (!x.is_zero() && c.analyzer().in_t(x)) return x;
  return std::nullopt;
}

LawVerdict law_torsion_free_special_r(LawContext& c) {
  if (auto x = nonzero_torsion(c)) return not_applicable("M has the nonzero torsion element " + str(*x));
  Tally t;
  for (const SubLattice& k : c.proper()) {
    ++t.cases;
    if (c.is_special_r(k) != k.is_zero()) {
      t.fail("T(M) = 0 but K = " + str(k) + " has special-r " + std::to_string(c.is_special_r(k)));
      break;
    }
  }
  return t.verdict();
}

LawVerdict law_prime_special_r_criterion(LawContext& c) {
  Tally t;
  for (const SubLattice& k : c.proper()) {
    if (!c.is_prime(k)) continue;
    ++t.cases;
    bool sr = c.is_special_r(k);
    bool hk = c.torsion_part(k);
    if (sr != hk) {
      t.fail("prime K = " + str(k) + ": special-r " + std::to_string(sr) + ", h(M) ∩ K inside T(M) " +
             std::to_string(hk));
      break;
    }
  }
  return t.verdict();
}

LawVerdict law_special_r_intersection(LawContext& c) {
  Tally t;
  const auto& p = c.proper();
  for (std::size_t i = 0; i < p.size() && t.ok(); ++i) {
    if (!c.is_special_r(p[i])) continue;
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (!c.is_special_r(p[j])) continue;
      ++t.cases;
      SubLattice both = intersect(p[i], p[j]);
      if (!c.is_special_r(both)) {
        t.fail("K1 = " + str(p[i]) + ", K2 = " + str(p[j]) + " are special r-submodules but K1 ∩ K2 = " +
               str(both) + " is not");
        break;
      }
    }
  }
  return t.verdict();
}

LawVerdict law_special_r_routes(LawContext& c) {
  if (!c.analyzer().cross_checks()) return not_applicable(kInexact);
  Tally t;
  for (const SubLattice& k : c.proper()) {
    ++t.cases;
    bool d = c.analyzer().special_r_by_definition(k).value;
    bool cyc = c.analyzer().special_r_by_cyclic(k).value;
    bool col = c.analyzer().special_r_by_colon(k).value;
    if (d != cyc || d != col) {
      t.fail("K = " + str(k) + ": definition " + std::to_string(d) + ", cyclic " + std::to_string(cyc) + ", colon " +
             std::to_string(col));
      break;
    }
  }
  return t.verdict();
}

LawVerdict law_special_r_homs(LawContext& c) {
  Tally t;
  for (const SubLattice& k : c.proper()) {
    if (!c.is_special_r(k)) continue;
    for (const SubLattice& l : c.universe()) {
      const std::string key = str(l);
      if (k.contains(l)) {
        QuotientPresentation q = quotient(l);
        SubLattice image = q.image(k);
        Analyzer& an = c.analyzer_for("quotient " + key, q.target);
        ++t.cases;
        if (!an.special_r_by_definition(image).value) {
          t.fail("K = " + str(k) + " is special-r but K/L is not in M/L for L = " + key);
          return t.verdict();
        }
      } else {
        SubmoduleModule sub = as_module(l);
        SubLattice pre = preimage(sub.inclusion, k);
        Analyzer& an = c.analyzer_for("submodule " + key, sub.module);
        ++t.cases;
        if (!an.special_r_by_definition(pre).value) {
          t.fail("K = " + str(k) + " is special-r but its preimage in L = " + key + " is not");
          return t.verdict();
        }
      }
    }
  }
  return t.verdict();
}

LawVerdict law_special_r_ideal_test(LawContext& c) {
  Tally t;
  const auto& u = c.universe();
  const auto& ideals = c.ideal_universe();
  std::vector<std::size_t> tf;  // universe indices meeting h(M) - T(M)
  for (std::size_t j = 0; j < u.size(); ++j)
    if (c.meets_torsion_free(u[j])) tf.push_back(j);

  // products[i][j] = ideals[i] * u[tf[j]]
  std::vector<std::vector<SubLattice>> products;
  for (const SubLattice& ideal : ideals) {
    std::vector<SubLattice> row;
    for (std::size_t j : tf) row.push_back(ideal_product(ideal, u[j]));
    products.push_back(std::move(row));
  }

  for (const SubLattice& k : c.proper()) {
    bool sr = c.is_special_r(k);
    if (!sr && !c.complete()) continue;
    ++t.cases;
    SubLattice colon = as_ideal(c.analyzer().colon(k), ideals.front());
    std::optional<std::string> counter;
    for (std::size_t i = 0; i < ideals.size() && !counter; ++i) {
      if (colon.contains(ideals[i])) continue;
      for (std::size_t j = 0; j < tf.size(); ++j)
        if (k.contains(products[i][j])) {
          counter = "I = " + str(ideals[i]) + ", N = " + str(u[tf[j]]);
          break;
        }
    }
    bool test = !counter;
    if (sr != test) {
      t.fail("K = " + str(k) + ": special-r " + std::to_string(sr) + ", ideal test " + std::to_string(test) +
             (counter ? " (" + *counter + ")" : ""));
      return t.verdict();
    }
  }

  // Cancellation: (K1 :_R M)N = (K2 :_R M)N forces equal colons.
  std::vector<SubLattice> srs;
  for (const SubLattice& k : c.proper())
    if (c.is_special_r(k)) srs.push_back(as_ideal(c.analyzer().colon(k), ideals.front()));
  for (std::size_t j : tf) {
    std::vector<SubLattice> prods;
    for (const SubLattice& col : srs) prods.push_back(ideal_product(col, u[j]));
    for (std::size_t a = 0; a < srs.size(); ++a)
      for (std::size_t b = a + 1; b < srs.size(); ++b) {
        if (srs[a] == srs[b]) continue;
        ++t.cases;
        if (prods[a] == prods[b]) {
          t.fail("distinct colons " + str(srs[a]) + ", " + str(srs[b]) + " agree on N = " + str(u[j]));
          return t.verdict();
        }
      }
  }

  // A special-r product IN with N meeting h(M) - T(M) equals IM.
  SubLattice full = full_submodule(c.module());
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    SubLattice im = ideal_product(ideals[i], full);
    for (std::size_t j = 0; j < tf.size(); ++j) {
      const SubLattice& in = products[i][j];
      if (!in.is_proper() || !c.is_special_r(in)) continue;
      ++t.cases;
      if (!(in == im)) {
        t.fail("IN = " + str(in) + " is special-r but differs from IM = " + str(im) + " for I = " + str(ideals[i]) +
               ", N = " + str(u[tf[j]]));
        return t.verdict();
      }
    }
  }
  return t.verdict();
}

LawVerdict law_special_r_witness_construction(LawContext& c) {
  Tally t;
  for (const SubLattice& k : c.proper()) {
    if (!c.torsion_part(k) || c.is_special_r(k)) continue;
    ++t.cases;
    try {
      special_r_failure_witnesses(c.analyzer(), k);
    } catch (const PreconditionError&) {
      --t.cases;
    } catch (const std::logic_error& e) {
      t.fail("K = " + str(k) + ": " + e.what());
      break;
    }
  }
  return t.verdict();
}

LawVerdict law_colon_identity(LawContext& c) {
  Tally t;
  SubLattice full = full_submodule(c.module());
  for (const SubLattice& k : c.universe()) {
    const SubLattice& colon = c.analyzer().colon(k);
    for (const Element& r : c.ring_domain()) {
      ++t.cases;
      SubLattice lhs = colon_ring(colon_module(k, r), full);
      SubLattice rhs = colon_module(colon, r);
      if (!(lhs == as_ideal(rhs, lhs))) {
        t.fail("K = " + str(k) + ", r = " + str(r) + ": ((K :_M r) :_R M) = " + str(lhs) + ", ((K :_R M) :_R r) = " +
               str(rhs));
        return t.verdict();
      }
    }
  }
  return t.verdict();
}

LawVerdict law_special_r_colon(LawContext& c) {
  Tally t;
  for (const SubLattice& k : c.proper()) {
    if (!c.is_special_r(k)) continue;
    const SubLattice& colon = c.analyzer().colon(k);
    for (const Element& r : c.ring_domain()) {
      if (member(r, colon)) continue;
      ++t.cases;
      SubLattice n = colon_module(k, r);
      if (!c.is_special_r(n)) {
        t.fail("K = " + str(k) + " is special-r but (K :_M " + str(r) + ") = " + str(n) + " is not");
        return t.verdict();
      }
    }
  }
  const SubLattice& ann = c.analyzer().annihilator();
  for (const Element& r : c.ring_domain()) {
    if (member(r, ann)) continue;
    ++t.cases;
    SubLattice n = annihilator_module(r, c.module());
    if (!c.is_special_r(n)) {
      t.fail("Ann_M(" + str(r) + ") = " + str(n) + " is not special-r");
      break;
    }
  }
  return t.verdict();
}

LawVerdict law_special_r_faithful_torsion_free(LawContext& c) {
  if (!c.complete()) return not_applicable(kIncomplete);
  if (!c.analyzer().faithful().value) return not_applicable("M is not faithful");
  for (const SubLattice& k : c.proper())
    if (!k.is_zero() && c.is_special_r(k)) return not_applicable("M has a nonzero special r-submodule");
  Tally t;
  t.cases = 1;
  PredicateVerdict tf = c.analyzer().torsion_free();
  if (!tf.value) t.fail("faithful, only 0 is special-r, yet not torsion-free");
  return t.verdict();
}

LawVerdict law_maximal_special_r_prime(LawContext& c) {
  if (!c.complete()) return not_applicable(kIncomplete);
  Tally t;
  std::vector<SubLattice> srs;
  for (const SubLattice& k : c.proper())
    if (c.is_special_r(k)) srs.push_back(k);
  for (const SubLattice& k : srs) {
    bool maximal = std::none_of(srs.begin(), srs.end(), [&](const SubLattice& o) { return !(o == k) && o.contains(k); });
    if (!maximal) continue;
    ++t.cases;
    if (!c.is_prime(k)) {
      t.fail("maximal special r-submodule K = " + str(k) + " is not prime");
      break;
    }
  }
  return t.verdict();
}

LawVerdict law_all_special_r_criterion(LawContext& c) {
  if (!c.complete()) return not_applicable(kIncomplete);
  Tally t;
  t.cases = 1;
  bool lhs = true;
  for (const SubLattice& k : c.proper()) lhs = lhs && c.is_special_r(k);
  bool all_torsion = true, free_generate = true;
  for (const Element& x : c.module_domain()) {
    if (c.analyzer().in_t(x)) continue;
    all_torsion = false;
    if (!cyclic(x, c.module()).is_full()) free_generate = false;
  }
  bool rhs = all_torsion || free_generate;
  if (lhs != rhs)
    t.fail("every proper graded submodule special-r: " + std::to_string(lhs) +
           "; h(M) inside T(M) or every torsion-free homogeneous element generates M: " + std::to_string(rhs));
  return t.verdict();
}

LawVerdict law_r_quotient_divisors(LawContext& c) {
  if (!c.analyzer().cross_checks()) return not_applicable(kInexact);
  Tally t;
  for (const SubLattice& k : c.proper()) {
    ++t.cases;
    bool r = c.is_r(k);
    bool q = c.analyzer().r_by_quotient_divisors(k).value;
    if (r != q) {
      t.fail("K = " + str(k) + ": r-submodule " + std::to_string(r) + ", Z(M/K) inside Z(M) " + std::to_string(q));
      break;
    }
  }
  return t.verdict();
}

LawVerdict law_zero_submodule(LawContext& c) {
  SubLattice zero = zero_submodule(c.module());
  if (!zero.is_proper()) return not_applicable("M = 0");
  Tally t;
  t.cases = 1;
  if (!c.is_r(zero)) t.fail("0 is not an r-submodule");
  if (!c.is_special_r(zero)) t.fail("0 is not a special r-submodule");
  return t.verdict();
}

std::vector<Law> build_registry() {
  return {
      {"axioms", "the ring and module tables satisfy the graded ring and module axioms", law_axioms},
      {"closure",
       "sums, intersections, aK, Rx, IN, colons, annihilators and images or preimages under graded maps of graded "
       "submodules are graded",
       law_closure},
      {"quotient-gradedness", "for graded K ⊆ N, N is graded iff N/K is graded in M/K", law_quotient_gradedness},
      {"r-colon-in-zero-divisors", "K an r-submodule implies h(R) ∩ (K :_R M) ⊆ Z(M)",
       law_r_colon_in_zero_divisors},
      {"prime-r-criterion", "a graded prime K is an r-submodule iff h(R) ∩ (K :_R M) ⊆ Z(M)", law_prime_r_criterion},
      {"r-intersection", "the intersection of two graded r-submodules is an r-submodule", law_r_intersection},
      {"domain-r-ideals", "over a graded domain the only graded r-ideal is 0", law_domain_r_ideals},
      {"r-routes", "the definition, colon and intersection tests for r-submodules agree", law_r_routes},
      {"pure-implies-r", "every graded pure submodule is an r-submodule", law_pure_implies_r},
      {"all-r-criterion", "every proper graded submodule is r iff aK = K for all K and all a in h(R) - Z(M)",
       law_all_r_criterion},
      {"annihilator-r", "Ann_M(a) is an r-submodule for homogeneous a outside Ann_R(M)", law_annihilator_r},
      {"zero-only-r-prime", "if 0 is the only graded r-submodule then 0 is prime and Ann_R(M) is a prime ideal",
       law_zero_only_r_prime},
      {"r-ideal-test",
       "K is r iff PN ⊆ K implies N ⊆ K for graded P meeting h(R) - Z(M) and graded N",
       law_r_ideal_test},
      {"r-cancellation", "PK = PN for graded r-submodules K, N and P meeting h(R) - Z(M) forces K = N",
       law_r_cancellation},
      {"r-product", "if PK is a proper r-submodule with P meeting h(R) - Z(M) then PK = K", law_r_product},
      {"r-witness-construction",
       "when h(R) ∩ (K :_R M) ⊆ Z(M) and K is not r, P = (K :_R x) and N = (K :_M P) certify the failure",
       law_r_witness_construction},
      {"special-r-torsion", "a special r-submodule K satisfies h(M) ∩ K ⊆ T(M)", law_special_r_torsion},
      {"torsion-free-special-r", "if T(M) = 0 then 0 is the only graded special r-submodule",
       law_torsion_free_special_r},
      {"prime-special-r-criterion", "a graded prime K is special-r iff h(M) ∩ K ⊆ T(M)",
       law_prime_special_r_criterion},
      {"special-r-intersection", "the intersection of two special r-submodules is special-r",
       law_special_r_intersection},
      {"special-r-routes", "the definition, cyclic and colon tests for special r-submodules agree",
       law_special_r_routes},
      {"special-r-homs",
       "K special-r implies K/L special-r in M/L for L ⊆ K, and the preimage of K in L special-r for L ⊄ K",
       law_special_r_homs},
      {"special-r-ideal-test",
       "K is special-r iff IN ⊆ K implies I ⊆ (K :_R M) for N meeting h(M) - T(M); colons cancel against such N; "
       "a special-r product IN equals IM",
       law_special_r_ideal_test},
      {"special-r-witness-construction",
       "when h(M) ∩ K ⊆ T(M) and K is not special-r, N = (K :_M r) and I = (K :_R N) certify the failure",
       law_special_r_witness_construction},
      {"colon-identity", "((K :_M r) :_R M) = ((K :_R M) :_R r)", law_colon_identity},
      {"special-r-colon", "(K :_M r) is special-r for special-r K and r outside (K :_R M); so is Ann_M(r)",
       law_special_r_colon},
      {"special-r-faithful-torsion-free",
       "a faithful module whose only graded special r-submodule is 0 is torsion-free",
       law_special_r_faithful_torsion_free},
      {"maximal-special-r-prime", "a maximal graded special r-submodule is prime", law_maximal_special_r_prime},
      {"all-special-r-criterion",
       "every proper graded submodule is special-r iff h(M) ⊆ T(M) or every element of h(M) - T(M) generates M",
       law_all_special_r_criterion},
      {"r-quotient-divisors", "K is an r-submodule iff Z(M/K) ⊆ Z(M)", law_r_quotient_divisors},
      {"zero-submodule", "0 is an r-submodule and a special r-submodule", law_zero_submodule},
  };
}

}  // namespace

const std::vector<Law>& laws() {
  static const std::vector<Law> registry = build_registry();
  return registry;
}

const Law* find_law(const std::string& id) {
  for (const Law& l : laws())
    if (l.id == id) return &l;
  return nullptr;
}

LawVerdict run_law(const Law& law, LawContext& ctx) {
  LawVerdict v;
  try {
    v = law.check(ctx);
  } catch (const RouteDisagreement& e) {
    v = LawVerdict{};
    v.status = LawStatus::Violated;
    v.detail = e.what();
  } catch (const CapExceeded& e) {
    v = not_applicable(e.what());
  } catch (const BudgetError& e) {
    v = not_applicable(e.what());
  }
  v.law = law.id;
  v.instance = ctx.instance().id;
  if (v.status == LawStatus::Verified && v.cases == 0) {
    v.status = LawStatus::Inapplicable;
    v.detail = "no case meets the hypotheses";
  }
  return v;
}

SuiteReport run_suite(const std::vector<Instance>& instances, const std::vector<std::string>& filter,
                      const LawOptions& opts) {
  for (const std::string& id : filter)
    if (!find_law(id)) throw std::invalid_argument("unknown law '" + id + "'");
  SuiteReport report;
  for (const Instance& inst : instances) {
    LawContext ctx(inst, opts);
    for (const Law& law : laws()) {
      if (!filter.empty() && std::find(filter.begin(), filter.end(), law.id) == filter.end()) continue;
      LawVerdict v = run_law(law, ctx);
      switch (v.status) {
        case LawStatus::Verified:
          ++report.verified;
          break;
        case LawStatus::Violated:
          ++report.violated;
          break;
        case LawStatus::Inapplicable:
          ++report.inapplicable;
          break;
      }
      report.verdicts.push_back(std::move(v));
    }
  }
  return report;
}

// ---------------------------------------------------------------- search

const std::vector<std::string>& separation_predicates() {
  static const std::vector<std::string> names{"prime", "r", "special-r", "pure", "hk-torsion", "colon-prime", "colon-r"};
  return names;
}

std::vector<SeparationTerm> parse_separation(const std::string& spec) {
  std::vector<SeparationTerm> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty term in separation '" + spec + "'");
    item = item.substr(b, e - b + 1);
    SeparationTerm t;
    if (item[0] == '!') {
      t.negated = true;
      item.erase(0, 1);
    }
    const auto& names = separation_predicates();
    if (std::find(names.begin(), names.end(), item) == names.end())
      throw std::invalid_argument("unknown predicate '" + item + "' in separation '" + spec + "'");
    t.predicate = item;
    out.push_back(std::move(t));
  }
  if (out.empty()) throw std::invalid_argument("empty separation");
  return out;
}

PredicateVerdict evaluate_predicate(const std::string& name, Analyzer& an, IdealAnalyzer& ideals, const SubLattice& k) {
  if (name == "prime") return an.prime_submodule(k);
  if (name == "r") return an.r_submodule(k);
  if (name == "special-r") return an.special_r_submodule(k);
  if (name == "pure") return an.pure(k);
  if (name == "hk-torsion") return an.homogeneous_part_torsion(k);
  SubLattice colon = SubLattice::from_rows(ideals.regular().module(), an.colon(k).basis());
  if (name == "colon-prime") return ideals.prime(colon);
  if (name == "colon-r") return ideals.r_ideal(colon);
  throw std::invalid_argument("unknown predicate '" + name + "'");
}

SearchReport find_separation(const std::vector<SeparationTerm>& terms, const std::vector<Instance>& grid) {
  SearchReport report;
  for (const Instance& inst : grid) {
    ++report.instances;
    Analyzer an(inst.module);
    IdealAnalyzer ideals(inst.module->ring());
    for (const NamedSubmodule& s : inst.submodules) {
      if (!s.lattice.is_proper() || !is_graded(s.lattice).graded) continue;
      ++report.candidates;
      std::map<std::string, PredicateVerdict> verdicts;
      bool all = true;
      for (const SeparationTerm& t : terms) {
        PredicateVerdict v = evaluate_predicate(t.predicate, an, ideals, s.lattice);
        bool holds = v.value != t.negated;
        verdicts.emplace(t.predicate, std::move(v));
        if (!holds) {
          all = false;
          break;
        }
      }
      if (all) {
        report.hit = SearchHit{inst.family, inst.id, s.name, s.lattice, std::move(verdicts), std::nullopt};
        return report;
      }
    }
  }
  return report;
}

SearchReport find_law_violation(const Law& law, const std::vector<Instance>& grid, const LawOptions& opts) {
  SearchReport report;
  for (const Instance& inst : grid) {
    ++report.instances;
    LawContext ctx(inst, opts);
    LawVerdict v = run_law(law, ctx);
    report.candidates += v.cases;
    if (v.status == LawStatus::Violated) {
      report.hit = SearchHit{inst.family, inst.id, "", std::nullopt, {}, std::move(v)};
      return report;
    }
  }
  return report;
}

}  // namespace graded
