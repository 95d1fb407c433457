#include "graded/classify.hpp"

#include <algorithm>

#include "graded/presets.hpp"

namespace graded {

// ---------------------------------------------------------------- budget

QuantifierBudget QuantifierBudget::parse(const std::string& text) {
  if (text == "exhaustive") return exhaustive();
  if (text == "divisor-witness") return divisor_witness();
  const std::string prefix = "sampled:";
  if (text.rfind(prefix, 0) == 0) {
    std::string rest = text.substr(prefix.size());
    if (!rest.empty() && std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      if (rest.size() > 9) throw std::invalid_argument("sampled bound too large: " + rest);
      return sampled(std::stoll(rest));
    }
  }
  throw std::invalid_argument("unknown budget '" + text + "' (expected exhaustive, divisor-witness or sampled:<B>)");
}

QuantifierBudget QuantifierBudget::default_for(const GradedModule& m) {
  return m.is_finite() ? exhaustive() : divisor_witness();
}

std::string to_string(const QuantifierBudget& b) {
  switch (b.mode) {
    case BudgetMode::Exhaustive: return "exhaustive";
    case BudgetMode::DivisorWitness: return "divisor-witness";
    case BudgetMode::Sampled: return "sampled:" + std::to_string(b.bound);
  }
  return "?";
}

// ---------------------------------------------------------------- helpers

namespace {

Vec residues(Int d) {
  Vec out(static_cast<std::size_t>(d));
  for (Int i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

/// Zero first, then every nonzero element of each support degree in
/// ascending degree order.
std::vector<Element> homogeneous_from(const Carrier& c, const std::function<Vec(std::size_t)>& values) {
  std::vector<Element> out{c.zero()};
  for (Degree g : c.support()) {
    for (Element& e : c.block_elements(g, values))
      if (!e.is_zero()) out.push_back(std::move(e));
  }
  return out;
}

Int moduli_lcm(const Carrier& c) {
  Int e = 1;
  for (const Axis& a : c.axes()) e = lcm_nonzero(e, a.modulus);
  return e;
}

bool has_infinite_axis(const Carrier& c) { return !c.is_finite(); }

/// First nonzero homogeneous component of a nonzero graded submodule.
std::optional<Element> homogeneous_generator(const SubLattice& k) {
  for (const Element& g : k.generators()) {
    for (auto& [deg, part] : k.module().decompose(g)) return part;
  }
  return std::nullopt;
}

PredicateVerdict verdict(bool value, std::string method) {
  PredicateVerdict v;
  v.value = value;
  v.method = std::move(method);
  return v;
}

PredicateVerdict failure(std::string method, std::optional<Element> a, std::optional<Element> x) {
  PredicateVerdict v = verdict(false, std::move(method));
  v.a = std::move(a);
  v.x = std::move(x);
  return v;
}

void agree(const PredicateVerdict& a, const PredicateVerdict& b, const char* what) {
  if (a.value != b.value) {
    throw RouteDisagreement(std::string(what) + ": " + a.method + " says " + (a.value ? "true" : "false") + " but " +
                            b.method + " says " + (b.value ? "true" : "false"));
  }
}

}  // namespace

// ---------------------------------------------------------------- Analyzer

Analyzer::Analyzer(ModulePtr m, std::optional<QuantifierBudget> budget)
    : m_(std::move(m)), budget_(budget ? *budget : QuantifierBudget::default_for(*m_)) {
  if (budget_.mode == BudgetMode::Exhaustive && !m_->is_finite())
    throw BudgetError("exhaustive budget needs a finite module");
  if (budget_.mode == BudgetMode::DivisorWitness && m_->is_finite())
    throw BudgetError("divisor-witness budget needs an infinite quantified domain");
  if (budget_.mode == BudgetMode::Sampled && budget_.bound < 0) throw BudgetError("sampled bound must be >= 0");
}

std::string Analyzer::method(const char* route) const { return to_string(budget_) + "/" + route; }

const SubLattice& Analyzer::annihilator() {
  if (!ann_) ann_ = annihilator_ring(full_submodule(m_));
  return *ann_;
}

const SubLattice& Analyzer::colon(const SubLattice& k) {
  auto it = colon_cache_.find(k.basis());
  if (it == colon_cache_.end()) it = colon_cache_.emplace(k.basis(), colon_ring(k, full_submodule(m_))).first;
  return it->second;
}

bool Analyzer::in_z(const Element& a) {
  auto it = z_cache_.find(a);
  if (it != z_cache_.end()) return it->second;
  bool v = !annihilator_module(a, m_).is_zero();
  z_cache_.emplace(a, v);
  return v;
}

bool Analyzer::in_t(const Element& x) {
  auto it = t_cache_.find(x);
  if (it != t_cache_.end()) return it->second;
  bool v = !annihilator_ring(x, m_).is_zero();
  t_cache_.emplace(x, v);
  return v;
}

Vec Analyzer::divisor_values(Int e_star) {
  Vec out{0};
  for (Int d : divisors(e_star)) {
    out.push_back(d);
    out.push_back(-d);
  }
  return out;
}

Int Analyzer::e_star(const SubLattice& k) {
  const GradedRing& r = *m_->ring();
  Int e = lcm_nonzero(moduli_lcm(r), moduli_lcm(*m_));
  e = lcm_nonzero(e, torsion_exponent(k.basis(), m_->dim()));
  e = lcm_nonzero(e, torsion_exponent(colon(k).basis(), r.dim()));
  return e;
}

std::vector<Element> Analyzer::ring_domain(Int e_star) {
  const Int key = m_->is_finite() ? 0 : e_star;
  auto it = ring_domain_cache_.find(key);
  if (it != ring_domain_cache_.end()) return it->second;
  const GradedRing& r = *m_->ring();
  std::vector<Element> out;
  if (m_->is_finite()) {
    // Representatives of R_g modulo Ann_R(M) ∩ R_g: the HNF of that lattice
    // has full rank, and the box [0, pivot) per coordinate is a fundamental
    // domain.
    const SubLattice& ann = annihilator();
    std::map<std::size_t, Int> box;
    for (Degree g : r.degrees()) {
      std::vector<std::size_t> idx = r.block(g);
      Mat rows;
      for (const Vec& row : ann.basis()) {
        Vec v(idx.size());
        for (std::size_t t = 0; t < idx.size(); ++t) v[t] = row[idx[t]];
        rows.push_back(std::move(v));
      }
      Mat h = hnf(std::move(rows), idx.size());
      if (h.size() != idx.size()) throw std::logic_error("annihilator of a finite module has deficient rank");
      for (std::size_t t = 0; t < idx.size(); ++t) box[idx[t]] = h[t][t];
    }
    out = homogeneous_from(r, [&](std::size_t i) { return residues(box.at(i)); });
  } else if (budget_.mode == BudgetMode::DivisorWitness) {
    Vec div = divisor_values(e_star);
    out = homogeneous_from(r, [&](std::size_t i) { return r.axes()[i].is_finite() ? residues(r.axes()[i].modulus) : div; });
  } else {
    Vec range = signed_range(budget_.bound);
    out = homogeneous_from(r, [&](std::size_t i) { return r.axes()[i].is_finite() ? residues(r.axes()[i].modulus) : range; });
  }
  ring_domain_cache_.emplace(key, out);
  return out;
}

std::vector<Element> Analyzer::module_domain(Int e_star) {
  const Int key = m_->is_finite() ? 0 : e_star;
  auto it = module_domain_cache_.find(key);
  if (it != module_domain_cache_.end()) return it->second;
  const GradedModule& m = *m_;
  Vec fill = budget_.mode == BudgetMode::DivisorWitness ? divisor_values(e_star) : signed_range(budget_.bound);
  std::vector<Element> out = homogeneous_from(m, [&](std::size_t i) {
    return m.axes()[i].is_finite() ? residues(m.axes()[i].modulus) : fill;
  });
  module_domain_cache_.emplace(key, out);
  return out;
}

Domains Analyzer::domains(const SubLattice& k) {
  Domains d;
  d.e_star = e_star(k);
  d.ring = ring_domain(d.e_star);
  d.module = module_domain(d.e_star);
  return d;
}

DivisorProfile Analyzer::z_profile() {
  DivisorProfile p;
  p.exponent = moduli_lcm(*m_);
  p.has_free_part = has_infinite_axis(*m_);
  if (m_->is_finite()) {
    std::vector<Element> set;
    for (const Element& a : ring_domain(0))
      if (in_z(a)) set.push_back(a);
    p.explicit_set = std::move(set);
  }
  return p;
}

DivisorProfile Analyzer::t_profile() {
  DivisorProfile p;
  p.exponent = moduli_lcm(*m_->ring());
  p.has_free_part = has_infinite_axis(*m_->ring());
  if (m_->is_finite()) {
    std::vector<Element> set;
    for (const Element& x : module_domain(0))
      if (in_t(x)) set.push_back(x);
    p.explicit_set = std::move(set);
  }
  return p;
}

void Analyzer::require_proper_graded(const SubLattice& k, const char* what) const {
  if (!(k.module() == *m_)) throw PreconditionError(std::string(what) + ": submodule of a different module");
  if (!k.is_proper()) throw PreconditionError(std::string(what) + ": submodule is not proper");
  if (!is_graded(k).graded) throw PreconditionError(std::string(what) + ": submodule is not graded");
}

// ---------------------------------------------------------------- predicates

PredicateVerdict Analyzer::prime_submodule(const SubLattice& n) {
  require_proper_graded(n, "prime");
  Domains d = domains(n);
  const SubLattice& c = colon(n);
  for (const Element& a : d.ring) {
    if (member(a, c)) continue;
    for (const Element& x : d.module) {
      if (member(m_->apply(a, x), n) && !member(x, n)) return failure(method("definition"), a, x);
    }
  }
  return verdict(true, method("definition"));
}

PredicateVerdict Analyzer::pure(const SubLattice& k) {
  require_proper_graded(k, "pure");
  Domains d = domains(k);
  SubLattice full = full_submodule(m_);
  for (const Element& a : d.ring) {
    if (!(intersect(scalar_multiple(a, full), k) == scalar_multiple(a, k))) return failure(method("definition"), a, std::nullopt);
  }
  return verdict(true, method("definition"));
}

PredicateVerdict Analyzer::r_by_definition(const SubLattice& k) {
  require_proper_graded(k, "r-submodule");
  Domains d = domains(k);
  for (const Element& a : d.ring) {
    if (in_z(a)) continue;
    for (const Element& x : d.module) {
      if (member(m_->apply(a, x), k) && !member(x, k)) return failure(method("definition"), a, x);
    }
  }
  return verdict(true, method("definition"));
}

PredicateVerdict Analyzer::r_by_intersection(const SubLattice& k) {
  require_proper_graded(k, "r-submodule");
  Domains d = domains(k);
  SubLattice full = full_submodule(m_);
  for (const Element& a : d.ring) {
    if (in_z(a)) continue;
    if (!(intersect(scalar_multiple(a, full), k) == scalar_multiple(a, k))) return failure(method("intersection"), a, std::nullopt);
  }
  return verdict(true, method("intersection"));
}

PredicateVerdict Analyzer::r_by_colon(const SubLattice& k) {
  require_proper_graded(k, "r-submodule");
  Domains d = domains(k);
  for (const Element& a : d.ring) {
    if (in_z(a)) continue;
    if (!(colon_module(k, a) == k)) return failure(method("colon"), a, std::nullopt);
  }
  return verdict(true, method("colon"));
}

PredicateVerdict Analyzer::r_by_quotient_divisors(const SubLattice& k) {
  require_proper_graded(k, "r-submodule");
  Domains d = domains(k);
  QuotientPresentation q = quotient(k);
  for (const Element& a : d.ring) {
    if (in_z(a)) continue;
    if (!annihilator_module(a, q.target).is_zero()) return failure(method("quotient-divisors"), a, std::nullopt);
  }
  return verdict(true, method("quotient-divisors"));
}

PredicateVerdict Analyzer::r_submodule(const SubLattice& k) {
  PredicateVerdict v = r_by_definition(k);
  if (cross_checks()) {
    agree(v, r_by_colon(k), "r-submodule");
    agree(v, r_by_intersection(k), "r-submodule");
    v.method = method("definition+colon+intersection");
  }
  return v;
}

PredicateVerdict Analyzer::special_r_by_definition(const SubLattice& k) {
  require_proper_graded(k, "special-r");
  Domains d = domains(k);
  const SubLattice& c = colon(k);
  for (const Element& a : d.ring) {
    if (member(a, c)) continue;
    for (const Element& x : d.module) {
      if (in_t(x)) continue;
      if (member(m_->apply(a, x), k)) return failure(method("definition"), a, x);
    }
  }
  return verdict(true, method("definition"));
}

PredicateVerdict Analyzer::special_r_by_cyclic(const SubLattice& k) {
  require_proper_graded(k, "special-r");
  Domains d = domains(k);
  const SubLattice& c = colon(k);
  for (const Element& x : d.module) {
    if (in_t(x)) continue;
    SubLattice rx = cyclic(x, m_);
    if (!(intersect(rx, k) == ideal_product(c, rx))) return failure(method("cyclic"), std::nullopt, x);
  }
  return verdict(true, method("cyclic"));
}

PredicateVerdict Analyzer::special_r_by_colon(const SubLattice& k) {
  require_proper_graded(k, "special-r");
  Domains d = domains(k);
  const SubLattice& c = colon(k);
  for (const Element& x : d.module) {
    if (in_t(x)) continue;
    if (!(colon_ring(k, x) == c)) return failure(method("colon"), std::nullopt, x);
  }
  return verdict(true, method("colon"));
}

PredicateVerdict Analyzer::special_r_submodule(const SubLattice& k) {
  PredicateVerdict v = special_r_by_definition(k);
  if (cross_checks()) {
    agree(v, special_r_by_cyclic(k), "special-r");
    agree(v, special_r_by_colon(k), "special-r");
    v.method = method("definition+cyclic+colon");
  }
  return v;
}

PredicateVerdict Analyzer::homogeneous_part_torsion(const SubLattice& k) {
  Domains d = domains(k);
  for (const Element& x : d.module) {
    if (member(x, k) && !in_t(x)) return failure(method("definition"), std::nullopt, x);
  }
  return verdict(true, method("definition"));
}

PredicateVerdict Analyzer::faithful() {
  const SubLattice& ann = annihilator();
  if (ann.is_zero()) return verdict(true, method("annihilator"));
  return failure(method("annihilator"), homogeneous_generator(ann), std::nullopt);
}

PredicateVerdict Analyzer::torsion_free() {
  SubLattice zero = zero_submodule(m_);
  Domains d = domains(zero);
  const SubLattice& ann = annihilator();
  if (!ann.is_zero()) {
    // A nonzero scalar kills all of M; pair it with any nonzero element.
    if (d.module.size() > 1) return failure(method("annihilator"), homogeneous_generator(ann), d.module[1]);
    return verdict(true, method("annihilator"));
  }
  for (const Element& r : d.ring) {
    if (r.is_zero()) continue;
    for (const Element& x : d.module) {
      if (!x.is_zero() && m_->apply(r, x).is_zero()) return failure(method("definition"), r, x);
    }
  }
  return verdict(true, method("definition"));
}

// ---------------------------------------------------------------- ideals

IdealAnalyzer::IdealAnalyzer(RingPtr r, std::optional<QuantifierBudget> budget)
    : r_(r), regular_(regular_module(r), budget) {}

PredicateVerdict IdealAnalyzer::prime(const SubLattice& p) {
  Analyzer& an = regular_;
  if (!p.is_proper()) throw PreconditionError("prime ideal: ideal is not proper");
  if (!is_graded(p).graded) throw PreconditionError("prime ideal: ideal is not graded");
  Domains d = an.domains(p);
  const std::string m = to_string(an.budget()) + "/definition";
  for (const Element& x : d.ring) {
    if (member(x, p)) continue;
    for (const Element& y : d.module) {
      if (!member(y, p) && member(r_->multiply(x, y), p)) return failure(m, x, y);
    }
  }
  return verdict(true, m);
}

PredicateVerdict IdealAnalyzer::r_ideal_by_definition(const SubLattice& p) {
  Analyzer& an = regular_;
  if (!p.is_proper()) throw PreconditionError("r-ideal: ideal is not proper");
  if (!is_graded(p).graded) throw PreconditionError("r-ideal: ideal is not graded");
  Domains d = an.domains(p);
  const std::string m = to_string(an.budget()) + "/definition";
  for (const Element& x : d.ring) {
    if (an.in_z(x)) continue;
    for (const Element& y : d.module) {
      if (!member(y, p) && member(r_->multiply(x, y), p)) return failure(m, x, y);
    }
  }
  return verdict(true, m);
}

PredicateVerdict IdealAnalyzer::r_ideal(const SubLattice& p) {
  const bool integers = r_->dim() == 1 && !r_->axes()[0].is_finite();
  if (!integers) return r_ideal_by_definition(p);
  PredicateVerdict def = r_ideal_by_definition(p);
  PredicateVerdict v;
  v.method = to_string(regular_.budget()) + "/domain";
  v.value = p.is_zero();
  if (!v.value) {
    // x a nonzero element of P, y = 1: xy ∈ P, Ann(x) = 0, 1 ∉ P.
    v.a = p.generators().front();
    v.x = r_->unity();
  }
  if (regular_.cross_checks()) {
    agree(v, def, "r-ideal");
    v.method += "+definition";
  }
  return v;
}

// ---------------------------------------------------------------- report

ClassificationReport classify(Analyzer& an, IdealAnalyzer* ideals, const SubLattice& k) {
  ClassificationReport rep;
  rep.graded = is_graded(k).graded;
  rep.proper = k.is_proper();
  if (!rep.graded || !rep.proper) return rep;
  rep.prime = an.prime_submodule(k);
  rep.r = an.r_submodule(k);
  rep.special_r = an.special_r_submodule(k);
  rep.pure = an.pure(k);
  rep.hk_torsion = an.homogeneous_part_torsion(k);
  if (ideals) {
    const SubLattice& c = an.colon(k);
    rep.colon_prime_ideal = ideals->prime(c);
    rep.colon_r_ideal = ideals->r_ideal(c);
  }
  return rep;
}

}  // namespace graded
