#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graded/lattice.hpp"

namespace graded {

enum class BudgetMode { Exhaustive, DivisorWitness, Sampled };

/// How universal quantifiers over h(R) and h(M) are discharged.
///
/// Exhaustive needs a finite module. The ring side is then finite too up to
/// the action: a ring element only matters through the map it induces on M,
/// so h(R)_g is enumerated modulo Ann_R(M) ∩ R_g. Conditions that mention a
/// ring element being nonzero (torsion-freeness, faithfulness) are decided on
/// the annihilator lattice directly.
///
/// DivisorWitness replaces each infinite coordinate by {0} ∪ {±d : d | E*},
/// where E* collects every finite modulus and the torsion exponents of M/K and
/// R/(K:_R M). Sampled(B) uses every coordinate in [-B, B].
struct QuantifierBudget {
  BudgetMode mode = BudgetMode::Exhaustive;
  Int bound = 0;

  static QuantifierBudget exhaustive() { return {BudgetMode::Exhaustive, 0}; }
  static QuantifierBudget divisor_witness() { return {BudgetMode::DivisorWitness, 0}; }
  static QuantifierBudget sampled(Int b) { return {BudgetMode::Sampled, b}; }
  /// "exhaustive", "divisor-witness" or "sampled:<B>".
  static QuantifierBudget parse(const std::string& text);
  /// Exhaustive for finite modules, DivisorWitness otherwise.
  static QuantifierBudget default_for(const GradedModule& m);

  bool operator==(const QuantifierBudget&) const = default;
};

std::string to_string(const QuantifierBudget& b);

/// Thrown when a budget cannot decide the requested quantifier (Exhaustive
/// over an infinite domain, DivisorWitness with nothing infinite to reduce).
class BudgetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a predicate's hypotheses (graded, proper) fail.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when two decision routes for the same predicate disagree.
class RouteDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct PredicateVerdict {
  bool value = true;
  /// Witnesses for a failed universal statement (or an attesting element for
  /// an existential one). For ideal predicates both live in the ring.
  std::optional<Element> a;
  std::optional<Element> x;
  std::string method;  // budget, plus the route that settled it
  std::string note;
};

/// Finite description of Z(M) (zero divisors on M among h(R)) or T(M)
/// (torsion elements of M).
struct DivisorProfile {
  Int exponent = 1;
  bool has_free_part = false;
  /// Present when the quantified domain is finite: the exact homogeneous set,
  /// in enumeration order. Ring-side sets list representatives modulo
  /// Ann_R(M).
  std::optional<std::vector<Element>> explicit_set;
};

/// Homogeneous elements used to discharge quantifiers, in enumeration order.
struct Domains {
  std::vector<Element> ring;
  std::vector<Element> module;
  Int e_star = 1;
};

/**
 * Decides the submodule predicates of one module under one budget.
 *
 * Annihilator zero-ness is cached per element, so a single Analyzer should be
 * reused across the submodules of a module.
 */
class Analyzer {
 public:
  explicit Analyzer(ModulePtr m, std::optional<QuantifierBudget> budget = std::nullopt);

  const ModulePtr& module() const { return m_; }
  const QuantifierBudget& budget() const { return budget_; }

  /// a ∈ Z(M): a homogeneous and Ann_M(a) ≠ 0.
  bool in_z(const Element& a);
  /// x ∈ T(M): Ann_R(x) ≠ 0.
  bool in_t(const Element& x);

  DivisorProfile z_profile();
  DivisorProfile t_profile();

  /// E* for the quantifiers about K (K = 0 for module-only predicates).
  Int e_star(const SubLattice& k);
  /// The quantifier domains for statements about K.
  Domains domains(const SubLattice& k);
  /// DivisorWitness coordinates for an infinite axis: 0, 1, -1, d, -d, ...
  /// over the divisors d of E*.
  static Vec divisor_values(Int e_star);

  PredicateVerdict prime_submodule(const SubLattice& n);
  PredicateVerdict pure(const SubLattice& k);
  /// Cross-checked against both lattice criteria in exact modes.
  PredicateVerdict r_submodule(const SubLattice& k);
  PredicateVerdict special_r_submodule(const SubLattice& k);
  PredicateVerdict torsion_free();
  PredicateVerdict faithful();

  // Individual decision routes, exposed for the cross-check tests.
  PredicateVerdict r_by_definition(const SubLattice& k);
  /// aM ∩ K = aK for all a ∈ h(R) - Z(M).
  PredicateVerdict r_by_intersection(const SubLattice& k);
  /// (K :_M a) = K for all a ∈ h(R) - Z(M).
  PredicateVerdict r_by_colon(const SubLattice& k);
  /// Z(M/K) ⊆ Z(M), over the ring domain.
  PredicateVerdict r_by_quotient_divisors(const SubLattice& k);
  PredicateVerdict special_r_by_definition(const SubLattice& k);
  /// Rx ∩ K = (K :_R M)x for all x ∈ h(M) - T(M).
  PredicateVerdict special_r_by_cyclic(const SubLattice& k);
  /// (K :_R M) = (K :_R x) for all x ∈ h(M) - T(M).
  PredicateVerdict special_r_by_colon(const SubLattice& k);

  /// h(M) ∩ K ⊆ T(M) over the module domain; the witness is a homogeneous
  /// torsion-free element of K.
  PredicateVerdict homogeneous_part_torsion(const SubLattice& k);

  /// Ann_R(M).
  const SubLattice& annihilator();
  /// (K :_R M), cached per submodule.
  const SubLattice& colon(const SubLattice& k);

  /// Whether the current budget runs the route cross-checks.
  bool cross_checks() const { return budget_.mode != BudgetMode::Sampled; }

 private:
  void require_proper_graded(const SubLattice& k, const char* what) const;
  std::vector<Element> ring_domain(Int e_star);
  std::vector<Element> module_domain(Int e_star);
  std::string method(const char* route) const;

  ModulePtr m_;
  QuantifierBudget budget_;
  std::optional<SubLattice> ann_;  // Ann_R(M)
  std::map<Element, bool> z_cache_, t_cache_;
  std::map<Mat, SubLattice> colon_cache_;
  std::map<Int, std::vector<Element>> ring_domain_cache_, module_domain_cache_;
};

/// Predicates on ideals, decided over the regular module.
class IdealAnalyzer {
 public:
  explicit IdealAnalyzer(RingPtr r, std::optional<QuantifierBudget> budget = std::nullopt);

  const RingPtr& ring() const { return r_; }
  Analyzer& regular() { return regular_; }

  PredicateVerdict prime(const SubLattice& p);
  /// For R ≅ Z this is decided by the fact that {0} is the only graded
  /// r-ideal of a graded domain, and cross-checked against the definition.
  PredicateVerdict r_ideal(const SubLattice& p);
  PredicateVerdict r_ideal_by_definition(const SubLattice& p);

 private:
  RingPtr r_;
  Analyzer regular_;
};

/// All predicates for one submodule, as reported by `classify`.
struct ClassificationReport {
  bool graded = true;
  bool proper = true;
  std::optional<PredicateVerdict> prime, r, special_r, pure;
  std::optional<PredicateVerdict> colon_prime_ideal, colon_r_ideal;
  std::optional<PredicateVerdict> hk_torsion;  // h(M) ∩ K ⊆ T(M)
};

/// `ideals` (over the same ring) adds the verdicts on (K :_R M); pass null to
/// skip them.
ClassificationReport classify(Analyzer& an, IdealAnalyzer* ideals, const SubLattice& k);

}  // namespace graded
