#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graded/classify.hpp"
#include "graded/enumerate.hpp"
#include "graded/families.hpp"

namespace graded {

enum class LawStatus { Verified, Violated, Inapplicable };

std::string to_string(LawStatus s);

struct LawVerdict {
  std::string law;
  std::string instance;
  LawStatus status = LawStatus::Verified;
  /// Number of cases that met the law's hypotheses and were checked.
  std::size_t cases = 0;
  /// The violating data, or why the law did not apply.
  std::string detail;
};

struct LawOptions {
  Int enumeration_cap = kDefaultEnumerationCap;
  /// Largest module for which every (ungraded) submodule is enumerated.
  Int ungraded_cap = 1024;
  /// Per-side cap on quantifier domains for infinite modules.
  std::size_t domain_cap = 256;
  std::optional<QuantifierBudget> budget;
};

/**
 * Everything a law needs about one instance: the analyzers, the universe of
 * graded submodules (every one of them when the module is finite and small
 * enough, otherwise the instance's own list plus 0 and M), a universe of
 * graded ideals, and cached predicate verdicts.
 */
class LawContext {
 public:
  LawContext(Instance inst, LawOptions opts = {});

  const Instance& instance() const { return inst_; }
  const ModulePtr& module() const { return inst_.module; }
  const LawOptions& options() const { return opts_; }
  Analyzer& analyzer() { return an_; }
  IdealAnalyzer& ideals() { return ideal_an_; }

  /// True when `universe()` lists every graded submodule.
  bool complete() const { return complete_; }
  const std::vector<SubLattice>& universe() const { return universe_; }
  const std::vector<SubLattice>& proper() const { return proper_; }
  /// Graded ideals: all of them when R is finite, otherwise the principal
  /// ideals of the ring domain plus every colon ideal of the universe.
  const std::vector<SubLattice>& ideal_universe();

  const std::vector<Element>& ring_domain() const { return ring_domain_; }
  const std::vector<Element>& module_domain() const { return module_domain_; }

  bool is_r(const SubLattice& k);
  bool is_special_r(const SubLattice& k);
  bool is_prime(const SubLattice& k);
  bool is_pure(const SubLattice& k);
  /// h(M) ∩ K ⊆ T(M).
  bool torsion_part(const SubLattice& k);

  /// P ∩ (h(R) - Z(M)) ≠ ∅.
  bool meets_regular(const SubLattice& p);
  /// N ∩ (h(M) - T(M)) ≠ ∅.
  bool meets_torsion_free(const SubLattice& n);

  /// An analyzer for another module (quotients, submodules as modules),
  /// cached by key.
  Analyzer& analyzer_for(const std::string& key, const ModulePtr& m);

 private:
  bool cached(std::map<Mat, bool>& cache, const SubLattice& k, const std::function<bool()>& f);

  Instance inst_;
  LawOptions opts_;
  Analyzer an_;
  IdealAnalyzer ideal_an_;
  bool complete_ = false;
  std::vector<SubLattice> universe_, proper_;
  std::optional<std::vector<SubLattice>> ideals_;
  std::vector<Element> ring_domain_, module_domain_;
  std::map<Mat, bool> r_, sr_, prime_, pure_, hk_;
  std::map<std::string, std::unique_ptr<Analyzer>> others_;
};

struct Law {
  std::string id;
  std::string statement;
  std::function<LawVerdict(LawContext&)> check;
};

/// The registry, in reporting order.
const std::vector<Law>& laws();
const Law* find_law(const std::string& id);

/// Runs one law; a verified law with no applicable case is reported as
/// inapplicable, and cap or budget failures become inapplicable verdicts.
LawVerdict run_law(const Law& law, LawContext& ctx);

struct SuiteReport {
  std::vector<LawVerdict> verdicts;
  std::size_t verified = 0, violated = 0, inapplicable = 0;
};

/// Runs every law whose id is in `filter` (all laws when empty) on every
/// instance, instance-major in registry order.
SuiteReport run_suite(const std::vector<Instance>& instances, const std::vector<std::string>& filter = {},
                      const LawOptions& opts = {});

/// A graded ideal and submodule certifying that K is not an r-submodule:
/// P ∩ (h(R) - Z(M)) ≠ ∅, K ⊊ N, (K :_R M) ⊊ P and PN ⊆ K.
struct FailureWitnesses {
  SubLattice ideal;
  SubLattice submodule;
  Element a, x;  // the violating pair the construction started from
};

/// Requires h(R) ∩ (K :_R M) ⊆ Z(M) (over the analyzer's ring domain) and K
/// not an r-submodule; throws PreconditionError otherwise. Builds
/// P = (K :_R x), N = (K :_M P) from a violating pair (a, x) and throws
/// std::logic_error if any conclusion fails.
FailureWitnesses r_failure_witnesses(Analyzer& an, const SubLattice& k);

/// Requires h(M) ∩ K ⊆ T(M) and K not special-r. Builds N = (K :_M r),
/// I = (K :_R N) from a violating pair (r, x); the conclusions are
/// N ∩ (h(M) - T(M)) ≠ ∅, K ⊊ N, (K :_R M) ⊊ I and IN ⊆ K.
FailureWitnesses special_r_failure_witnesses(Analyzer& an, const SubLattice& k);

// ---------------------------------------------------------------- search

/// Predicate names accepted in separation specs.
const std::vector<std::string>& separation_predicates();

struct SeparationTerm {
  std::string predicate;
  bool negated = false;
};

/// "r,!special-r" -> [{r}, {special-r, negated}]. Throws
/// std::invalid_argument on unknown predicates or empty terms.
std::vector<SeparationTerm> parse_separation(const std::string& spec);

struct SearchHit {
  std::string family;
  std::string instance;
  std::string submodule;
  std::optional<SubLattice> lattice;
  std::map<std::string, PredicateVerdict> verdicts;
  std::optional<LawVerdict> law;  // for law searches
};

struct SearchReport {
  std::optional<SearchHit> hit;
  std::size_t instances = 0;
  std::size_t candidates = 0;
};

/// Evaluates one separation predicate on a proper graded submodule.
PredicateVerdict evaluate_predicate(const std::string& name, Analyzer& an, IdealAnalyzer& ideals, const SubLattice& k);

/// First (instance, submodule) in grid order satisfying every term.
SearchReport find_separation(const std::vector<SeparationTerm>& terms, const std::vector<Instance>& grid);

/// First instance in grid order on which the law is violated.
SearchReport find_law_violation(const Law& law, const std::vector<Instance>& grid, const LawOptions& opts = {});

}  // namespace graded
