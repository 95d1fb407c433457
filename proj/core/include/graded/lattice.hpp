#pragma once

#include <optional>
#include <vector>

#include "graded/algebra.hpp"
#include "graded/normal_form.hpp"

namespace graded {

/**
 * A submodule (or, over the regular module, an ideal) stored as its lifted
 * integer lattice: the preimage in Z^n of the submodule of
 * Z_{d_1} + ... + Z_{d_n}. The lattice always contains the relation rows
 * d_i * e_i, and the basis is kept in row Hermite normal form, so two
 * SubLattices over the same ambient are equal exactly when their bases are.
 */
class SubLattice {
 public:
  /// Z-span of `rows` plus the relation rows. The caller asserts the result is
  /// closed under the ring action; use `span` when it may not be.
  static SubLattice from_rows(ModulePtr ambient, Mat rows);

  const ModulePtr& ambient() const { return ambient_; }
  const GradedModule& module() const { return *ambient_; }
  const Mat& basis() const { return basis_; }

  bool is_zero() const;
  bool is_full() const;
  bool is_proper() const { return !is_full(); }
  /// Set inclusion other ⊆ *this.
  bool contains(const SubLattice& other) const;
  /// Reduced nonzero basis rows; they generate the submodule as a group.
  std::vector<Element> generators() const;
  /// Number of elements when the ambient is finite.
  std::optional<Int> cardinality() const;

  bool operator==(const SubLattice& other) const;

 private:
  SubLattice(ModulePtr ambient, Mat basis) : ambient_(std::move(ambient)), basis_(std::move(basis)) {}
  ModulePtr ambient_;
  Mat basis_;
};

std::string to_string(const SubLattice& k);

bool same_ambient(const SubLattice& a, const SubLattice& b);

SubLattice zero_submodule(ModulePtr ambient);
SubLattice full_submodule(ModulePtr ambient);

/// The R-submodule generated by `gens`.
SubLattice span(const std::vector<Element>& gens, ModulePtr ambient);
/// m·M for a ring element m (the reading used for the Gaussian-module
/// fixtures, where "<m>" denotes mM).
SubLattice multiple_of_module(const Element& m, ModulePtr ambient);

bool member(const Element& x, const SubLattice& k);

struct GradedCheck {
  bool graded = true;
  /// On failure: an element of K with a component outside K.
  std::optional<Element> witness;
  std::optional<Degree> degree;
};
/// Sound and complete for finitely generated K: checks every degree
/// component of every basis row.
GradedCheck is_graded(const SubLattice& k);

SubLattice sum(const SubLattice& k, const SubLattice& n);
SubLattice intersect(const SubLattice& k, const SubLattice& n);
/// a·K for homogeneous a.
SubLattice scalar_multiple(const Element& a, const SubLattice& k);
/// I·N for an ideal I (over the regular module) and submodule N.
SubLattice ideal_product(const SubLattice& ideal, const SubLattice& n);
/// R·x.
SubLattice cyclic(const Element& x, ModulePtr ambient);

/// (K :_R N) = {r in R : rN ⊆ K}, an ideal over regular_module(R).
SubLattice colon_ring(const SubLattice& k, const SubLattice& n);
/// (K :_R x) = (K :_R Rx).
SubLattice colon_ring(const SubLattice& k, const Element& x);
/// (K :_M a) = {m in M : am in K} for homogeneous a.
SubLattice colon_module(const SubLattice& k, const Element& a);
/// (K :_M I) = {m in M : Im ⊆ K} for a graded ideal I.
SubLattice colon_module(const SubLattice& k, const SubLattice& ideal);
/// Ann_R(N).
SubLattice annihilator_ring(const SubLattice& n);
/// Ann_R(x).
SubLattice annihilator_ring(const Element& x, ModulePtr ambient);
/// Ann_M(a) for homogeneous a.
SubLattice annihilator_module(const Element& a, ModulePtr ambient);

/// M/K with the induced grading (M/K)_g = (M_g + K)/K, presented per degree
/// by Smith invariants.
struct QuotientPresentation {
  ModulePtr source;
  SubLattice kernel;
  std::vector<std::pair<Degree, Int>> factors;  // (degree, cyclic order; 0 = Z)
  Mat projection;                               // row j: image of source basis j
  Mat lifts;                                    // row f: a source vector over factor f
  ModulePtr target;                             // the quotient as a graded module

  Element project(const Element& x) const;
  /// Image of a submodule N ⊇ kernel, as a submodule of the target.
  SubLattice image(const SubLattice& n) const;
  /// Number of elements of the factor group (nullopt when some factor is Z).
  std::optional<Int> order() const;
};

/// Requires K graded.
QuotientPresentation quotient(const SubLattice& k);

}  // namespace graded
