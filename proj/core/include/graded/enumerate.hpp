#pragma once

#include <stdexcept>
#include <vector>

#include "graded/lattice.hpp"

namespace graded {

/// Thrown when an enumeration would exceed its configured cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr Int kDefaultEnumerationCap = Int{1} << 16;

/**
 * Every subgroup of Z_{d_1} + ... + Z_{d_b} (all d_i >= 1), as lifted HNF
 * bases in Z^b. A subgroup lifts to a full-rank lattice L ⊇ diag(d), so its
 * HNF has pivot h_i | d_i on the diagonal and entries above pivot j in
 * [0, h_j); each such matrix containing diag(d) is one subgroup.
 */
std::vector<Mat> enumerate_subgroups(const Vec& moduli);

/// All graded submodules of a finite module, ordered by the per-degree
/// subgroup lists (lexicographic over degrees ascending). Includes 0 and M.
std::vector<SubLattice> enumerate_graded_submodules(const ModulePtr& m, Int cap = kDefaultEnumerationCap);

/// All submodules (graded or not) of a finite module.
std::vector<SubLattice> enumerate_submodules(const ModulePtr& m, Int cap = kDefaultEnumerationCap);

/// True iff the lifted lattice is closed under the ring action.
bool is_submodule_lattice(const GradedModule& m, const Mat& basis);

}  // namespace graded
