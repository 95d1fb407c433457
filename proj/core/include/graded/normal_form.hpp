#pragma once

#include <optional>

#include "graded/integer.hpp"

namespace graded {

/**
 * Row Hermite normal form of the lattice spanned by `rows` in Z^width.
 *
 * Convention: zero rows are dropped; the first nonzero entry (pivot) of each
 * row is positive; pivot columns strictly increase; every entry above a pivot
 * lies in [0, pivot). Two generating sets span the same lattice iff their
 * HNFs are identical.
 */
Mat hnf(Mat rows, std::size_t width);

/// Column index of the first nonzero entry of each HNF row.
std::vector<std::size_t> pivot_columns(const Mat& h);

/// Integer coefficients c with c * h == v, or nullopt when v is outside the
/// lattice. `h` must be in HNF.
std::optional<Vec> solve_in_basis(const Mat& h, const Vec& v);

bool in_lattice(const Mat& h, const Vec& v);

/// HNF of {u in Z^m : u * phi in target}, where phi has m rows of width n and
/// `target` spans a lattice in Z^n.
Mat lattice_preimage(const Mat& phi, const Mat& target, std::size_t n);

/// HNF of the intersection of two lattices in Z^width.
Mat lattice_intersection(const Mat& a, const Mat& b, std::size_t width);

/// HNF of the lattice sum.
Mat lattice_sum(const Mat& a, const Mat& b, std::size_t width);

/// True iff every row of `inner` lies in the lattice with HNF `outer`.
bool lattice_contains(const Mat& outer, const Mat& inner);

/// Smith normal form with transforms: U * a * V = diag(invariants) with U, V
/// unimodular. Invariants are nonnegative and form a divisibility chain; the
/// vector has length min(rows, cols) padded with zeros.
struct Smith {
  Vec invariants;
  Mat v;      // cols x cols
  Mat v_inv;  // cols x cols
};
Smith smith(Mat a, std::size_t cols);

/**
 * Presentation of the finitely generated abelian group L / S, where L has
 * HNF basis `basis` (k rows in Z^n) and S is a sublattice of L.
 *
 * The group is the direct sum of cyclic factors of the listed orders (0 for an
 * infinite cyclic factor; order-1 factors are omitted). `generators[i]` is a
 * vector of L mapping to the i-th factor generator, and `coordinates(v)` maps
 * any v in L to its factor coordinates (reduced modulo the orders).
 */
struct AbelianPresentation {
  Mat basis;
  Vec orders;
  Mat generators;
  Mat coefficient_map;  // k x factors: coefficients of v in `basis` times this

  std::optional<Vec> coordinates(const Vec& v) const;
};
AbelianPresentation present(const Mat& basis, const Mat& sub, std::size_t n);

/// Torsion exponent of Z^n / lattice (lcm of the nonzero invariants; 1 when
/// the quotient is torsion-free).
Int torsion_exponent(const Mat& lattice, std::size_t n);
/// Rank of Z^n / lattice.
std::size_t free_rank(const Mat& lattice, std::size_t n);

}  // namespace graded
