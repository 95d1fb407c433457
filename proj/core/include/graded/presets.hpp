#pragma once

#include "graded/algebra.hpp"

// Builders for the carriers that recur throughout the library: cyclic
// product rings, scalar and componentwise actions, Gaussian and truncated
// polynomial rings.

namespace graded {

/// Z_{d_1} x ... x Z_{d_k} with componentwise product, every axis in degree
/// e. A single modulus-0 axis gives Z; a single prime modulus gives GF(p).
RingPtr product_ring(GradeGroup group, const Vec& moduli);

/// Ring with a single axis acting by scalar multiplication on every module
/// axis ("coordinatewise-scalar").
ModulePtr scalar_module(RingPtr ring, std::vector<Axis> axes);

/// Product ring acting on module axis j through ring axis factor[j]
/// ("componentwise-product").
ModulePtr componentwise_module(RingPtr ring, std::vector<Axis> axes, const std::vector<std::size_t>& factor);

/// Z_n[i] (n = 0 gives Z[i]) as a ring graded by Z_2: degree 0 on 1, degree 1
/// on i, with i^2 = -1.
RingPtr gaussian_ring(Int n);

/// Z_m[x]/(x^d) as a ring with deg(x^j) = j in the grading group (reduced mod
/// its order; pass Z_d or Z).
RingPtr truncated_polynomial_ring(Int m, Int d, GradeGroup group);

/// Convenience: Z with the trivial grading by `group`.
inline RingPtr integers(GradeGroup group) { return product_ring(group, {0}); }

}  // namespace graded
