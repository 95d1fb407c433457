#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace graded {

using Int = std::int64_t;
using Vec = std::vector<Int>;
/// Row-major integer matrix; every row has the same length.
using Mat = std::vector<Vec>;

// Overflow-checked arithmetic. Lattice work stays far below 2^63 on every
// carrier we ship, but a silent wrap would corrupt a canonical form.
inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

/// Floor division (rounds toward negative infinity).
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Canonical residue in [0, m) for m > 0; the identity for m == 0.
inline Int reduce_mod(Int a, Int m) {
  if (m == 0) return a;
  Int r = a % m;
  return r < 0 ? r + m : r;
}

inline Int abs_int(Int a) {
  if (a == INT64_MIN) throw std::overflow_error("integer overflow in abs");
  return a < 0 ? -a : a;
}

Int gcd(Int a, Int b);
/// lcm with the convention lcm(0, x) = x, so 0 acts as "no constraint".
Int lcm_nonzero(Int a, Int b);

/// Positive divisors of n > 0, ascending.
std::vector<Int> divisors(Int n);
/// Distinct prime divisors of n > 0, ascending.
std::vector<Int> prime_divisors(Int n);

bool is_zero(const Vec& v);

/// v += k * w
void axpy(Vec& v, Int k, const Vec& w);

Mat identity_matrix(std::size_t n);

}  // namespace graded
