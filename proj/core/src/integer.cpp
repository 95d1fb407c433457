#include "graded/integer.hpp"

namespace graded {

Int gcd(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int lcm_nonzero(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  if (a == 0) return b;
  if (b == 0) return a;
  return checked_mul(a / gcd(a, b), b);
}

std::vector<Int> divisors(Int n) {
  if (n <= 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<Int> prime_divisors(Int n) {
  if (n <= 0) throw std::invalid_argument("prime_divisors: n must be positive");
  std::vector<Int> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_zero(const Vec& v) {
  for (Int x : v)
    if (x != 0) return false;
  return true;
}

void axpy(Vec& v, Int k, const Vec& w) {
  if (k == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (w[i] != 0) v[i] = checked_add(v[i], checked_mul(k, w[i]));
  }
}

Mat identity_matrix(std::size_t n) {
  Mat m(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace graded
