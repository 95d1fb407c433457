#include <gtest/gtest.h>

#include <random>

#include "graded/normal_form.hpp"

using namespace graded;

namespace {

bool is_hnf(const Mat& h) {
  std::size_t prev = 0;
  for (std::size_t r = 0; r < h.size(); ++r) {
    std::size_t p = 0;
    while (p < h[r].size() && h[r][p] == 0) ++p;
    if (p == h[r].size()) return false;  // zero rows are dropped
    if (h[r][p] <= 0) return false;
    if (r > 0 && p <= prev) return false;
    for (std::size_t above = 0; above < r; ++above)
      if (h[above][p] < 0 || h[above][p] >= h[r][p]) return false;
    prev = p;
  }
  return true;
}

// Brute-force lattice membership for small entries: search coefficient boxes.
bool in_span_brute(const Mat& rows, const Vec& v, Int box) {
  std::size_t k = rows.size();
  Vec c(k, -box);
  while (true) {
    Vec s(v.size(), 0);
    for (std::size_t i = 0; i < k; ++i) axpy(s, c[i], rows[i]);
    if (s == v) return true;
    std::size_t i = 0;
    while (i < k && ++c[i] > box) c[i++] = -box;
    if (i == k) return false;
  }
}

}  // namespace

TEST(Hnf, KnownForms) {
  EXPECT_EQ(hnf({{2, 4}, {3, 6}}, 2), (Mat{{1, 2}}));
  EXPECT_EQ(hnf({{0, 0}}, 2), Mat{});
  EXPECT_EQ(hnf({{4, 0}, {0, 6}, {2, 3}}, 2), (Mat{{2, 3}, {0, 6}}));
  EXPECT_EQ(hnf({{-3}}, 1), (Mat{{3}}));
}

TEST(Hnf, CanonicalUnderUnimodularRowOperations) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> entry(-9, 9);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + rng() % 4, k = 1 + rng() % 5;
    Mat rows(k, Vec(n));
    for (auto& r : rows)
      for (auto& x : r) x = entry(rng);
    Mat h = hnf(rows, n);
    ASSERT_TRUE(is_hnf(h));
    Mat shuffled = rows;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& r : shuffled)
      if (rng() % 2)
        for (auto& x : r) x = -x;
    if (k > 1) axpy(shuffled[0], entry(rng), shuffled[1]);
    EXPECT_EQ(hnf(shuffled, n), h);
    EXPECT_EQ(hnf(h, n), h);
  }
}

TEST(Hnf, SolveInBasisAgreesWithBruteForce) {
  Mat rows{{2, 1, 0}, {0, 3, 1}};
  Mat h = hnf(rows, 3);
  for (Int a = -4; a <= 4; ++a)
    for (Int b = -4; b <= 4; ++b)
      for (Int c = -2; c <= 2; ++c) {
        Vec v{a, b, c};
        bool brute = in_span_brute(rows, v, 6);
        EXPECT_EQ(in_lattice(h, v), brute) << a << ' ' << b << ' ' << c;
        if (auto coeffs = solve_in_basis(h, v)) {
          Vec s(3, 0);
          for (std::size_t i = 0; i < h.size(); ++i) axpy(s, (*coeffs)[i], h[i]);
          EXPECT_EQ(s, v);
        }
      }
}

TEST(Hnf, SumIntersectionAndContainment) {
  Mat a = hnf({{4, 0}, {0, 1}}, 2), b = hnf({{6, 0}, {0, 1}}, 2);
  EXPECT_EQ(lattice_intersection(a, b, 2), hnf({{12, 0}, {0, 1}}, 2));
  EXPECT_EQ(lattice_sum(a, b, 2), hnf({{2, 0}, {0, 1}}, 2));
  EXPECT_TRUE(lattice_contains(lattice_sum(a, b, 2), a));
  EXPECT_FALSE(lattice_contains(a, b));
}

TEST(Hnf, PreimageOfLinearMap) {
  // u -> 3u into 6Z: preimage is 2Z.
  EXPECT_EQ(lattice_preimage({{3}}, {{6}}, 1), (Mat{{2}}));
  // (u, v) -> u + v into 2Z.
  EXPECT_EQ(lattice_preimage({{1}, {1}}, {{2}}, 1), hnf({{1, 1}, {0, 2}}, 2));
}

TEST(Smith, InvariantsFormDivisibilityChain) {
  Smith s = smith({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3);
  EXPECT_EQ(s.invariants, (Vec{2, 6, 12}));
  EXPECT_EQ(smith({{0, 0}}, 2).invariants, (Vec{0}));
}

TEST(Smith, PresentationOfFiniteQuotient) {
  // Z^2 / <(2,0),(0,3)> = Z_6.
  AbelianPresentation p = present(identity_matrix(2), {{2, 0}, {0, 3}}, 2);
  EXPECT_EQ(p.orders, (Vec{6}));
  auto c = p.coordinates({1, 1});
  ASSERT_TRUE(c);
  EXPECT_NE((*c)[0], 0);
  EXPECT_EQ((*p.coordinates({2, 3}))[0], 0);
  EXPECT_EQ(torsion_exponent({{2, 0}, {0, 3}}, 2), 6);
  EXPECT_EQ(torsion_exponent({{2, 0}}, 2), 2);
  EXPECT_EQ(free_rank({{2, 0}}, 2), 1u);
}
