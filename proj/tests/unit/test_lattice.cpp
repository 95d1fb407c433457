#include <gtest/gtest.h>

#include "graded/enumerate.hpp"
#include "graded/lattice.hpp"
#include "graded/presets.hpp"
#include "oracle.hpp"

using namespace graded;

namespace {

ModulePtr gaussian_module(Int n) {
  return checked(scalar_module(integers(GradeGroup::cyclic(2)), {{n, 0}, {n, 1}}));
}

ModulePtr zxz() { return gaussian_module(0); }

SubLattice ideal(const ModulePtr& m, std::vector<Element> gens) {
  return span(gens, regular_module(m->ring()));
}

}  // namespace

TEST(Span, GaussianMultiples) {
  ModulePtr m = gaussian_module(18);
  SubLattice k = multiple_of_module(Element({9}), m);
  EXPECT_EQ(k.basis(), (Mat{{9, 0}, {0, 9}}));
  EXPECT_TRUE(span({}, m).is_zero());
  SubLattice diag = span({Element({1, 1})}, zxz());
  EXPECT_EQ(diag.basis(), (Mat{{1, 1}}));
}

TEST(Member, GaussianExamples) {
  ModulePtr m = gaussian_module(18);
  SubLattice k = multiple_of_module(Element({9}), m);
  EXPECT_FALSE(member(Element({3, 0}), k));
  EXPECT_TRUE(member(Element({0, 0}), k));
  EXPECT_TRUE(member(Element({9, 9}), k));
}

TEST(Member, AgreesWithBruteForceOnEverySubmodule) {
  for (Int n : {4, 6, 9}) {
    ModulePtr m = gaussian_module(n);
    oracle::Finite f(m);
    for (const SubLattice& k : enumerate_submodules(m)) {
      oracle::Set s = f.elements(k);
      for (const Element& x : f.all()) ASSERT_EQ(member(x, k), f.in(s, x)) << to_string(k) << ' ' << to_string(x);
      EXPECT_EQ(static_cast<std::size_t>(*k.cardinality()), f.count(s));
    }
  }
}

TEST(Graded, UngradedIdealHasWitness) {
  ModulePtr reg = regular_module(gaussian_ring(0));
  SubLattice p = span({Element({1, 1})}, reg);
  GradedCheck g = is_graded(p);
  EXPECT_FALSE(g.graded);
  ASSERT_TRUE(g.witness);
  EXPECT_TRUE(member(*g.witness, p));
  bool escapes = false;
  for (const auto& [d, c] : reg->decompose(*g.witness))
    if (!member(c, p)) escapes = true;
  EXPECT_TRUE(escapes);
  EXPECT_TRUE(is_graded(span({Element({2, 0})}, zxz())).graded);
  EXPECT_TRUE(is_graded(span({Element({3, 0}), Element({0, 5})}, zxz())).graded);
}

TEST(Graded, MatchesBruteForceOnSubgroupLattice) {
  ModulePtr m = gaussian_module(6);
  oracle::Finite f(m);
  for (const SubLattice& k : enumerate_submodules(m)) EXPECT_EQ(is_graded(k).graded, f.graded(f.elements(k)));
}

TEST(SumIntersect, Examples) {
  ModulePtr m = gaussian_module(16);
  SubLattice k = multiple_of_module(Element({2}), m);
  EXPECT_EQ(sum(k, zero_submodule(m)), k);
  EXPECT_EQ(intersect(k, full_submodule(m)), k);
  EXPECT_EQ(intersect(multiple_of_module(Element({2}), m), k), k);
  SubLattice a = span({Element({4, 0})}, zxz()), b = span({Element({6, 0})}, zxz());
  EXPECT_EQ(intersect(a, b), span({Element({12, 0})}, zxz()));
  EXPECT_EQ(sum(a, b), span({Element({2, 0})}, zxz()));
}

TEST(ScalarMultiple, Examples) {
  ModulePtr m16 = gaussian_module(16);
  SubLattice k = multiple_of_module(Element({2}), m16);
  SubLattice two_k = scalar_multiple(Element({2}), k);
  EXPECT_EQ(two_k, multiple_of_module(Element({4}), m16));
  EXPECT_FALSE(two_k == k);
  EXPECT_EQ(scalar_multiple(Element({1}), k), k);
  ModulePtr m18 = gaussian_module(18);
  SubLattice k9 = multiple_of_module(Element({9}), m18);
  EXPECT_EQ(scalar_multiple(Element({5}), k9), k9);
  EXPECT_THROW(scalar_multiple(Element({1, 1}), span({}, regular_module(gaussian_ring(0)))), std::invalid_argument);
}

TEST(IdealProduct, Examples) {
  ModulePtr m4 = gaussian_module(4);
  SubLattice full = full_submodule(m4);
  EXPECT_EQ(ideal_product(full_submodule(regular_module(m4->ring())), full), full);
  EXPECT_EQ(ideal_product(ideal(m4, {Element({2})}), full), multiple_of_module(Element({2}), m4));
  ModulePtr m18 = gaussian_module(18);
  SubLattice prod = ideal_product(ideal(m18, {Element({3})}), multiple_of_module(Element({2}), m18));
  EXPECT_EQ(prod, multiple_of_module(Element({6}), m18));
}

TEST(Cyclic, Examples) {
  RingPtr zz = product_ring(GradeGroup::cyclic(2), {0, 0});
  ModulePtr p = checked(componentwise_module(zz, {{0, 0}, {2, 0}}, {0, 1}));
  EXPECT_EQ(cyclic(Element({1, 0}), p), span({Element({1, 0})}, p));
  EXPECT_EQ(*cyclic(Element({1, 0}), p).basis().begin(), (Vec{1, 0}));
  EXPECT_TRUE(cyclic(Element({0, 0}), p).is_zero());
  SubLattice c = cyclic(Element({9, 0}), gaussian_module(18));
  EXPECT_EQ(c.cardinality(), 2);
}

TEST(Colon, RingExamples) {
  ModulePtr m = gaussian_module(18);
  SubLattice k = multiple_of_module(Element({9}), m);
  EXPECT_EQ(colon_ring(k, full_submodule(m)), ideal(m, {Element({9})}));
  EXPECT_TRUE(colon_ring(k, k).is_full());
  SubLattice k2 = span({Element({2, 0})}, zxz());
  EXPECT_TRUE(colon_ring(k2, full_submodule(zxz())).is_zero());
}

TEST(Colon, ModuleExamples) {
  ModulePtr m = gaussian_module(18);
  SubLattice k = multiple_of_module(Element({9}), m);
  EXPECT_EQ(colon_module(k, Element({1})), k);
  EXPECT_EQ(colon_module(k, Element({3})), multiple_of_module(Element({3}), m));
  EXPECT_TRUE(colon_module(k, Element({9})).is_full());
}

TEST(Colon, AgreesWithBruteForce) {
  for (Int n : {4, 6, 8}) {
    ModulePtr m = gaussian_module(n);
    oracle::Finite f(m);
    std::vector<SubLattice> subs = enumerate_graded_submodules(m);
    for (const SubLattice& k : subs) {
      oracle::Set ks = f.elements(k);
      for (const SubLattice& nn : subs) {
        SubLattice c = colon_ring(k, nn);
        oracle::Set ns = f.elements(nn);
        for (const Element& r : f.ring_box()) {
          bool brute = true;
          for (const Element& x : f.all())
            if (f.in(ns, x) && !f.in(ks, f.act(r, x))) brute = false;
          ASSERT_EQ(member(r, c), brute);
        }
      }
      for (const Element& a : f.hr()) {
        SubLattice c = colon_module(k, a);
        for (const Element& x : f.all()) ASSERT_EQ(member(x, c), f.in(ks, f.act(a, x)));
      }
    }
  }
}

TEST(Annihilators, Examples) {
  RingPtr zz = product_ring(GradeGroup::cyclic(2), {0, 0});
  ModulePtr p = checked(componentwise_module(zz, {{0, 0}, {2, 0}}, {0, 1}));
  EXPECT_TRUE(annihilator_module(Element({0, 2}), p).is_full());
  EXPECT_TRUE(annihilator_ring(full_submodule(zxz())).is_zero());
  EXPECT_TRUE(annihilator_module(Element({5}), gaussian_module(18)).is_zero());
  EXPECT_EQ(annihilator_module(Element({2, 0}), p), span({Element({0, 1})}, p));
  EXPECT_EQ(annihilator_ring(full_submodule(gaussian_module(12))), ideal(gaussian_module(12), {Element({12})}));
}

TEST(Quotient, Examples) {
  ModulePtr m = gaussian_module(18);
  QuotientPresentation q = quotient(multiple_of_module(Element({9}), m));
  EXPECT_EQ(q.factors, (std::vector<std::pair<Degree, Int>>{{0, 9}, {1, 9}}));
  EXPECT_EQ(q.order(), 81);
  EXPECT_TRUE(quotient(full_submodule(m)).factors.empty());
  QuotientPresentation z = quotient(span({Element({2, 0})}, zxz()));
  EXPECT_EQ(z.factors, (std::vector<std::pair<Degree, Int>>{{0, 2}, {1, 0}}));
  EXPECT_FALSE(z.order());
  EXPECT_THROW(quotient(span({Element({1, 1})}, regular_module(gaussian_ring(0)))), std::invalid_argument);
}

TEST(Quotient, OrderIsIndexAndKernelProjectsToZero) {
  for (Int n : {4, 6, 12}) {
    ModulePtr m = gaussian_module(n);
    for (const SubLattice& k : enumerate_graded_submodules(m)) {
      QuotientPresentation q = quotient(k);
      ASSERT_EQ(*q.order() * *k.cardinality(), *m->cardinality());
      for (const Element& g : k.generators()) EXPECT_TRUE(q.project(g).is_zero());
      EXPECT_TRUE(q.image(k).is_zero());
      EXPECT_TRUE(q.image(full_submodule(m)).is_full());
    }
  }
}
