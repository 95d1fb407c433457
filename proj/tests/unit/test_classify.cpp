#include <gtest/gtest.h>

#include "graded/classify.hpp"
#include "graded/presets.hpp"

using namespace graded;

namespace {

ModulePtr gaussian_module(Int n) {
  return checked(scalar_module(integers(GradeGroup::cyclic(2)), {{n, 0}, {n, 1}}));
}

ModulePtr integers_over(Int n, Int order = 3) {
  return checked(scalar_module(integers(GradeGroup::cyclic(order)), {{n, 0}}));
}

// Replays a failed universal verdict (a, x) against the definition.
void expect_replays_r(const ModulePtr& m, const SubLattice& k, const PredicateVerdict& v) {
  ASSERT_TRUE(v.a && v.x);
  EXPECT_TRUE(annihilator_module(*v.a, m).is_zero());
  EXPECT_TRUE(member(m->apply(*v.a, *v.x), k));
  EXPECT_FALSE(member(*v.x, k));
}

}  // namespace

TEST(Budget, ParseAndDefaults) {
  EXPECT_EQ(QuantifierBudget::parse("exhaustive"), QuantifierBudget::exhaustive());
  EXPECT_EQ(QuantifierBudget::parse("divisor-witness"), QuantifierBudget::divisor_witness());
  EXPECT_EQ(QuantifierBudget::parse("sampled:12"), QuantifierBudget::sampled(12));
  EXPECT_THROW(QuantifierBudget::parse("sampled:"), std::invalid_argument);
  EXPECT_THROW(QuantifierBudget::parse("lots"), std::invalid_argument);
  EXPECT_EQ(QuantifierBudget::default_for(*gaussian_module(4)), QuantifierBudget::exhaustive());
  EXPECT_EQ(QuantifierBudget::default_for(*gaussian_module(0)), QuantifierBudget::divisor_witness());
  EXPECT_EQ(to_string(QuantifierBudget::sampled(5)), "sampled:5");
}

TEST(Budget, IllegalModesThrow) {
  EXPECT_THROW(
      {
        Analyzer an(gaussian_module(0), QuantifierBudget::exhaustive());
        an.r_submodule(multiple_of_module(Element({3}), an.module()));
      },
      BudgetError);
  EXPECT_THROW(
      {
        Analyzer an(gaussian_module(4), QuantifierBudget::divisor_witness());
        an.r_submodule(multiple_of_module(Element({2}), an.module()));
      },
      BudgetError);
}

TEST(Preconditions, ProperAndGraded) {
  Analyzer an(gaussian_module(4));
  EXPECT_THROW(an.r_submodule(full_submodule(an.module())), PreconditionError);
  ModulePtr reg = regular_module(gaussian_ring(0));
  Analyzer ar(reg);
  EXPECT_THROW(ar.prime_submodule(span({Element({1, 1})}, reg)), PreconditionError);
}

TEST(Profiles, GaussianZeroDivisors) {
  Analyzer an(gaussian_module(18));
  DivisorProfile z = an.z_profile();
  EXPECT_EQ(z.exponent, 18);
  ASSERT_TRUE(z.explicit_set);
  std::vector<Element> expect;
  for (Int a = 0; a < 18; ++a)
    if (gcd(a, 18) > 1) expect.push_back(Element({a}));
  std::vector<Element> got = *z.explicit_set;
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, expect);
  for (Int a = -40; a <= 40; ++a) EXPECT_EQ(an.in_z(Element({a})), gcd(a, 18) != 1) << a;
}

TEST(Profiles, TorsionSets) {
  Analyzer free(gaussian_module(0));
  EXPECT_FALSE(free.in_t(Element({1, 0})));
  EXPECT_TRUE(free.in_t(Element({0, 0})));
  Analyzer an(checked(scalar_module(integers(GradeGroup::integers()), {{6, 0}, {6, 1}, {6, 2}})));
  for (const Element& x : an.module()->enumerate_all()) EXPECT_TRUE(an.in_t(x));
}

TEST(Ideals, PrimeAndRIdeals) {
  RingPtr z = integers(GradeGroup::cyclic(2));
  IdealAnalyzer ia(z);
  ModulePtr reg = ia.regular().module();
  auto ideal = [&](Int n) { return span({Element({n})}, reg); };
  EXPECT_FALSE(ia.prime(ideal(9)).value);
  EXPECT_TRUE(ia.prime(ideal(0)).value);
  EXPECT_TRUE(ia.prime(ideal(2)).value);
  EXPECT_FALSE(ia.r_ideal(ideal(2)).value);
  EXPECT_TRUE(ia.r_ideal(ideal(0)).value);
  PredicateVerdict nine = ia.r_ideal(ideal(9));
  EXPECT_FALSE(nine.value);
  EXPECT_EQ(ia.r_ideal_by_definition(ideal(9)).value, false);
}

TEST(Submodules, PrimeExamples) {
  Analyzer an(gaussian_module(18));
  PredicateVerdict v = an.prime_submodule(multiple_of_module(Element({9}), an.module()));
  EXPECT_FALSE(v.value);
  EXPECT_EQ(v.a, Element({3}));
  EXPECT_EQ(v.x, Element({3, 0}));
  Analyzer zi(gaussian_module(0));
  EXPECT_TRUE(zi.prime_submodule(multiple_of_module(Element({3}), zi.module())).value);
  Analyzer z(integers_over(0));
  EXPECT_TRUE(z.prime_submodule(span({Element({2})}, z.module())).value);
}

TEST(Submodules, RExamples) {
  Analyzer an(gaussian_module(18));
  EXPECT_TRUE(an.r_submodule(multiple_of_module(Element({9}), an.module())).value);
  Analyzer zi(gaussian_module(0));
  SubLattice k3 = multiple_of_module(Element({3}), zi.module());
  PredicateVerdict v = zi.r_submodule(k3);
  EXPECT_FALSE(v.value);
  expect_replays_r(zi.module(), k3, v);
  SubLattice k2 = span({Element({2, 0})}, zi.module());
  PredicateVerdict w = zi.r_submodule(k2);
  EXPECT_FALSE(w.value);
  EXPECT_EQ(w.a, Element({2}));
  EXPECT_EQ(w.x, Element({1, 0}));
}

TEST(Submodules, SpecialRExamples) {
  Analyzer z12(integers_over(12));
  EXPECT_TRUE(z12.special_r_submodule(span({Element({4})}, z12.module())).value);
  Analyzer z(integers_over(0));
  PredicateVerdict v = z.special_r_submodule(span({Element({2})}, z.module()));
  EXPECT_FALSE(v.value);
  EXPECT_EQ(v.a, Element({1}));
  EXPECT_EQ(v.x, Element({2}));
  RingPtr zz = product_ring(GradeGroup::cyclic(2), {0, 0});
  Analyzer p(checked(componentwise_module(zz, {{0, 0}, {2, 0}}, {0, 1})));
  SubLattice k = span({Element({2, 0})}, p.module());
  EXPECT_TRUE(p.special_r_submodule(k).value);
  EXPECT_FALSE(p.r_submodule(k).value);
}

TEST(Submodules, PureExamples) {
  Analyzer an(gaussian_module(16));
  PredicateVerdict v = an.pure(multiple_of_module(Element({2}), an.module()));
  EXPECT_FALSE(v.value);
  EXPECT_EQ(v.a, Element({2}));
  EXPECT_TRUE(an.pure(zero_submodule(an.module())).value);
  RingPtr f = product_ring(GradeGroup::cyclic(2), {5});
  Analyzer g(checked(scalar_module(f, {{5, 0}, {5, 1}})));
  EXPECT_TRUE(g.pure(span({Element({1, 0})}, g.module())).value);
  Analyzer zxz(gaussian_module(0));
  // 2M ∩ 2M = 2M but 2(2M) = 4M.
  PredicateVerdict w = zxz.pure(span({Element({2, 0})}, zxz.module()));
  EXPECT_FALSE(w.value);
  EXPECT_EQ(w.a, Element({2}));
}

TEST(Module, TorsionFreeAndFaithful) {
  Analyzer zxz(gaussian_module(0));
  EXPECT_TRUE(zxz.torsion_free().value);
  EXPECT_TRUE(zxz.faithful().value);
  Analyzer z12(integers_over(12));
  EXPECT_FALSE(z12.torsion_free().value);
  EXPECT_FALSE(z12.faithful().value);
}

TEST(Routes, AgreeOnGaussianGrid) {
  for (Int n = 2; n <= 12; ++n) {
    Analyzer an(gaussian_module(n));
    for (Int m = 2; m < n; ++m) {
      SubLattice k = multiple_of_module(Element({m}), an.module());
      if (!k.is_proper()) continue;
      bool r = an.r_by_definition(k).value;
      EXPECT_EQ(an.r_by_colon(k).value, r);
      EXPECT_EQ(an.r_by_intersection(k).value, r);
      EXPECT_EQ(an.r_by_quotient_divisors(k).value, r);
      bool s = an.special_r_by_definition(k).value;
      EXPECT_EQ(an.special_r_by_cyclic(k).value, s);
      EXPECT_EQ(an.special_r_by_colon(k).value, s);
    }
  }
}

TEST(DivisorWitness, Values) {
  EXPECT_EQ(Analyzer::divisor_values(1), (Vec{0, 1, -1}));
  EXPECT_EQ(Analyzer::divisor_values(6), (Vec{0, 1, -1, 2, -2, 3, -3, 6, -6}));
  Analyzer zi(gaussian_module(0));
  SubLattice k = span({Element({2, 0})}, zi.module());
  EXPECT_EQ(zi.e_star(k), 2);
  Domains d = zi.domains(k);
  for (Int v : {0, 1, -1, 2})
    EXPECT_NE(std::find(d.ring.begin(), d.ring.end(), Element({v})), d.ring.end()) << v;
}

TEST(DivisorWitness, AgreesWithDenseSampling) {
  ModulePtr m = gaussian_module(0);
  std::vector<SubLattice> ks = {multiple_of_module(Element({3}), m), span({Element({2, 0})}, m),
                                span({Element({4, 0}), Element({0, 6})}, m)};
  for (const SubLattice& k : ks) {
    Analyzer dw(m, QuantifierBudget::divisor_witness()), s(m, QuantifierBudget::sampled(100));
    EXPECT_EQ(dw.r_submodule(k).value, s.r_submodule(k).value) << to_string(k);
    EXPECT_EQ(dw.special_r_submodule(k).value, s.special_r_submodule(k).value);
    EXPECT_EQ(dw.prime_submodule(k).value, s.prime_submodule(k).value);
    EXPECT_EQ(dw.pure(k).value, s.pure(k).value);
  }
}

TEST(Classify, ReportCoversAllPredicates) {
  ModulePtr m = gaussian_module(4);
  Analyzer an(m);
  IdealAnalyzer ia(m->ring());
  ClassificationReport rep = classify(an, &ia, multiple_of_module(Element({2}), m));
  EXPECT_TRUE(rep.graded);
  EXPECT_TRUE(rep.proper);
  ASSERT_TRUE(rep.r && rep.prime && rep.special_r && rep.pure && rep.colon_r_ideal && rep.hk_torsion);
  EXPECT_TRUE(rep.r->value);
  EXPECT_FALSE(rep.colon_r_ideal->value);
  ClassificationReport full = classify(an, nullptr, full_submodule(m));
  EXPECT_FALSE(full.proper);
  EXPECT_FALSE(full.r);
}
