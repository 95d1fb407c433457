#include "grmod/golden.hpp"

#include <algorithm>

#include "graded/classify.hpp"
#include "graded/presets.hpp"

namespace grmod {

using namespace graded;

bool GoldenRow::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const GoldenCheck& c) { return c.ok(); });
}

namespace {

std::string witness(const PredicateVerdict& v) {
  std::string out;
  if (v.a) out += "a=" + to_string(*v.a);
  if (v.x) out += std::string(out.empty() ? "" : " ") + "x=" + to_string(*v.x);
  return out.empty() ? v.method : out + " [" + v.method + "]";
}

GoldenCheck check(std::string claim, bool expected, const PredicateVerdict& v) {
  return {std::move(claim), expected, v.value, witness(v)};
}

GoldenCheck fact(std::string claim, bool expected, bool actual, std::string detail = {}) {
  return {std::move(claim), expected, actual, std::move(detail)};
}

ModulePtr gaussian_module(Int n) {
  return checked(scalar_module(integers(GradeGroup::cyclic(2)), {{n, 0}, {n, 1}}));
}

GoldenRow ungraded_ideal() {
  ModulePtr reg = checked(regular_module(gaussian_ring(0)));
  SubLattice p = span({Element({1, 1})}, reg);
  GradedCheck g = is_graded(p);
  std::string detail;
  if (g.witness) detail = "component of " + to_string(*g.witness) + " leaves the ideal";
  return {"ungraded-ideal",
          "Z[i] graded by Z_2 over itself, P = <1+i>",
          {fact("P is a graded ideal", false, g.graded, detail), fact("1 in P", false, member(Element({1, 0}), p))},
          {}};
}

GoldenRow gaussian_quotient() {
  ModulePtr m = gaussian_module(18);
  Analyzer an(m);
  SubLattice k = multiple_of_module(Element({9}), m);
  SubLattice s = multiple_of_module(Element({gcd(9, 18)}), m);
  return {"zn-gaussian-gcd",
          "Z over Z_18[i], K = 9M (gcd(9, 18) = 9)",
          {fact("K = sM for s = gcd(m, n)", true, k == s), check("K is an r-submodule", true, an.r_submodule(k)),
           check("Z(M/K) inside Z(M)", true, an.r_by_quotient_divisors(k))},
          {}};
}

GoldenRow doubled_axis() {
  ModulePtr m = checked(scalar_module(integers(GradeGroup::cyclic(2)), {{0, 0}, {0, 1}}));
  Analyzer an(m);
  SubLattice k = span({Element({2, 0})}, m);
  const SubLattice& colon = an.colon(k);
  bool colon_in_z = true;
  for (const Element& a : an.domains(k).ring)
    if (member(a, colon) && !an.in_z(a)) colon_in_z = false;
  return {"zxz-doubled-axis",
          "Z over Z x Z with M_0 = Z x 0, M_1 = 0 x Z, K = 2Z x 0",
          {check("K is an r-submodule", false, an.r_submodule(k)), fact("(K :_R M) = 0", true, colon.is_zero()),
           fact("(K :_R M) inside Z(M)", true, colon_in_z),
           check("Z(M/K) inside Z(M)", false, an.r_by_quotient_divisors(k))},
          {}};
}

GoldenRow r_not_prime() {
  ModulePtr m = gaussian_module(18);
  Analyzer an(m);
  SubLattice k = multiple_of_module(Element({9}), m);
  PredicateVerdict prime = an.prime_submodule(k);
  bool expected_witness = prime.a == Element({3}) && prime.x == Element({3, 0});
  return {"r-not-prime",
          "Z over Z_18[i], K = 9M",
          {check("K is an r-submodule", true, an.r_submodule(k)), check("K is prime", false, prime),
           fact("prime witness is a = 3, x = (3,0)", true, expected_witness),
           fact("(K :_R M) = 9Z", true, an.colon(k) == span({Element({9})}, an.colon(k).ambient()))},
          {}};
}

GoldenRow prime_not_r() {
  ModulePtr m = checked(scalar_module(integers(GradeGroup::cyclic(2)), {{0, 0}, {0, 1}}));
  Analyzer an(m);
  SubLattice k = multiple_of_module(Element({3}), m);
  const SubLattice& colon = an.colon(k);
  return {"prime-not-r",
          "Z over Z[i], K = 3M",
          {check("K is prime", true, an.prime_submodule(k)), check("K is an r-submodule", false, an.r_submodule(k)),
           fact("3 in (K :_R M) and 3 outside Z(M)", true, member(Element({3}), colon) && !an.in_z(Element({3})))},
          {}};
}

GoldenRow colon_not_r_ideal() {
  ModulePtr m = gaussian_module(4);
  Analyzer an(m);
  IdealAnalyzer ideals(m->ring());
  SubLattice k = multiple_of_module(Element({2}), m);
  SubLattice colon = SubLattice::from_rows(ideals.regular().module(), an.colon(k).basis());
  return {"colon-not-r-ideal",
          "Z over Z_4[i], K = 2M",
          {check("K is an r-submodule", true, an.r_submodule(k)),
           fact("(K :_R M) = 2Z", true, colon == span({Element({2})}, colon.ambient())),
           check("(K :_R M) is an r-ideal", false, ideals.r_ideal(colon))},
          {}};
}

GoldenRow r_not_pure() {
  ModulePtr m = gaussian_module(16);
  Analyzer an(m);
  SubLattice k = multiple_of_module(Element({2}), m);
  PredicateVerdict pure = an.pure(k);
  return {"r-not-pure",
          "Z over Z_16[i], K = 2M",
          {check("K is an r-submodule", true, an.r_submodule(k)), check("K is pure", false, pure),
           fact("pure witness is a = 2", true, pure.a == Element({2}))},
          {}};
}

GoldenRow r_not_special_r() {
  RingPtr f = product_ring(GradeGroup::cyclic(2), {5});
  ModulePtr m = checked(scalar_module(f, {{5, 0}, {5, 1}}));
  Analyzer an(m);
  SubLattice k = span({Element({1, 0})}, m);
  return {"r-not-special-r",
          "GF(5) over GF(5)^2 with split Z_2 grading, K = GF(5) x 0",
          {check("K is an r-submodule", true, an.r_submodule(k)),
           check("K is a special r-submodule", false, an.special_r_submodule(k))},
          "finite-field stand-in for a field of characteristic zero"};
}

GoldenRow special_r_not_r() {
  RingPtr r = product_ring(GradeGroup::cyclic(2), {0, 0});
  ModulePtr m = checked(componentwise_module(r, {{0, 0}, {2, 0}}, {0, 1}));
  Analyzer an(m);
  SubLattice k = span({Element({2, 0})}, m);
  Element a({2, 1}), x({1, 0}), a0({2, 0});
  bool violates = annihilator_module(a, m).is_zero() && member(m->apply(a, x), k) && !member(x, k);
  return {"special-r-not-r",
          "Z x Z over Z x Z_2 componentwise, K = 2Z x 0",
          {check("K is a special r-submodule", true, an.special_r_submodule(k)),
           check("K is an r-submodule", false, an.r_submodule(k)),
           fact("a = (2,1), x = (1,0) violates the r condition", true, violates),
           fact("Ann_M((2,0)) = 0", false, annihilator_module(a0, m).is_zero(),
                "Ann_M((2,0)) = " + to_string(annihilator_module(a0, m)))},
          "(2,0) kills (0,1), so the violating pair uses a = (2,1)"};
}

GoldenRow prime_not_special_r() {
  ModulePtr m = checked(scalar_module(integers(GradeGroup::cyclic(3)), {{0, 0}}));
  Analyzer an(m);
  SubLattice k = span({Element({2})}, m);
  return {"prime-not-special-r",
          "Z over Z with the trivial Z_3 grading, K = 2Z",
          {check("K is prime", true, an.prime_submodule(k)),
           check("K is a special r-submodule", false, an.special_r_submodule(k))},
          {}};
}

GoldenRow special_r_not_prime() {
  ModulePtr m = checked(scalar_module(integers(GradeGroup::cyclic(3)), {{12, 0}}));
  Analyzer an(m);
  SubLattice k = span({Element({4})}, m);
  return {"special-r-not-prime",
          "Z over Z_12 with the trivial Z_3 grading, K = <4>",
          {check("K is a special r-submodule", true, an.special_r_submodule(k)),
           check("K is prime", false, an.prime_submodule(k))},
          {}};
}

GoldenRow truncated_polynomial() {
  GradeGroup z = GradeGroup::integers();
  ModulePtr m = checked(scalar_module(integers(z), {{6, 0}, {6, 1}, {6, 2}}));
  Analyzer an(m);
  IdealAnalyzer ideals(m->ring());
  SubLattice k = span({Element({2, 0, 0}), Element({0, 1, 0}), Element({0, 0, 1})}, m);
  SubLattice colon = SubLattice::from_rows(ideals.regular().module(), an.colon(k).basis());
  return {"truncated-special-r",
          "Z over Z_6[x]/(x^3) graded by Z, K = {p : p(0) in <2>}",
          {check("K is a special r-submodule", true, an.special_r_submodule(k)),
           fact("(K :_R M) = 2Z", true, colon == span({Element({2})}, colon.ambient())),
           check("(K :_R M) is an r-ideal", false, ideals.r_ideal(colon))},
          "the polynomial module is truncated at degree 3"};
}

}  // namespace

std::vector<GoldenRow> golden_examples() {
  return {ungraded_ideal(),    gaussian_quotient(), doubled_axis(),         r_not_prime(),
          prime_not_r(),       colon_not_r_ideal(), r_not_pure(),           r_not_special_r(),
          special_r_not_r(),   prime_not_special_r(), special_r_not_prime(), truncated_polynomial()};
}

}  // namespace grmod
