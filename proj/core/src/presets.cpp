#include "graded/presets.hpp"

namespace graded {

namespace {

Element unit_vector(std::size_t n, std::size_t i, Int value = 1) {
  Vec v(n, 0);
  v[i] = value;
  return Element(std::move(v));
}

}  // namespace

RingPtr product_ring(GradeGroup group, const Vec& moduli) {
  const std::size_t n = moduli.size();
  std::vector<Axis> axes;
  for (Int d : moduli) axes.push_back({d, group.identity()});
  Vec one(n, 0);
  for (std::size_t i = 0; i < n; ++i) one[i] = reduce_mod(1, moduli[i]);
  std::vector<std::vector<Element>> mul(n, std::vector<Element>(n, Element(Vec(n, 0))));
  for (std::size_t i = 0; i < n; ++i) mul[i][i] = unit_vector(n, i, reduce_mod(1, moduli[i]));
  return GradedRing::create(group, std::move(axes), Element(std::move(one)), std::move(mul));
}

ModulePtr scalar_module(RingPtr ring, std::vector<Axis> axes) {
  if (ring->dim() != 1) throw std::invalid_argument("coordinatewise-scalar action needs a single-axis ring");
  const std::size_t n = axes.size();
  std::vector<std::vector<Element>> act(1);
  for (std::size_t j = 0; j < n; ++j) act[0].push_back(unit_vector(n, j, reduce_mod(1, axes[j].modulus)));
  return GradedModule::create(std::move(ring), std::move(axes), std::move(act));
}

ModulePtr componentwise_module(RingPtr ring, std::vector<Axis> axes, const std::vector<std::size_t>& factor) {
  const std::size_t n = axes.size();
  if (factor.size() != n) throw std::invalid_argument("componentwise-product action needs one factor per module axis");
  std::vector<std::vector<Element>> act(ring->dim(), std::vector<Element>(n, Element(Vec(n, 0))));
  for (std::size_t j = 0; j < n; ++j) {
    if (factor[j] >= ring->dim()) throw std::invalid_argument("componentwise-product factor index out of range");
    act[factor[j]][j] = unit_vector(n, j, reduce_mod(1, axes[j].modulus));
  }
  return GradedModule::create(std::move(ring), std::move(axes), std::move(act));
}

RingPtr gaussian_ring(Int n) {
  GradeGroup g = GradeGroup::cyclic(2);
  std::vector<Axis> axes{{n, 0}, {n, 1}};
  std::vector<std::vector<Element>> mul{
      {Element({reduce_mod(1, n), 0}), Element({0, reduce_mod(1, n)})},
      {Element({0, reduce_mod(1, n)}), Element({reduce_mod(-1, n), 0})},
  };
  return GradedRing::create(g, std::move(axes), Element({reduce_mod(1, n), 0}), std::move(mul));
}

RingPtr truncated_polynomial_ring(Int m, Int d, GradeGroup group) {
  if (d < 1) throw std::invalid_argument("truncated polynomial ring needs d >= 1");
  const auto n = static_cast<std::size_t>(d);
  std::vector<Axis> axes;
  for (Int j = 0; j < d; ++j) axes.push_back({m, group.canonical(j)});
  std::vector<std::vector<Element>> mul(n, std::vector<Element>(n, Element(Vec(n, 0))));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) mul[i][j] = unit_vector(n, i + j, reduce_mod(1, m));
  return GradedRing::create(group, std::move(axes), unit_vector(n, 0, reduce_mod(1, m)), std::move(mul));
}

}  // namespace graded
