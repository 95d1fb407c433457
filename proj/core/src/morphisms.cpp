#include "graded/morphisms.hpp"

namespace graded {

HomError::HomError(std::string law, std::size_t index, const std::string& detail)
    : std::invalid_argument("graded hom violates " + law + " at source basis " + std::to_string(index) + ": " + detail),
      law_(std::move(law)),
      index_(index) {}

namespace {

Element image_of(const GradedModule& target, const Mat& images, const Element& x) {
  Vec y(target.dim(), 0);
  for (std::size_t j = 0; j < x.size(); ++j) axpy(y, x[j], images[j]);
  return target.reduce(std::move(y));
}

}  // namespace

GradedHom GradedHom::make(ModulePtr source, ModulePtr target, Mat images) {
  if (!(*source->ring() == *target->ring())) throw HomError("ring", 0, "source and target have different rings");
  if (images.size() != source->dim()) throw HomError("shape", 0, "need one image per source basis vector");
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (images[j].size() != target->dim()) throw HomError("shape", j, "image has the wrong dimension");
    images[j] = target->reduce(std::move(images[j])).coords;
  }
  const auto& s_axes = source->axes();
  const auto& t_axes = target->axes();
  for (std::size_t j = 0; j < images.size(); ++j) {
    for (std::size_t c = 0; c < t_axes.size(); ++c) {
      if (images[j][c] != 0 && t_axes[c].degree != s_axes[j].degree)
        throw HomError("degree", j, "image has a component on target axis " + std::to_string(c));
    }
    if (s_axes[j].is_finite() && !target->scale(s_axes[j].modulus, Element(images[j])).is_zero())
      throw HomError("modulus", j, "d_j times the image is not zero");
  }
  const GradedRing& r = *source->ring();
  for (std::size_t i = 0; i < r.dim(); ++i) {
    for (std::size_t j = 0; j < images.size(); ++j) {
      Element lhs = image_of(*target, images, source->action(i, j));
      Element rhs = target->apply(r.basis(i), Element(images[j]));
      if (lhs != rhs)
        throw HomError("linearity", j, "f(b_" + std::to_string(i) + " e_j) != b_" + std::to_string(i) + " f(e_j)");
    }
  }
  return GradedHom(std::move(source), std::move(target), std::move(images));
}

GradedHom GradedHom::identity(ModulePtr m) {
  Mat id = identity_matrix(m->dim());
  return make(m, m, std::move(id));
}

Element GradedHom::operator()(const Element& x) const {
  source_->require_element(x, "graded hom");
  return image_of(*target_, images_, x);
}

SubLattice kernel(const GradedHom& f) { return preimage(f, zero_submodule(f.target())); }

SubLattice image(const GradedHom& f) { return pushforward(f, full_submodule(f.source())); }

SubLattice preimage(const GradedHom& f, const SubLattice& k) {
  if (!(k.module() == *f.target())) throw std::invalid_argument("preimage: submodule of a different module");
  return SubLattice::from_rows(f.source(), lattice_preimage(f.images(), k.basis(), f.target()->dim()));
}

SubLattice pushforward(const GradedHom& f, const SubLattice& l) {
  if (!(l.module() == *f.source())) throw std::invalid_argument("pushforward: submodule of a different module");
  Mat rows;
  for (const Element& g : l.generators()) rows.push_back(f(g).coords);
  return SubLattice::from_rows(f.target(), std::move(rows));
}

bool is_injective(const GradedHom& f) { return kernel(f).is_zero(); }

bool is_surjective(const GradedHom& f) { return image(f).is_full(); }

GradedHom projection(const QuotientPresentation& q) { return GradedHom::make(q.source, q.target, q.projection); }

namespace {

Vec block_coordinates(const SubmoduleModule& s, const GradedModule& ambient, const Element& x) {
  Vec y;
  for (std::size_t d = 0; d < s.degrees.size(); ++d) {
    std::vector<std::size_t> idx = ambient.block(s.degrees[d]);
    Vec v(idx.size());
    for (std::size_t t = 0; t < idx.size(); ++t) v[t] = x[idx[t]];
    auto c = s.blocks[d].coordinates(v);
    if (!c) throw std::invalid_argument("submodule coordinates: element is not in the submodule");
    y.insert(y.end(), c->begin(), c->end());
  }
  return y;
}

}  // namespace

Element SubmoduleModule::coordinates(const Element& x) const {
  const GradedModule& ambient = *inclusion.target();
  ambient.require_element(x, "submodule coordinates");
  return module->reduce(block_coordinates(*this, ambient, x));
}

SubmoduleModule as_module(const SubLattice& l) {
  if (!is_graded(l).graded) throw std::invalid_argument("as_module: submodule is not graded");
  const GradedModule& m = l.module();
  const std::size_t n = m.dim();
  SubmoduleModule out{nullptr, GradedHom::identity(l.ambient()), {}, m.degrees()};

  std::vector<Axis> axes;
  Mat images;
  for (Degree g : out.degrees) {
    std::vector<std::size_t> idx = m.block(g);
    const std::size_t b = idx.size();
    Mat rows, rel;
    for (const Vec& row : l.basis()) {
      Vec r(b);
      for (std::size_t t = 0; t < b; ++t) r[t] = row[idx[t]];
      rows.push_back(std::move(r));
    }
    for (std::size_t t = 0; t < b; ++t) {
      if (!m.axes()[idx[t]].is_finite()) continue;
      Vec r(b, 0);
      r[t] = m.axes()[idx[t]].modulus;
      rel.push_back(std::move(r));
    }
    AbelianPresentation p = present(hnf(std::move(rows), b), hnf(std::move(rel), b), b);
    for (std::size_t f = 0; f < p.orders.size(); ++f) {
      axes.push_back({p.orders[f], g});
      Vec lift(n, 0);
      for (std::size_t t = 0; t < b; ++t) lift[idx[t]] = p.generators[f][t];
      images.push_back(m.reduce(std::move(lift)).coords);
    }
    out.blocks.push_back(std::move(p));
  }

  const GradedRing& r = *m.ring();
  Carrier shape(m.group(), axes);
  std::vector<std::vector<Element>> act(r.dim(), std::vector<Element>(axes.size()));
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t f = 0; f < axes.size(); ++f)
      act[i][f] = shape.reduce(block_coordinates(out, m, m.apply(r.basis(i), Element(images[f]))));
  out.module = GradedModule::create(m.ring(), std::move(axes), std::move(act));
  out.inclusion = GradedHom::make(out.module, l.ambient(), std::move(images));
  return out;
}

}  // namespace graded
