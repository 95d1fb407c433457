#include "graded/lattice.hpp"

#include <sstream>

namespace graded {

namespace {

void require_same(const SubLattice& a, const SubLattice& b, const char* op) {
  if (!same_ambient(a, b)) throw std::invalid_argument(std::string(op) + ": submodules live in different modules");
}

void require_homogeneous(const GradedRing& r, const Element& a, const char* op) {
  r.require_element(a, op);
  if (!r.homogeneous_degree(a)) throw std::invalid_argument(std::string(op) + ": ring element is not homogeneous");
}

Mat with_relations(const Carrier& c, Mat rows) {
  Mat rel = c.relation_rows();
  rows.insert(rows.end(), rel.begin(), rel.end());
  return rows;
}

}  // namespace

SubLattice SubLattice::from_rows(ModulePtr ambient, Mat rows) {
  const std::size_t n = ambient->dim();
  for (const Vec& r : rows)
    if (r.size() != n) throw std::invalid_argument("SubLattice: generator dimension mismatch");
  Mat h = hnf(with_relations(*ambient, std::move(rows)), n);
  return SubLattice(std::move(ambient), std::move(h));
}

bool SubLattice::is_zero() const {
  return basis_ == hnf(ambient_->relation_rows(), ambient_->dim());
}

bool SubLattice::is_full() const { return basis_ == identity_matrix(ambient_->dim()); }

bool SubLattice::contains(const SubLattice& other) const {
  if (!same_ambient(*this, other)) throw std::invalid_argument("contains: submodules live in different modules");
  return lattice_contains(basis_, other.basis_);
}

std::vector<Element> SubLattice::generators() const {
  std::vector<Element> out;
  for (const Vec& r : basis_) {
    Element e = ambient_->reduce(r);
    if (!e.is_zero()) out.push_back(std::move(e));
  }
  return out;
}

std::optional<Int> SubLattice::cardinality() const {
  auto total = ambient_->cardinality();
  if (!total) return std::nullopt;
  // |K| = |K_lift / D| = det(D) / det(K_lift).
  Int index = 1;
  std::vector<std::size_t> piv = pivot_columns(basis_);
  for (std::size_t i = 0; i < basis_.size(); ++i) index = checked_mul(index, basis_[i][piv[i]]);
  return *total / index;
}

bool SubLattice::operator==(const SubLattice& other) const {
  return same_ambient(*this, other) && basis_ == other.basis_;
}

std::string to_string(const SubLattice& k) {
  std::ostringstream os;
  os << '<';
  bool first = true;
  for (const Element& g : k.generators()) {
    os << (first ? "" : " ") << to_string(g);
    first = false;
  }
  os << '>';
  return os.str();
}

bool same_ambient(const SubLattice& a, const SubLattice& b) { return *a.ambient() == *b.ambient(); }

SubLattice zero_submodule(ModulePtr ambient) { return SubLattice::from_rows(std::move(ambient), {}); }

SubLattice full_submodule(ModulePtr ambient) {
  Mat id = identity_matrix(ambient->dim());
  return SubLattice::from_rows(std::move(ambient), std::move(id));
}

SubLattice span(const std::vector<Element>& gens, ModulePtr ambient) {
  // R·{g} is the Z-span of {b_i · g}; one pass closes under the action.
  Mat rows;
  for (const Element& g : gens) {
    ambient->require_element(g, "span");
    Mat orbit = ambient->orbit_rows(ambient->reduce(g.coords));
    rows.insert(rows.end(), orbit.begin(), orbit.end());
  }
  return SubLattice::from_rows(std::move(ambient), std::move(rows));
}

SubLattice multiple_of_module(const Element& m, ModulePtr ambient) {
  ambient->ring()->require_element(m, "multiple_of_module");
  Mat rows = ambient->action_rows(m);
  // mM is a submodule for any m (commutativity), but close it anyway so the
  // result never depends on the caller passing a homogeneous m.
  std::vector<Element> gens;
  for (Vec& r : rows) gens.emplace_back(std::move(r));
  return span(gens, std::move(ambient));
}

bool member(const Element& x, const SubLattice& k) {
  k.module().require_element(x, "member");
  return in_lattice(k.basis(), x.coords);
}

GradedCheck is_graded(const SubLattice& k) {
  const GradedModule& m = k.module();
  for (const Vec& row : k.basis()) {
    Element x = m.reduce(row);
    for (auto& [g, part] : m.decompose(x)) {
      if (!in_lattice(k.basis(), part.coords)) return {false, x, g};
    }
  }
  return {};
}

SubLattice sum(const SubLattice& k, const SubLattice& n) {
  require_same(k, n, "sum");
  return SubLattice::from_rows(k.ambient(), lattice_sum(k.basis(), n.basis(), k.module().dim()));
}

SubLattice intersect(const SubLattice& k, const SubLattice& n) {
  require_same(k, n, "intersect");
  return SubLattice::from_rows(k.ambient(), lattice_intersection(k.basis(), n.basis(), k.module().dim()));
}

SubLattice scalar_multiple(const Element& a, const SubLattice& k) {
  const GradedModule& m = k.module();
  require_homogeneous(*m.ring(), a, "scalar_multiple");
  Mat rows;
  for (const Vec& r : k.basis()) rows.push_back(m.apply(a, m.reduce(r)).coords);
  return SubLattice::from_rows(k.ambient(), std::move(rows));
}

SubLattice ideal_product(const SubLattice& ideal, const SubLattice& n) {
  const GradedModule& m = n.module();
  if (!(*ideal.module().ring() == *m.ring()) || !(ideal.module() == *regular_module(m.ring())))
    throw std::invalid_argument("ideal_product: ideal is not an ideal of the module's ring");
  Mat rows;
  for (const Element& a : ideal.generators())
    for (const Element& x : n.generators()) rows.push_back(m.apply(a, x).coords);
  return SubLattice::from_rows(n.ambient(), std::move(rows));
}

SubLattice cyclic(const Element& x, ModulePtr ambient) { return span({x}, std::move(ambient)); }

SubLattice colon_ring(const SubLattice& k, const SubLattice& n) {
  require_same(k, n, "colon_ring");
  const GradedModule& m = k.module();
  const GradedRing& r = *m.ring();
  const std::size_t dm = m.dim();
  std::vector<Element> gens = n.generators();
  // phi: r -> (r·n_1, ..., r·n_t); target K^t block-diagonally.
  const std::size_t width = dm * gens.size();
  Mat phi(r.dim(), Vec(width, 0));
  for (std::size_t i = 0; i < r.dim(); ++i) {
    for (std::size_t t = 0; t < gens.size(); ++t) {
      Element img = m.apply(r.basis(i), gens[t]);
      std::copy(img.coords.begin(), img.coords.end(), phi[i].begin() + static_cast<std::ptrdiff_t>(t * dm));
    }
  }
  Mat target;
  for (std::size_t t = 0; t < gens.size(); ++t) {
    for (const Vec& row : k.basis()) {
      Vec v(width, 0);
      std::copy(row.begin(), row.end(), v.begin() + static_cast<std::ptrdiff_t>(t * dm));
      target.push_back(std::move(v));
    }
  }
  ModulePtr reg = regular_module(m.ring());
  if (gens.empty()) return full_submodule(std::move(reg));
  return SubLattice::from_rows(std::move(reg), lattice_preimage(phi, target, width));
}

SubLattice colon_ring(const SubLattice& k, const Element& x) { return colon_ring(k, cyclic(x, k.ambient())); }

SubLattice colon_module(const SubLattice& k, const Element& a) {
  const GradedModule& m = k.module();
  require_homogeneous(*m.ring(), a, "colon_module");
  return SubLattice::from_rows(k.ambient(), lattice_preimage(m.action_rows(a), k.basis(), m.dim()));
}

SubLattice colon_module(const SubLattice& k, const SubLattice& ideal) {
  if (!(*ideal.module().ring() == *k.module().ring())) throw std::invalid_argument("colon_module: ideal over a different ring");
  if (!is_graded(ideal).graded) throw std::invalid_argument("colon_module: ideal is not graded");
  // A graded ideal is generated by the homogeneous components of its rows.
  SubLattice out = full_submodule(k.ambient());
  for (const Element& g : ideal.generators())
    for (const auto& part : ideal.module().decompose(g)) out = intersect(out, colon_module(k, part.second));
  return out;
}

SubLattice annihilator_ring(const SubLattice& n) { return colon_ring(zero_submodule(n.ambient()), n); }

SubLattice annihilator_ring(const Element& x, ModulePtr ambient) {
  SubLattice zero = zero_submodule(ambient);
  return colon_ring(zero, cyclic(x, std::move(ambient)));
}

SubLattice annihilator_module(const Element& a, ModulePtr ambient) {
  return colon_module(zero_submodule(std::move(ambient)), a);
}

// ---------------------------------------------------------------- quotient

Element QuotientPresentation::project(const Element& x) const {
  source->require_element(x, "project");
  Vec y(factors.size(), 0);
  for (std::size_t j = 0; j < x.size(); ++j) axpy(y, x[j], projection[j]);
  return target->reduce(std::move(y));
}

SubLattice QuotientPresentation::image(const SubLattice& n) const {
  if (!(n.module() == *source)) throw std::invalid_argument("quotient image: submodule of a different module");
  Mat rows;
  for (const Element& g : n.generators()) rows.push_back(project(g).coords);
  return SubLattice::from_rows(target, std::move(rows));
}

std::optional<Int> QuotientPresentation::order() const {
  Int n = 1;
  for (const auto& f : factors) {
    if (f.second == 0) return std::nullopt;
    n = checked_mul(n, f.second);
  }
  return n;
}

QuotientPresentation quotient(const SubLattice& k) {
  GradedCheck gc = is_graded(k);
  if (!gc.graded) throw std::invalid_argument("quotient: submodule is not graded");
  const GradedModule& m = k.module();
  const std::size_t n = m.dim();

  std::vector<std::pair<Degree, Int>> factors;
  Mat projection(n);
  Mat lifts;
  for (Degree g : m.degrees()) {
    std::vector<std::size_t> idx = m.block(g);
    const std::size_t b = idx.size();
    // K graded: K ∩ M_g is the projection of K onto the degree-g block.
    Mat rows;
    for (const Vec& row : k.basis()) {
      Vec r(b);
      for (std::size_t t = 0; t < b; ++t) r[t] = row[idx[t]];
      rows.push_back(std::move(r));
    }
    AbelianPresentation p = present(identity_matrix(b), hnf(std::move(rows), b), b);
    for (std::size_t f = 0; f < p.orders.size(); ++f) {
      factors.emplace_back(g, p.orders[f]);
      Vec lift(n, 0);
      for (std::size_t t = 0; t < b; ++t) lift[idx[t]] = p.generators[f][t];
      lifts.push_back(std::move(lift));
    }
    for (std::size_t t = 0; t < b; ++t) {
      projection[idx[t]].insert(projection[idx[t]].end(), p.coefficient_map[t].begin(), p.coefficient_map[t].end());
    }
  }
  // Pad each projection row to the full factor count (degree blocks are
  // disjoint, so a row only carries entries for its own block's factors).
  const std::size_t f_total = factors.size();
  {
    Mat padded(n, Vec(f_total, 0));
    std::size_t offset = 0;
    for (Degree g : m.degrees()) {
      std::vector<std::size_t> idx = m.block(g);
      std::size_t width = idx.empty() ? 0 : projection[idx[0]].size();
      for (std::size_t j : idx)
        for (std::size_t c = 0; c < width; ++c) padded[j][offset + c] = projection[j][c];
      offset += width;
    }
    projection = std::move(padded);
  }

  std::vector<Axis> axes;
  for (const auto& [g, order] : factors) axes.push_back({order, g});
  QuotientPresentation q{k.ambient(), k, factors, projection, lifts, nullptr};
  const GradedRing& r = *m.ring();
  std::vector<std::vector<Element>> act(r.dim(), std::vector<Element>(f_total));
  Carrier shape(m.group(), axes);
  for (std::size_t i = 0; i < r.dim(); ++i) {
    for (std::size_t f = 0; f < f_total; ++f) {
      Element img = m.apply(r.basis(i), m.reduce(lifts[f]));
      Vec y(f_total, 0);
      for (std::size_t j = 0; j < n; ++j) axpy(y, img[j], projection[j]);
      act[i][f] = shape.reduce(std::move(y));
    }
  }
  q.target = GradedModule::create(m.ring(), std::move(axes), std::move(act));
  return q;
}

}  // namespace graded
