#include "graded/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace graded {

GradeGroup GradeGroup::cyclic(Int order) {
  if (order < 1) throw std::invalid_argument("cyclic grading group needs order >= 1");
  return GradeGroup(order);
}

std::string to_string(const Element& e) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e.coords.size(); ++i) {
    if (i) os << ',';
    os << e.coords[i];
  }
  os << ')';
  return os.str();
}

Vec signed_range(Int bound) {
  Vec out{0};
  for (Int k = 1; k <= bound; ++k) {
    out.push_back(k);
    out.push_back(-k);
  }
  return out;
}

// ---------------------------------------------------------------- Carrier

Carrier::Carrier(GradeGroup group, std::vector<Axis> axes) : group_(group), axes_(std::move(axes)) {
  for (const Axis& a : axes_) {
    if (a.modulus < 0) throw std::invalid_argument("axis modulus must be >= 0");
    if (!group_.is_canonical(a.degree)) throw std::invalid_argument("axis degree is not canonical in the grading group");
  }
}

bool Carrier::is_finite() const {
  return std::all_of(axes_.begin(), axes_.end(), [](const Axis& a) { return a.is_finite(); });
}

std::optional<Int> Carrier::cardinality() const {
  if (!is_finite()) return std::nullopt;
  Int n = 1;
  for (const Axis& a : axes_) {
    if (__builtin_mul_overflow(n, a.modulus, &n) || n > (Int{1} << 62)) return std::nullopt;
  }
  return n;
}

std::vector<Degree> Carrier::degrees() const {
  std::set<Degree> s;
  for (const Axis& a : axes_) s.insert(a.degree);
  return {s.begin(), s.end()};
}

std::vector<std::size_t> Carrier::block(Degree g) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < axes_.size(); ++i)
    if (axes_[i].degree == g) out.push_back(i);
  return out;
}

Element Carrier::basis(std::size_t i) const {
  Vec v(dim(), 0);
  v.at(i) = 1;
  return reduce(std::move(v));
}

Element Carrier::reduce(Vec v) const {
  if (v.size() != dim()) throw std::invalid_argument("element dimension mismatch");
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = reduce_mod(v[i], axes_[i].modulus);
  return Element(std::move(v));
}

bool Carrier::is_canonical(const Element& x) const {
  if (x.size() != dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (axes_[i].is_finite() && (x[i] < 0 || x[i] >= axes_[i].modulus)) return false;
  }
  return true;
}

void Carrier::require_element(const Element& x, const char* what) const {
  if (x.size() != dim()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(x.size()) + " vs " +
                                std::to_string(dim()) + ")");
  }
}

Element Carrier::add(const Element& x, const Element& y) const {
  require_element(x, "add");
  require_element(y, "add");
  Vec v(dim());
  for (std::size_t i = 0; i < dim(); ++i) v[i] = checked_add(x[i], y[i]);
  return reduce(std::move(v));
}

Element Carrier::scale(Int k, const Element& x) const {
  require_element(x, "scale");
  Vec v(dim());
  for (std::size_t i = 0; i < dim(); ++i) v[i] = checked_mul(k, x[i]);
  return reduce(std::move(v));
}

Mat Carrier::relation_rows() const {
  Mat rows;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!axes_[i].is_finite()) continue;
    Vec r(dim(), 0);
    r[i] = axes_[i].modulus;
    rows.push_back(std::move(r));
  }
  return rows;
}

Element Carrier::component(const Element& x, Degree g) const {
  require_element(x, "component");
  Vec v(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i)
    if (axes_[i].degree == g) v[i] = x[i];
  return reduce(std::move(v));
}

std::map<Degree, Element> Carrier::decompose(const Element& x) const {
  require_element(x, "decompose");
  Element r = reduce(x.coords);
  std::map<Degree, Element> out;
  for (Degree g : degrees()) {
    Element c = component(r, g);
    if (!c.is_zero()) out.emplace(g, std::move(c));
  }
  return out;
}

std::optional<Degree> Carrier::homogeneous_degree(const Element& x) const {
  auto parts = decompose(x);
  if (parts.empty()) return group_.identity();
  if (parts.size() == 1) return parts.begin()->first;
  return std::nullopt;
}

std::vector<Degree> Carrier::support() const {
  std::set<Degree> s;
  for (const Axis& a : axes_)
    if (a.modulus != 1) s.insert(a.degree);
  return {s.begin(), s.end()};
}

std::vector<Element> Carrier::block_elements(Degree g, const std::function<Vec(std::size_t)>& values) const {
  std::vector<std::size_t> idx = block(g);
  std::vector<Vec> lists;
  lists.reserve(idx.size());
  for (std::size_t i : idx) lists.push_back(values(i));
  std::vector<Element> out;
  if (std::any_of(lists.begin(), lists.end(), [](const Vec& l) { return l.empty(); })) return out;
  std::vector<std::size_t> pos(idx.size(), 0);
  while (true) {
    Vec v(dim(), 0);
    for (std::size_t k = 0; k < idx.size(); ++k) v[idx[k]] = lists[k][pos[k]];
    out.push_back(reduce(std::move(v)));
    std::size_t k = idx.size();
    while (true) {
      if (k == 0) return out;
      --k;
      if (++pos[k] < lists[k].size()) break;
      pos[k] = 0;
    }
  }
}

namespace {

Vec residues(Int modulus) {
  Vec out(static_cast<std::size_t>(modulus));
  for (Int r = 0; r < modulus; ++r) out[static_cast<std::size_t>(r)] = r;
  return out;
}

}  // namespace

std::vector<std::pair<Degree, Element>> Carrier::enumerate_homogeneous(std::optional<Int> bound) const {
  if (!is_finite() && !bound) throw std::invalid_argument("enumerate_homogeneous: infinite axis needs a bound");
  std::vector<std::pair<Degree, Element>> out;
  out.emplace_back(group_.identity(), zero());
  for (Degree g : support()) {
    auto values = [&](std::size_t i) { return axes_[i].is_finite() ? residues(axes_[i].modulus) : signed_range(*bound); };
    for (Element& e : block_elements(g, values)) {
      if (!e.is_zero()) out.emplace_back(g, std::move(e));
    }
  }
  return out;
}

std::vector<Element> Carrier::enumerate_all() const {
  if (!is_finite()) throw std::invalid_argument("enumerate_all: carrier is infinite");
  std::vector<Element> out;
  Vec pos(dim(), 0);
  while (true) {
    out.emplace_back(pos);
    std::size_t k = dim();
    while (true) {
      if (k == 0) return out;
      --k;
      if (++pos[k] < axes_[k].modulus) break;
      pos[k] = 0;
    }
  }
}

// ---------------------------------------------------------------- GradedRing

GradedRing::GradedRing(GradeGroup group, std::vector<Axis> axes, Element unity, std::vector<std::vector<Element>> mul)
    : Carrier(group, std::move(axes)), unity_(std::move(unity)), mul_(std::move(mul)) {}

RingPtr GradedRing::create(GradeGroup group, std::vector<Axis> axes, Element unity,
                           std::vector<std::vector<Element>> mul) {
  if (axes.empty() || std::all_of(axes.begin(), axes.end(), [](const Axis& a) { return a.modulus == 1; })) {
    throw std::invalid_argument("ring must have a nonzero unity (all axis moduli are 1)");
  }
  const std::size_t n = axes.size();
  if (unity.size() != n) throw std::invalid_argument("unity dimension mismatch");
  if (mul.size() != n) throw std::invalid_argument("multiplication table must be square in the axis count");
  for (const auto& row : mul) {
    if (row.size() != n) throw std::invalid_argument("multiplication table must be square in the axis count");
    for (const Element& e : row)
      if (e.size() != n) throw std::invalid_argument("structure constant dimension mismatch");
  }
  return RingPtr(new GradedRing(group, std::move(axes), std::move(unity), std::move(mul)));
}

Element GradedRing::multiply(const Element& a, const Element& b) const {
  require_element(a, "multiply");
  require_element(b, "multiply");
  Vec v(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j] == 0) continue;
      axpy(v, checked_mul(a[i], b[j]), mul_[i][j].coords);
    }
  }
  return reduce(std::move(v));
}

Mat GradedRing::multiplication_rows(const Element& a) const {
  Mat rows;
  rows.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) rows.push_back(multiply(a, basis(i)).coords);
  return rows;
}

bool GradedRing::operator==(const GradedRing& other) const {
  return this == &other || (same_shape(other) && unity_ == other.unity_ && mul_ == other.mul_);
}

// ---------------------------------------------------------------- GradedModule

GradedModule::GradedModule(RingPtr ring, std::vector<Axis> axes, std::vector<std::vector<Element>> act)
    : Carrier(ring->group(), std::move(axes)), ring_(std::move(ring)), act_(std::move(act)) {}

ModulePtr GradedModule::create(RingPtr ring, std::vector<Axis> axes, std::vector<std::vector<Element>> act) {
  if (!ring) throw std::invalid_argument("module needs a ring");
  if (act.size() != ring->dim()) throw std::invalid_argument("action table needs one row per ring axis");
  for (const auto& row : act) {
    if (row.size() != axes.size()) throw std::invalid_argument("action table needs one column per module axis");
    for (const Element& e : row)
      if (e.size() != axes.size()) throw std::invalid_argument("action structure constant dimension mismatch");
  }
  return ModulePtr(new GradedModule(std::move(ring), std::move(axes), std::move(act)));
}

Element GradedModule::apply(const Element& a, const Element& x) const {
  ring_->require_element(a, "apply (ring element)");
  require_element(x, "apply (module element)");
  Vec v(dim(), 0);
  for (std::size_t i = 0; i < ring_->dim(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (x[j] == 0) continue;
      axpy(v, checked_mul(a[i], x[j]), act_[i][j].coords);
    }
  }
  return reduce(std::move(v));
}

Mat GradedModule::action_rows(const Element& a) const {
  Mat rows;
  rows.reserve(dim());
  for (std::size_t j = 0; j < dim(); ++j) rows.push_back(apply(a, basis(j)).coords);
  return rows;
}

Mat GradedModule::orbit_rows(const Element& x) const {
  Mat rows;
  rows.reserve(ring_->dim());
  for (std::size_t i = 0; i < ring_->dim(); ++i) rows.push_back(apply(ring_->basis(i), x).coords);
  return rows;
}

bool GradedModule::operator==(const GradedModule& other) const {
  return this == &other || (same_shape(other) && *ring_ == *other.ring_ && act_ == other.act_);
}

ModulePtr regular_module(const RingPtr& ring) {
  return GradedModule::create(ring, ring->axes(), ring->table());
}

// ---------------------------------------------------------------- axioms

namespace {

bool respects_grading(const Carrier& target, const Element& value, Degree expected) {
  for (std::size_t k = 0; k < target.dim(); ++k) {
    if (value[k] != 0 && target.axes()[k].degree != expected) return false;
  }
  return true;
}

std::string show_degree(Degree g) { return std::to_string(g); }

}  // namespace

std::vector<AxiomViolation> verify_axioms(const GradedRing& r) {
  std::vector<AxiomViolation> out;
  const std::size_t n = r.dim();
  const auto& axes = r.axes();
  const GradeGroup& G = r.group();

  if (!r.is_canonical(r.unity())) out.push_back({"canonical", {}, "unity is not reduced"});
  for (std::size_t i = 0; i < n; ++i) {
    if (r.unity()[i] != 0 && axes[i].degree != G.identity())
      out.push_back({"unity-degree", {i}, "unity has a coordinate on an axis of degree " + show_degree(axes[i].degree)});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Element& p = r.product(i, j);
      if (!r.is_canonical(p)) out.push_back({"canonical", {i, j}, "structure constant is not reduced"});
      if (!(p == r.product(j, i))) out.push_back({"commutativity", {i, j}, "b_i b_j != b_j b_i"});
      Degree gh = G.add(axes[i].degree, axes[j].degree);
      if (!respects_grading(r, r.reduce(p.coords), gh))
        out.push_back({"grading", {i, j}, "b_i b_j leaves degree " + show_degree(gh)});
      if (axes[i].is_finite() && !r.scale(axes[i].modulus, r.reduce(p.coords)).is_zero())
        out.push_back({"moduli", {i, j}, "d_i * (b_i b_j) != 0"});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(r.multiply(r.unity(), r.basis(i)) == r.basis(i))) out.push_back({"unity", {i}, "1 * b_i != b_i"});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Element lhs = r.multiply(r.reduce(r.product(i, j).coords), r.basis(k));
        Element rhs = r.multiply(r.basis(i), r.reduce(r.product(j, k).coords));
        if (!(lhs == rhs)) out.push_back({"associativity", {i, j, k}, "(b_i b_j) b_k != b_i (b_j b_k)"});
      }
  return out;
}

std::vector<AxiomViolation> verify_axioms(const GradedModule& m) {
  std::vector<AxiomViolation> out = verify_axioms(*m.ring());
  for (AxiomViolation& v : out) v.law = "ring-" + v.law;
  const GradedRing& r = *m.ring();
  const GradeGroup& G = m.group();
  for (std::size_t i = 0; i < r.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const Element& p = m.action(i, j);
      if (!m.is_canonical(p)) out.push_back({"canonical", {i, j}, "action constant is not reduced"});
      Element red = m.reduce(p.coords);
      Degree gh = G.add(r.axes()[i].degree, m.axes()[j].degree);
      if (!respects_grading(m, red, gh))
        out.push_back({"grading", {i, j}, "ring axis " + std::to_string(i) + " on module axis " + std::to_string(j) +
                                              " leaves degree " + show_degree(gh)});
      if (r.axes()[i].is_finite() && !m.scale(r.axes()[i].modulus, red).is_zero())
        out.push_back({"moduli", {i, j}, "d_ring(i) * act[i][j] != 0"});
      if (m.axes()[j].is_finite() && !m.scale(m.axes()[j].modulus, red).is_zero())
        out.push_back({"moduli", {i, j}, "d_module(j) * act[i][j] != 0"});
    }
  }
  for (std::size_t j = 0; j < m.dim(); ++j) {
    if (!(m.apply(r.unity(), m.basis(j)) == m.basis(j))) out.push_back({"unity", {j}, "1 * m_j != m_j"});
  }
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t k = 0; k < r.dim(); ++k)
      for (std::size_t j = 0; j < m.dim(); ++j) {
        Element lhs = m.apply(r.reduce(r.product(i, k).coords), m.basis(j));
        Element rhs = m.apply(r.basis(i), m.reduce(m.action(k, j).coords));
        if (!(lhs == rhs)) out.push_back({"associativity", {i, k, j}, "(b_i b_k) m_j != b_i (b_k m_j)"});
      }
  return out;
}

std::string to_string(const AxiomViolation& v) {
  std::ostringstream os;
  os << v.law << " [";
  for (std::size_t i = 0; i < v.indices.size(); ++i) os << (i ? "," : "") << v.indices[i];
  os << "]: " << v.detail;
  return os.str();
}

namespace {
std::string summarize(const std::vector<AxiomViolation>& v) {
  std::string s = "axiom violation";
  if (!v.empty()) s += ": " + to_string(v.front());
  if (v.size() > 1) s += " (+" + std::to_string(v.size() - 1) + " more)";
  return s;
}
}  // namespace

AxiomError::AxiomError(std::vector<AxiomViolation> v) : std::runtime_error(summarize(v)), violations_(std::move(v)) {}

RingPtr checked(RingPtr ring) {
  auto v = verify_axioms(*ring);
  if (!v.empty()) throw AxiomError(std::move(v));
  return ring;
}

ModulePtr checked(ModulePtr module) {
  auto v = verify_axioms(*module);
  if (!v.empty()) throw AxiomError(std::move(v));
  return module;
}

}  // namespace graded
