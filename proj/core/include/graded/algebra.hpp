#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graded/integer.hpp"

namespace graded {

using Degree = Int;

/// Grading group: Z_k for order k >= 1, or Z for order 0. Written additively
/// with identity 0.
class GradeGroup {
 public:
  static GradeGroup integers() { return GradeGroup(0); }
  static GradeGroup cyclic(Int order);

  Int order() const { return order_; }
  bool is_finite() const { return order_ != 0; }
  Degree identity() const { return 0; }
  Degree canonical(Degree g) const { return reduce_mod(g, order_); }
  Degree add(Degree g, Degree h) const { return canonical(checked_add(g, h)); }
  bool is_canonical(Degree g) const { return order_ == 0 || (g >= 0 && g < order_); }

  bool operator==(const GradeGroup&) const = default;

 private:
  explicit GradeGroup(Int order) : order_(order) {}
  Int order_;
};

/// One cyclic coordinate: Z_modulus (or Z when modulus is 0), homogeneous of
/// the given degree.
struct Axis {
  Int modulus = 0;
  Degree degree = 0;

  bool is_finite() const { return modulus != 0; }
  bool operator==(const Axis&) const = default;
};

/// Coordinate vector over a carrier's axes. Finite coordinates are canonical
/// residues; coordinates on Z axes are plain integers.
struct Element {
  Vec coords;

  Element() = default;
  explicit Element(Vec c) : coords(std::move(c)) {}

  std::size_t size() const { return coords.size(); }
  bool is_zero() const { return graded::is_zero(coords); }
  Int operator[](std::size_t i) const { return coords[i]; }

  auto operator<=>(const Element&) const = default;
};

std::string to_string(const Element& e);

/// Shared axis bookkeeping for rings and modules.
class Carrier {
 public:
  Carrier(GradeGroup group, std::vector<Axis> axes);

  const GradeGroup& group() const { return group_; }
  const std::vector<Axis>& axes() const { return axes_; }
  std::size_t dim() const { return axes_.size(); }

  bool is_finite() const;
  /// Number of elements; nullopt for infinite carriers or when it exceeds
  /// 2^62.
  std::optional<Int> cardinality() const;

  /// Distinct axis degrees, ascending.
  std::vector<Degree> degrees() const;
  /// Axis indices of degree g.
  std::vector<std::size_t> block(Degree g) const;

  Element zero() const { return Element(Vec(dim(), 0)); }
  Element basis(std::size_t i) const;
  /// Reduce an integer vector modulo the axis moduli.
  Element reduce(Vec v) const;
  bool is_canonical(const Element& x) const;
  Element add(const Element& x, const Element& y) const;
  Element scale(Int k, const Element& x) const;
  Element negate(const Element& x) const { return scale(-1, x); }

  /// Rows d_i * e_i for every finite axis i; every lifted sublattice
  /// contains them.
  Mat relation_rows() const;

  /// Degree -> component; zero components are omitted.
  std::map<Degree, Element> decompose(const Element& x) const;
  /// The unique degree of a homogeneous element (the identity for zero).
  std::optional<Degree> homogeneous_degree(const Element& x) const;
  /// Degrees with a nonzero component (some axis of modulus != 1).
  std::vector<Degree> support() const;
  /// Restriction of x to the degree-g axes.
  Element component(const Element& x, Degree g) const;

  /// Every element of the degree-g block whose coordinates are drawn from
  /// values(axis), in lexicographic order of the per-axis lists.
  std::vector<Element> block_elements(Degree g, const std::function<Vec(std::size_t)>& values) const;

  /// All homogeneous elements: zero first (tagged with the identity degree),
  /// then each support degree in ascending order. Infinite axes take values
  /// 0, 1, -1, ..., bound, -bound.
  std::vector<std::pair<Degree, Element>> enumerate_homogeneous(std::optional<Int> bound = std::nullopt) const;

  /// All elements (not only homogeneous) of a finite carrier, lexicographic.
  std::vector<Element> enumerate_all() const;

  void require_element(const Element& x, const char* what) const;

  bool same_shape(const Carrier& other) const { return group_ == other.group_ && axes_ == other.axes_; }

 private:
  GradeGroup group_;
  std::vector<Axis> axes_;
};

/// Per-axis enumeration order for infinite coordinates: 0, 1, -1, 2, -2, ...
Vec signed_range(Int bound);

class GradedRing;
class GradedModule;
using RingPtr = std::shared_ptr<const GradedRing>;
using ModulePtr = std::shared_ptr<const GradedModule>;

/// Commutative G-graded ring presented by structure constants:
/// basis_i * basis_j = mul[i][j].
class GradedRing : public Carrier {
 public:
  /// Shape-checks the tables and rejects the zero ring. Ring axioms are not
  /// enforced here; see verify_axioms.
  static RingPtr create(GradeGroup group, std::vector<Axis> axes, Element unity, std::vector<std::vector<Element>> mul);

  const Element& unity() const { return unity_; }
  const Element& product(std::size_t i, std::size_t j) const { return mul_[i][j]; }
  const std::vector<std::vector<Element>>& table() const { return mul_; }

  Element multiply(const Element& a, const Element& b) const;
  /// Lifted linear map x -> a * x as integer rows (row i = a * basis_i).
  Mat multiplication_rows(const Element& a) const;

  bool operator==(const GradedRing& other) const;

 private:
  GradedRing(GradeGroup group, std::vector<Axis> axes, Element unity, std::vector<std::vector<Element>> mul);
  Element unity_;
  std::vector<std::vector<Element>> mul_;
};

/// Graded module over a graded ring: ring basis_i acting on module basis_j
/// gives act[i][j].
class GradedModule : public Carrier {
 public:
  static ModulePtr create(RingPtr ring, std::vector<Axis> axes, std::vector<std::vector<Element>> act);

  const RingPtr& ring() const { return ring_; }
  const Element& action(std::size_t i, std::size_t j) const { return act_[i][j]; }
  const std::vector<std::vector<Element>>& table() const { return act_; }

  /// a * x, bilinear in the structure constants and reduced.
  Element apply(const Element& a, const Element& x) const;
  /// Lifted linear map x -> a * x (row j = a * basis_j).
  Mat action_rows(const Element& a) const;
  /// Lifted linear map r -> r * x over the ring axes (row i = basis_i * x).
  Mat orbit_rows(const Element& x) const;

  bool operator==(const GradedModule& other) const;

 private:
  GradedModule(RingPtr ring, std::vector<Axis> axes, std::vector<std::vector<Element>> act);
  RingPtr ring_;
  std::vector<std::vector<Element>> act_;
};

/// The ring as a module over itself.
ModulePtr regular_module(const RingPtr& ring);

struct AxiomViolation {
  std::string law;
  std::vector<std::size_t> indices;
  std::string detail;
};

/// Empty on success; otherwise every violated law with witnessing basis
/// indices.
std::vector<AxiomViolation> verify_axioms(const GradedRing& ring);
std::vector<AxiomViolation> verify_axioms(const GradedModule& module);

std::string to_string(const AxiomViolation& v);

/// Thrown when a constructed instance fails verify_axioms.
class AxiomError : public std::runtime_error {
 public:
  explicit AxiomError(std::vector<AxiomViolation> v);
  const std::vector<AxiomViolation>& violations() const { return violations_; }

 private:
  std::vector<AxiomViolation> violations_;
};

RingPtr checked(RingPtr ring);
ModulePtr checked(ModulePtr module);

}  // namespace graded
