#include "graded/families.hpp"

#include <fmt/format.h>

#include "graded/enumerate.hpp"
#include "graded/presets.hpp"

namespace graded {

namespace {

Int pick(Int value, Int fallback) { return value > 0 ? value : fallback; }

void add_unique(Instance& inst, std::string name, SubLattice k) {
  for (const NamedSubmodule& s : inst.submodules)
    if (s.lattice == k) return;
  inst.submodules.push_back({std::move(name), std::move(k)});
}

void add_all_graded(Instance& inst) {
  for (SubLattice& k : enumerate_graded_submodules(inst.module)) add_unique(inst, to_string(k), std::move(k));
}

Instance make(std::string family, std::string id, ModulePtr m) {
  return Instance{std::move(family), std::move(id), checked(std::move(m)), {}};
}

/// K = aZ x bZ (or aZ + bZi) inside a two-axis module.
void add_axis_lattices(Instance& inst, Int a_max, Int b_max, const char* pattern) {
  for (Int a = 0; a <= a_max; ++a)
    for (Int b = 0; b <= b_max; ++b) {
      SubLattice k = span({Element({a, 0}), Element({0, b})}, inst.module);
      add_unique(inst, fmt::format(fmt::runtime(pattern), a, b), std::move(k));
    }
}

std::vector<Instance> zn_gaussian(const GridOptions& o) {
  std::vector<Instance> out;
  RingPtr z = integers(GradeGroup::cyclic(2));
  for (Int n = 2; n <= pick(o.n_max, 24); ++n) {
    Instance inst = make("zn-gaussian", fmt::format("Z_{}[i]", n), scalar_module(z, {{n, 0}, {n, 1}}));
    for (Int m = 0; m < n; ++m) add_unique(inst, fmt::format("{}M", m), multiple_of_module(Element({m}), inst.module));
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<Instance> zn_cyclic(const GridOptions& o) {
  std::vector<Instance> out;
  RingPtr z = integers(GradeGroup::cyclic(3));
  for (Int n = 2; n <= pick(o.n_max, 36); ++n) {
    Instance inst = make("zn-cyclic", fmt::format("Z_{}", n), scalar_module(z, {{n, 0}}));
    for (Int d : divisors(n)) {
      Int g = d == n ? 0 : d;
      add_unique(inst, fmt::format("<{}>", g), span({Element({g})}, inst.module));
    }
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<Instance> z_cyclic(const GridOptions& o) {
  Instance inst = make("z-cyclic", "Z", scalar_module(integers(GradeGroup::cyclic(3)), {{0, 0}}));
  for (Int a = 0; a <= pick(o.entry_max, 12); ++a) add_unique(inst, fmt::format("{}Z", a), span({Element({a})}, inst.module));
  return {inst};
}

std::vector<Instance> gaussian_lattice(const GridOptions& o) {
  Instance inst = make("gaussian-lattice", "Z[i]", scalar_module(integers(GradeGroup::cyclic(2)), {{0, 0}, {0, 1}}));
  Int e = pick(o.entry_max, 12);
  add_axis_lattices(inst, e, e, "{}Z+{}Zi");
  return {inst};
}

std::vector<Instance> zxz_lattice(const GridOptions& o) {
  RingPtr r = product_ring(GradeGroup::cyclic(2), {0, 0});
  Instance inst = make("zxz-lattice", "ZxZ", componentwise_module(r, {{0, 0}, {0, 0}}, {0, 1}));
  Int e = pick(o.entry_max, 12);
  add_axis_lattices(inst, e, e, "{}Zx{}Z");
  return {inst};
}

std::vector<Instance> product_modules(const GridOptions& o) {
  std::vector<Instance> out;
  RingPtr r = product_ring(GradeGroup::cyclic(2), {0, 0});
  for (Int m = 2; m <= pick(o.n_max, 6); ++m) {
    Instance inst = make("product-modules", fmt::format("ZxZ_{}", m), componentwise_module(r, {{0, 0}, {m, 0}}, {0, 1}));
    add_axis_lattices(inst, pick(o.entry_max, 12), m - 1, "{}Zx{}Z_m");
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<Instance> gfp_plane(const GridOptions&) {
  std::vector<Instance> out;
  for (Int p : {2, 3, 5}) {
    RingPtr f = product_ring(GradeGroup::cyclic(2), {p});
    Instance inst = make("gfp-plane", fmt::format("GF({})^2", p), scalar_module(f, {{p, 0}, {p, 1}}));
    add_all_graded(inst);
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<Instance> zn_plane(const GridOptions& o) {
  std::vector<Instance> out;
  for (Int n = 2; n <= pick(o.n_max, 12); ++n) {
    RingPtr r = product_ring(GradeGroup::cyclic(2), {n});
    Instance inst = make("zn-plane", fmt::format("Z_{}^2", n), scalar_module(r, {{n, 0}, {n, 1}}));
    add_all_graded(inst);
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<Instance> z6_truncated(const GridOptions&) {
  std::vector<Instance> out;
  auto z6_module = [](GradeGroup g, Int d) {
    std::vector<Axis> axes;
    for (Int j = 0; j < d; ++j) axes.push_back({6, g.canonical(j)});
    return scalar_module(integers(g), std::move(axes));
  };
  for (Int d : {2, 3}) {
    GradeGroup g = GradeGroup::cyclic(d);
    Instance as_z = make("z6-truncated", fmt::format("Z_6[x]/(x^{}) over Z, G=Z_{}", d, d), z6_module(g, d));
    add_all_graded(as_z);
    out.push_back(std::move(as_z));
    Instance reg = make("z6-truncated", fmt::format("Z_6[x]/(x^{}) regular, G=Z_{}", d, d),
                        regular_module(truncated_polynomial_ring(6, d, g)));
    add_all_graded(reg);
    out.push_back(std::move(reg));
  }
  Instance over_z = make("z6-truncated", "Z_6[x]/(x^3) over Z, G=Z", z6_module(GradeGroup::integers(), 3));
  add_all_graded(over_z);
  out.push_back(std::move(over_z));
  return out;
}

std::vector<Instance> gaussian_ring_ideals(const GridOptions& o) {
  Instance inst = make("gaussian-ring", "Z[i] regular", regular_module(gaussian_ring(0)));
  for (Int a = 0; a <= pick(o.entry_max, 12); ++a)
    add_unique(inst, fmt::format("{}Z[i]", a), span({Element({a, 0})}, inst.module));
  return {inst};
}

std::vector<Instance> zn_regular(const GridOptions& o) {
  std::vector<Instance> out;
  for (Int n = 2; n <= pick(o.n_max, 24); ++n) {
    Instance inst = make("zn-regular", fmt::format("Z_{} regular", n), regular_module(product_ring(GradeGroup::cyclic(2), {n})));
    add_all_graded(inst);
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace

const std::vector<FamilyInfo>& families() {
  static const std::vector<FamilyInfo> list{
      {"zn-gaussian", "Z_n[i] over Z graded by Z_2, n in [2, 24], submodules mM"},
      {"zn-cyclic", "Z_n over Z with the trivial Z_3 grading, n in [2, 36], every submodule"},
      {"z-cyclic", "Z over Z with the trivial Z_3 grading, submodules aZ with a <= 12"},
      {"gaussian-lattice", "Z[i] over Z graded by Z_2, submodules aZ + bZi with a, b <= 12"},
      {"zxz-lattice", "Z x Z over Z x Z componentwise, submodules aZ x bZ with a, b <= 12"},
      {"product-modules", "Z x Z_m over Z x Z componentwise, m in [2, 6], submodules aZ x bZ_m"},
      {"gfp-plane", "GF(p)^2 over GF(p) with split Z_2 grading, p in {2, 3, 5}"},
      {"zn-plane", "Z_n^2 over Z_n with split Z_2 grading, n in [2, 12]"},
      {"z6-truncated", "Z_6[x]/(x^d), d in {2, 3}, over Z and over itself, graded by Z_d (and by Z for d = 3)"},
      {"gaussian-ring", "Z[i] over itself graded by Z_2, ideals aZ[i] with a <= 12"},
      {"zn-regular", "Z_n over itself, n in [2, 24], every ideal"},
  };
  return list;
}

std::vector<Instance> family_instances(const std::string& name, const GridOptions& opts) {
  if (name == "zn-gaussian") return zn_gaussian(opts);
  if (name == "zn-cyclic") return zn_cyclic(opts);
  if (name == "z-cyclic") return z_cyclic(opts);
  if (name == "gaussian-lattice") return gaussian_lattice(opts);
  if (name == "zxz-lattice") return zxz_lattice(opts);
  if (name == "product-modules") return product_modules(opts);
  if (name == "gfp-plane") return gfp_plane(opts);
  if (name == "zn-plane") return zn_plane(opts);
  if (name == "z6-truncated") return z6_truncated(opts);
  if (name == "gaussian-ring") return gaussian_ring_ideals(opts);
  if (name == "zn-regular") return zn_regular(opts);
  throw std::invalid_argument("unknown family '" + name + "'");
}

}  // namespace graded
