#include "graded/enumerate.hpp"

#include <string>

namespace graded {

namespace {

void require_cap(const GradedModule& m, Int cap) {
  if (!m.is_finite()) throw std::invalid_argument("submodule enumeration needs a finite module");
  auto n = m.cardinality();
  if (!n || *n > cap)
    throw CapExceeded("module has more than " + std::to_string(cap) + " elements; raise the enumeration cap");
}

Mat diagonal(const Vec& d) {
  Mat out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    Vec r(d.size(), 0);
    r[i] = d[i];
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<Mat> enumerate_subgroups(const Vec& moduli) {
  const std::size_t b = moduli.size();
  for (Int d : moduli)
    if (d < 1) throw std::invalid_argument("enumerate_subgroups: moduli must be >= 1");
  const Mat rel = diagonal(moduli);
  std::vector<Mat> out;
  if (b == 0) {
    out.emplace_back();
    return out;
  }

  std::vector<std::vector<Int>> pivot_choices;
  for (Int d : moduli) pivot_choices.push_back(divisors(d));

  std::vector<std::size_t> pick(b, 0);
  while (true) {
    Vec h(b);
    for (std::size_t i = 0; i < b; ++i) h[i] = pivot_choices[i][pick[i]];
    // Free slots: row i, column j > i, value in [0, h_j).
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = i + 1; j < b; ++j)
        if (h[j] > 1) slots.emplace_back(i, j);
    Mat m(b, Vec(b, 0));
    for (std::size_t i = 0; i < b; ++i) m[i][i] = h[i];
    std::vector<Int> val(slots.size(), 0);
    while (true) {
      for (std::size_t s = 0; s < slots.size(); ++s) m[slots[s].first][slots[s].second] = val[s];
      if (lattice_contains(m, rel)) out.push_back(m);
      std::size_t s = slots.size();
      bool done = true;
      while (s > 0) {
        --s;
        if (++val[s] < h[slots[s].second]) {
          done = false;
          break;
        }
        val[s] = 0;
      }
      if (done) break;
    }
    std::size_t k = b;
    bool done = true;
    while (k > 0) {
      --k;
      if (++pick[k] < pivot_choices[k].size()) {
        done = false;
        break;
      }
      pick[k] = 0;
    }
    if (done) break;
  }
  return out;
}

bool is_submodule_lattice(const GradedModule& m, const Mat& basis) {
  const GradedRing& r = *m.ring();
  for (std::size_t i = 0; i < r.dim(); ++i) {
    Element b = r.basis(i);
    for (const Vec& row : basis) {
      if (!in_lattice(basis, m.apply(b, m.reduce(row)).coords)) return false;
    }
  }
  return true;
}

std::vector<SubLattice> enumerate_graded_submodules(const ModulePtr& m, Int cap) {
  require_cap(*m, cap);
  const std::size_t n = m->dim();
  std::vector<Degree> degs = m->degrees();
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::vector<Mat>> choices;
  for (Degree g : degs) {
    blocks.push_back(m->block(g));
    Vec moduli;
    for (std::size_t i : blocks.back()) moduli.push_back(m->axes()[i].modulus);
    choices.push_back(enumerate_subgroups(moduli));
  }

  std::vector<SubLattice> out;
  std::vector<std::size_t> pick(degs.size(), 0);
  while (true) {
    Mat rows;
    for (std::size_t d = 0; d < degs.size(); ++d) {
      for (const Vec& r : choices[d][pick[d]]) {
        Vec v(n, 0);
        for (std::size_t t = 0; t < r.size(); ++t) v[blocks[d][t]] = r[t];
        rows.push_back(std::move(v));
      }
    }
    Mat h = hnf(std::move(rows), n);
    if (is_submodule_lattice(*m, h)) out.push_back(SubLattice::from_rows(m, std::move(h)));
    std::size_t k = degs.size();
    bool done = true;
    while (k > 0) {
      --k;
      if (++pick[k] < choices[k].size()) {
        done = false;
        break;
      }
      pick[k] = 0;
    }
    if (done) break;
  }
  return out;
}

std::vector<SubLattice> enumerate_submodules(const ModulePtr& m, Int cap) {
  require_cap(*m, cap);
  Vec moduli;
  for (const Axis& a : m->axes()) moduli.push_back(a.modulus);
  std::vector<SubLattice> out;
  for (Mat& h : enumerate_subgroups(moduli)) {
    if (is_submodule_lattice(*m, h)) out.push_back(SubLattice::from_rows(m, std::move(h)));
  }
  return out;
}

}  // namespace graded
