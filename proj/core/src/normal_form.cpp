#include "graded/normal_form.hpp"

#include <algorithm>
#include <utility>

namespace graded {

namespace {

void sub_row(Vec& target, Int q, const Vec& source) { axpy(target, checked_mul(-1, q), source); }

void negate(Vec& v) {
  for (Int& x : v) x = checked_mul(-1, x);
}

}  // namespace

Mat hnf(Mat a, std::size_t width) {
  for (const Vec& row : a) {
    if (row.size() != width) throw std::invalid_argument("hnf: row width mismatch");
  }
  std::size_t r = 0;
  const std::size_t m = a.size();
  for (std::size_t col = 0; col < width && r < m; ++col) {
    // Euclid on column `col` over rows r..m-1, always dividing by the
    // smallest entry to keep intermediate values small.
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (a[i][col] != 0 && (best == m || abs_int(a[i][col]) < abs_int(a[best][col]))) best = i;
      }
      if (best == m) break;
      std::swap(a[r], a[best]);
      bool remaining = false;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a[i][col] == 0) continue;
        sub_row(a[i], a[i][col] / a[r][col], a[r]);
        if (a[i][col] != 0) remaining = true;
      }
      if (!remaining) break;
    }
    if (a[r][col] == 0) continue;
    if (a[r][col] < 0) negate(a[r]);
    for (std::size_t i = 0; i < r; ++i) {
      if (a[i][col] != 0) sub_row(a[i], floor_div(a[i][col], a[r][col]), a[r]);
    }
    ++r;
  }
  a.resize(r);
  return a;
}

std::vector<std::size_t> pivot_columns(const Mat& h) {
  std::vector<std::size_t> out;
  out.reserve(h.size());
  for (const Vec& row : h) {
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    out.push_back(c);
  }
  return out;
}

std::optional<Vec> solve_in_basis(const Mat& h, const Vec& v) {
  Vec rest = v;
  Vec coeffs(h.size(), 0);
  for (std::size_t i = 0; i < h.size(); ++i) {
    std::size_t c = 0;
    while (h[i][c] == 0) ++c;
    for (std::size_t k = 0; k < c; ++k) {
      if (rest[k] != 0) return std::nullopt;
    }
    if (rest[c] % h[i][c] != 0) return std::nullopt;
    coeffs[i] = rest[c] / h[i][c];
    sub_row(rest, coeffs[i], h[i]);
  }
  if (!is_zero(rest)) return std::nullopt;
  return coeffs;
}

bool in_lattice(const Mat& h, const Vec& v) { return solve_in_basis(h, v).has_value(); }

Mat lattice_preimage(const Mat& phi, const Mat& target, std::size_t n) {
  const std::size_t m = phi.size();
  Mat block;
  block.reserve(m + target.size());
  for (std::size_t i = 0; i < m; ++i) {
    Vec row(n + m, 0);
    std::copy(phi[i].begin(), phi[i].end(), row.begin());
    row[n + i] = 1;
    block.push_back(std::move(row));
  }
  for (const Vec& t : target) {
    Vec row(n + m, 0);
    std::copy(t.begin(), t.end(), row.begin());
    block.push_back(std::move(row));
  }
  Mat h = hnf(std::move(block), n + m);
  Mat out;
  for (const Vec& row : h) {
    if (std::all_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n), [](Int x) { return x == 0; })) {
      out.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
    }
  }
  return out;
}

Mat lattice_intersection(const Mat& a, const Mat& b, std::size_t width) {
  // u*A in B  <=>  u*A in A ∩ B; map the solutions back through A.
  Mat coeffs = lattice_preimage(a, b, width);
  Mat rows;
  rows.reserve(coeffs.size());
  for (const Vec& u : coeffs) {
    Vec v(width, 0);
    for (std::size_t i = 0; i < u.size(); ++i) axpy(v, u[i], a[i]);
    rows.push_back(std::move(v));
  }
  return hnf(std::move(rows), width);
}

Mat lattice_sum(const Mat& a, const Mat& b, std::size_t width) {
  Mat rows = a;
  rows.insert(rows.end(), b.begin(), b.end());
  return hnf(std::move(rows), width);
}

bool lattice_contains(const Mat& outer, const Mat& inner) {
  return std::all_of(inner.begin(), inner.end(), [&](const Vec& v) { return in_lattice(outer, v); });
}

Smith smith(Mat a, std::size_t cols) {
  const std::size_t m = a.size();
  Smith out;
  out.v = identity_matrix(cols);
  out.v_inv = identity_matrix(cols);
  Mat& v = out.v;
  Mat& vinv = out.v_inv;

  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (Vec& row : a) std::swap(row[i], row[j]);
    for (Vec& row : v) std::swap(row[i], row[j]);
    std::swap(vinv[i], vinv[j]);
  };
  // column j -= q * column t
  auto col_op = [&](std::size_t j, std::size_t t, Int q) {
    for (Vec& row : a) row[j] = checked_sub(row[j], checked_mul(q, row[t]));
    for (Vec& row : v) row[j] = checked_sub(row[j], checked_mul(q, row[t]));
    axpy(vinv[t], q, vinv[j]);
  };

  const std::size_t diag = std::min(m, cols);
  for (std::size_t t = 0; t < diag; ++t) {
    // Bring the smallest nonzero entry of the trailing block to (t, t).
    std::size_t bp = m, bq = cols;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] != 0 && (bp == m || abs_int(a[i][j]) < abs_int(a[bp][bq]))) {
          bp = i;
          bq = j;
        }
      }
    }
    if (bp == m) break;
    std::swap(a[t], a[bp]);
    swap_cols(t, bq);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        sub_row(a[i], a[i][t] / a[t][t], a[t]);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        col_op(j, t, a[t][j] / a[t][t]);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        // A remainder survived; move the smallest entry of row/column t onto
        // the diagonal and sweep again.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (a[i][t] != 0 && abs_int(a[i][t]) < abs_int(a[bi][bj])) { bi = i; bj = t; }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[t][j] != 0 && abs_int(a[t][j]) < abs_int(a[bi][bj])) { bi = t; bj = j; }
        std::swap(a[t], a[bi]);
        swap_cols(t, bj);
        continue;
      }
      // Divisibility chain: fold any row carrying a non-multiple into row t.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == m) break;
      axpy(a[t], 1, a[bad]);
    }
    if (a[t][t] < 0) negate(a[t]);
  }

  out.invariants.assign(diag, 0);
  for (std::size_t t = 0; t < diag; ++t) out.invariants[t] = a[t][t];
  return out;
}

std::optional<Vec> AbelianPresentation::coordinates(const Vec& vec) const {
  auto c = solve_in_basis(basis, vec);
  if (!c) return std::nullopt;
  Vec y(orders.size(), 0);
  for (std::size_t r = 0; r < c->size(); ++r) {
    if ((*c)[r] == 0) continue;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      y[i] = checked_add(y[i], checked_mul((*c)[r], coefficient_map[r][i]));
    }
  }
  for (std::size_t i = 0; i < orders.size(); ++i) y[i] = reduce_mod(y[i], orders[i]);
  return y;
}

AbelianPresentation present(const Mat& basis, const Mat& sub, std::size_t n) {
  const std::size_t k = basis.size();
  Mat coeff_rows;
  coeff_rows.reserve(sub.size());
  for (const Vec& s : sub) {
    auto c = solve_in_basis(basis, s);
    if (!c) throw std::invalid_argument("present: sublattice not contained in lattice");
    coeff_rows.push_back(std::move(*c));
  }
  Smith snf = smith(coeff_rows, k);

  AbelianPresentation p;
  p.basis = basis;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < k; ++i) {
    Int order = i < snf.invariants.size() ? snf.invariants[i] : 0;
    if (order == 1) continue;
    kept.push_back(i);
    p.orders.push_back(order);
  }
  for (std::size_t i : kept) {
    Vec g(n, 0);
    for (std::size_t r = 0; r < k; ++r) axpy(g, snf.v_inv[i][r], basis[r]);
    p.generators.push_back(std::move(g));
  }
  p.coefficient_map.assign(k, Vec(kept.size(), 0));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < kept.size(); ++c) p.coefficient_map[r][c] = snf.v[r][kept[c]];
  }
  return p;
}

Int torsion_exponent(const Mat& lattice, std::size_t n) {
  AbelianPresentation p = present(identity_matrix(n), lattice, n);
  Int e = 1;
  for (Int o : p.orders) e = lcm_nonzero(e, o);
  return e;
}

std::size_t free_rank(const Mat& lattice, std::size_t n) {
  AbelianPresentation p = present(identity_matrix(n), lattice, n);
  return static_cast<std::size_t>(std::count(p.orders.begin(), p.orders.end(), Int{0}));
}

}  // namespace graded
