#include "tropmod/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace tropmod {

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVec negate(const IntVec& v) {
  IntVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

RatVec to_rat(const IntVec& v) {
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

RatVec scale(const RatVec& v, const Rat& c) {
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * c;
  return out;
}

RatVec add(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_zero(); });
}

IntVec primitive(const IntVec& v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g == 0) fail(Errc::ZeroVector, "no primitive representative of the zero vector");
  IntVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

IntVec primitive(const RatVec& v) {
  long long lcm = 1;
  for (const Rat& x : v) lcm = std::lcm(lcm, x.den());
  IntVec scaled(v.size());
  for (size_t i = 0; i < v.size(); ++i) scaled[i] = v[i].num() * (lcm / v[i].den());
  return primitive(scaled);
}

namespace {

// Row echelon over Q in place; returns rank.
int gauss(std::vector<RatVec>& m) {
  if (m.empty()) return 0;
  const int rows = (int)m.size();
  const int cols = (int)m[0].size();
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][c].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      Rat f = m[r][c] / m[rank][c];
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int rank(const std::vector<RatVec>& rows) {
  std::vector<RatVec> m = rows;
  return gauss(m);
}

int rank(const std::vector<IntVec>& rows) {
  std::vector<RatVec> m;
  m.reserve(rows.size());
  for (const IntVec& r : rows) m.push_back(to_rat(r));
  return gauss(m);
}

bool in_span(const RatVec& v, const std::vector<IntVec>& rows) {
  if (is_zero(v)) return true;
  std::vector<RatVec> m;
  for (const IntVec& r : rows) m.push_back(to_rat(r));
  int base = gauss(m);
  m.push_back(v);
  return rank(m) == base;
}

std::optional<RatVec> solve_columns(const std::vector<IntVec>& cols, const RatVec& b) {
  const int k = (int)cols.size();
  const int r = (int)b.size();
  // augmented system: r equations, k unknowns
  std::vector<RatVec> m(r, RatVec(k + 1, Rat(0)));
  for (int e = 0; e < r; ++e) {
    for (int i = 0; i < k; ++i) m[e][i] = Rat(cols[i][e]);
    m[e][k] = b[e];
  }
  gauss(m);
  RatVec x(k, Rat(0));
  for (int e = r - 1; e >= 0; --e) {
    int lead = -1;
    for (int i = 0; i <= k; ++i)
      if (!m[e][i].is_zero()) {
        lead = i;
        break;
      }
    if (lead < 0) continue;
    if (lead == k) return std::nullopt;  // 0 = nonzero
    Rat rhs = m[e][k];
    for (int i = lead + 1; i < k; ++i) rhs -= m[e][i] * x[i];
    x[lead] = rhs / m[e][lead];
  }
  return x;
}

std::vector<IntVec> rational_kernel(const std::vector<IntVec>& rows, int r) {
  std::vector<RatVec> m;
  for (const IntVec& row : rows) m.push_back(to_rat(row));
  int rk = gauss(m);
  m.resize(rk);
  // identify pivot columns
  std::vector<int> pivot_col(rk, -1);
  std::vector<char> is_pivot(r, 0);
  for (int e = 0; e < rk; ++e) {
    for (int c = 0; c < r; ++c)
      if (!m[e][c].is_zero()) {
        pivot_col[e] = c;
        is_pivot[c] = 1;
        break;
      }
  }
  std::vector<IntVec> kernel;
  for (int free = 0; free < r; ++free) {
    if (is_pivot[free]) continue;
    RatVec x(r, Rat(0));
    x[free] = Rat(1);
    for (int e = rk - 1; e >= 0; --e) {
      Rat rhs(0);
      for (int c = pivot_col[e] + 1; c < r; ++c) rhs -= m[e][c] * x[c];
      x[pivot_col[e]] = rhs / m[e][pivot_col[e]];
    }
    kernel.push_back(primitive(x));
  }
  return kernel;
}

namespace {

long long checked_mul_sub(long long a, long long q, long long b) {
  __int128 v = (__int128)a - (__int128)q * b;
  if (v > INT64_MAX || v < INT64_MIN) fail(Errc::Internal, "lattice arithmetic overflow");
  return (long long)v;
}

}  // namespace

std::vector<IntVec> integer_kernel(const std::vector<IntVec>& rows, int r) {
  const int m = (int)rows.size();
  // work on columns of M, mirror the operations on U = identity
  std::vector<IntVec> M(m, IntVec(r, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < r; ++j) M[i][j] = rows[i][j];
  std::vector<IntVec> U(r, IntVec(r, 0));  // U[c] = column c as a vector
  for (int c = 0; c < r; ++c) U[c][c] = 1;

  auto col_sub = [&](int dst, int src, long long q) {  // col_dst -= q * col_src
    for (int i = 0; i < m; ++i) M[i][dst] = checked_mul_sub(M[i][dst], q, M[i][src]);
    for (int i = 0; i < r; ++i) U[dst][i] = checked_mul_sub(U[dst][i], q, U[src][i]);
  };
  auto col_swap = [&](int a, int b) {
    for (int i = 0; i < m; ++i) std::swap(M[i][a], M[i][b]);
    std::swap(U[a], U[b]);
  };

  int col = 0;
  for (int row = 0; row < m && col < r; ++row) {
    while (true) {
      int best = -1;
      for (int c = col; c < r; ++c)
        if (M[row][c] != 0 && (best < 0 || std::llabs(M[row][c]) < std::llabs(M[row][best])))
          best = c;
      if (best < 0) break;  // row already zero on the free columns
      bool others = false;
      for (int c = col; c < r; ++c) {
        if (c == best || M[row][c] == 0) continue;
        others = true;
        col_sub(c, best, M[row][c] / M[row][best]);
      }
      if (!others) {
        col_swap(col, best);
        ++col;
        break;
      }
    }
  }
  std::vector<IntVec> kernel;
  for (int c = col; c < r; ++c) kernel.push_back(U[c]);
  return kernel;
}

std::vector<IntVec> saturation_basis(const std::vector<IntVec>& rows, int r) {
  std::vector<IntVec> nonzero;
  for (const IntVec& v : rows)
    if (!is_zero(v)) nonzero.push_back(v);
  if (nonzero.empty()) return {};
  std::vector<IntVec> orth = rational_kernel(nonzero, r);
  return integer_kernel(orth, r);  // handles orth empty: full lattice
}

namespace {

bool nonneg_combination(const std::vector<IntVec>& gens, const RatVec& target, int max_support) {
  if (is_zero(target)) return true;
  const int g = (int)gens.size();
  if (g == 0) return false;
  if (g > 20) fail(Errc::Internal, "cone membership generator list too large");
  for (uint32_t mask = 1; mask < (1u << g); ++mask) {
    if (__builtin_popcount(mask) > max_support) continue;
    std::vector<IntVec> sub;
    for (int i = 0; i < g; ++i)
      if (mask & (1u << i)) sub.push_back(gens[i]);
    if (rank(sub) != (int)sub.size()) continue;  // only independent supports matter
    auto sol = solve_columns(sub, target);
    if (!sol) continue;
    bool ok = true;
    for (const Rat& l : *sol)
      if (l < Rat(0)) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool in_cone(const RatVec& x, const std::vector<IntVec>& gens) {
  int d = rank(gens);
  return nonneg_combination(gens, x, d);
}

bool in_cone(const IntVec& x, const std::vector<IntVec>& gens) { return in_cone(to_rat(x), gens); }

bool cone_pointed(const std::vector<IntVec>& gens) {
  // pointed iff no generator's negative lies in the cone of all generators
  for (const IntVec& g : gens) {
    if (is_zero(g)) continue;
    if (in_cone(to_rat(negate(g)), gens)) return false;
  }
  return true;
}

std::vector<int> extreme_generators(const std::vector<IntVec>& gens) {
  std::vector<int> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    std::vector<IntVec> others;
    for (size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (!in_cone(to_rat(gens[i]), others)) out.push_back((int)i);
  }
  return out;
}

std::vector<IntVec> cone_intersection(const std::vector<IntVec>& us,
                                      const std::vector<IntVec>& ws) {
  if (us.empty() || ws.empty()) return {};
  const int r = (int)us[0].size();
  const int p = (int)us.size();
  const int q = (int)ws.size();
  if (p + q > 20) fail(Errc::Internal, "cone intersection generator list too large");

  // columns of [U | -W]; kernel vectors with one sign give intersection points
  std::vector<IntVec> cols;
  for (const IntVec& u : us) cols.push_back(u);
  for (const IntVec& w : ws) cols.push_back(negate(w));

  std::vector<IntVec> rays;
  auto push_ray = [&](const RatVec& lambda) {
    RatVec x(r, Rat(0));
    for (int i = 0; i < p; ++i) x = add(x, scale(to_rat(us[i]), lambda[i]));
    if (is_zero(x)) return;
    IntVec prim = primitive(x);
    if (std::find(rays.begin(), rays.end(), prim) == rays.end()) rays.push_back(prim);
  };

  const int total = p + q;
  for (uint32_t mask = 1; mask < (1u << total); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < total; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    // support of an extreme ray: columns of rank |S| - 1 with 1-dim kernel
    std::vector<IntVec> sub_cols;
    for (int i : idx) sub_cols.push_back(cols[i]);
    // kernel of the r x |S| matrix with columns sub_cols
    std::vector<IntVec> eqs(r, IntVec(idx.size(), 0));
    for (int e = 0; e < r; ++e)
      for (size_t c = 0; c < idx.size(); ++c) eqs[e][c] = sub_cols[c][e];
    std::vector<IntVec> ker = rational_kernel(eqs, (int)idx.size());
    if (ker.size() != 1) continue;
    const IntVec& z = ker[0];
    bool nonneg = std::all_of(z.begin(), z.end(), [](long long v) { return v >= 0; });
    bool nonpos = std::all_of(z.begin(), z.end(), [](long long v) { return v <= 0; });
    if (!nonneg && !nonpos) continue;
    RatVec lambda(total, Rat(0));
    for (size_t c = 0; c < idx.size(); ++c) lambda[idx[c]] = Rat(nonneg ? z[c] : -z[c]);
    push_ray(lambda);
  }
  return rays;
}

}  // namespace tropmod
