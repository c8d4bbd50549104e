#include "lowcohom/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lowcohom::linalg {

namespace {

// a += s * b for sorted sparse vectors.
SparseVec axpy(const SparseVec& a, const Q& s, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, s * b[j].second);
      ++j;
    } else {
      Q v = a[i].second + s * b[j].second;
      if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

const Q* find_entry(const SparseVec& v, int idx) {
  auto it = std::lower_bound(v.begin(), v.end(), idx, [](const auto& e, int k) { return e.first < k; });
  if (it != v.end() && it->first == idx) return &it->second;
  return nullptr;
}

}  // namespace

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.row[i].emplace_back(i, Q(1));
  return m;
}

void SparseMatrix::add(int i, int j, const Q& v) {
  if (sgn(v) == 0) return;
  auto& r = row[i];
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, int k) { return e.first < k; });
  if (it != r.end() && it->first == j) {
    it->second += v;
    if (sgn(it->second) == 0) r.erase(it);
  } else {
    r.insert(it, {j, v});
  }
}

Q SparseMatrix::at(int i, int j) const {
  const Q* p = find_entry(row[i], j);
  return p ? *p : Q(0);
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : row) n += r.size();
  return n;
}

std::vector<Q> SparseMatrix::apply(const std::vector<Q>& v) const {
  std::vector<Q> out(rows);
  for (int i = 0; i < rows; ++i)
    for (const auto& [j, x] : row[i]) out[i] += x * v[j];
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (const auto& [j, x] : row[i]) t.row[j].emplace_back(i, x);
  return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("matrix shape mismatch");
  SparseMatrix out(rows, o.cols);
  for (int i = 0; i < rows; ++i) {
    std::map<int, Q> acc;
    for (const auto& [k, x] : row[i])
      for (const auto& [j, y] : o.row[k]) acc[j] += x * y;
    for (auto& [j, v] : acc)
      if (sgn(v) != 0) out.row[i].emplace_back(j, std::move(v));
  }
  return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
  SparseMatrix out(rows, cols);
  for (int i = 0; i < rows; ++i) out.row[i] = axpy(row[i], Q(1), o.row[i]);
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
  SparseMatrix out(rows, cols);
  for (int i = 0; i < rows; ++i) out.row[i] = axpy(row[i], Q(-1), o.row[i]);
  return out;
}

SparseMatrix SparseMatrix::scaled(const Q& s) const {
  if (sgn(s) == 0) return SparseMatrix(rows, cols);
  SparseMatrix out = *this;
  for (auto& r : out.row)
    for (auto& e : r) e.second *= s;
  return out;
}

bool SparseMatrix::is_zero() const {
  for (const auto& r : row)
    if (!r.empty()) return false;
  return true;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows == b.rows && a.cols == b.cols && a.row == b.row;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows * b.rows, a.cols * b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < b.rows; ++k) {
      auto& r = out.row[i * b.rows + k];
      for (const auto& [j, x] : a.row[i])
        for (const auto& [l, y] : b.row[k]) r.emplace_back(j * b.cols + l, x * y);
    }
  return out;
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

Rref exact_rref(const std::vector<SparseVec>& rows, int cols) {
  Rref out;
  out.cols = cols;
  std::vector<int> piv_of_col(cols, -1);
  // Column -> pivot rows containing it, so new pivots clear only what they touch.
  std::vector<std::vector<int>> users(cols);
  for (const auto& input : rows) {
    SparseVec r = input;
    std::vector<std::pair<int, Q>> hits;
    for (const auto& [c, x] : r)
      if (piv_of_col[c] >= 0) hits.emplace_back(c, x);
    for (const auto& [c, x] : hits) r = axpy(r, -x, out.rows[piv_of_col[c]]);
    if (r.empty()) continue;
    const int pc = r.front().first;
    const Q inv = 1 / r.front().second;
    for (auto& e : r) e.second *= inv;
    const int idx = static_cast<int>(out.rows.size());
    for (int u : users[pc]) {
      auto& pr = out.rows[u];
      if (const Q* x = find_entry(pr, pc)) {
        const Q f = -*x;
        pr = axpy(pr, f, r);
        for (const auto& e : pr) {
          auto& us = users[e.first];
          if (us.empty() || us.back() != u) us.push_back(u);
        }
      }
    }
    users[pc].clear();
    piv_of_col[pc] = idx;
    for (const auto& e : r)
      if (e.first != pc) users[e.first].push_back(idx);
    out.rows.push_back(std::move(r));
    out.pivot_cols.push_back(pc);
  }
  return out;
}

KernelBasis exact_kernel(const std::vector<SparseVec>& rows, int cols) {
  const Rref rr = exact_rref(rows, cols);
  KernelBasis kb;
  kb.ambient = cols;
  std::vector<bool> is_pivot(cols, false);
  for (int c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<int> free_index(cols, -1);
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) {
      free_index[c] = static_cast<int>(kb.free_cols.size());
      kb.free_cols.push_back(c);
    }
  std::vector<std::map<int, Q>> acc(kb.free_cols.size());
  for (std::size_t k = 0; k < kb.free_cols.size(); ++k) acc[k][kb.free_cols[k]] = 1;
  for (std::size_t r = 0; r < rr.rows.size(); ++r) {
    const int pc = rr.pivot_cols[r];
    for (const auto& [j, x] : rr.rows[r])
      if (j != pc) acc[free_index[j]][pc] = -x;
  }
  for (auto& m : acc) {
    SparseVec v;
    for (auto& [j, x] : m) v.emplace_back(j, std::move(x));
    kb.vectors.push_back(std::move(v));
  }
  return kb;
}

KernelBasis exact_kernel(const SparseMatrix& m) { return exact_kernel(m.row, m.cols); }

int exact_rank(const SparseMatrix& m) { return static_cast<int>(exact_rref(m.row, m.cols).rows.size()); }

SparseMatrix restrict_to(const SparseMatrix& x, const KernelBasis& basis) {
  const int k = basis.dim();
  std::vector<int> free_pos(basis.ambient, -1);
  for (int i = 0; i < k; ++i) free_pos[basis.free_cols[i]] = i;
  const SparseMatrix xt = x.transpose();
  SparseMatrix out(k, k);
  for (int col = 0; col < k; ++col) {
    std::map<int, Q> y;
    for (const auto& [j, b] : basis.vectors[col])
      for (const auto& [i, v] : xt.row[j])
        if (free_pos[i] >= 0) y[free_pos[i]] += v * b;
    for (auto& [i, v] : y)
      if (sgn(v) != 0) out.row[i].emplace_back(col, std::move(v));
  }
  return out;
}

SparseMatrix restrict_form(const SparseMatrix& g, const KernelBasis& basis) {
  const int k = basis.dim();
  const SparseMatrix gt = g.transpose();
  std::vector<std::vector<Q>> gb(k);
  for (int c = 0; c < k; ++c) {
    gb[c].assign(basis.ambient, Q(0));
    for (const auto& [j, b] : basis.vectors[c])
      for (const auto& [i, v] : gt.row[j]) gb[c][i] += v * b;
  }
  SparseMatrix out(k, k);
  for (int a = 0; a < k; ++a)
    for (int c = 0; c < k; ++c) {
      Q s = 0;
      for (const auto& [i, x] : basis.vectors[a]) s += x * gb[c][i];
      if (sgn(s) != 0) out.row[a].emplace_back(c, std::move(s));
    }
  return out;
}

std::vector<Q> coordinates_in(const KernelBasis& basis, const std::vector<Q>& v) {
  std::vector<Q> c(basis.dim());
  for (int i = 0; i < basis.dim(); ++i) c[i] = v[basis.free_cols[i]];
  return c;
}

std::vector<Q> to_dense(const SparseVec& v, int n) {
  std::vector<Q> d(n);
  for (const auto& [i, x] : v) d[i] = x;
  return d;
}

SparseVec to_sparse(const std::vector<Q>& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) s.emplace_back(static_cast<int>(i), v[i]);
  return s;
}

std::vector<mpz_class> primitive_integer(const std::vector<Q>& v) {
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (l / v[i].get_den());
  return out;
}

std::uint32_t mod_p(const mpz_class& z, std::uint32_t p) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(z.get_mpz_t(), p));
}

namespace {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// Reduced row echelon form mod p; returns pivot columns.
std::vector<int> rref_mod_p(std::vector<std::vector<std::uint32_t>>& m, int cols, std::uint32_t p) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < m.size(); ++c) {
    std::size_t s = r;
    while (s < m.size() && m[s][c] == 0) ++s;
    if (s == m.size()) continue;
    std::swap(m[s], m[r]);
    const std::uint64_t inv = inv_mod(m[r][c], p);
    for (int j = c; j < cols; ++j) m[r][j] = static_cast<std::uint32_t>(m[r][j] * inv % p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::uint64_t f = p - m[i][c];
      for (int j = c; j < cols; ++j)
        if (m[r][j]) m[i][j] = static_cast<std::uint32_t>((m[i][j] + f * m[r][j]) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank_mod_p(std::vector<std::vector<std::uint32_t>> m, std::uint32_t p) {
  if (m.empty()) return 0;
  const int cols = static_cast<int>(m[0].size());
  // Forward elimination only.
  std::size_t r = 0;
  for (int c = 0; c < cols && r < m.size(); ++c) {
    std::size_t s = r;
    while (s < m.size() && m[s][c] == 0) ++s;
    if (s == m.size()) continue;
    std::swap(m[s], m[r]);
    const std::uint64_t inv = inv_mod(m[r][c], p);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const std::uint64_t f = (p - m[i][c]) * inv % p;
      for (int j = c; j < cols; ++j)
        if (m[r][j]) m[i][j] = static_cast<std::uint32_t>((m[i][j] + f * m[r][j]) % p);
    }
    ++r;
  }
  return static_cast<int>(r);
}

std::vector<std::vector<std::uint32_t>> kernel_mod_p(std::vector<std::vector<std::uint32_t>> m, int cols,
                                                     std::uint32_t p) {
  const auto pivots = rref_mod_p(m, cols, p);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint32_t> v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (m[r][f]) v[pivots[r]] = p - m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank_bareiss(std::vector<std::vector<mpz_class>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t s = r;
    while (s < rows && m[s][c] == 0) ++s;
    if (s == rows) continue;
    std::swap(m[s], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace lowcohom::linalg
