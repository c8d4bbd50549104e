#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lowcohom/errors.hpp"
#include "lowcohom/numslice.hpp"

namespace lowcohom {

using linalg::KernelBasis;
using linalg::SparseVec;

CMatrix CMatrix::operator*(const CMatrix& o) const {
  CMatrix out;
  out.re = re * o.re - im * o.im;
  out.im = re * o.im + im * o.re;
  return out;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
  CMatrix out;
  out.re = re + o.re;
  out.im = im + o.im;
  return out;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
  CMatrix out;
  out.re = re - o.re;
  out.im = im - o.im;
  return out;
}

CMatrix CMatrix::conj() const {
  CMatrix out = *this;
  out.im = im.scaled(Q(-1));
  return out;
}

CMatrix CMatrix::transpose() const {
  CMatrix out;
  out.re = re.transpose();
  out.im = im.transpose();
  return out;
}

CMatrix CMatrix::times_i() const {
  CMatrix out;
  out.re = im.scaled(Q(-1));
  out.im = re;
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out;
  out.re = linalg::kron(a.re, b.re) - linalg::kron(a.im, b.im);
  out.im = linalg::kron(a.re, b.im) + linalg::kron(a.im, b.re);
  return out;
}

SparseMatrix realify_matrix(const CMatrix& m) {
  SparseMatrix out(2 * m.rows(), 2 * m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    std::map<int, std::pair<Q, Q>> entries;
    for (const auto& [j, x] : m.re.row[i]) entries[j].first = x;
    for (const auto& [j, y] : m.im.row[i]) entries[j].second = y;
    auto& top = out.row[2 * i];
    auto& bottom = out.row[2 * i + 1];
    for (const auto& [j, ab] : entries) {
      const auto& [a, b] = ab;
      if (sgn(a) != 0) top.emplace_back(2 * j, a);
      if (sgn(b) != 0) top.emplace_back(2 * j + 1, -b);
      if (sgn(b) != 0) bottom.emplace_back(2 * j, b);
      if (sgn(a) != 0) bottom.emplace_back(2 * j + 1, a);
    }
  }
  return out;
}

namespace {

struct CQ {
  Q re, im;
  bool zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

CQ mul(const CQ& a, const CQ& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

// Column j of m as (row, value) pairs.
std::vector<std::vector<std::pair<int, CQ>>> columns(const CMatrix& m) {
  std::vector<std::map<int, CQ>> acc(m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (const auto& [j, x] : m.re.row[i]) acc[j][i].re = x;
    for (const auto& [j, y] : m.im.row[i]) acc[j][i].im = y;
  }
  std::vector<std::vector<std::pair<int, CQ>>> out(m.cols());
  for (int j = 0; j < m.cols(); ++j)
    for (auto& [i, v] : acc[j]) out[j].emplace_back(i, v);
  return out;
}

void put(CMatrix& m, int i, int j, const CQ& v) {
  m.re.add(i, j, v.re);
  m.im.add(i, j, v.im);
}

ComplexModule restrict_module(const ComplexModule& v, const KernelBasis& kb, const std::string& label) {
  ComplexModule out;
  out.dim = kb.dim();
  out.label = label;
  out.has_u1 = v.has_u1;
  for (const auto& x : v.gens) {
    CMatrix r;
    r.re = linalg::restrict_to(x.re, kb);
    r.im = linalg::restrict_to(x.im, kb);
    out.gens.push_back(std::move(r));
  }
  out.gram.re = linalg::restrict_form(v.gram.re, kb);
  out.gram.im = linalg::restrict_form(v.gram.im, kb);
  if (v.structure) {
    CMatrix r;
    r.re = linalg::restrict_to(v.structure->re, kb);
    r.im = linalg::restrict_to(v.structure->im, kb);
    out.structure = std::move(r);
    out.structure_sign = v.structure_sign;
  }
  return out;
}

bool gram_is_identity(const ComplexModule& v) { return v.gram == CMatrix::identity(v.dim); }

// Bases of tensor powers: sorted index tuples, strictly increasing for
// alternating powers.
std::vector<std::vector<int>> power_basis(int n, int k, bool alternating) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, alternating ? i + 1 : i);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Sorts idx in place; returns the permutation sign, or 0 on a repeat when
// alternating.
int sort_sign(std::vector<int>& idx, bool alternating) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  if (alternating) {
    for (std::size_t i = 1; i < idx.size(); ++i)
      if (idx[i] == idx[i - 1]) return 0;
    return sign;
  }
  return 1;
}

struct PowerSpace {
  bool alternating;
  std::vector<std::vector<int>> basis;
  std::map<std::vector<int>, int> index;
  PowerSpace(int n, int k, bool alt) : alternating(alt), basis(power_basis(n, k, alt)) {
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
  }
  int dim() const { return static_cast<int>(basis.size()); }
};

// Derivation action of x on the power space.
CMatrix power_derivation(const CMatrix& x, const PowerSpace& ps) {
  const auto cols = columns(x);
  CMatrix out(ps.dim(), ps.dim());
  for (int b = 0; b < ps.dim(); ++b) {
    const auto& idx = ps.basis[b];
    for (std::size_t p = 0; p < idx.size(); ++p)
      for (const auto& [r, v] : cols[idx[p]]) {
        auto t = idx;
        t[p] = r;
        const int s = sort_sign(t, ps.alternating);
        if (s == 0) continue;
        CQ w = v;
        if (s < 0) w = {-w.re, -w.im};
        put(out, ps.index.at(t), b, w);
      }
  }
  return out;
}

// Group-level action of m on the power space (used for structure maps).
CMatrix power_group(const CMatrix& m, const PowerSpace& ps) {
  const auto cols = columns(m);
  CMatrix out(ps.dim(), ps.dim());
  for (int b = 0; b < ps.dim(); ++b) {
    const auto& idx = ps.basis[b];
    std::vector<std::pair<std::vector<int>, CQ>> terms{{{}, CQ{Q(1), Q(0)}}};
    for (int i : idx) {
      std::vector<std::pair<std::vector<int>, CQ>> next;
      for (const auto& [t, c] : terms)
        for (const auto& [r, v] : cols[i]) {
          auto u = t;
          u.push_back(r);
          next.emplace_back(std::move(u), mul(c, v));
        }
      terms = std::move(next);
    }
    for (auto& [t, c] : terms) {
      const int s = sort_sign(t, ps.alternating);
      if (s == 0) continue;
      if (s < 0) c = {-c.re, -c.im};
      put(out, ps.index.at(t), b, c);
    }
  }
  return out;
}

Q factorial(int n) {
  Q f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

ComplexModule trivial_module(int n) {
  ComplexModule m;
  m.dim = n;
  m.gram = CMatrix::identity(n);
  m.structure = CMatrix::identity(n);
  m.structure_sign = 1;
  m.label = "trivial(" + std::to_string(n) + ")";
  return m;
}

ComplexModule su_vector(int n) {
  if (n < 2) throw std::invalid_argument("su(n) needs n >= 2");
  ComplexModule m;
  m.dim = n;
  m.gram = CMatrix::identity(n);
  m.label = "su(" + std::to_string(n) + ")";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      CMatrix a(n, n);
      put(a, i, j, {Q(1), Q(0)});
      put(a, j, i, {Q(-1), Q(0)});
      m.gens.push_back(a);
      CMatrix s(n, n);
      put(s, i, j, {Q(0), Q(1)});
      put(s, j, i, {Q(0), Q(1)});
      m.gens.push_back(s);
    }
  for (int k = 0; k + 1 < n; ++k) {
    CMatrix h(n, n);
    put(h, k, k, {Q(0), Q(1)});
    put(h, k + 1, k + 1, {Q(0), Q(-1)});
    m.gens.push_back(h);
  }
  return m;
}

ComplexModule sp_vector(int n) {
  if (n < 1) throw std::invalid_argument("sp(n) needs n >= 1");
  const int d = 2 * n;
  ComplexModule m;
  m.dim = d;
  m.gram = CMatrix::identity(d);
  m.label = "sp(" + std::to_string(n) + ")";
  // X = [[A, -conj(B)], [B, conj(A)]], A in u(n), B complex symmetric.
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (i < j) {
        CMatrix r(d, d);
        put(r, i, j, {Q(1), Q(0)});
        put(r, j, i, {Q(-1), Q(0)});
        put(r, n + i, n + j, {Q(1), Q(0)});
        put(r, n + j, n + i, {Q(-1), Q(0)});
        m.gens.push_back(r);
      }
      CMatrix s(d, d);  // A = iS
      put(s, i, j, {Q(0), Q(1)});
      put(s, n + i, n + j, {Q(0), Q(-1)});
      if (i < j) {
        put(s, j, i, {Q(0), Q(1)});
        put(s, n + j, n + i, {Q(0), Q(-1)});
      }
      m.gens.push_back(s);
      CMatrix b(d, d);  // B = S
      put(b, n + i, j, {Q(1), Q(0)});
      put(b, i, n + j, {Q(-1), Q(0)});
      if (i < j) {
        put(b, n + j, i, {Q(1), Q(0)});
        put(b, j, n + i, {Q(-1), Q(0)});
      }
      m.gens.push_back(b);
      CMatrix c(d, d);  // B = iS
      put(c, n + i, j, {Q(0), Q(1)});
      put(c, i, n + j, {Q(0), Q(1)});
      if (i < j) {
        put(c, n + j, i, {Q(0), Q(1)});
        put(c, j, n + i, {Q(0), Q(1)});
      }
      m.gens.push_back(c);
    }
  CMatrix jm(d, d);
  for (int i = 0; i < n; ++i) {
    put(jm, i, n + i, {Q(-1), Q(0)});
    put(jm, n + i, i, {Q(1), Q(0)});
  }
  m.structure = jm;
  m.structure_sign = -1;
  return m;
}

ComplexModule so_vector(int n) {
  if (n < 2) throw std::invalid_argument("so(n) needs n >= 2");
  ComplexModule m = trivial_module(n);
  m.label = "so(" + std::to_string(n) + ")";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      CMatrix a(n, n);
      put(a, i, j, {Q(1), Q(0)});
      put(a, j, i, {Q(-1), Q(0)});
      m.gens.push_back(a);
    }
  return m;
}

ComplexModule spin_module(int n) {
  if (n < 3) throw std::invalid_argument("spin(n) needs n >= 3");
  const int k = n / 2;
  const int size = 1 << k;
  CMatrix px(2, 2), py(2, 2), pz(2, 2);
  put(px, 0, 1, {Q(1), Q(0)});
  put(px, 1, 0, {Q(1), Q(0)});
  put(py, 0, 1, {Q(0), Q(-1)});
  put(py, 1, 0, {Q(0), Q(1)});
  put(pz, 0, 0, {Q(1), Q(0)});
  put(pz, 1, 1, {Q(-1), Q(0)});
  const CMatrix one = CMatrix::identity(2);
  auto chain = [&](int slot, const CMatrix& mid) {
    CMatrix g = CMatrix::identity(1);
    for (int s = 0; s < k; ++s) g = kron(g, s < slot ? pz : (s == slot ? mid : one));
    return g;
  };
  std::vector<CMatrix> gamma;
  for (int j = 0; j < k; ++j) {
    gamma.push_back(chain(j, px));
    gamma.push_back(chain(j, py));
  }
  if (n % 2 == 1) gamma.push_back(chain(k, one));  // Z on every slot
  // Charge conjugation: product of the imaginary gammas.
  CMatrix c = CMatrix::identity(size);
  for (int j = 0; j < k; ++j) c = c * gamma[2 * j + 1];

  std::vector<int> keep;
  for (int i = 0; i < size; ++i)
    if (n % 2 == 1 || __builtin_popcount(static_cast<unsigned>(i)) % 2 == 0) keep.push_back(i);
  std::vector<int> pos(size, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
  auto cut = [&](const CMatrix& m) {
    CMatrix out(static_cast<int>(keep.size()), static_cast<int>(keep.size()));
    for (int i : keep) {
      for (const auto& [j, x] : m.re.row[i])
        if (pos[j] >= 0) out.re.row[pos[i]].emplace_back(pos[j], x);
      for (const auto& [j, y] : m.im.row[i])
        if (pos[j] >= 0) out.im.row[pos[i]].emplace_back(pos[j], y);
    }
    return out;
  };
  ComplexModule m;
  m.dim = static_cast<int>(keep.size());
  m.gram = CMatrix::identity(m.dim);
  m.label = "spin(" + std::to_string(n) + ")";
  for (std::size_t a = 0; a < gamma.size(); ++a)
    for (std::size_t b = a + 1; b < gamma.size(); ++b) m.gens.push_back(cut(gamma[a] * gamma[b]));
  // The structure preserves the half-spinor space only when k is even.
  if (n % 2 == 1 || k % 2 == 0) {
    CMatrix s = cut(c);
    const CMatrix sq = s * s.conj();
    if (sq == CMatrix::identity(m.dim)) {
      m.structure_sign = 1;
    } else if (sq == CMatrix::identity(m.dim) - CMatrix::identity(m.dim) - CMatrix::identity(m.dim)) {
      m.structure_sign = -1;
    } else {
      throw std::logic_error("spinor structure does not square to a sign");
    }
    m.structure = s;
  }
  return m;
}

ComplexModule g2_vector() {
  // Stabiliser in so(7) of the associative 3-form.
  const int triples[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};
  std::map<std::vector<int>, Q> phi;
  for (const auto& t : triples) {
    std::vector<int> idx{t[0] - 1, t[1] - 1, t[2] - 1};
    const int s = sort_sign(idx, true);
    phi[idx] += s;
  }
  PowerSpace l3(7, 3, true);
  const ComplexModule so7 = so_vector(7);
  const int g = static_cast<int>(so7.gens.size());
  std::vector<SparseVec> rows(l3.dim());
  {
    SparseMatrix a(l3.dim(), g);
    for (int col = 0; col < g; ++col) {
      const CMatrix act = power_derivation(so7.gens[col], l3);
      for (const auto& [idx, coeff] : phi) {
        const int src = l3.index.at(idx);
        for (int r = 0; r < l3.dim(); ++r) a.add(r, col, act.re.at(r, src) * coeff);
      }
    }
    rows = a.row;
  }
  const KernelBasis kb = linalg::exact_kernel(rows, g);
  if (kb.dim() != 14) throw std::logic_error("3-form stabiliser is not 14-dimensional");
  ComplexModule m = trivial_module(7);
  m.label = "g2";
  for (const auto& v : kb.vectors) {
    CMatrix x(7, 7);
    for (const auto& [a, c] : v) x = x + CMatrix(so7.gens[a].re.scaled(c));
    m.gens.push_back(x);
  }
  return m;
}

ComplexModule sym_power(const ComplexModule& v, int k) {
  if (!gram_is_identity(v)) throw std::invalid_argument("symmetric power needs an orthonormal basis");
  PowerSpace ps(v.dim, k, false);
  ComplexModule m;
  m.dim = ps.dim();
  m.label = "sym(" + v.label + "," + std::to_string(k) + ")";
  m.has_u1 = v.has_u1;
  for (const auto& x : v.gens) m.gens.push_back(power_derivation(x, ps));
  m.gram = CMatrix(m.dim, m.dim);
  for (int b = 0; b < m.dim; ++b) {
    Q w = 1;
    const auto& idx = ps.basis[b];
    for (std::size_t i = 0; i < idx.size();) {
      std::size_t j = i;
      while (j < idx.size() && idx[j] == idx[i]) ++j;
      w *= factorial(static_cast<int>(j - i));
      i = j;
    }
    m.gram.re.row[b].emplace_back(b, w);
  }
  if (v.structure) {
    m.structure = power_group(*v.structure, ps);
    m.structure_sign = (k % 2 == 0) ? 1 : v.structure_sign;
  }
  return m;
}

ComplexModule alt_power(const ComplexModule& v, int k) {
  if (!gram_is_identity(v)) throw std::invalid_argument("alternating power needs an orthonormal basis");
  if (k < 1 || k > v.dim) throw std::invalid_argument("alternating power out of range");
  PowerSpace ps(v.dim, k, true);
  ComplexModule m;
  m.dim = ps.dim();
  m.label = "alt(" + v.label + "," + std::to_string(k) + ")";
  m.has_u1 = v.has_u1;
  for (const auto& x : v.gens) m.gens.push_back(power_derivation(x, ps));
  m.gram = CMatrix::identity(m.dim);
  if (v.structure) {
    m.structure = power_group(*v.structure, ps);
    m.structure_sign = (k % 2 == 0) ? 1 : v.structure_sign;
  }
  return m;
}

ComplexModule contraction_kernel(const ComplexModule& power, const ComplexModule& base, int k, bool symmetric) {
  if (!base.structure) throw std::invalid_argument("contraction needs an invariant bilinear form");
  if (k < 2) throw std::invalid_argument("contraction needs k >= 2");
  const CMatrix b = base.structure->adjoint() * base.gram;
  if (!b.is_real()) throw std::invalid_argument("contraction form must be real");
  PowerSpace src(base.dim, k, !symmetric), dst(base.dim, k - 2, !symmetric);
  if (src.dim() != power.dim) throw std::invalid_argument("power does not match base");
  SparseMatrix c(dst.dim(), src.dim());
  for (int col = 0; col < src.dim(); ++col) {
    const auto& idx = src.basis[col];
    for (int p = 0; p < k; ++p)
      for (int q = p + 1; q < k; ++q) {
        const Q w = b.re.at(idx[p], idx[q]);
        if (sgn(w) == 0) continue;
        std::vector<int> rest;
        for (int t = 0; t < k; ++t)
          if (t != p && t != q) rest.push_back(idx[t]);
        const int s = symmetric ? 1 : (((p + q + 1) % 2 == 0) ? 1 : -1);
        c.add(dst.index.at(rest), col, w * s);
      }
  }
  const KernelBasis kb = linalg::exact_kernel(c);
  return restrict_module(power, kb, "traceless(" + power.label + ")");
}

ComplexModule adjoint_module(const ComplexModule& v) {
  const int g = static_cast<int>(v.gens.size());
  const int d = v.dim;
  const int flat = 2 * d * d;
  auto flatten = [&](const CMatrix& x) {
    SparseVec out;
    for (int i = 0; i < d; ++i)
      for (const auto& [j, a] : x.re.row[i]) out.emplace_back(i * d + j, a);
    for (int i = 0; i < d; ++i)
      for (const auto& [j, b] : x.im.row[i]) out.emplace_back(d * d + i * d + j, b);
    return out;
  };
  std::vector<SparseVec> rows;
  for (int a = 0; a < g; ++a) {
    auto r = flatten(v.gens[a]);
    r.emplace_back(flat + a, Q(1));
    rows.push_back(std::move(r));
  }
  const auto rr = linalg::exact_rref(rows, flat + g);
  if (static_cast<int>(rr.pivot_cols.size()) != g) throw std::invalid_argument("generators are dependent");
  for (int c : rr.pivot_cols)
    if (c >= flat) throw std::invalid_argument("generators are dependent");
  std::vector<int> pivot_slot(flat, -1);
  for (int r = 0; r < g; ++r) pivot_slot[rr.pivot_cols[r]] = r;
  std::vector<std::vector<std::pair<int, Q>>> t(g);  // T rows
  for (int r = 0; r < g; ++r)
    for (const auto& [j, x] : rr.rows[r])
      if (j >= flat) t[r].emplace_back(j - flat, x);

  ComplexModule m = trivial_module(g);
  m.label = "adjoint(" + v.label + ")";
  std::vector<SparseMatrix> ad(g, SparseMatrix(g, g));
  for (int a = 0; a < g; ++a)
    for (int b = 0; b < g; ++b) {
      if (a == b) continue;
      const CMatrix y = v.gens[a] * v.gens[b] - v.gens[b] * v.gens[a];
      std::map<int, Q> f;
      for (const auto& [j, x] : flatten(y))
        if (pivot_slot[j] >= 0)
          for (const auto& [c, tv] : t[pivot_slot[j]]) f[c] += x * tv;
      for (const auto& [c, x] : f) ad[a].add(c, b, x);
    }
  for (auto& x : ad) m.gens.push_back(CMatrix(std::move(x)));
  // Invariant form -Re tr(XY).
  m.gram = CMatrix(g, g);
  for (int a = 0; a < g; ++a)
    for (int b = 0; b < g; ++b) {
      const CMatrix p = v.gens[a] * v.gens[b];
      Q tr = 0;
      for (int i = 0; i < d; ++i) tr += p.re.at(i, i);
      m.gram.re.add(a, b, -tr);
    }
  return m;
}

ComplexModule tensor_c(const ComplexModule& a, const ComplexModule& b) {
  ComplexModule m;
  m.dim = a.dim * b.dim;
  m.label = "tensorC(" + a.label + "," + b.label + ")";
  m.has_u1 = a.has_u1 || b.has_u1;
  const CMatrix ia = CMatrix::identity(a.dim), ib = CMatrix::identity(b.dim);
  for (const auto& x : a.gens) m.gens.push_back(kron(x, ib));
  for (const auto& y : b.gens) m.gens.push_back(kron(ia, y));
  m.gram = kron(a.gram, b.gram);
  if (a.structure && b.structure) {
    m.structure = kron(*a.structure, *b.structure);
    m.structure_sign = a.structure_sign * b.structure_sign;
  }
  return m;
}

ComplexModule with_u1(const ComplexModule& v) {
  ComplexModule m = v;
  m.gens.push_back(CMatrix::identity(v.dim).times_i());
  m.structure.reset();
  m.structure_sign = 0;
  m.has_u1 = true;
  m.label = "u1(" + v.label + ")";
  return m;
}

ComplexModule dualize(const ComplexModule& v) {
  ComplexModule m = v;
  for (auto& x : m.gens) x = x.conj();
  m.gram = v.gram.conj();
  if (v.structure) m.structure = v.structure->conj();
  m.label = "dualize(" + v.label + ")";
  return m;
}

ComplexModule with_hodge_structure(ComplexModule alt, int n) {
  if (n % 2 != 0) throw std::invalid_argument("Hodge structure needs even n");
  const int k = n / 2;
  PowerSpace ps(n, k, true);
  if (ps.dim() != alt.dim) throw std::invalid_argument("module is not the middle alternating power");
  CMatrix s(alt.dim, alt.dim);
  for (int b = 0; b < ps.dim(); ++b) {
    const auto& idx = ps.basis[b];
    std::vector<int> comp;
    for (int i = 0; i < n; ++i)
      if (!std::binary_search(idx.begin(), idx.end(), i)) comp.push_back(i);
    std::vector<int> cat = comp;
    cat.insert(cat.end(), idx.begin(), idx.end());
    const int sign = sort_sign(cat, true);
    put(s, ps.index.at(comp), b, {Q(sign), Q(0)});
  }
  alt.structure = s;
  alt.structure_sign = (k % 2 == 0) ? 1 : -1;
  return alt;
}

std::string verify_module(const ComplexModule& v) {
  for (std::size_t a = 0; a < v.gens.size(); ++a) {
    const auto& x = v.gens[a];
    if (!(x.adjoint() * v.gram + v.gram * x).is_zero())
      return "generator " + std::to_string(a) + " is not skew-Hermitian";
  }
  if (v.structure) {
    const auto& m = *v.structure;
    for (std::size_t a = 0; a < v.gens.size(); ++a)
      if (!(m * v.gens[a].conj() - v.gens[a] * m).is_zero())
        return "structure does not commute with generator " + std::to_string(a);
    CMatrix sign = CMatrix::identity(v.dim);
    if (v.structure_sign < 0) sign = CMatrix(sign.re.scaled(Q(-1)));
    if (!(m * m.conj() == sign)) return "structure has the wrong square";
  }
  return {};
}

LinearRep realify(const ComplexModule& v) {
  LinearRep r;
  r.space_dim = 2 * v.dim;
  r.label = "realify(" + v.label + ")";
  for (const auto& x : v.gens) r.generators.push_back(realify_matrix(x));
  r.gram = realify_matrix(v.gram);
  return r;
}

LinearRep real_form(const ComplexModule& v) {
  if (!v.structure || v.structure_sign != 1) throw std::invalid_argument("real form needs a real structure");
  LinearRep r;
  r.label = v.label;
  if (*v.structure == CMatrix::identity(v.dim)) {
    r.space_dim = v.dim;
    for (const auto& x : v.gens) {
      if (!x.is_real()) throw std::logic_error("generator not real in a real basis");
      r.generators.push_back(x.re);
    }
    r.gram = v.gram.re;
    return r;
  }
  SparseMatrix conj_d(2 * v.dim, 2 * v.dim);
  for (int i = 0; i < v.dim; ++i) {
    conj_d.row[2 * i].emplace_back(2 * i, Q(1));
    conj_d.row[2 * i + 1].emplace_back(2 * i + 1, Q(-1));
  }
  const SparseMatrix eps = realify_matrix(*v.structure) * conj_d;
  const KernelBasis kb = linalg::exact_kernel(eps - SparseMatrix::identity(2 * v.dim));
  if (kb.dim() != v.dim) throw std::logic_error("real form has the wrong dimension");
  r.space_dim = kb.dim();
  for (const auto& x : v.gens) r.generators.push_back(linalg::restrict_to(realify_matrix(x), kb));
  r.gram = linalg::restrict_form(realify_matrix(v.gram), kb);
  return r;
}

LinearRep to_real(const ComplexModule& v) {
  if (v.structure && v.structure_sign == 1) return real_form(v);
  return realify(v);
}

LinearRep tensor_r(const LinearRep& a, const LinearRep& b) {
  LinearRep r;
  r.space_dim = a.space_dim * b.space_dim;
  r.label = "tensorR(" + a.label + "," + b.label + ")";
  const SparseMatrix ia = SparseMatrix::identity(a.space_dim), ib = SparseMatrix::identity(b.space_dim);
  for (const auto& x : a.generators) r.generators.push_back(linalg::kron(x, ib));
  for (const auto& y : b.generators) r.generators.push_back(linalg::kron(ia, y));
  r.gram = linalg::kron(a.gram, b.gram);
  return r;
}

LinearRep diagonal_copies(const LinearRep& r, int k) {
  if (k < 1) throw std::invalid_argument("need at least one copy");
  LinearRep out;
  out.space_dim = r.space_dim * k;
  out.label = std::to_string(k) + "x" + r.label;
  const SparseMatrix ik = SparseMatrix::identity(k);
  for (const auto& x : r.generators) out.generators.push_back(linalg::kron(ik, x));
  out.gram = linalg::kron(ik, r.gram);
  return out;
}

std::string verify_real(const LinearRep& r) {
  for (std::size_t a = 0; a < r.generators.size(); ++a) {
    const auto& x = r.generators[a];
    if (!(x.transpose() * r.gram + r.gram * x).is_zero())
      return "generator " + std::to_string(a) + " is not skew for the invariant form";
  }
  return {};
}

std::string export_matrices(const LinearRep& r) {
  std::ostringstream os;
  os << "# " << r.label << "\n";
  os << "dim " << r.space_dim << " generators " << r.generators.size() << "\n";
  auto dump = [&](const SparseMatrix& m) {
    for (int i = 0; i < m.rows; ++i) {
      for (int j = 0; j < m.cols; ++j) os << (j ? " " : "") << m.at(i, j).get_str();
      os << "\n";
    }
  };
  os << "gram\n";
  dump(r.gram);
  for (std::size_t a = 0; a < r.generators.size(); ++a) {
    os << "generator " << a << "\n";
    dump(r.generators[a]);
  }
  return os.str();
}

}  // namespace lowcohom
