#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "lowcohom/numslice.hpp"

namespace lowcohom {

using linalg::kPrimeA;
using linalg::kPrimeB;

namespace {

using Row = std::vector<std::uint32_t>;
using SparseModRow = std::vector<std::pair<int, std::uint32_t>>;

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

std::uint32_t q_mod(const Q& q, std::uint32_t p) {
  const std::uint64_t n = linalg::mod_p(q.get_num(), p);
  const std::uint64_t d = linalg::mod_p(q.get_den(), p);
  if (d == 0) throw std::domain_error("denominator vanishes modulo p");
  return static_cast<std::uint32_t>(n * inv_mod(d, p) % p);
}

struct ModMatrix {
  int rows = 0, cols = 0;
  std::vector<SparseModRow> row;
};

ModMatrix reduce(const SparseMatrix& m, std::uint32_t p) {
  ModMatrix out{m.rows, m.cols, std::vector<SparseModRow>(m.rows)};
  for (int i = 0; i < m.rows; ++i)
    for (const auto& [j, x] : m.row[i]) out.row[i].emplace_back(j, q_mod(x, p));
  return out;
}

Row apply(const ModMatrix& m, const Row& v, std::uint32_t p) {
  Row out(m.rows, 0);
  for (int i = 0; i < m.rows; ++i) {
    std::uint64_t s = 0;
    for (const auto& [j, x] : m.row[i]) s = (s + static_cast<std::uint64_t>(x) * v[j]) % p;
    out[i] = static_cast<std::uint32_t>(s);
  }
  return out;
}

std::uint32_t dot(const Row& a, const Row& b, std::uint32_t p) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = (s + static_cast<std::uint64_t>(a[i]) * b[i]) % p;
  return static_cast<std::uint32_t>(s);
}

// Rank of sparse rows modulo p by incremental elimination.
int sparse_rank_mod_p(const std::vector<SparseModRow>& rows, std::uint32_t p) {
  std::map<int, std::map<int, std::uint32_t>> pivots;  // pivot column -> monic row
  for (const auto& input : rows) {
    std::map<int, std::uint32_t> r(input.begin(), input.end());
    for (auto it = r.begin(); it != r.end();) {
      if (it->second == 0) {
        it = r.erase(it);
        continue;
      }
      ++it;
    }
    while (!r.empty()) {
      const auto [c, x] = *r.begin();
      auto pv = pivots.find(c);
      if (pv == pivots.end()) {
        const std::uint64_t inv = inv_mod(x, p);
        for (auto& e : r) e.second = static_cast<std::uint32_t>(e.second * inv % p);
        pivots.emplace(c, std::move(r));
        break;
      }
      const std::uint64_t f = p - x;
      for (const auto& [j, y] : pv->second) {
        auto& slot = r[j];
        slot = static_cast<std::uint32_t>((slot + f * y) % p);
        if (slot == 0) r.erase(j);
      }
    }
  }
  return static_cast<int>(pivots.size());
}

int effective_dim_mod(const LinearRep& r, std::uint32_t p) {
  const int n = r.space_dim;
  std::vector<SparseModRow> flat;
  for (const auto& x : r.generators) {
    SparseModRow v;
    for (int i = 0; i < n; ++i)
      for (const auto& [j, q] : x.row[i]) v.emplace_back(i * n + j, q_mod(q, p));
    flat.push_back(std::move(v));
  }
  return sparse_rank_mod_p(flat, p);
}

std::vector<Q> tangent(const SparseMatrix& x, const std::vector<Q>& point) { return x.apply(point); }

struct EvalRank {
  int rank = 0;
  bool exact = false;
};

EvalRank eval_rank(const LinearRep& r, const std::vector<Q>& point) {
  const auto z = linalg::primitive_integer(point);
  EvalRank out;
  int ranks[2];
  const std::uint32_t primes[2] = {kPrimeA, kPrimeB};
  for (int k = 0; k < 2; ++k) {
    const std::uint32_t p = primes[k];
    Row zp(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) zp[i] = linalg::mod_p(z[i], p);
    std::vector<Row> m;
    for (const auto& x : r.generators) m.push_back(apply(reduce(x, p), zp, p));
    ranks[k] = linalg::rank_mod_p(std::move(m), p);
  }
  if (ranks[0] == ranks[1]) {
    out.rank = ranks[0];
    return out;
  }
  std::vector<std::vector<mpz_class>> m;
  std::vector<Q> zq(z.begin(), z.end());
  for (const auto& x : r.generators) m.push_back(linalg::primitive_integer(tangent(x, zq)));
  out.rank = linalg::rank_bareiss(std::move(m));
  out.exact = true;
  return out;
}

}  // namespace

int effective_dim(const LinearRep& r) {
  return std::max(effective_dim_mod(r, kPrimeA), effective_dim_mod(r, kPrimeB));
}

int isotropy_dim_at(const LinearRep& r, const std::vector<Q>& point) {
  return effective_dim(r) - eval_rank(r, point).rank;
}

std::vector<Q> random_point(int dim, std::uint64_t seed, int trial, int coordinate_bytes) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  std::mt19937_64 rng(seq);
  const int bits = 8 * std::clamp(coordinate_bytes, 1, 4);
  const std::uint64_t bound = (std::uint64_t{1} << (bits - 1)) - 1;
  const std::uint64_t den_range = std::uint64_t{1} << (bits / 2);
  std::vector<Q> v(dim);
  for (int i = 0; i < dim; ++i) {
    const long num = static_cast<long>(rng() % (2 * bound + 1)) - static_cast<long>(bound);
    const long den = 1 + static_cast<long>(rng() % den_range);
    v[i] = Q(num, den);
    v[i].canonicalize();
  }
  return v;
}

GenericPointReport generic_cohom(const LinearRep& r, const OracleOptions& opt) {
  GenericPointReport rep;
  rep.space_dim = r.space_dim;
  rep.group_dim = effective_dim(r);
  rep.seed = opt.seed;
  const int floor_iso = std::max(0, rep.group_dim - r.space_dim);
  int best = -1;
  for (int t = 0; t < std::max(1, opt.trials); ++t) {
    const auto p = random_point(r.space_dim, opt.seed, t, opt.coordinate_bytes);
    const EvalRank er = eval_rank(r, p);
    rep.exact_fallback_used = rep.exact_fallback_used || er.exact;
    const int iso = rep.group_dim - er.rank;
    rep.trials = t + 1;
    if (best < 0 || iso < best) {
      best = iso;
      rep.min_attained_at_trial = t;
    }
    if (opt.stop_at_lower_bound && best == floor_iso) break;
  }
  rep.isotropy_dim = best;
  rep.orbit_dim = rep.group_dim - best;
  rep.cohom = r.space_dim - rep.orbit_dim;
  return rep;
}

std::vector<SparseMatrix> isotropy_algebra_basis(const LinearRep& r, const std::vector<Q>& point) {
  const int g = r.group_dim();
  SparseMatrix eval(r.space_dim, g);
  for (int a = 0; a < g; ++a) {
    const auto t = tangent(r.generators[a], point);
    for (int i = 0; i < r.space_dim; ++i) eval.add(i, a, t[i]);
  }
  const auto kb = linalg::exact_kernel(eval);
  std::vector<SparseMatrix> out;
  for (const auto& v : kb.vectors) {
    SparseMatrix y(r.space_dim, r.space_dim);
    for (const auto& [a, c] : v) y = y + r.generators[a].scaled(c);
    if (!y.is_zero()) out.push_back(std::move(y));
  }
  return out;
}

SliceStep slice_at(const LinearRep& r, const std::vector<Q>& point) {
  SliceStep step;
  std::vector<linalg::SparseVec> rows;
  for (const auto& x : r.generators) rows.push_back(linalg::to_sparse(r.gram.apply(tangent(x, point))));
  const auto normal = linalg::exact_kernel(rows, r.space_dim);
  const auto iso = isotropy_algebra_basis(r, point);
  step.normal_dim = normal.dim();
  step.slice.space_dim = normal.dim();
  step.slice.label = "slice(" + r.label + ")";
  for (const auto& y : iso) step.slice.generators.push_back(linalg::restrict_to(y, normal));
  step.slice.gram = linalg::restrict_form(r.gram, normal);
  step.isotropy_dim = effective_dim(LinearRep{r.space_dim, iso, r.gram, ""});
  return step;
}

PolarVerdict polar_test(const LinearRep& r, const OracleOptions& opt) {
  const auto point = random_point(r.space_dim, opt.seed, 0, opt.coordinate_bytes);
  const auto z = linalg::primitive_integer(point);
  for (std::uint32_t p : {kPrimeA, kPrimeB}) {
    Row zp(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) zp[i] = linalg::mod_p(z[i], p);
    const ModMatrix gram = reduce(r.gram, p);
    std::vector<ModMatrix> gens;
    for (const auto& x : r.generators) gens.push_back(reduce(x, p));
    std::vector<Row> rows;
    for (const auto& x : gens) rows.push_back(apply(gram, apply(x, zp, p), p));
    const auto normal = linalg::kernel_mod_p(rows, r.space_dim, p);
    std::vector<Row> lowered;
    for (const auto& q : normal) lowered.push_back(apply(gram, q, p));
    for (const auto& x : gens)
      for (const auto& q : normal) {
        const Row xq = apply(x, q, p);
        for (const auto& u : lowered)
          if (dot(u, xq, p) != 0) return PolarVerdict::non_polar;
      }
  }
  return PolarVerdict::polar;
}

}  // namespace lowcohom
