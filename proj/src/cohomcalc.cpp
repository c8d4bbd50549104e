#include "lowcohom/cohomcalc.hpp"

#include <algorithm>
#include <stdexcept>

namespace lowcohom {

std::string to_string(Method m) {
  switch (m) {
    case Method::formula: return "formula";
    case Method::lemma_lookup: return "lemma-lookup";
    case Method::numeric_oracle: return "numeric-oracle";
    case Method::embedded_data: return "embedded-data";
  }
  return "?";
}

std::string to_string(SimplePigRule r) {
  switch (r) {
    case SimplePigRule::trivial_pig: return "trivial_pig";
    case SimplePigRule::polar: return "polar";
    case SimplePigRule::hermitian_factor: return "hermitian_factor";
    case SimplePigRule::qk_factor: return "qk_factor";
    case SimplePigRule::unknown: return "unknown";
  }
  return "?";
}

TensorSliceDecomposition tensor_slice_decomposition(int d1, int c1, int d2, int c2) {
  if (c1 < 1 || c2 < 1 || c1 > d1 || c2 > d2) throw std::invalid_argument("inconsistent factor data");
  TensorSliceDecomposition t;
  t.U1_dim = d1 - c1;
  t.U2_dim = d2 - c2;
  t.N1_dim = c1 - 1;
  t.N2_dim = c2 - 1;
  t.residual_dim = (d1 - 1) * (d2 - 1);
  t.residual_rep = "(H1 x H2, p1-perp (x) p2-perp)";
  return t;
}

int eq1_cohom(int dimV, int dimG, int dimH) {
  if (dimV < 0 || dimH < 0 || dimG < dimH) throw std::invalid_argument("dimensions out of range");
  const int c = dimV - dimG + dimH;
  if (c < 0) throw std::domain_error("negative cohomogeneity: inconsistent dimensions");
  return c;
}

int eq2_two_copies(int c, int c_residual) {
  if (c < 1 || c_residual < 1) throw std::invalid_argument("cohomogeneities must be positive");
  return 2 * c + c_residual;
}

int eq2_bound(int c) { return 2 * c + 1; }

int eq3_real_tensor(int c1, int c2, int residual) {
  if (c1 < 1 || c2 < 1 || residual < 0) throw std::invalid_argument("cohomogeneities out of range");
  return c1 + c2 - 1 + residual;
}

int eq4_cohom_one(int c2, int middle, int last) { return c2 + middle + last; }

int degree_lower_bound(std::int64_t real_degree, int dimG) {
  const std::int64_t b = std::max<std::int64_t>(0, real_degree - dimG);
  if (real_degree > 0 && dimG > 0 && b == 0) return 1;
  return static_cast<int>(b);
}

int tensor_lower_bound(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("degrees must be positive");
  return std::min(m, n);
}

GroupSpec so_group(int n) {
  GroupSpec g;
  switch (n) {
    case 0:
    case 1: break;
    case 2: g.torus_rank = 1; break;
    case 3: g.simple_factors = {{Family::A, 1}}; break;
    case 4: g.simple_factors = {{Family::A, 1}, {Family::A, 1}}; break;
    case 5: g.simple_factors = {{Family::C, 2}}; break;
    case 6: g.simple_factors = {{Family::A, 3}}; break;
    default:
      if (n < 0) throw std::invalid_argument("negative rank");
      g.simple_factors = {{n % 2 ? Family::B : Family::D, n / 2}};
  }
  return g;
}

GroupSpec u_group(int n) {
  if (n < 0) throw std::invalid_argument("negative rank");
  GroupSpec g;
  if (n >= 1) g.torus_rank = 1;
  if (n >= 2) g.simple_factors = {{Family::A, n - 1}};
  return g;
}

GroupSpec sp_group(int n) {
  if (n < 0) throw std::invalid_argument("negative rank");
  GroupSpec g;
  if (n == 1) g.simple_factors = {{Family::A, 1}};
  if (n >= 2) g.simple_factors = {{Family::C, n}};
  return g;
}

GroupSpec product(const GroupSpec& a, const GroupSpec& b) {
  GroupSpec g = a;
  g.simple_factors.insert(g.simple_factors.end(), b.simple_factors.begin(), b.simple_factors.end());
  g.torus_rank += b.torus_rank;
  return g;
}

std::string classical_name(const GroupSpec& g) {
  std::string out;
  auto add = [&](const std::string& s) { out += (out.empty() ? "" : "*") + s; };
  for (int i = 0; i < g.torus_rank; ++i) add("U(1)");
  for (const auto& t : g.simple_factors) {
    const int r = t.rank;
    switch (t.family) {
      case Family::A: add(r == 1 ? "Sp(1)" : "SU(" + std::to_string(r + 1) + ")"); break;
      case Family::B: add("SO(" + std::to_string(2 * r + 1) + ")"); break;
      case Family::C: add("Sp(" + std::to_string(r) + ")"); break;
      case Family::D: add("SO(" + std::to_string(2 * r) + ")"); break;
      default: add(to_string(t));
    }
  }
  return out.empty() ? "{1}" : out;
}

GroupSpec pig_classical(ClassicalFamily family, int m, int n) {
  if (n < 1 || m < n) throw std::invalid_argument("pig_classical needs m >= n >= 1");
  switch (family) {
    case ClassicalFamily::SOxSO: return so_group(m - n);
    case ClassicalFamily::UxU: {
      GroupSpec g = u_group(m - n);
      g.torus_rank += n;
      return g;
    }
    case ClassicalFamily::SpxSp: {
      GroupSpec g = sp_group(m - n);
      for (int i = 0; i < n; ++i) g.simple_factors.push_back({Family::A, 1});
      return g;
    }
  }
  return {};
}

namespace {

[[noreturn]] void outside(int case_id, int m, int n) {
  throw std::domain_error("lemma case " + std::to_string(case_id) + " has no branch for m=" + std::to_string(m) +
                          ", n=" + std::to_string(n));
}

}  // namespace

bool pig_mixed_admissible(int case_id, int m, int n) {
  if (m < 1 || n < 1) return false;
  switch (case_id) {
    case 1:
    case 2:
    case 4:
    case 7: return true;
    case 3: return m >= 3 || (m == 2 && n >= 2);
    case 5: return n >= 2;
    case 6: return true;
    case 8: return m >= n && n >= 2;
    default: return false;
  }
}

GroupSpec pig_mixed(int case_id, int m, int n) {
  if (!pig_mixed_admissible(case_id, m, n)) outside(case_id, m, n);
  switch (case_id) {
    case 1:  // SO(m) x U(n) on R^m (x)_R C^n
      if (m > 2 * n + 1) return so_group(m - 2 * n);
      if (n > m) return u_group(n - m);
      return {};
    case 2:  // SO(m) x Sp(n) on R^m (x)_R H^n
      if (m > 4 * n + 1 && 4 * n + 1 >= 5) return so_group(m - 4 * n);
      if (n > m && m >= 3) return sp_group(n - m);
      return {};
    case 3:  // SO(m) x Sp(1)Sp(n) on R^m (x)_R R^4n
      if (m == 2) {
        GroupSpec g = sp_group(n - 2);
        g.torus_rank += 1;
        return g;
      }
      if (m > 4 * n + 1) return so_group(m - 4 * n);
      if (n > m && m >= 3) return sp_group(n - m);
      return {};
    case 4:  // SO(m) x U(1)Sp(n) on R^m (x)_R C^2n
      if (m > 4 * n) return so_group(m - 4 * n);
      if (n >= m) return sp_group(n - m);
      return {};
    case 5:  // U(m) x Sp(1)Sp(n) on C^m (x)_R R^4n
      if (m >= 4 * n) return u_group(m - 4 * n);
      if (n >= 2 * m) return sp_group(n - 2 * m);
      return {};
    case 6:  // Sp(1)Sp(m) x Sp(1)Sp(n) on R^4m (x)_R R^4n
      if (m > 4 * n + 1) return sp_group(m - 4 * n);
      return {};
    case 7:  // U(m) x Sp(n) on C^m (x)_C H^n
      if (m >= 2 && n == 1) {
        GroupSpec g = u_group(m - 2);
        g.torus_rank += 1;
        return g;
      }
      if (m >= n + 1 && n + 1 >= 2) return m - 2 * n > 0 ? u_group(m - 2 * n) : GroupSpec{};
      if (n >= m && m >= 3) return sp_group(n - m);
      if (n >= m && m <= 2 && m >= 1) {
        GroupSpec g = sp_group(n - m);
        g.torus_rank += 1;
        return g;
      }
      return {};
    case 8:  // Sp(m) x U(1)Sp(n) on H^m (x)_C C^2n
      if (m > 2 * n) return sp_group(m - 2 * n);
      return {};
    default: outside(case_id, m, n);
  }
}

namespace {

std::string u_expr(int n) { return n == 1 ? "u(1)" : "u(" + std::to_string(n) + ")"; }
std::string sp1sp(int n) { return "tensorH(sp(1), sp(" + std::to_string(n) + "))"; }

}  // namespace

std::string lemma_expression(int case_id, int m, int n) {
  const std::string M = std::to_string(m), N = std::to_string(n);
  switch (case_id) {
    case 1: return "tensorR(so(" + M + "), " + u_expr(n) + ")";
    case 2: return "tensorR(so(" + M + "), sp(" + N + "))";
    case 3: return "tensorR(so(" + M + "), " + sp1sp(n) + ")";
    case 4: return "tensorR(so(" + M + "), u1(sp(" + N + ")))";
    case 5: return "realify(tensorC(" + u_expr(m) + ", sp(1), sp(" + N + ")))";
    case 6: return "tensorR(" + sp1sp(m) + ", " + sp1sp(n) + ")";
    case 7: return "realify(tensorC(" + u_expr(m) + ", sp(" + N + ")))";
    case 8: return "realify(tensorC(sp(" + M + "), u1(sp(" + N + "))))";
    default: throw std::invalid_argument("lemma case out of range");
  }
}

std::string classical_expression(ClassicalFamily family, int m, int n) {
  const std::string M = std::to_string(m), N = std::to_string(n);
  switch (family) {
    case ClassicalFamily::SOxSO: return "tensorR(so(" + M + "), so(" + N + "))";
    case ClassicalFamily::UxU: return "realify(tensorC(" + u_expr(m) + ", " + u_expr(n) + "))";
    case ClassicalFamily::SpxSp: return "tensorH(sp(" + M + "), sp(" + N + "))";
  }
  return {};
}

std::variant<MonotoneCertificate, Inconclusive> monotone_extend(const std::map<int, int>& profile,
                                                                const StabilizationWitness& witness) {
  int prev_n = -1, prev_c = -1;
  for (const auto& [n, c] : profile) {
    if (prev_n >= 0) {
      if (n != prev_n + 1) throw std::invalid_argument("profile must cover consecutive n");
      if (c < prev_c) throw std::logic_error("cohomogeneity decreases at n=" + std::to_string(n));
    }
    prev_n = n;
    prev_c = c;
  }
  if (profile.size() < 2) return Inconclusive{};
  const auto last = std::prev(profile.end());
  const int N = last->first, value = last->second;
  if (std::prev(last)->second != value) return Inconclusive{};
  // For n > k the isotropy contains a factor of type SO(n-k), U(n-k) or
  // Sp(n-k); then every larger n reduces to the same orbit space.
  if (N <= witness.fixed_dim) return Inconclusive{};
  const int s = N - witness.fixed_dim;
  int needed = 0;
  switch (witness.field) {
    case SeriesField::R: needed = s * (s - 1) / 2; break;
    case SeriesField::C: needed = s * s; break;
    case SeriesField::H: needed = s * (2 * s + 1); break;
  }
  if (witness.isotropy_dim_at_last < needed) return Inconclusive{};
  int from = N;
  for (auto it = last; it != profile.begin();) {
    --it;
    if (it->second != value) break;
    from = it->first;
  }
  return MonotoneCertificate{value, from, N};
}

namespace {

bool all_zero_except(const HighestWeight& w, int index, int value) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != (static_cast<int>(i) == index ? value : 0)) return false;
  return true;
}

bool is_adjoint(const TypedWeight& tw) {
  const auto& w = tw.weight;
  const int r = tw.type.rank;
  switch (tw.type.family) {
    case Family::A:
      if (r == 1) return w[0] == 2;
      for (int i = 1; i + 1 < r; ++i)
        if (w[i]) return false;
      return w.front() == 1 && w.back() == 1;
    case Family::B:
    case Family::D: return all_zero_except(w, 1, 1);
    case Family::C: return all_zero_except(w, 0, 2);
    case Family::G: return all_zero_except(w, 1, 1);
    case Family::F: return all_zero_except(w, 0, 1);
    case Family::E:
      if (r == 6) return all_zero_except(w, 1, 1);
      if (r == 7) return all_zero_except(w, 0, 1);
      return all_zero_except(w, 7, 1);
  }
  return false;
}

TypedWeight normal_single(const TypedWeight& tw) {
  IrrepSpec s;
  s.factors = {tw};
  return normalize(s).factors.front();
}

bool matches(const TypedWeight& tw, const char* text) { return tw == normal_single(parse_typed_weight(text)); }

}  // namespace

bool in_simple_polar_list(const TypedWeight& input) {
  const TypedWeight tw = normal_single(input);
  const auto& w = tw.weight;
  const int r = tw.type.rank;
  if (is_adjoint(tw)) return true;
  switch (tw.type.family) {
    case Family::A:
      if (all_zero_except(w, 0, 1)) return true;                    // SU(n) on C^n
      if (r == 1 && w[0] == 4) return true;                         // SO(3) on S^2_0 R^3
      if (r == 3 && (w == HighestWeight{0, 1, 0} || w == HighestWeight{0, 2, 0})) return true;
      if (r == 7 && all_zero_except(w, 3, 1)) return true;          // SU(8) on Λ^4 C^8
      return false;
    case Family::B:
      if (all_zero_except(w, 0, 1) || all_zero_except(w, 0, 2)) return true;
      if ((r == 3 || r == 4) && all_zero_except(w, r - 1, 1)) return true;  // Spin(7), Spin(9)
      return false;
    case Family::C:
      if (all_zero_except(w, 0, 1) || all_zero_except(w, 1, 1)) return true;
      if (r == 2 && w == HighestWeight{0, 2}) return true;
      if (r == 4 && all_zero_except(w, 3, 1)) return true;          // Sp(4) on Λ^4_0 C^8
      return false;
    case Family::D:
      if (all_zero_except(w, 0, 1) || all_zero_except(w, 0, 2)) return true;
      if (r == 8 && (all_zero_except(w, 7, 1) || all_zero_except(w, 6, 1))) return true;
      return false;
    case Family::F: return all_zero_except(w, 3, 1);
    case Family::G: return all_zero_except(w, 0, 1);
    case Family::E: return false;
  }
  return false;
}

SimplePigRule simple_pig_rule(const IrrepSpec& spec) {
  if (spec.factors.size() != 1 || spec.has_charge()) return SimplePigRule::unknown;
  const TypedWeight tw = normal_single(spec.factors.front());
  if (in_simple_polar_list(tw)) return SimplePigRule::polar;
  const int r = tw.type.rank;
  // Non-circle factors of Hermitian symmetric isotropy representations.
  if (tw.type.family == Family::A && r >= 2 &&
      (all_zero_except(tw.weight, 1, 1) || all_zero_except(tw.weight, 0, 2)))
    return SimplePigRule::hermitian_factor;
  if (matches(tw, "D5[0,0,0,0,1]") || matches(tw, "E6[1,0,0,0,0,0]")) return SimplePigRule::hermitian_factor;
  // Non-Sp(1) factors of quaternion-Kähler symmetric isotropy representations.
  if (matches(tw, "A1[3]") || matches(tw, "C3[0,0,1]") || matches(tw, "A5[0,0,1,0,0]") ||
      matches(tw, "D6[0,0,0,0,0,1]") || matches(tw, "E7[0,0,0,0,0,0,1]"))
    return SimplePigRule::qk_factor;
  return SimplePigRule::trivial_pig;
}

}  // namespace lowcohom
