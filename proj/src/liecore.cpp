#include "lowcohom/liecore.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include <gmpxx.h>

#include "lowcohom/errors.hpp"

namespace lowcohom {

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

bool admissible(const SimpleGroupType& t) {
  switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B: return t.rank >= 2;
    case Family::C: return t.rank >= 2;
    case Family::D: return t.rank >= 3;
    case Family::E: return t.rank >= 6 && t.rank <= 8;
    case Family::F: return t.rank == 4;
    case Family::G: return t.rank == 2;
  }
  return false;
}

void require_admissible(const SimpleGroupType& t) {
  if (!admissible(t)) throw std::invalid_argument("inadmissible simple type " + to_string(t));
}

std::string to_string(const SimpleGroupType& t) {
  return std::string(1, family_letter(t.family)) + std::to_string(t.rank);
}

std::string to_string(FSType t) {
  switch (t) {
    case FSType::real: return "real";
    case FSType::complex: return "complex";
    case FSType::quaternionic: return "quaternionic";
  }
  return "?";
}

namespace {

using IntMatrix = std::vector<std::vector<int>>;

// Symmetrised bilinear form on the simple roots.
IntMatrix symmetric_form(const SimpleGroupType& t) {
  const int n = t.rank;
  IntMatrix b(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j, int v) { b[i][j] = b[j][i] = v; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      for (int i = 0; i < n; ++i) b[i][i] = 4;
      b[n - 1][n - 1] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case Family::C:
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      b[n - 1][n - 1] = 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case Family::E:
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::F:
      b[0][0] = b[1][1] = 4;
      b[2][2] = b[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case Family::G:
      b[0][0] = 2;
      b[1][1] = 6;
      link(0, 1, -3);
      break;
  }
  return b;
}

std::vector<int> minus_w0(const SimpleGroupType& t) {
  std::vector<int> p(t.rank);
  std::iota(p.begin(), p.end(), 0);
  const int n = t.rank;
  if (t.family == Family::A) {
    for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
  } else if (t.family == Family::D && n % 2 == 1) {
    std::swap(p[n - 2], p[n - 1]);
  } else if (t.family == Family::E && n == 6) {
    std::swap(p[0], p[5]);
    std::swap(p[2], p[4]);
  }
  return p;
}

RootSystem build_root_system(const SimpleGroupType& t) {
  RootSystem rs;
  rs.type = t;
  rs.form = symmetric_form(t);
  const int n = t.rank;
  rs.cartan.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.cartan[i][j] = 2 * rs.form[i][j] / rs.form[j][j];

  // Root strings: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0.
  std::vector<std::vector<int>> roots;
  std::map<std::vector<int>, bool> seen;
  for (int i = 0; i < n; ++i) {
    std::vector<int> r(n, 0);
    r[i] = 1;
    roots.push_back(r);
    seen[r] = true;
  }
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const auto beta = roots[k];
    for (int i = 0; i < n; ++i) {
      int p = 0;
      auto down = beta;
      while (true) {
        down[i] -= 1;
        if (!seen.count(down)) break;
        ++p;
      }
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += beta[j] * rs.cartan[j][i];
      if (p - pairing > 0) {
        auto up = beta;
        up[i] += 1;
        if (!seen.count(up)) {
          seen[up] = true;
          roots.push_back(up);
        }
      }
    }
  }
  std::stable_sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
  });
  rs.positive_roots = std::move(roots);

  // beta^vee = sum_j c_j (alpha_j, alpha_j)/(beta, beta) alpha_j^vee
  rs.two_rho_coroot.assign(n, 0);
  for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) {
    const int nb = rs.root_norm(k);
    for (int j = 0; j < n; ++j) {
      const int num = rs.positive_roots[k][j] * rs.form[j][j];
      rs.two_rho_coroot[j] += num / nb;
    }
  }
  rs.w0_permutation = minus_w0(t);
  return rs;
}

}  // namespace

int RootSystem::root_norm(std::size_t index) const {
  const auto& c = positive_roots[index];
  int s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) s += c[i] * c[j] * form[i][j];
  return s;
}

const RootSystem& root_system(const SimpleGroupType& t) {
  require_admissible(t);
  static std::mutex mutex;
  static std::map<SimpleGroupType, RootSystem> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, build_root_system(t)).first;
  return it->second;
}

int group_dim(const SimpleGroupType& t) {
  require_admissible(t);
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 2);
    case Family::B:
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::E: return n == 6 ? 78 : (n == 7 ? 133 : 248);
    case Family::F: return 52;
    case Family::G: return 14;
  }
  return 0;
}

namespace {

void check_weight(const SimpleGroupType& t, const HighestWeight& w) {
  require_admissible(t);
  if (static_cast<int>(w.size()) != t.rank)
    throw std::invalid_argument("weight length " + std::to_string(w.size()) + " does not match rank of " +
                                to_string(t));
  for (int c : w)
    if (c < 0) throw std::invalid_argument("highest weight coefficients must be non-negative");
}

}  // namespace

std::int64_t weyl_dim(const SimpleGroupType& t, const HighestWeight& w) {
  check_weight(t, w);
  const auto& rs = root_system(t);
  const int n = t.rank;
  mpz_class num = 1, den = 1;
  for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) {
    const auto& c = rs.positive_roots[k];
    // Common factor 1/(beta,beta) cancels between numerator and denominator.
    long a = 0, b = 0;
    for (int j = 0; j < n; ++j) {
      a += static_cast<long>(c[j]) * rs.form[j][j] * (w[j] + 1);
      b += static_cast<long>(c[j]) * rs.form[j][j];
    }
    num *= a;
    den *= b;
  }
  mpz_class q = num / den;
  if (!q.fits_slong_p()) throw std::overflow_error("degree exceeds 64-bit range");
  return q.get_si();
}

HighestWeight dual_weight(const SimpleGroupType& t, const HighestWeight& w) {
  check_weight(t, w);
  const auto& p = root_system(t).w0_permutation;
  HighestWeight d(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) d[p[i]] = w[i];
  return d;
}

std::int64_t pairing_with_two_rho_coroot(const SimpleGroupType& t, const HighestWeight& w) {
  check_weight(t, w);
  const auto& rs = root_system(t);
  std::int64_t s = 0;
  for (int i = 0; i < t.rank; ++i) s += static_cast<std::int64_t>(w[i]) * rs.two_rho_coroot[i];
  return s;
}

FSType fs_type(const SimpleGroupType& t, const HighestWeight& w) {
  if (dual_weight(t, w) != w) return FSType::complex;
  return pairing_with_two_rho_coroot(t, w) % 2 == 0 ? FSType::real : FSType::quaternionic;
}

std::vector<IrrepInfo> enumerate_irreps(const SimpleGroupType& t, std::int64_t max_degree) {
  require_admissible(t);
  if (max_degree < 1) throw std::invalid_argument("max_degree must be at least 1");
  std::vector<IrrepInfo> out;
  HighestWeight w(t.rank, 0);
  // Depth-first over coordinates; raising any coordinate strictly raises the
  // degree, so once a prefix overflows no larger value at that slot can fit.
  auto recurse = [&](auto&& self, int pos) -> void {
    if (pos == t.rank) {
      const auto d = weyl_dim(t, w);
      out.push_back({w, d, fs_type(t, w)});
      return;
    }
    for (int v = 0;; ++v) {
      w[pos] = v;
      std::fill(w.begin() + pos + 1, w.end(), 0);
      if (weyl_dim(t, w) > max_degree) break;
      self(self, pos + 1);
    }
    w[pos] = 0;
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.weight < b.weight; });
  return out;
}

std::vector<std::vector<int>> diagram_automorphisms(const SimpleGroupType& t) {
  require_admissible(t);
  const int n = t.rank;
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> out{id};
  if (t.family == Family::A && n >= 2) {
    out.push_back(minus_w0(t));
  } else if (t.family == Family::D && n >= 5) {
    auto p = id;
    std::swap(p[n - 2], p[n - 1]);
    out.push_back(p);
  } else if (t.family == Family::D && n == 4) {
    // Triality permutes nodes 1, 3, 4.
    const int outer[3] = {0, 2, 3};
    std::vector<int> perm = {0, 1, 2};
    while (std::next_permutation(perm.begin(), perm.end())) {
      auto p = id;
      for (int k = 0; k < 3; ++k) p[outer[k]] = outer[perm[k]];
      out.push_back(p);
    }
  } else if (t.family == Family::D && n == 3) {
    auto p = id;
    std::swap(p[1], p[2]);
    out.push_back(p);
  } else if (t.family == Family::E && n == 6) {
    out.push_back(minus_w0(t));
  }
  return out;
}

HighestWeight canonical_weight(const SimpleGroupType& t, const HighestWeight& w) {
  check_weight(t, w);
  HighestWeight best = w;
  for (const auto& p : diagram_automorphisms(t)) {
    HighestWeight img(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) img[p[i]] = w[i];
    best = std::max(best, img);
  }
  return best;
}

HighestWeight fundamental_weight(const SimpleGroupType& t, int index_one_based) {
  require_admissible(t);
  if (index_one_based < 1 || index_one_based > t.rank) throw std::invalid_argument("fundamental weight index out of range");
  HighestWeight w(t.rank, 0);
  w[index_one_based - 1] = 1;
  return w;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  void expect(char c) {
    skip_ws();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  int integer() {
    skip_ws();
    const std::size_t start = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (start == pos) throw ParseError("expected integer", pos);
    return std::stoi(std::string(text.substr(start, pos - start)));
  }
};

SimpleGroupType read_type(Cursor& c) {
  c.skip_ws();
  const std::size_t at = c.pos;
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(c.peek())));
  static const std::string letters = "ABCDEFG";
  const auto idx = letters.find(f);
  if (c.done() || idx == std::string::npos) throw ParseError("expected family letter A-G", at);
  ++c.pos;
  SimpleGroupType t{static_cast<Family>(idx), c.integer()};
  if (!admissible(t)) throw ParseError("inadmissible type " + to_string(t), at);
  return t;
}

}  // namespace

SimpleGroupType parse_simple_type(std::string_view text) {
  Cursor c{text};
  auto t = read_type(c);
  c.skip_ws();
  if (!c.done()) throw ParseError("trailing characters", c.pos);
  return t;
}

TypedWeight parse_typed_weight(std::string_view text) {
  Cursor c{text};
  TypedWeight tw;
  tw.type = read_type(c);
  c.expect('[');
  for (int i = 0; i < tw.type.rank; ++i) {
    if (i > 0) c.expect(',');
    tw.weight.push_back(c.integer());
  }
  c.skip_ws();
  if (c.peek() == ',') throw ParseError("too many coefficients for " + to_string(tw.type), c.pos);
  c.expect(']');
  c.skip_ws();
  if (!c.done()) throw ParseError("trailing characters", c.pos);
  return tw;
}

std::string format_typed_weight(const TypedWeight& tw) {
  std::string s = to_string(tw.type) + "[";
  for (std::size_t i = 0; i < tw.weight.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(tw.weight[i]);
  }
  return s + "]";
}

}  // namespace lowcohom
