#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "lowcohom/errors.hpp"
#include "lowcohom/numslice.hpp"
#include "lowcohom/repmodel.hpp"

namespace lowcohom {

namespace {

bool single_fundamental(const HighestWeight& w, int& index) {
  int ones = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    if (w[i] != 1) return false;
    ++ones;
    index = static_cast<int>(i) + 1;
  }
  return ones == 1;
}

bool only_first(const HighestWeight& w, int& k) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] != 0) return false;
  k = w[0];
  return k > 0;
}

ComplexModule harmonic(const ComplexModule& vec, int k) {
  if (k == 1) return vec;
  return contraction_kernel(sym_power(vec, k), vec, k, true);
}

ComplexModule primitive_alt(const ComplexModule& vec, int k) {
  if (k == 1) return vec;
  return contraction_kernel(alt_power(vec, k), vec, k, false);
}

[[noreturn]] void unsupported(const TypedWeight& tw) {
  throw UnsupportedConstruction("no explicit construction for " + format_typed_weight(tw));
}

}  // namespace

ComplexModule irrep_module(const TypedWeight& input) {
  TypedWeight tw = input;
  require_admissible(tw.type);
  if (tw.weight.size() != static_cast<std::size_t>(tw.type.rank))
    throw std::invalid_argument("weight length does not match rank");
  // Low-rank coincidences.
  if (tw.type.family == Family::B && tw.type.rank == 2) tw = {{Family::C, 2}, {tw.weight[1], tw.weight[0]}};
  if (tw.type.family == Family::D && tw.type.rank == 3)
    tw = {{Family::A, 3}, {tw.weight[1], tw.weight[0], tw.weight[2]}};
  tw.weight = canonical_weight(tw.type, tw.weight);
  const int n = tw.type.rank;
  const auto& w = tw.weight;
  int k = 0, idx = 0;
  bool zero = true;
  for (int x : w) zero = zero && x == 0;
  if (zero) return trivial_module(1);

  switch (tw.type.family) {
    case Family::A: {
      if (n == 1) return w[0] == 1 ? sp_vector(1) : sym_power(sp_vector(1), w[0]);
      const ComplexModule v = su_vector(n + 1);
      if (only_first(w, k)) return k == 1 ? v : sym_power(v, k);
      if (single_fundamental(w, idx)) {
        ComplexModule a = alt_power(v, idx);
        if (2 * idx == n + 1) a = with_hodge_structure(std::move(a), n + 1);
        return a;
      }
      if (w.front() == 1 && w.back() == 1) {
        bool inner = true;
        for (int i = 1; i + 1 < n; ++i) inner = inner && w[i] == 0;
        if (inner) return adjoint_module(v);
      }
      if (n == 3 && w == HighestWeight{0, 2, 0}) return harmonic(so_vector(6), 2);
      break;
    }
    case Family::B: {
      if (w.back() == 1) {
        bool rest = true;
        for (int i = 0; i + 1 < n; ++i) rest = rest && w[i] == 0;
        if (rest) return spin_module(2 * n + 1);
      }
      const ComplexModule v = so_vector(2 * n + 1);
      if (only_first(w, k)) return harmonic(v, k);
      if (single_fundamental(w, idx) && idx < n) return alt_power(v, idx);
      break;
    }
    case Family::C: {
      const ComplexModule v = sp_vector(n);
      if (only_first(w, k)) return k == 1 ? v : sym_power(v, k);
      if (single_fundamental(w, idx)) return primitive_alt(v, idx);
      if (n == 2 && w == HighestWeight{0, 2}) return harmonic(so_vector(5), 2);
      break;
    }
    case Family::D: {
      int last = 0;
      for (int i = 0; i + 2 < n; ++i) last += w[i];
      if (last == 0 && w[n - 2] + w[n - 1] == 1) return spin_module(2 * n);
      const ComplexModule v = so_vector(2 * n);
      if (only_first(w, k)) return harmonic(v, k);
      if (single_fundamental(w, idx) && idx <= n - 2) return alt_power(v, idx);
      break;
    }
    case Family::G: {
      if (w == HighestWeight{0, 1}) return adjoint_module(g2_vector());
      if (only_first(w, k)) return harmonic(g2_vector(), k);
      break;
    }
    default:
      break;
  }
  unsupported(tw);
}

namespace {

struct PowerOrigin {
  ComplexModule base;
  int k = 0;
  bool symmetric = false;
};

struct Value {
  std::variant<ComplexModule, LinearRep, long> v;
  std::optional<PowerOrigin> origin;
};

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  LinearRep run() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    if (auto* m = std::get_if<ComplexModule>(&v.v)) return to_real(*m);
    if (auto* r = std::get_if<LinearRep>(&v.v)) return *r;
    fail("expression is a number");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  Value expr() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-')) {
      std::size_t end = pos_ + 1;
      while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
      const long x = std::stol(std::string(s_.substr(pos_, end - pos_)));
      pos_ = end;
      return {x, {}};
    }
    std::size_t end = pos_;
    while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '^')) ++end;
    const std::string name(s_.substr(pos_, end - pos_));
    if (name.empty()) fail("expected a construction name");
    pos_ = end;
    if (pos_ < s_.size() && s_[pos_] == '[') {
      const std::size_t close = s_.find(']', pos_);
      if (close == std::string_view::npos) fail("unterminated weight");
      pos_ = close + 1;
      try {
        return {irrep_module(parse_typed_weight(s_.substr(start, pos_ - start))), {}};
      } catch (const ParseError& e) {
        pos_ = start + e.position();
        fail("bad highest weight");
      }
    }
    std::vector<Value> args;
    std::vector<std::size_t> arg_pos;
    if (eat('(')) {
      if (!eat(')')) {
        do {
          skip();
          arg_pos.push_back(pos_);
          args.push_back(expr());
        } while (eat(','));
        expect(')');
      }
    } else if (name != "g2") {
      pos_ = start;
      fail("unknown construction '" + name + "'");
    }
    return apply(name, args, arg_pos, start);
  }

  long integer(const std::vector<Value>& a, std::size_t i, const std::vector<std::size_t>& at) {
    if (i >= a.size()) fail("missing integer argument");
    if (const long* x = std::get_if<long>(&a[i].v)) return *x;
    pos_ = at[i];
    fail("expected an integer");
  }

  ComplexModule module(const std::vector<Value>& a, std::size_t i, const std::vector<std::size_t>& at) {
    if (i >= a.size()) fail("missing module argument");
    if (const auto* m = std::get_if<ComplexModule>(&a[i].v)) return *m;
    pos_ = at[i];
    fail("expected a complex module");
  }

  LinearRep real(const std::vector<Value>& a, std::size_t i, const std::vector<std::size_t>& at) {
    if (i >= a.size()) fail("missing argument");
    if (const auto* m = std::get_if<ComplexModule>(&a[i].v)) return to_real(*m);
    if (const auto* r = std::get_if<LinearRep>(&a[i].v)) return *r;
    pos_ = at[i];
    fail("expected a representation");
  }

  Value apply(const std::string& name, const std::vector<Value>& a, const std::vector<std::size_t>& at,
              std::size_t start) {
    auto arity = [&](std::size_t n) {
      if (a.size() != n) {
        pos_ = start;
        fail(name + " takes " + std::to_string(n) + " argument(s)");
      }
    };
    auto small = [&](std::size_t i) { return static_cast<int>(integer(a, i, at)); };
    try {
      if (name == "so") return arity(1), Value{so_vector(small(0)), {}};
      if (name == "su") return arity(1), Value{su_vector(small(0)), {}};
      if (name == "u") {
        arity(1);
        const int n = small(0);
        return {with_u1(n == 1 ? trivial_module(1) : su_vector(n)), {}};
      }
      if (name == "sp") return arity(1), Value{sp_vector(small(0)), {}};
      if (name == "spin") return arity(1), Value{spin_module(small(0)), {}};
      if (name == "g2") return arity(0), Value{g2_vector(), {}};
      if (name == "trivial") return arity(1), Value{trivial_module(small(0)), {}};
      if (name == "adjoint") return arity(1), Value{adjoint_module(module(a, 0, at)), {}};
      if (name == "u1") return arity(1), Value{with_u1(module(a, 0, at)), {}};
      if (name == "dualize") return arity(1), Value{dualize(module(a, 0, at)), {}};
      if (name == "realify") return arity(1), Value{realify(module(a, 0, at)), {}};
      auto power = [&](int k, bool symmetric) {
        const ComplexModule base = module(a, 0, at);
        ComplexModule p = symmetric ? sym_power(base, k) : alt_power(base, k);
        return Value{std::move(p), PowerOrigin{base, k, symmetric}};
      };
      if (name == "sym2") return arity(1), power(2, true);
      if (name == "alt2") return arity(1), power(2, false);
      if (name == "alt3") return arity(1), power(3, false);
      if (name.rfind("sym^", 0) == 0) return arity(1), power(std::stoi(name.substr(4)), true);
      if (name == "sym") return arity(2), power(small(1), true);
      if (name == "alt") return arity(2), power(small(1), false);
      if (name == "traceless") {
        arity(1);
        if (!a[0].origin) {
          pos_ = at[0];
          fail("traceless needs a symmetric or alternating power");
        }
        const auto& o = *a[0].origin;
        return {contraction_kernel(module(a, 0, at), o.base, o.k, o.symmetric), {}};
      }
      if (name == "tensorC") {
        if (a.size() < 2) arity(2);
        ComplexModule m = module(a, 0, at);
        for (std::size_t i = 1; i < a.size(); ++i) m = tensor_c(m, module(a, i, at));
        return {std::move(m), {}};
      }
      if (name == "tensorR") {
        if (a.size() < 2) arity(2);
        LinearRep r = real(a, 0, at);
        for (std::size_t i = 1; i < a.size(); ++i) r = tensor_r(r, real(a, i, at));
        return {std::move(r), {}};
      }
      if (name == "tensorH") {
        arity(2);
        const ComplexModule x = module(a, 0, at), y = module(a, 1, at);
        if (x.structure_sign != -1 || y.structure_sign != -1) {
          pos_ = start;
          fail("tensorH needs two quaternionic modules");
        }
        return {real_form(tensor_c(x, y)), {}};
      }
    } catch (const std::invalid_argument& e) {
      if (dynamic_cast<const ParseError*>(&e)) throw;
      pos_ = start;
      fail(e.what());
    }
    pos_ = start;
    fail("unknown construction '" + name + "'");
  }
};

}  // namespace

LinearRep build_rep(std::string_view expr) {
  std::size_t i = 0;
  while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i]))) ++i;
  const bool spec = expr.find(':') != std::string_view::npos || expr.find('*') != std::string_view::npos ||
                    expr.substr(i).rfind("U1", 0) == 0;
  if (spec) return realize(parse_spec(expr));
  return Parser(expr).run();
}

}  // namespace lowcohom
