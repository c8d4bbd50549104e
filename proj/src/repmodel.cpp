#include "lowcohom/repmodel.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "json.hpp"
#include "lowcohom/errors.hpp"

namespace lowcohom {

namespace {

bool is_trivial(const TypedWeight& tw) {
  return std::all_of(tw.weight.begin(), tw.weight.end(), [](int x) { return x == 0; });
}

int quaternionic_count(const IrrepSpec& s) {
  int n = 0;
  for (const auto& f : s.factors)
    if (!is_trivial(f) && fs_type(f.type, f.weight) == FSType::quaternionic) ++n;
  return n;
}

int nontrivial_count(const IrrepSpec& s) {
  int n = 0;
  for (const auto& f : s.factors) n += !is_trivial(f);
  return n;
}

TypedWeight normal_factor(TypedWeight tw) {
  require_admissible(tw.type);
  if (tw.weight.size() != static_cast<std::size_t>(tw.type.rank))
    throw std::invalid_argument("weight length does not match rank");
  if (tw.type.family == Family::B && tw.type.rank == 2) tw = {{Family::C, 2}, {tw.weight[1], tw.weight[0]}};
  if (tw.type.family == Family::D && tw.type.rank == 3)
    tw = {{Family::A, 3}, {tw.weight[1], tw.weight[0], tw.weight[2]}};
  tw.weight = canonical_weight(tw.type, tw.weight);
  return tw;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

int GroupSpec::dim() const {
  int d = torus_rank;
  for (const auto& t : simple_factors) d += group_dim(t);
  return d;
}

std::string to_string(const GroupSpec& g) {
  std::string out;
  for (int i = 0; i < g.torus_rank; ++i) out += out.empty() ? "U1" : " * U1";
  for (const auto& t : g.simple_factors) out += (out.empty() ? "" : " * ") + to_string(t);
  return out.empty() ? "trivial" : out;
}

GroupSpec IrrepSpec::group() const {
  GroupSpec g;
  for (const auto& f : factors) g.simple_factors.push_back(f.type);
  g.torus_rank = static_cast<int>(u1_charges.size());
  return g;
}

bool IrrepSpec::has_charge() const {
  return std::any_of(u1_charges.begin(), u1_charges.end(), [](int q) { return q != 0; });
}

std::string to_string(TensorField f) {
  switch (f) {
    case TensorField::R: return "R";
    case TensorField::C: return "C";
    case TensorField::H: return "H";
  }
  return "?";
}

std::string to_string(Presentation p) {
  switch (p) {
    case Presentation::real_form: return "real_form";
    case Presentation::realification: return "realification";
    case Presentation::intrinsically_real: return "intrinsically_real";
  }
  return "?";
}

std::string to_string(RealCase c) {
  switch (c) {
    case RealCase::case_a_real: return "case_a_real";
    case RealCase::case_b_quaternionic: return "case_b_quaternionic";
    case RealCase::case_c_complex: return "case_c_complex";
  }
  return "?";
}

std::string to_string(Route r) {
  switch (r) {
    case Route::real_tensor: return "real_tensor";
    case Route::quaternionic_tensor: return "quaternionic_tensor";
    case Route::complex_realification: return "complex_realification";
    case Route::simple: return "simple";
  }
  return "?";
}

FSType tensor_type(FSType a, FSType b) {
  if (a == FSType::complex || b == FSType::complex) return FSType::complex;
  return a == b ? FSType::real : FSType::quaternionic;
}

FSType complex_type(const IrrepSpec& spec) {
  if (spec.has_charge()) return FSType::complex;
  FSType t = FSType::real;
  for (const auto& f : spec.factors) t = tensor_type(t, fs_type(f.type, f.weight));
  return t;
}

std::int64_t complex_degree(const IrrepSpec& spec) {
  std::int64_t d = 1;
  for (const auto& f : spec.factors) d *= weyl_dim(f.type, f.weight);
  return d;
}

RealCase classify_real_irrep(const IrrepSpec& spec) {
  validate(spec);
  switch (complex_type(spec)) {
    case FSType::real: return RealCase::case_a_real;
    case FSType::quaternionic: return RealCase::case_b_quaternionic;
    case FSType::complex: break;
  }
  return RealCase::case_c_complex;
}

std::int64_t real_degree(const IrrepSpec& spec) {
  const std::int64_t d = complex_degree(spec);
  return complex_type(spec) == FSType::real ? d : 2 * d;
}

Route realization_route(const IrrepSpec& spec) {
  if (nontrivial_count(spec) <= 1 && !spec.has_charge()) return Route::simple;
  if (spec.has_charge()) return Route::complex_realification;
  bool any_real = false, any_complex = false;
  for (const auto& f : spec.factors) {
    if (is_trivial(f)) continue;
    const FSType t = fs_type(f.type, f.weight);
    any_real = any_real || t == FSType::real;
    any_complex = any_complex || t == FSType::complex;
  }
  if (any_real) return Route::real_tensor;
  if (!any_complex && quaternionic_count(spec) == 2) return Route::quaternionic_tensor;
  return Route::complex_realification;
}

RealRep real_rep(const IrrepSpec& spec) {
  return {real_degree(spec), complex_type(spec), spec.group().dim()};
}

void validate(const IrrepSpec& spec) {
  for (const auto& f : spec.factors) {
    require_admissible(f.type);
    if (f.weight.size() != static_cast<std::size_t>(f.type.rank))
      throw std::invalid_argument("weight length does not match rank");
    for (int x : f.weight)
      if (x < 0) throw std::invalid_argument("negative weight coefficient");
  }
  if (spec.u1_charges.size() > 1) throw std::invalid_argument("at most one circle factor");
  const FSType t = complex_type(spec);
  if (spec.tensor_field == TensorField::H) {
    for (const auto& f : spec.factors)
      if (!is_trivial(f) && fs_type(f.type, f.weight) != FSType::quaternionic && fs_type(f.type, f.weight) != FSType::real)
        throw std::invalid_argument("tensor over H needs self-dual factors");
    if (quaternionic_count(spec) < 2) throw std::invalid_argument("tensor over H needs two quaternionic factors");
    if (spec.presentation != Presentation::real_form) throw std::invalid_argument("tensor over H is a real form");
  }
  if (spec.presentation != Presentation::realification && t != FSType::real)
    throw std::invalid_argument("real form requested for a representation of " + to_string(t) + " type");
  if (spec.has_charge() && spec.presentation != Presentation::realification)
    throw std::invalid_argument("a circle acting by scalars forces a realification");
}

IrrepSpec normalize(IrrepSpec spec) {
  for (auto& f : spec.factors) f = normal_factor(f);
  std::sort(spec.factors.begin(), spec.factors.end());
  for (auto& q : spec.u1_charges) q = q != 0 ? 1 : 0;
  const FSType t = complex_type(spec);
  if (t != FSType::real) {
    spec.presentation = Presentation::realification;
    spec.tensor_field = spec.has_charge() || t == FSType::complex ? TensorField::C : TensorField::R;
    for (const auto& f : spec.factors)
      if (!is_trivial(f) && fs_type(f.type, f.weight) == FSType::complex) spec.tensor_field = TensorField::C;
  } else {
    spec.presentation = Presentation::real_form;
    spec.tensor_field = quaternionic_count(spec) >= 2 ? TensorField::H : TensorField::R;
  }
  if (spec.tensor_field == TensorField::H && spec.effective_kernel_note.empty())
    spec.effective_kernel_note = "-1 acts trivially on the quaternionic pair";
  return spec;
}

IrrepSpec parse_spec(std::string_view text) {
  IrrepSpec spec;
  std::string_view body = text;
  std::size_t colon = text.find(':');
  bool explicit_suffix = false;
  if (colon != std::string_view::npos) {
    body = text.substr(0, colon);
    const std::string suffix = trim(text.substr(colon + 1));
    const std::size_t dash = suffix.find('-');
    if (suffix.size() < 3 || dash != 1) throw ParseError("expected field-presentation suffix", colon + 1);
    switch (suffix[0]) {
      case 'R': spec.tensor_field = TensorField::R; break;
      case 'C': spec.tensor_field = TensorField::C; break;
      case 'H': spec.tensor_field = TensorField::H; break;
      default: throw ParseError("unknown field", colon + 1);
    }
    const std::string p = suffix.substr(2);
    if (p == "real_form") {
      spec.presentation = Presentation::real_form;
    } else if (p == "realification") {
      spec.presentation = Presentation::realification;
    } else if (p == "intrinsically_real") {
      spec.presentation = Presentation::intrinsically_real;
    } else {
      throw ParseError("unknown presentation '" + p + "'", colon + 1);
    }
    explicit_suffix = true;
  }
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t star = body.find('*', start);
    if (star == std::string_view::npos) star = body.size();
    const std::string_view raw = body.substr(start, star - start);
    std::size_t lead = 0;
    while (lead < raw.size() && std::isspace(static_cast<unsigned char>(raw[lead]))) ++lead;
    const std::string tok = trim(raw);
    if (tok.empty()) throw ParseError("empty factor", start + lead);
    if (tok.rfind("U1", 0) == 0) {
      int q = 1;
      if (tok.size() > 2) {
        if (tok[2] != '(' || tok.back() != ')') throw ParseError("expected U1(charge)", start + lead + 2);
        try {
          std::size_t used = 0;
          const std::string inner = tok.substr(3, tok.size() - 4);
          q = std::stoi(inner, &used);
          if (used != inner.size()) throw std::invalid_argument("junk");
        } catch (const std::exception&) {
          throw ParseError("bad circle charge", start + lead + 3);
        }
      }
      spec.u1_charges.push_back(q);
    } else {
      try {
        spec.factors.push_back(parse_typed_weight(tok));
      } catch (const ParseError& e) {
        throw ParseError("bad factor '" + tok + "'", start + lead + e.position());
      }
    }
    start = star + 1;
  }
  if (!explicit_suffix) {
    IrrepSpec n = normalize(spec);
    spec.tensor_field = n.tensor_field;
    spec.presentation = n.presentation;
    spec.effective_kernel_note = n.effective_kernel_note;
  }
  validate(spec);
  return spec;
}

std::string format_spec(const IrrepSpec& spec) {
  std::string out;
  for (int q : spec.u1_charges) out += (out.empty() ? "" : " * ") + ("U1(" + std::to_string(q) + ")");
  for (const auto& f : spec.factors) out += (out.empty() ? "" : " * ") + format_typed_weight(f);
  return out + " : " + to_string(spec.tensor_field) + "-" + to_string(spec.presentation);
}

std::string spec_to_json(const IrrepSpec& spec) {
  nlohmann::ordered_json j;
  j["factors"] = nlohmann::json::array();
  for (const auto& f : spec.factors) j["factors"].push_back(format_typed_weight(f));
  j["u1_charges"] = spec.u1_charges;
  j["tensor_field"] = to_string(spec.tensor_field);
  j["presentation"] = to_string(spec.presentation);
  j["effective_kernel_note"] = spec.effective_kernel_note;
  return j.dump();
}

IrrepSpec spec_from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  std::string s;
  for (const auto& f : j.at("factors")) s += (s.empty() ? "" : " * ") + f.get<std::string>();
  for (int q : j.value("u1_charges", std::vector<int>{})) s = "U1(" + std::to_string(q) + ")" + (s.empty() ? "" : " * ") + s;
  if (j.contains("tensor_field") && j.contains("presentation"))
    s += " : " + j["tensor_field"].get<std::string>() + "-" + j["presentation"].get<std::string>();
  IrrepSpec spec = parse_spec(s);
  if (j.contains("effective_kernel_note")) spec.effective_kernel_note = j["effective_kernel_note"].get<std::string>();
  return spec;
}

LinearRep realize(const IrrepSpec& input) {
  validate(input);
  const IrrepSpec spec = normalize(input);
  // Real factors are combined over R; the remaining ones over C.
  std::vector<LinearRep> real_parts;
  std::optional<ComplexModule> rest;
  std::string label;
  for (const auto& f : spec.factors) {
    ComplexModule m = irrep_module(f);
    label += (label.empty() ? "" : " * ") + format_typed_weight(f);
    if (m.structure && m.structure_sign == 1 && !is_trivial(f)) {
      real_parts.push_back(real_form(m));
    } else {
      rest = rest ? tensor_c(*rest, m) : m;
    }
  }
  if (spec.has_charge()) {
    rest = rest ? with_u1(*rest) : with_u1(trivial_module(1));
    label = "U1 * " + label;
  }
  std::optional<LinearRep> out;
  for (auto& r : real_parts) out = out ? tensor_r(*out, r) : r;
  if (rest) {
    const LinearRep r = to_real(*rest);
    out = out ? tensor_r(*out, r) : r;
  }
  if (!out) out = real_form(trivial_module(1));
  out->label = label;
  return *out;
}

}  // namespace lowcohom
