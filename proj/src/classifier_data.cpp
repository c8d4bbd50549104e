#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lowcohom/classifier.hpp"
#include "lowcohom_data.hpp"

namespace lowcohom {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string f;
  while (std::getline(ss, f, '|')) out.push_back(trim(f));
  return out;
}

// Non-empty, non-comment lines split into fields; `context` names the source
// in error messages.
std::vector<std::vector<std::string>> records(const std::string& text, std::size_t arity, const std::string& context) {
  std::vector<std::vector<std::string>> out;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto f = fields(t);
    if (f.size() != arity)
      throw std::runtime_error(context + ":" + std::to_string(lineno) + ": expected " + std::to_string(arity) +
                               " fields, got " + std::to_string(f.size()));
    out.push_back(std::move(f));
  }
  return out;
}

std::optional<SeriesKind> series_field(const std::string& s) {
  if (s == "-") return std::nullopt;
  auto k = parse_series(s);
  if (!k) throw std::runtime_error("unknown series '" + s + "'");
  return k;
}

bool yes_no(const std::string& s) {
  if (s == "yes") return true;
  if (s == "no") return false;
  throw std::runtime_error("expected yes/no, got '" + s + "'");
}

std::vector<PaperRow> parse_tables(const std::string& text) {
  std::vector<PaperRow> out;
  for (auto& f : records(text, 8, "paper_tables")) {
    PaperRow r;
    r.table = std::stoi(f[0]);
    r.group_label = f[1];
    r.space_label = f[2];
    r.fixed = normalize(parse_spec(f[3]));
    r.series = series_field(f[4]);
    r.condition = Condition::parse(f[5]);
    r.polar = yes_no(f[6]);
    r.citation = f[7];
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ExceptionalDatum> parse_exceptional(const std::string& text) {
  std::vector<ExceptionalDatum> out;
  for (auto& f : records(text, 5, "exceptional")) {
    ExceptionalDatum d;
    d.spec = normalize(parse_spec(f[0]));
    d.cohom = std::stoi(f[1]);
    d.polar = yes_no(f[2]);
    d.pig = f[3];
    d.citation = f[4];
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<IsoparametricRow> parse_isoparametric(const std::string& text) {
  std::vector<IsoparametricRow> out;
  for (auto& f : records(text, 10, "isoparametric")) {
    IsoparametricRow r;
    r.group_label = f[0];
    r.space_label = f[1];
    r.fixed = normalize(parse_spec(f[2]));
    r.series = series_field(f[3]);
    r.condition = Condition::parse(f[4]);
    r.pig = f[5];
    if (f[6] != "-") r.pig_dim = std::stoi(f[6]);
    r.residual_space = f[7];
    std::string c = f[8];
    if (!c.empty() && c[0] == '>') {
      r.residual_is_lower_bound = true;
      c.erase(0, 1);
    }
    r.residual_cohom = std::stoi(c);
    r.citation = f[9];
    out.push_back(std::move(r));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TypedWeight first_fundamental(Family f, int rank) {
  HighestWeight w(rank, 0);
  w[0] = 1;
  return {{f, rank}, w};
}

}  // namespace

std::string to_string(SeriesKind k) {
  switch (k) {
    case SeriesKind::SO: return "SO";
    case SeriesKind::SU: return "SU";
    case SeriesKind::U: return "U";
    case SeriesKind::Sp: return "Sp";
    case SeriesKind::Sp1Sp: return "Sp1Sp";
    case SeriesKind::U1Sp: return "U1Sp";
  }
  return "?";
}

std::optional<SeriesKind> parse_series(std::string_view s) {
  for (SeriesKind k :
       {SeriesKind::SO, SeriesKind::SU, SeriesKind::U, SeriesKind::Sp, SeriesKind::Sp1Sp, SeriesKind::U1Sp})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

int series_start(SeriesKind k) {
  switch (k) {
    case SeriesKind::SO: return 3;
    case SeriesKind::SU:
    case SeriesKind::U: return 2;
    default: return 1;
  }
}

IrrepSpec series_member(SeriesKind k, int n) {
  if (n < series_start(k)) throw std::invalid_argument(to_string(k) + " series starts at " + std::to_string(series_start(k)));
  IrrepSpec s;
  switch (k) {
    case SeriesKind::SO:
      if (n == 3) s.factors = {{{Family::A, 1}, {2}}};
      else if (n == 4) s.factors = {{{Family::A, 1}, {1}}, {{Family::A, 1}, {1}}};
      else if (n == 5) s.factors = {{{Family::C, 2}, {0, 1}}};
      else if (n == 6) s.factors = {{{Family::A, 3}, {0, 1, 0}}};
      else if (n % 2 == 1) s.factors = {first_fundamental(Family::B, (n - 1) / 2)};
      else s.factors = {first_fundamental(Family::D, n / 2)};
      break;
    case SeriesKind::SU:
    case SeriesKind::U:
      s.factors = {first_fundamental(Family::A, n - 1)};
      if (k == SeriesKind::U) s.u1_charges = {1};
      break;
    case SeriesKind::Sp:
    case SeriesKind::Sp1Sp:
    case SeriesKind::U1Sp:
      s.factors = {n == 1 ? TypedWeight{{Family::A, 1}, {1}} : first_fundamental(Family::C, n)};
      if (k == SeriesKind::Sp1Sp) s.factors.push_back({{Family::A, 1}, {1}});
      if (k == SeriesKind::U1Sp) s.u1_charges = {1};
      break;
  }
  return normalize(s);
}

IrrepSpec tensor_specs(const IrrepSpec& a, const IrrepSpec& b) {
  if (a.has_charge() && b.has_charge()) throw std::invalid_argument("at most one circle factor");
  IrrepSpec s;
  s.factors = a.factors;
  s.factors.insert(s.factors.end(), b.factors.begin(), b.factors.end());
  s.u1_charges = a.has_charge() ? a.u1_charges : b.u1_charges;
  return normalize(s);
}

IrrepSpec series_instance(const IrrepSpec& fixed, SeriesKind k, int n) {
  return tensor_specs(fixed, series_member(k, n));
}

std::string Condition::to_string() const {
  if (empty()) return "-";
  std::string out;
  for (int v : values) {
    if (!out.empty()) out += ", ";
    out += std::to_string(v);
  }
  if (tail_from) {
    if (!out.empty()) out += ", ";
    out += ">=" + std::to_string(*tail_from);
  }
  return out;
}

Condition Condition::parse(std::string_view s) {
  Condition c;
  const std::string t = trim(s);
  if (t == "-" || t.empty()) return c;
  std::stringstream ss(t);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part = trim(part);
    if (part.rfind(">=", 0) == 0) {
      if (c.tail_from) throw std::invalid_argument("condition has two tails: " + t);
      c.tail_from = std::stoi(part.substr(2));
    } else {
      c.values.insert(std::stoi(part));
    }
  }
  return c;
}

EmbeddedData EmbeddedData::builtin() {
  EmbeddedData d;
  d.tables = parse_tables(embedded::paper_tables);
  d.exceptional = parse_exceptional(embedded::exceptional);
  d.isoparametric = parse_isoparametric(embedded::isoparametric);
  return d;
}

EmbeddedData EmbeddedData::load(const std::string& dir) {
  EmbeddedData d;
  d.tables = parse_tables(read_file(dir + "/paper_tables.txt"));
  d.exceptional = parse_exceptional(read_file(dir + "/exceptional.txt"));
  d.isoparametric = parse_isoparametric(read_file(dir + "/isoparametric.txt"));
  return d;
}

std::vector<PaperRow> EmbeddedData::table(int target_c) const {
  std::vector<PaperRow> out;
  std::copy_if(tables.begin(), tables.end(), std::back_inserter(out),
               [&](const PaperRow& r) { return r.table == target_c; });
  return out;
}

const ExceptionalDatum* EmbeddedData::find_exceptional(const IrrepSpec& spec) const {
  const std::string key = format_spec(normalize(spec));
  for (const auto& d : exceptional)
    if (format_spec(d.spec) == key) return &d;
  return nullptr;
}

}  // namespace lowcohom
