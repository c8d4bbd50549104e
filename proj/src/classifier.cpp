#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

#include "lowcohom/classifier.hpp"
#include "lowcohom/errors.hpp"

namespace lowcohom {

namespace {

bool is_adjoint(const IrrepSpec& s) {
  if (s.factors.size() != 1 || s.has_charge()) return false;
  const auto& tw = s.factors.front();
  return weyl_dim(tw.type, tw.weight) == group_dim(tw.type) && fs_type(tw.type, tw.weight) == FSType::real;
}

// Standard representations of SO(n), SU(n), Sp(n); these occur as series
// members and are not used as fixed factors.
bool is_series_vector(const TypedWeight& tw) {
  const auto& w = tw.weight;
  const int r = tw.type.rank;
  auto only = [&](int index, int value) {
    for (int i = 0; i < r; ++i)
      if (w[i] != (i == index ? value : 0)) return false;
    return true;
  };
  switch (tw.type.family) {
    case Family::A:
      if (r == 1) return w[0] == 1 || w[0] == 2;
      if (r == 3 && only(1, 1)) return true;
      return only(0, 1) || only(r - 1, 1);
    case Family::B:
    case Family::D:
      return only(0, 1);
    case Family::C:
      return only(0, 1) || (r == 2 && only(1, 1));
    default:
      return false;
  }
}

bool is_standard(const IrrepSpec& s) {
  return s.factors.size() == 1 && !s.has_charge() && is_series_vector(s.factors.front());
}

struct KnownFamily {
  int cohom;
  bool polar;
  const char* citation;
};

// Second exterior powers, whose generic isotropy is read off from the symmetric
// spaces SO(2n)/U(n) and SU(2n)/Sp(n). For SU(n) with n even the Pfaffian adds
// one invariant and breaks polarity; for n odd SU(n) and U(n) share orbits.
std::optional<KnownFamily> known_family(const IrrepSpec& s) {
  if (s.factors.size() != 1) return std::nullopt;
  const auto& tw = s.factors.front();
  const int r = tw.type.rank;
  auto only = [&](int index) {
    for (int i = 0; i < r; ++i)
      if (tw.weight[i] != (i == index ? 1 : 0)) return false;
    return true;
  };
  if (tw.type.family == Family::A && r >= 4 && (only(1) || only(r - 2))) {
    const int n = r + 1;
    if (s.has_charge()) return KnownFamily{n / 2, true, "second exterior power of U(n)"};
    if (n % 2 == 1) return KnownFamily{n / 2, true, "second exterior power of SU(n), n odd"};
    return KnownFamily{n / 2 + 1, false, "second exterior power of SU(n), n even"};
  }
  if (tw.type.family == Family::C && r >= 3 && only(1) && !s.has_charge())
    return KnownFamily{r - 1, true, "traceless second exterior power of Sp(n)"};
  return std::nullopt;
}

int field_factor(SeriesKind k) {
  switch (k) {
    case SeriesKind::SO: return 1;
    case SeriesKind::SU:
    case SeriesKind::U: return 2;
    default: return 4;
  }
}

SeriesField series_field(SeriesKind k) {
  switch (k) {
    case SeriesKind::SO: return SeriesField::R;
    case SeriesKind::SU:
    case SeriesKind::U: return SeriesField::C;
    default: return SeriesField::H;
  }
}

bool charged_series(SeriesKind k) { return k == SeriesKind::U || k == SeriesKind::U1Sp; }

int bound_of(const IrrepSpec& s) { return degree_lower_bound(real_degree(s), s.group().dim()); }

std::vector<SimpleGroupType> simple_types(int rank_cutoff) {
  std::vector<SimpleGroupType> out;
  for (int r = 1; r <= rank_cutoff; ++r) out.push_back({Family::A, r});
  for (int r = 3; r <= rank_cutoff; ++r) out.push_back({Family::B, r});
  for (int r = 2; r <= rank_cutoff; ++r) out.push_back({Family::C, r});
  for (int r = 4; r <= rank_cutoff; ++r) out.push_back({Family::D, r});
  out.push_back({Family::G, 2});
  out.push_back({Family::F, 4});
  for (int r = 6; r <= 8; ++r) out.push_back({Family::E, r});
  return out;
}

std::string key_of(const IrrepSpec& s) { return format_spec(normalize(s)); }

}  // namespace

// --- rows -------------------------------------------------------------------

IrrepSpec CandidateRow::representative() const {
  if (!series) return fixed;
  int n = condition.tail_from.value_or(INT_MAX);
  if (!condition.values.empty()) n = std::min(n, *condition.values.begin());
  return series_instance(fixed, *series, n);
}

GroupSpec CandidateRow::group() const { return representative().group(); }

std::string CandidateRow::label() const {
  if (!series) return format_spec(fixed);
  return format_spec(fixed) + " (x) " + to_string(*series) + "(n), n: " + condition.to_string();
}

std::set<std::string> CandidateRow::instances(int n_max) const {
  if (!series) return {key_of(fixed)};
  std::set<std::string> out;
  for (int n = series_start(*series); n <= n_max; ++n)
    if (condition.contains(n)) out.insert(key_of(series_instance(fixed, *series, n)));
  return out;
}

// --- evaluation -------------------------------------------------------------

Classifier::Classifier(ClassifierConfig config) : config_(std::move(config)) {
  if (!config_.data) config_.data = std::make_shared<const EmbeddedData>(EmbeddedData::builtin());
  if (config_.n_max < 4) throw std::invalid_argument("n_max must be at least 4");
}

std::optional<Evaluation> closed_form(const IrrepSpec& input, const EmbeddedData& data) {
  const IrrepSpec spec = normalize(input);
  const auto deg = real_degree(spec);
  const int dim = spec.group().dim();
  Evaluation ev;
  ev.determined = true;
  if (const auto* d = data.find_exceptional(spec)) {
    ev.cohom = d->cohom;
    ev.method = Method::embedded_data;
    ev.citation = d->citation;
  } else if (is_adjoint(spec)) {
    ev.cohom = spec.factors.front().type.rank;
    ev.method = Method::formula;
    ev.citation = "adjoint representation: cohomogeneity equals rank";
  } else if (is_standard(spec)) {
    ev.cohom = 1;
    ev.method = Method::formula;
    ev.citation = "standard representation: transitive on the unit sphere";
  } else if (const auto f = known_family(spec)) {
    ev.cohom = f->cohom;
    ev.method = Method::formula;
    ev.citation = f->citation;
  } else {
    return std::nullopt;
  }
  ev.isotropy_dim = static_cast<int>(ev.cohom - deg + dim);
  return ev;
}

const Evaluation& Classifier::evaluate(const IrrepSpec& input) {
  const IrrepSpec spec = normalize(input);
  const std::string key = format_spec(spec);
  if (auto it = evaluations_.find(key); it != evaluations_.end()) return it->second;
  Evaluation ev;
  if (auto f = closed_form(spec, *config_.data)) {
    ev = *f;
  } else {
    try {
      const LinearRep rep = realize(spec);
      const auto r = generic_cohom(rep, config_.oracle);
      ++oracle_calls_;
      ev.cohom = r.cohom;
      ev.isotropy_dim = r.isotropy_dim;
      ev.determined = true;
      ev.method = Method::numeric_oracle;
    } catch (const UnsupportedConstruction&) {
      ev.cohom = bound_of(spec);
      ev.method = Method::formula;
      ev.citation = "degree bound only";
    }
  }
  return evaluations_.emplace(key, ev).first->second;
}

std::optional<bool> Classifier::is_polar(const IrrepSpec& input) {
  const IrrepSpec spec = normalize(input);
  const std::string key = format_spec(spec);
  if (auto it = polar_.find(key); it != polar_.end()) return it->second;
  std::optional<bool> out;
  if (const auto* d = config_.data->find_exceptional(spec)) {
    out = d->polar;
  } else if (is_adjoint(spec) || is_standard(spec)) {
    out = true;
  } else if (const auto f = known_family(spec)) {
    out = f->polar;
  } else {
    try {
      out = polar_test(realize(spec), config_.oracle) == PolarVerdict::polar;
    } catch (const UnsupportedConstruction&) {
      if (spec.factors.size() == 1 && !spec.has_charge() && in_simple_polar_list(spec.factors.front())) out = true;
    }
  }
  return polar_.emplace(key, out).first->second;
}

// --- series walks -----------------------------------------------------------

struct Classifier::Line {
  IrrepSpec fixed;
  SeriesKind kind = SeriesKind::SO;
  int n_from = 0;
  std::map<int, Evaluation> values;
  std::optional<MonotoneCertificate> cert;  // c is constant beyond the last value
  bool undetermined = false;
  std::string note;

  int last_n() const { return values.empty() ? n_from - 1 : values.rbegin()->first; }
  IrrepSpec at(int n) const { return series_instance(fixed, kind, n); }
  std::string name() const { return format_spec(fixed) + " (x) " + to_string(kind) + "(n)"; }
};

struct Classifier::Explored {
  std::vector<CandidateRow> simple;
  std::vector<std::pair<IrrepSpec, Evaluation>> singles;  // circle and pair candidates
  std::vector<Line> lines;
  std::vector<std::string> warnings;
};

// Walks n upwards. Cohomogeneity is non-decreasing in n, so the walk stops
// once the value (or the degree bound) exceeds c_limit, or when
// monotone_extend certifies the tail.
Classifier::Line Classifier::walk(const IrrepSpec& fixed, SeriesKind kind, int n_from, int c_limit) {
  Line line;
  line.fixed = fixed;
  line.kind = kind;
  line.n_from = n_from = std::max(n_from, series_start(kind));
  // With a circle in the fixed factor, SU(n) has the image of U(n).
  if (kind == SeriesKind::SU && !fixed.has_charge()) {
    // For n > k, a generic point spans a k-dimensional subspace whose U(n)
    // stabiliser U(n-k) meets every determinant, so SU(n) and U(n) have the
    // same orbits; below that SU(n) is evaluated directly. U(n) bounds SU(n)
    // from below throughout.
    const Line u = walk(fixed, SeriesKind::U, n_from, c_limit);
    for (int n = n_from; n <= config_.n_max; ++n) {
      if (n > u.last_n() && !u.cert) {
        if (u.undetermined) {
          line.undetermined = true;
          line.note = "lower-bound line " + u.name() + ": " + u.note;
        }
        return line;
      }
      if (auto it = u.values.find(n); it != u.values.end() && it->second.cohom > c_limit) return line;
      const IrrepSpec s = line.at(n);
      if (bound_of(s) > c_limit) continue;
      const Evaluation& ev = evaluate(s);
      if (!ev.determined) {
        line.undetermined = true;
        line.note = "no construction for " + format_spec(s);
        return line;
      }
      line.values[n] = ev;
      if (u.cert && n >= u.last_n() && n > 2) {
        const int k = static_cast<int>(real_degree(s) / (2 * n));
        auto prev = line.values.find(n - 1);
        if (n > k && ev.cohom == u.cert->value && prev != line.values.end() && prev->second.cohom == ev.cohom) {
          int from = n;
          while (line.values.count(from - 1) && line.values.at(from - 1).cohom == ev.cohom) --from;
          line.cert = MonotoneCertificate{ev.cohom, from, n};
          return line;
        }
      }
    }
    line.undetermined = true;
    line.note = "no stable value up to n = " + std::to_string(config_.n_max);
    return line;
  }

  std::map<int, int> profile;
  for (int n = n_from; n <= config_.n_max; ++n) {
    const IrrepSpec s = line.at(n);
    if (bound_of(s) > c_limit) return line;
    const Evaluation& ev = evaluate(s);
    if (!ev.determined) {
      line.undetermined = true;
      line.note = "no construction for " + format_spec(s);
      return line;
    }
    line.values[n] = ev;
    if (ev.cohom > c_limit) return line;
    profile[n] = ev.cohom;
    const int k = static_cast<int>(real_degree(s) / (field_factor(kind) * n));
    try {
      auto r = monotone_extend(profile, StabilizationWitness{series_field(kind), k, ev.isotropy_dim});
      if (auto* c = std::get_if<MonotoneCertificate>(&r)) {
        line.cert = *c;
        return line;
      }
    } catch (const std::logic_error& e) {
      line.undetermined = true;
      line.note = e.what();
      return line;
    }
  }
  line.undetermined = true;
  line.note = "no certificate up to n = " + std::to_string(config_.n_max);
  return line;
}

// --- steps ------------------------------------------------------------------

std::vector<CandidateRow> Classifier::enumerate_simple_step(int c_max) {
  if (c_max < 1) throw std::invalid_argument("c_max must be positive");
  const int keep = c_max + 3;
  std::vector<CandidateRow> out;
  // SU(n) on the second exterior power has c about n/2, the slowest growth
  // among non-standard representations; reach it for every kept value.
  const int ranks = std::max(config_.rank_cutoff, 2 * keep + 1);
  for (const auto& t : simple_types(ranks)) {
    for (const auto& info : enumerate_irreps(t, group_dim(t) + keep)) {
      if (std::all_of(info.weight.begin(), info.weight.end(), [](int x) { return x == 0; })) continue;
      if (canonical_weight(t, info.weight) != info.weight) continue;
      IrrepSpec s;
      s.factors = {{t, info.weight}};
      s = normalize(s);
      if (bound_of(s) > keep) continue;
      const Evaluation& ev = evaluate(s);
      if (ev.determined && ev.cohom > keep) continue;
      CandidateRow row;
      row.fixed = s;
      row.cohom = CohomResult::exactly(ev.cohom, ev.method);
      if (!ev.determined) {
        row.cohom.upper = INT_MAX;
        row.undetermined = true;
      }
      row.step = "enumerate_simple_step";
      row.provenance.push_back(to_string(ev.method) + (ev.citation.empty() ? "" : ": " + ev.citation));
      out.push_back(std::move(row));
    }
  }
  return out;
}

const Classifier::Explored& Classifier::explore(int c_min, int c_max) {
  if (auto it = explored_.find({c_min, c_max}); it != explored_.end()) return *it->second;
  auto ex = std::make_shared<Explored>();
  ex->simple = enumerate_simple_step(c_max);

  // Fixed factors: irreducible representations of simple groups up to
  // cohomogeneity c_max + 3 (an Sp(1) factor lowers it by at most 3), other
  // than the standard representations that make up the series.
  std::vector<IrrepSpec> atoms;
  for (const auto& row : ex->simple) {
    if (row.undetermined) {
      ex->warnings.push_back("simple candidate " + format_spec(row.fixed) + " has degree bound " +
                             std::to_string(row.cohom.lower) + " and no construction");
      continue;
    }
    if (!is_series_vector(row.fixed.factors.front())) atoms.push_back(row.fixed);
  }
  auto charged = [](IrrepSpec s) {
    s.u1_charges = {1};
    return normalize(s);
  };
  auto single = [&](const IrrepSpec& s) {
    if (bound_of(s) > c_max) return;
    const Evaluation& ev = evaluate(s);
    if (!ev.determined) {
      ex->warnings.push_back("candidate " + format_spec(s) + " has degree bound " + std::to_string(ev.cohom) +
                             " and no construction");
      return;
    }
    if (ev.cohom <= c_max) ex->singles.emplace_back(s, ev);
  };

  // A circle acting by scalars lowers the cohomogeneity by at most one.
  for (const auto& a : atoms)
    if (evaluate(a).cohom <= c_max + 1) single(charged(a));

  // Pairs of fixed factors, at most one circle.
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i; j < atoms.size(); ++j) {
      const IrrepSpec p = tensor_specs(atoms[i], atoms[j]);
      single(p);
      single(charged(p));
    }

  auto add_line = [&](Line line) {
    if (line.undetermined) ex->warnings.push_back("series " + line.name() + ": " + line.note);
    if (!line.values.empty()) ex->lines.push_back(std::move(line));
  };

  const std::vector<SeriesKind> kinds{SeriesKind::SO, SeriesKind::SU,    SeriesKind::U,
                                      SeriesKind::Sp, SeriesKind::Sp1Sp, SeriesKind::U1Sp};
  // Fixed factor times a series.
  for (const auto& a : atoms)
    for (const IrrepSpec& f : {a, charged(a)})
      for (SeriesKind k : kinds) {
        if (f.has_charge() && (charged_series(k) || k == SeriesKind::SU)) continue;
        add_line(walk(f, k, series_start(k), c_max));
      }

  // Two series. Cohomogeneity is monotone in both parameters, so every pair
  // (m, n) with min(m, n) >= s is bounded below by the value at (s, s); SU is
  // bounded by U.
  for (std::size_t i = 0; i < kinds.size(); ++i)
    for (std::size_t j = i; j < kinds.size(); ++j) {
      const SeriesKind k1 = kinds[i], k2 = kinds[j];
      if (charged_series(k1) && charged_series(k2)) continue;
      if (k1 == SeriesKind::Sp1Sp && k2 == SeriesKind::Sp1Sp) continue;
      SeriesKind b1 = k1, b2 = k2;
      if (b1 == SeriesKind::SU && !charged_series(b2)) b1 = SeriesKind::U;
      if (b2 == SeriesKind::SU && !charged_series(b1)) b2 = SeriesKind::U;
      bool closed = false;
      for (int s = 1; s <= config_.n_max; ++s) {
        const IrrepSpec corner =
            series_instance(series_member(b1, std::max(s, series_start(b1))), b2, std::max(s, series_start(b2)));
        if (bound_of(corner) > c_max || evaluate(corner).cohom > c_max) {
          closed = true;
          break;
        }
        if (s >= series_start(k1)) add_line(walk(series_member(k1, s), k2, s, c_max));
        if (s >= series_start(k2) && k1 != k2) add_line(walk(series_member(k2, s), k1, s, c_max));
      }
      if (!closed)
        ex->warnings.push_back("series pair " + to_string(k1) + " x " + to_string(k2) + " not closed by n = " +
                               std::to_string(config_.n_max));
    }

  return *explored_.emplace(std::make_pair(c_min, c_max), ex).first->second;
}

namespace {

void add_provenance(CandidateRow& row, const std::vector<const Evaluation*>& evs, const std::string& extra) {
  std::set<std::string> seen;
  for (const auto* ev : evs) {
    std::string p = to_string(ev->method);
    if (!ev->citation.empty()) p += ": " + ev->citation;
    if (seen.insert(p).second) row.provenance.push_back(p);
  }
  if (!extra.empty()) row.provenance.push_back(extra);
}

Method combined(const std::vector<const Evaluation*>& evs) {
  for (const auto* ev : evs)
    if (ev->method == Method::embedded_data) return Method::embedded_data;
  for (const auto* ev : evs)
    if (ev->method == Method::numeric_oracle) return Method::numeric_oracle;
  return evs.empty() ? Method::formula : evs.front()->method;
}

}  // namespace

void Classifier::tensor_rows(int c_min, int c_max, Route route, const std::string& step,
                             std::vector<CandidateRow>& out) {
  const Explored& ex = explore(c_min, c_max);
  auto wanted = [&](const IrrepSpec& s) {
    const Route r = realization_route(s);
    if (route == Route::complex_realification) return r == Route::complex_realification;
    return r == route;
  };
  for (const auto& [s, ev] : ex.singles) {
    if (ev.cohom < c_min || ev.cohom > c_max || !wanted(s)) continue;
    CandidateRow row;
    row.fixed = s;
    row.cohom = CohomResult::exactly(ev.cohom, ev.method);
    row.step = step;
    add_provenance(row, {&ev}, "");
    out.push_back(std::move(row));
  }
  for (const auto& line : ex.lines) {
    const int last = line.last_n();
    if (!wanted(line.at(std::max(last, line.n_from)))) continue;
    for (int c = c_min; c <= c_max; ++c) {
      // Instances at this value, grouped by polarity.
      std::map<bool, Condition> by_polar;
      std::map<bool, std::vector<const Evaluation*>> evs;
      std::map<bool, std::vector<int>> undecided;
      for (const auto& [n, ev] : line.values) {
        if (ev.cohom != c) continue;
        const auto p = is_polar(line.at(n));
        by_polar[p.value_or(false)].values.insert(n);
        evs[p.value_or(false)].push_back(&ev);
        if (!p) undecided[false].push_back(n);
      }
      std::string cert_note;
      if (line.cert && line.cert->value == c) {
        const auto p = is_polar(line.at(last));
        Condition& cond = by_polar[p.value_or(false)];
        int from = last + 1;
        while (cond.values.count(from - 1)) cond.values.erase(--from);
        cond.tail_from = from;
        cert_note = "monotone certificate: c = " + std::to_string(c) + " for n >= " + std::to_string(from) +
                    " (checked through n = " + std::to_string(line.cert->certified_at) + ")";
        if (!p) undecided[false].push_back(last);
      }
      for (auto& [polar, cond] : by_polar) {
        std::vector<std::pair<IrrepSpec, Condition>> parts;
        // The SU(2) member is quaternionic, unlike the rest of the series.
        if (line.kind == SeriesKind::SU && cond.values.count(2)) {
          cond.values.erase(2);
          parts.push_back({line.at(2), Condition{}});
        }
        if (!cond.empty()) {
          if (cond.values.size() == 1 && !cond.tail_from)
            parts.push_back({line.at(*cond.values.begin()), Condition{}});
          else
            parts.push_back({line.fixed, cond});
        }
        for (auto& [fixed, pc] : parts) {
          CandidateRow row;
          row.fixed = fixed;
          if (!pc.empty()) {
            row.series = line.kind;
            row.condition = pc;
          }
          row.cohom = CohomResult::exactly(c, combined(evs[polar]));
          row.polar = polar;
          row.undetermined = !polar && !undecided[false].empty();
          row.step = step;
          add_provenance(row, evs[polar], row.series ? cert_note : "");
          out.push_back(std::move(row));
        }
      }
    }
  }
}

std::vector<CandidateRow> Classifier::real_tensor_step(int c_min, int c_max) {
  std::vector<CandidateRow> out;
  tensor_rows(c_min, c_max, Route::real_tensor, "real_tensor_step", out);
  return out;
}

std::vector<CandidateRow> Classifier::quaternionic_tensor_step(int c_min, int c_max) {
  std::vector<CandidateRow> out;
  tensor_rows(c_min, c_max, Route::quaternionic_tensor, "quaternionic_tensor_step", out);
  return out;
}

std::vector<CandidateRow> Classifier::complex_tensor_step(int c_min, int c_max) {
  std::vector<CandidateRow> out;
  tensor_rows(c_min, c_max, Route::complex_realification, "complex_tensor_step", out);
  return out;
}

void Classifier::polar_filter(std::vector<CandidateRow>& rows) {
  for (auto& row : rows) {
    const auto p = is_polar(row.representative());
    if (!p) {
      row.undetermined = true;
      continue;
    }
    row.polar = *p;
  }
}

ClassificationReport Classifier::run_classification(int c_min, int c_max) {
  if (c_min < 1 || c_min > c_max) throw std::invalid_argument("need 1 <= c_min <= c_max");
  ClassificationReport report;
  report.c_min = c_min;
  report.c_max = c_max;
  report.n_max = config_.n_max;

  std::vector<CandidateRow> all;
  for (auto& row : enumerate_simple_step(c_max))
    if (!row.undetermined && row.cohom.lower >= c_min && row.cohom.lower <= c_max) all.push_back(std::move(row));
  for (auto& row : real_tensor_step(c_min, c_max)) all.push_back(std::move(row));
  for (auto& row : quaternionic_tensor_step(c_min, c_max)) all.push_back(std::move(row));
  for (auto& row : complex_tensor_step(c_min, c_max)) all.push_back(std::move(row));
  polar_filter(all);

  const Explored& ex = explore(c_min, c_max);
  report.warnings = ex.warnings;

  // Greedy cover by instance sets: families with a tail first, then larger
  // sets; a row is kept only if it adds an instance.
  std::stable_sort(all.begin(), all.end(), [&](const CandidateRow& a, const CandidateRow& b) {
    if (a.cohom.lower != b.cohom.lower) return a.cohom.lower < b.cohom.lower;
    if (a.condition.tail_from.has_value() != b.condition.tail_from.has_value()) return a.condition.tail_from.has_value();
    const auto na = a.instances(config_.n_max).size(), nb = b.instances(config_.n_max).size();
    if (na != nb) return na > nb;
    return a.label() < b.label();
  });
  std::map<int, std::set<std::string>> covered;
  for (auto& row : all) {
    if (row.polar) continue;
    auto& seen = covered[row.cohom.lower];
    bool fresh = false;
    for (const auto& s : row.instances(config_.n_max)) fresh = seen.insert(s).second || fresh;
    if (!fresh) continue;
    if (row.undetermined) report.warnings.push_back("polarity undetermined for " + row.label());
    report.rows.push_back(std::move(row));
  }

  // Closed formulas only speed up the search; emitted rows are re-checked.
  for (auto& row : report.rows) {
    if (row.series || row.cohom.method != Method::formula) continue;
    try {
      const auto r = generic_cohom(realize(row.fixed), config_.oracle);
      ++oracle_calls_;
      if (r.cohom == row.cohom.lower) {
        row.cohom.method = Method::numeric_oracle;
        row.provenance.push_back("confirmed by numeric oracle");
      } else {
        report.warnings.push_back("formula gives " + std::to_string(row.cohom.lower) + " but oracle gives " +
                                  std::to_string(r.cohom) + " for " + row.label());
      }
    } catch (const UnsupportedConstruction&) {
    }
  }

  for (int c = c_min; c <= c_max; ++c)
    if (!config_.data->table(c).empty() && c <= 8)
      report.diffs.push_back(diff_tables(report.rows, c, *config_.data, config_.n_max));
  report.oracle_calls = oracle_calls_;
  return report;
}

// --- diff -------------------------------------------------------------------

TableDiff diff_tables(const std::vector<CandidateRow>& rows, int target_c, const EmbeddedData& data, int n_max) {
  TableDiff diff;
  diff.target_c = target_c;
  using Key = std::pair<std::set<std::string>, bool>;
  auto key = [&](const CandidateRow& r) { return Key{r.instances(n_max), r.condition.tail_from.has_value()}; };
  std::vector<std::pair<Key, const CandidateRow*>> ours;
  for (const auto& r : rows)
    if (!r.polar && r.cohom.exact() && r.cohom.lower == target_c) ours.emplace_back(key(r), &r);
  std::vector<bool> used(ours.size(), false);
  for (const auto& p : data.table(target_c)) {
    CandidateRow pr;
    pr.fixed = p.fixed;
    pr.series = p.series;
    pr.condition = p.condition;
    const Key k = key(pr);
    const std::string name = p.group_label + " on " + p.space_label + (p.condition.empty() ? "" : ", n: " + p.condition.to_string());
    bool found = false;
    for (std::size_t i = 0; i < ours.size(); ++i) {
      if (used[i] || ours[i].first != k) continue;
      used[i] = found = true;
      diff.matched.push_back(name);
      if (ours[i].second->cohom.method == Method::embedded_data) ++diff.data_sourced;
      break;
    }
    if (!found) diff.missing.push_back(name);
  }
  for (std::size_t i = 0; i < ours.size(); ++i)
    if (!used[i]) diff.extra.push_back(ours[i].second->label());
  return diff;
}

}  // namespace lowcohom
