#pragma once

// Classification of non-polar irreducible representations in a window of
// cohomogeneities, and comparison with the published tables.
//
// Every candidate is either a single simple factor (with or without a circle),
// a pair of fixed factors, or a fixed factor tensored with a classical series
// SO(n), SU(n), U(n), Sp(n), Sp(1)Sp(n), U(1)Sp(n). Series are walked in n
// until the cohomogeneity leaves the window or a monotone certificate covers
// the tail.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lowcohom/cohomcalc.hpp"
#include "lowcohom/numslice.hpp"
#include "lowcohom/repmodel.hpp"

namespace lowcohom {

enum class SeriesKind { SO, SU, U, Sp, Sp1Sp, U1Sp };

std::string to_string(SeriesKind k);
std::optional<SeriesKind> parse_series(std::string_view s);
int series_start(SeriesKind k);
/// Standard representation of the series group at n, e.g. SO(5) -> C2[0,1].
IrrepSpec series_member(SeriesKind k, int n);
/// Fixed factors tensored with the series member, in normal form.
IrrepSpec series_instance(const IrrepSpec& fixed, SeriesKind k, int n);
/// Concatenate factors; the result carries at most one circle.
IrrepSpec tensor_specs(const IrrepSpec& a, const IrrepSpec& b);

/// Finite set of parameters plus an optional tail n >= tail_from.
struct Condition {
  std::set<int> values;
  std::optional<int> tail_from;

  bool empty() const { return values.empty() && !tail_from; }
  bool contains(int n) const { return values.count(n) || (tail_from && n >= *tail_from); }
  /// "-" for the empty condition, else e.g. "3, >=5".
  std::string to_string() const;
  static Condition parse(std::string_view s);
  friend bool operator==(const Condition&, const Condition&) = default;
};

// --- embedded data ----------------------------------------------------------

struct PaperRow {
  int table = 0;  // target cohomogeneity
  std::string group_label, space_label;
  IrrepSpec fixed;
  std::optional<SeriesKind> series;
  Condition condition;
  bool polar = false;
  std::string citation;
};

struct ExceptionalDatum {
  IrrepSpec spec;
  int cohom = 0;
  bool polar = false;
  std::string pig;
  std::string citation;
};

struct IsoparametricRow {
  std::string group_label, space_label;
  IrrepSpec fixed;
  std::optional<SeriesKind> series;
  Condition condition;
  std::string pig;
  std::optional<int> pig_dim;
  std::string residual_space;
  int residual_cohom = 0;
  bool residual_is_lower_bound = false;
  std::string citation;
};

struct EmbeddedData {
  std::vector<PaperRow> tables;
  std::vector<ExceptionalDatum> exceptional;
  std::vector<IsoparametricRow> isoparametric;

  /// Data compiled into the library.
  static EmbeddedData builtin();
  /// Reads paper_tables.txt, exceptional.txt and isoparametric.txt from dir.
  static EmbeddedData load(const std::string& dir);

  std::vector<PaperRow> table(int target_c) const;
  const ExceptionalDatum* find_exceptional(const IrrepSpec& spec) const;
};

// --- rows -------------------------------------------------------------------

struct CandidateRow {
  IrrepSpec fixed;                    // the whole representation when no series
  std::optional<SeriesKind> series;
  Condition condition;
  CohomResult cohom;
  bool polar = false;
  bool undetermined = false;
  std::string step;
  std::vector<std::string> provenance;

  GroupSpec group() const;
  /// Representative instance: the smallest admissible parameter.
  IrrepSpec representative() const;
  std::string label() const;
  /// Normal-form strings of all instances with n <= n_max.
  std::set<std::string> instances(int n_max) const;
};

struct ClassifierConfig {
  OracleOptions oracle;
  int n_max = 12;
  /// Smallest rank cutoff for simple factors; raised automatically for wide windows.
  int rank_cutoff = 24;
  std::shared_ptr<const EmbeddedData> data;
};

struct Evaluation {
  int cohom = 0;            // exact value, or the lower bound when !determined
  int isotropy_dim = 0;
  bool determined = false;
  Method method = Method::numeric_oracle;
  std::string citation;
};

struct TableDiff {
  int target_c = 0;
  std::vector<std::string> missing, extra, matched;
  int data_sourced = 0;
  bool clean() const { return missing.empty() && extra.empty(); }
};

struct ClassificationReport {
  int c_min = 0, c_max = 0, n_max = 0;
  std::vector<CandidateRow> rows;     // non-polar rows in the window
  std::vector<std::string> warnings;  // undetermined candidates
  std::vector<TableDiff> diffs;       // one per target with a table
  int oracle_calls = 0;
};

class Classifier {
 public:
  explicit Classifier(ClassifierConfig config);

  std::vector<CandidateRow> enumerate_simple_step(int c_max);
  std::vector<CandidateRow> real_tensor_step(int c_min, int c_max);
  std::vector<CandidateRow> quaternionic_tensor_step(int c_min, int c_max);
  std::vector<CandidateRow> complex_tensor_step(int c_min, int c_max);
  /// Sets the polar flag; a row whose polarity cannot be decided is marked
  /// undetermined.
  void polar_filter(std::vector<CandidateRow>& rows);
  ClassificationReport run_classification(int c_min, int c_max);

  /// Memoised by normal form.
  const Evaluation& evaluate(const IrrepSpec& spec);
  /// nullopt when neither the oracle nor embedded data can decide.
  std::optional<bool> is_polar(const IrrepSpec& spec);

  const ClassifierConfig& config() const { return config_; }
  int oracle_calls() const { return oracle_calls_; }

 private:
  struct Line;
  struct Explored;

  const Explored& explore(int c_min, int c_max);
  Line walk(const IrrepSpec& fixed, SeriesKind kind, int n_from, int c_limit);
  void tensor_rows(int c_min, int c_max, Route route, const std::string& step, std::vector<CandidateRow>& out);

  ClassifierConfig config_;
  std::map<std::string, Evaluation> evaluations_;
  std::map<std::string, std::optional<bool>> polar_;
  std::map<std::pair<int, int>, std::shared_ptr<Explored>> explored_;
  int oracle_calls_ = 0;
};

/// Value without the oracle: embedded data, adjoint and standard
/// representations, and second exterior powers. nullopt otherwise.
std::optional<Evaluation> closed_form(const IrrepSpec& spec, const EmbeddedData& data);

TableDiff diff_tables(const std::vector<CandidateRow>& rows, int target_c, const EmbeddedData& data, int n_max);

// --- output -----------------------------------------------------------------

std::string report_json(const ClassificationReport& report);
std::string report_csv(const ClassificationReport& report);
std::string report_markdown(const ClassificationReport& report);

}  // namespace lowcohom
