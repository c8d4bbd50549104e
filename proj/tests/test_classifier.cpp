#include <algorithm>

#include "doctest.h"

#include "lowcohom/classifier.hpp"

using namespace lowcohom;

namespace {

Classifier& shared_classifier() {
  static Classifier cl{ClassifierConfig{}};
  return cl;
}

int oracle_cohom(const std::string& spec) {
  return generic_cohom(realize(parse_spec(spec)), OracleOptions{}).cohom;
}

bool oracle_polar(const std::string& spec) {
  return polar_test(realize(parse_spec(spec)), OracleOptions{}) == PolarVerdict::polar;
}

std::string weight_with(int rank, int index) {
  std::string s = "[";
  for (int i = 0; i < rank; ++i) s += std::string(i ? "," : "") + (i == index ? "1" : "0");
  return s + "]";
}

const CandidateRow* find_row(const std::vector<CandidateRow>& rows, const std::string& spec) {
  const std::string key = format_spec(normalize(parse_spec(spec)));
  for (const auto& r : rows)
    if (!r.series && format_spec(r.fixed) == key) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("series members") {
  CHECK(format_spec(series_member(SeriesKind::SO, 5)) == format_spec(normalize(parse_spec("C2[0,1]"))));
  CHECK(real_degree(series_member(SeriesKind::SO, 4)) == 4);
  CHECK(real_degree(series_member(SeriesKind::SO, 9)) == 9);
  CHECK(real_degree(series_member(SeriesKind::U, 3)) == 6);
  CHECK(series_member(SeriesKind::U, 3).has_charge());
  CHECK_FALSE(series_member(SeriesKind::SU, 3).has_charge());
  CHECK(real_degree(series_member(SeriesKind::Sp, 1)) == 4);
  CHECK(real_degree(series_member(SeriesKind::Sp1Sp, 3)) == 12);
  CHECK(real_degree(series_member(SeriesKind::U1Sp, 2)) == 8);
  CHECK_THROWS_AS(series_member(SeriesKind::SO, 2), std::invalid_argument);
  CHECK_THROWS_AS(series_member(SeriesKind::SU, 1), std::invalid_argument);

  const auto x = series_instance(parse_spec("A1[2]"), SeriesKind::SO, 4);
  CHECK(real_degree(x) == 12);
  CHECK_THROWS_AS(tensor_specs(parse_spec("U1(1) * A1[1]"), series_member(SeriesKind::U, 2)), std::invalid_argument);
  for (auto k : {SeriesKind::SO, SeriesKind::SU, SeriesKind::U, SeriesKind::Sp, SeriesKind::Sp1Sp, SeriesKind::U1Sp})
    CHECK(parse_series(to_string(k)) == k);
  CHECK_FALSE(parse_series("SL").has_value());
}

TEST_CASE("conditions") {
  const auto c = Condition::parse("3, >=5");
  CHECK(c.values == std::set<int>{3});
  CHECK(c.tail_from == 5);
  CHECK(c.contains(3));
  CHECK_FALSE(c.contains(4));
  CHECK(c.contains(11));
  CHECK(c.to_string() == "3, >=5");
  CHECK(Condition::parse("-").empty());
  CHECK(Condition::parse("-").to_string() == "-");
  CHECK(Condition::parse(">=4").to_string() == ">=4");
  CHECK_THROWS(Condition::parse(">=4, >=6"));
}

TEST_CASE("embedded data") {
  const auto d = EmbeddedData::builtin();
  CHECK(d.table(6).size() == 19);
  CHECK(d.table(7).size() == 14);
  CHECK(d.table(8).size() == 9);
  CHECK(d.table(9).size() == 10);
  CHECK(d.exceptional.size() == 11);
  CHECK(d.isoparametric.size() == 8);
  for (const auto& r : d.tables)
    if (r.table <= 8) CHECK_FALSE(r.polar);

  const auto* e7 = d.find_exceptional(parse_spec("U1(1) * E7[0,0,0,0,0,0,1]"));
  REQUIRE(e7 != nullptr);
  CHECK(e7->cohom == 6);
  CHECK_FALSE(e7->polar);
  CHECK(d.find_exceptional(parse_spec("A1[1]")) == nullptr);

  const auto disk = EmbeddedData::load(LOWCOHOM_SOURCE_DIR "/data");
  CHECK(disk.tables.size() == d.tables.size());
  CHECK(disk.exceptional.size() == d.exceptional.size());
  CHECK_THROWS(EmbeddedData::load(LOWCOHOM_SOURCE_DIR "/no-such-dir"));
}

TEST_CASE("second exterior powers agree with the oracle") {
  auto& cl = shared_classifier();
  for (int n = 5; n <= 8; ++n) {
    const std::string su = "A" + std::to_string(n - 1) + weight_with(n - 1, 1);
    const auto& ev = cl.evaluate(parse_spec(su));
    CHECK(ev.method == Method::formula);
    CHECK(ev.cohom == oracle_cohom(su));
    CHECK(cl.is_polar(parse_spec(su)) == oracle_polar(su));
    CHECK(cl.is_polar(parse_spec(su)) == (n % 2 == 1));
  }
  for (int n = 5; n <= 6; ++n) {
    const std::string u = "U1(1) * A" + std::to_string(n - 1) + weight_with(n - 1, 1);
    CHECK(cl.evaluate(parse_spec(u)).cohom == oracle_cohom(u));
    CHECK(cl.is_polar(parse_spec(u)) == oracle_polar(u));
  }
  for (int n = 3; n <= 5; ++n) {
    const std::string sp = "C" + std::to_string(n) + weight_with(n, 1);
    CHECK(cl.evaluate(parse_spec(sp)).cohom == oracle_cohom(sp));
    CHECK(cl.evaluate(parse_spec(sp)).cohom == n - 1);
    CHECK(cl.is_polar(parse_spec(sp)) == oracle_polar(sp));
  }
}

TEST_CASE("simple step") {
  auto& cl = shared_classifier();
  const auto rows = cl.enumerate_simple_step(9);
  for (const auto& r : rows) CHECK_FALSE(r.undetermined);
  for (const char* spec : {"A1[5]", "A7[2,0,0,0,0,0,0]", "B5[0,0,0,0,1]", "A15[0,1,0,0,0,0,0,0,0,0,0,0,0,0,0]"}) {
    const auto* r = find_row(rows, spec);
    REQUIRE_MESSAGE(r != nullptr, spec);
    CHECK(r->cohom.lower == 9);
    CHECK(cl.is_polar(r->fixed) == false);
  }
  const auto* a18 = find_row(rows, "A1[8]");
  REQUIRE(a18 != nullptr);
  CHECK(a18->cohom.lower == 6);
  // The half-spin representation of Spin(14) lies far outside the window.
  CHECK(find_row(rows, "D7[0,0,0,0,0,0,1]") == nullptr);
  CHECK(find_row(rows, "E7[1,0,0,0,0,0,0]") != nullptr);
  CHECK(find_row(rows, "E7[1,0,0,0,0,0,0]")->cohom.method == Method::embedded_data);
}

TEST_CASE("embedded cohomogeneity 9 list of simple groups") {
  auto& cl = shared_classifier();
  const auto d = EmbeddedData::builtin();
  int agree = 0;
  for (const auto& r : d.table(9)) {
    const auto& ev = cl.evaluate(r.fixed);
    const bool polar = cl.is_polar(r.fixed).value();
    CHECK(polar == r.polar);
    if (!r.polar) CHECK(ev.cohom == 9);
    if (ev.cohom == 9) ++agree;
  }
  // Two adjoint entries have rank 10 and 18.
  CHECK(agree == 8);
  CHECK(cl.evaluate(parse_spec("C10[2,0,0,0,0,0,0,0,0,0]")).cohom == 10);
  CHECK(cl.evaluate(parse_spec("A18[1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1]")).cohom == 18);
  CHECK(cl.evaluate(parse_spec("C9[2,0,0,0,0,0,0,0,0]")).cohom == 9);
  CHECK(oracle_cohom("D5[2,0,0,0,0]") == 9);
}

TEST_CASE("isoparametric data") {
  auto& cl = shared_classifier();
  const auto d = EmbeddedData::builtin();
  for (const auto& r : d.isoparametric) {
    const IrrepSpec spec = r.series ? series_instance(r.fixed, *r.series, r.condition.tail_from.value()) : r.fixed;
    CAPTURE(r.group_label);
    CHECK(cl.evaluate(spec).cohom == 2);
    CHECK(cl.is_polar(spec) == true);
    if (r.pig_dim) CHECK(cl.evaluate(spec).isotropy_dim == *r.pig_dim);
    if (r.series || r.fixed.factors.front().type.family == Family::F) continue;
    const int two = generic_cohom(diagonal_copies(realize(spec), 2), OracleOptions{}).cohom;
    // Sp(1)^3 on 3H keeps a circle at a generic point, so its cohomogeneity
    // is 12 - 9 + 1 = 4 and not the stored 3.
    if (r.group_label == "Sp(3)") {
      CHECK(r.residual_cohom == 3);
      CHECK(two == eq2_two_copies(2, 4));
    } else {
      CHECK(two == eq2_two_copies(2, r.residual_cohom));
    }
  }
}

TEST_CASE("classification at cohomogeneity 8") {
  Classifier cl{ClassifierConfig{}};
  const auto report = cl.run_classification(8, 8);
  CHECK(report.rows.size() == 9);
  CHECK(report.warnings.empty());
  REQUIRE(report.diffs.size() == 1);
  CHECK(report.diffs.front().clean());
  CHECK(report.diffs.front().matched.size() == 9);
  for (const auto& r : report.rows) {
    CHECK_FALSE(r.polar);
    CHECK(r.cohom.method == Method::numeric_oracle);
  }

  const std::string md = report_markdown(report);
  CHECK(std::count(md.begin(), md.end(), '\n') > 9);
  CHECK(md.find("9 matched, 0 missing, 0 extra") != std::string::npos);
  const std::string csv = report_csv(report);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 10);
  CHECK(report_json(report).find("\"oracle_calls\"") != std::string::npos);
}
