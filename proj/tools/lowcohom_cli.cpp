// lowcohom: degrees, principal isotropy and cohomogeneity of orthogonal
// representations, and the classification of non-polar irreducible
// representations by cohomogeneity.

#include <iostream>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lowcohom/classifier.hpp"
#include "lowcohom/errors.hpp"

using namespace lowcohom;
using json = nlohmann::ordered_json;

namespace {

enum ExitCode { ok = 0, diff_not_clean = 1, undetermined = 2, usage = 3, unsupported = 4 };

struct CliConfig {
  std::uint64_t seed = 1;
  int trials = 8;
  int n_max = 12;
  int jobs = 1;
  std::string format = "json";
  std::string data_path;
};

using Fields = std::vector<std::pair<std::string, json>>;

void emit(const Fields& fields, const std::string& format) {
  if (format == "json") {
    json j = json::object();
    for (const auto& [k, v] : fields) j[k] = v;
    std::cout << j.dump(2) << "\n";
    return;
  }
  auto text = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (format == "csv") {
    std::cout << "key,value\n";
    for (const auto& [k, v] : fields) std::cout << k << ',' << text(v) << '\n';
  } else {
    std::cout << "| key | value |\n|---|---|\n";
    for (const auto& [k, v] : fields) std::cout << "| " << k << " | " << text(v) << " |\n";
  }
}

ClassifierConfig classifier_config(const CliConfig& cfg) {
  ClassifierConfig c;
  c.oracle.seed = cfg.seed;
  c.oracle.trials = cfg.trials;
  c.n_max = cfg.n_max;
  c.data = std::make_shared<const EmbeddedData>(cfg.data_path.empty() ? EmbeddedData::builtin()
                                                                       : EmbeddedData::load(cfg.data_path));
  return c;
}

OracleOptions oracle_options(const CliConfig& cfg) {
  OracleOptions o;
  o.seed = cfg.seed;
  o.trials = cfg.trials;
  return o;
}

int cmd_dim(const std::string& text, const CliConfig& cfg) {
  const IrrepSpec spec = normalize(parse_spec(text));
  emit({{"spec", format_spec(spec)},
        {"group", classical_name(spec.group())},
        {"group_dim", spec.group().dim()},
        {"complex_degree", complex_degree(spec)},
        {"real_degree", real_degree(spec)},
        {"fs_type", to_string(complex_type(spec))},
        {"route", to_string(realization_route(spec))}},
       cfg.format);
  return ok;
}

int cmd_fstype(const std::string& text, const CliConfig& cfg) {
  const IrrepSpec spec = normalize(parse_spec(text));
  Fields f{{"spec", format_spec(spec)},
           {"fs_type", to_string(complex_type(spec))},
           {"real_case", to_string(classify_real_irrep(spec))}};
  json factors = json::array();
  for (const auto& tw : spec.factors) factors.push_back(to_string(fs_type(tw.type, tw.weight)));
  f.emplace_back("factor_types", factors);
  emit(f, cfg.format);
  return ok;
}

int cmd_cohom(const std::string& text, bool numeric, bool formula, const CliConfig& cfg) {
  std::optional<IrrepSpec> spec;
  try {
    spec = normalize(parse_spec(text));
  } catch (const ParseError&) {
    if (formula) throw;  // construction expressions need the oracle
  }

  if (formula) {
    const auto data = classifier_config(cfg).data;
    if (auto ev = closed_form(*spec, *data)) {
      emit({{"spec", format_spec(*spec)},
            {"cohom", {{"lower", ev->cohom}, {"upper", ev->cohom}, {"method", to_string(ev->method)}}},
            {"isotropy_dim", ev->isotropy_dim},
            {"provenance", ev->citation}},
           cfg.format);
    } else {
      const auto deg = real_degree(*spec);
      emit({{"spec", format_spec(*spec)},
            {"cohom", {{"lower", degree_lower_bound(deg, spec->group().dim())}, {"upper", deg},
                       {"method", to_string(Method::formula)}}},
            {"provenance", "degree bound only; rerun with --numeric"}},
           cfg.format);
    }
    return ok;
  }

  if (!numeric && spec) {
    Classifier cl(classifier_config(cfg));
    const auto& ev = cl.evaluate(*spec);
    const auto polar = cl.is_polar(*spec);
    emit({{"spec", format_spec(*spec)},
          {"cohom", {{"lower", ev.cohom}, {"upper", ev.determined ? ev.cohom : real_degree(*spec)},
                     {"method", to_string(ev.method)}}},
          {"isotropy_dim", ev.isotropy_dim},
          {"polar", polar ? json(*polar) : json(nullptr)},
          {"provenance", ev.citation}},
         cfg.format);
    return ev.determined ? ok : undetermined;
  }

  LinearRep rep;
  try {
    rep = spec ? realize(*spec) : build_rep(text);
  } catch (const UnsupportedConstruction& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (spec) {
      const auto data = classifier_config(cfg).data;
      if (const auto* d = data->find_exceptional(*spec))
        std::cerr << "embedded data gives cohomogeneity " << d->cohom << " (" << d->citation
                  << "); rerun without --numeric to use it\n";
      else
        std::cerr << "no embedded data for this representation; --formula gives the degree bound\n";
    }
    return unsupported;
  }
  const auto r = generic_cohom(rep, oracle_options(cfg));
  emit({{"input", text},
        {"space_dim", r.space_dim},
        {"group_dim", r.group_dim},
        {"isotropy_dim", r.isotropy_dim},
        {"orbit_dim", r.orbit_dim},
        {"cohom", {{"lower", r.cohom}, {"upper", r.cohom}, {"method", to_string(Method::numeric_oracle)}}},
        {"trials", r.trials},
        {"seed", r.seed},
        {"min_attained_at_trial", r.min_attained_at_trial},
        {"exact_fallback_used", r.exact_fallback_used}},
       cfg.format);
  return ok;
}

int cmd_pig(const std::string& text, const CliConfig& cfg) {
  const IrrepSpec spec = normalize(parse_spec(text));
  const auto data = classifier_config(cfg).data;
  Fields f{{"spec", format_spec(spec)}};
  if (spec.factors.size() == 1 && !spec.has_charge()) f.emplace_back("rule", to_string(simple_pig_rule(spec)));
  if (const auto* d = data->find_exceptional(spec)) {
    f.emplace_back("isotropy", d->pig);
    f.emplace_back("method", to_string(Method::embedded_data));
    emit(f, cfg.format);
    return ok;
  }
  try {
    const LinearRep rep = realize(spec);
    const auto opt = oracle_options(cfg);
    const auto r = generic_cohom(rep, opt);
    const int trial = std::max(0, r.min_attained_at_trial);
    const auto basis = isotropy_algebra_basis(rep, random_point(rep.space_dim, opt.seed, trial, opt.coordinate_bytes));
    f.emplace_back("isotropy_dim", r.isotropy_dim);
    f.emplace_back("exact_isotropy_dim", static_cast<int>(basis.size()));
    f.emplace_back("cohom", r.cohom);
    f.emplace_back("method", to_string(Method::numeric_oracle));
  } catch (const UnsupportedConstruction& e) {
    std::cerr << "error: " << e.what() << "\n";
    return unsupported;
  }
  emit(f, cfg.format);
  return ok;
}

int cmd_classify(int c_min, int c_max, const CliConfig& cfg) {
  Classifier cl(classifier_config(cfg));
  const auto report = cl.run_classification(c_min, c_max);
  if (cfg.format == "json") std::cout << report_json(report);
  else if (cfg.format == "csv") std::cout << report_csv(report);
  else std::cout << report_markdown(report);

  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  bool undet = !report.warnings.empty();
  for (const auto& r : report.rows) undet = undet || r.undetermined;
  if (undet) return undetermined;
  for (const auto& d : report.diffs)
    if (!d.clean()) return diff_not_clean;
  return ok;
}

int cmd_verify_tables(const CliConfig& cfg) {
  Classifier cl(classifier_config(cfg));
  const auto& data = *cl.config().data;
  const auto report = cl.run_classification(6, 8);
  int code = ok;
  json out = json::array();
  for (const auto& d : report.diffs) {
    out.push_back({{"target", d.target_c},
                   {"published_rows", data.table(d.target_c).size()},
                   {"matched", d.matched.size()},
                   {"missing", d.missing},
                   {"extra", d.extra},
                   {"data_sourced", d.data_sourced},
                   {"clean", d.clean()}});
    if (!d.clean()) code = diff_not_clean;
  }
  if (cfg.format == "json") {
    std::cout << json{{"tables", out}, {"warnings", report.warnings}}.dump(2) << "\n";
  } else {
    for (const auto& t : out) {
      std::cout << "c = " << t["target"].get<int>() << ": " << t["matched"].get<int>() << "/"
                << t["published_rows"].get<int>() << " matched, " << t["missing"].size() << " missing, "
                << t["extra"].size() << " extra" << (t["clean"].get<bool>() ? " (clean)" : "") << "\n";
      for (const auto& m : t["missing"]) std::cout << "  missing: " << m.get<std::string>() << "\n";
      for (const auto& e : t["extra"]) std::cout << "  extra: " << e.get<std::string>() << "\n";
    }
  }
  if (!report.warnings.empty()) return undetermined;
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomogeneity of orthogonal representations of compact Lie groups"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  app.add_option("--seed", cfg.seed, "Seed for generic points")->envname("LOWCOHOM_SEED");
  app.add_option("--trials", cfg.trials, "Generic points tried by the oracle")->check(CLI::PositiveNumber);
  app.add_option("--nmax", cfg.n_max, "Largest series parameter listed in table comparisons")
      ->check(CLI::Range(4, 1000));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "md"}));
  app.add_option("--data", cfg.data_path, "Directory with paper_tables.txt, exceptional.txt, isoparametric.txt")
      ->envname("LOWCOHOM_DATA");
  app.add_option("--jobs", cfg.jobs, "Worker count")->check(CLI::PositiveNumber);

  std::string spec_text;
  auto* dim = app.add_subcommand("dim", "Complex and real degree of an irreducible representation");
  dim->add_option("spec", spec_text, "e.g. 'U1(1) * A5[0,0,1,0,0]'")->required();

  auto* fstype = app.add_subcommand("fstype", "Frobenius-Schur type");
  fstype->add_option("spec", spec_text)->required();

  bool numeric = false, formula = false;
  auto* cohom = app.add_subcommand("cohom", "Cohomogeneity of a representation or construction expression");
  cohom->add_option("spec", spec_text, "Spec string or expression such as 'tensorR(so(3),u(2))'")->required();
  auto* num_flag = cohom->add_flag("--numeric", numeric, "Always run the numeric oracle");
  cohom->add_flag("--formula", formula, "Closed forms and embedded data only")->excludes(num_flag);

  auto* pig = app.add_subcommand("pig", "Principal isotropy of an irreducible representation");
  pig->add_option("spec", spec_text)->required();

  int c_min = 6, c_max = 8;
  auto* classify = app.add_subcommand("classify", "Classify non-polar irreducible representations by cohomogeneity");
  classify->add_option("--min", c_min, "Smallest cohomogeneity")->check(CLI::PositiveNumber);
  classify->add_option("--max", c_max, "Largest cohomogeneity")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify-tables", "Compare the classification with the embedded tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*dim) return cmd_dim(spec_text, cfg);
    if (*fstype) return cmd_fstype(spec_text, cfg);
    if (*cohom) return cmd_cohom(spec_text, numeric, formula, cfg);
    if (*pig) return cmd_pig(spec_text, cfg);
    if (*classify) {
      if (c_min > c_max) {
        std::cerr << "error: --min exceeds --max\n";
        return usage;
      }
      return cmd_classify(c_min, c_max, cfg);
    }
    if (*verify) return cmd_verify_tables(cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
