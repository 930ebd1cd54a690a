// dhlattice: parameter checks, single-excitation dynamics, PST/FR scans and
// self-verification for the triangular dual-Hahn spin lattice.

#include "dhl/config.hpp"
#include "dhl/errors.hpp"
#include "dhl/lattice.hpp"
#include "dhl/transfer.hpp"
#include "dhl/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum ExitCode { kOk = 0, kParameterFailure = 1, kNumericalFailure = 2, kIoFailure = 3 };

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModelOptions {
  std::string config;
  std::optional<std::string> a, b, c;
  std::optional<int> N;
  std::vector<std::string> times;
  std::optional<std::string> source;
  std::optional<std::string> format;
  std::optional<std::string> output;
  std::optional<double> tol;
};

void add_model_options(CLI::App* cmd, ModelOptions& o) {
  cmd->add_option("--config", o.config, "JSON config file");
  cmd->add_option("-a", o.a, "parameter a, e.g. 53/3");
  cmd->add_option("-b", o.b, "parameter b, e.g. 34/3");
  cmd->add_option("-c", o.c, "parameter c, e.g. 1/6");
  cmd->add_option("-N", o.N, "lattice size N");
}

void add_run_options(CLI::App* cmd, ModelOptions& o) {
  cmd->add_option("--times", o.times, "times: p/q or 3pi (multiples of pi) or plain reals")->delimiter(',');
  cmd->add_option("--source", o.source, "source site i,j");
  cmd->add_option("--format", o.format, "csv or json");
  cmd->add_option("-o,--output", o.output, "output file (default stdout)");
  cmd->add_option("--tol", o.tol, "tolerance");
}

dhl::RunConfig resolve(const ModelOptions& o) {
  dhl::RunConfig cfg;
  bool have_model = false;
  if (!o.config.empty()) {
    try {
      cfg = dhl::load_config(o.config);
    } catch (const std::runtime_error& e) {
      throw IoError(e.what());
    }
    have_model = true;
  }
  if (o.a || o.b || o.c || o.N) {
    if (!have_model && !(o.a && o.b && o.c && o.N)) {
      throw std::invalid_argument("give all of -a, -b, -c, -N (or --config)");
    }
    if (o.a) cfg.params.a = dhl::parse_rational(*o.a);
    if (o.b) cfg.params.b = dhl::parse_rational(*o.b);
    if (o.c) cfg.params.c = dhl::parse_rational(*o.c);
    if (o.N) cfg.params.N = *o.N;
    have_model = true;
  }
  if (!have_model) throw std::invalid_argument("no model given: use --config or -a/-b/-c/-N");
  if (!o.times.empty()) {
    cfg.times.clear();
    for (const auto& t : o.times) cfg.times.push_back(dhl::Time::parse(t));
  }
  if (o.source) {
    const auto comma = o.source->find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--source expects i,j");
    cfg.source = {std::stoi(o.source->substr(0, comma)), std::stoi(o.source->substr(comma + 1))};
  }
  if (o.format) cfg.format = dhl::parse_format(*o.format);
  if (o.output) cfg.output_path = *o.output;
  if (o.tol) cfg.tol = *o.tol;
  return cfg;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

dhl::CouplingVariant parse_variant(const std::string& s) {
  if (s == "corrected") return dhl::CouplingVariant::corrected;
  if (s == "printed") return dhl::CouplingVariant::printed;
  throw std::invalid_argument("unknown coupling variant '" + s + "'");
}

int cmd_validate(const ModelOptions& o, bool as_json) {
  const dhl::RunConfig cfg = resolve(o);
  const dhl::ModelParams& p = cfg.params;
  const dhl::ParamReport report = dhl::validate_params(p);
  nlohmann::json j;
  j["a"] = dhl::to_string(p.a);
  j["b"] = dhl::to_string(p.b);
  j["c"] = dhl::to_string(p.c);
  j["N"] = p.N;
  j["ok"] = report.ok();
  j["violations"] = report.violations;
  const auto spec = dhl::family_membership(p);
  if (spec) {
    const dhl::FamilyParams fp = dhl::family_params(*spec, p.N);
    j["family"] = {{"family", dhl::to_string(spec->family)},
                   {"k", spec->k},
                   {"p", spec->p},
                   {"q", spec->q},
                   {"period_over_pi", dhl::to_string(fp.period.over_pi())},
                   {"phase_condition", dhl::check_phase_condition(p, fp.period)}};
    if (spec->family == dhl::Family::even_period) {
      const dhl::Time half = dhl::Time::pi_multiple(fp.period.over_pi() / 2);
      j["family"]["fr_expected_at_over_pi"] =
          dhl::x_phase_trivial(p, half) && !dhl::y_phase_alternating(p, half)
              ? nlohmann::json(dhl::to_string(half.over_pi()))
              : nlohmann::json(nullptr);
    }
  } else {
    j["family"] = nullptr;
  }
  if (as_json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "a = " << j["a"].get<std::string>() << ", b = " << j["b"].get<std::string>()
              << ", c = " << j["c"].get<std::string>() << ", N = " << p.N << '\n';
    std::cout << "c > 0, a - b > N, b - c > N: " << (report.ok() ? "ok" : "VIOLATED") << '\n';
    for (const auto& v : report.violations) std::cout << "  " << v << '\n';
    if (spec) {
      std::cout << "family " << dhl::to_string(spec->family) << " (k=" << spec->k << ", p=" << spec->p
                << ", q=" << spec->q << "), T = " << j["family"]["period_over_pi"].get<std::string>()
                << " pi, phase condition "
                << (j["family"]["phase_condition"].get<bool>() ? "holds" : "fails") << '\n';
      if (j["family"].contains("fr_expected_at_over_pi") && !j["family"]["fr_expected_at_over_pi"].is_null()) {
        std::cout << "fractional revival expected at t = "
                  << j["family"]["fr_expected_at_over_pi"].get<std::string>() << " pi\n";
      }
    } else {
      std::cout << "not a member of the PST families\n";
    }
  }
  return report.ok() ? kOk : kParameterFailure;
}

int write_records(const dhl::RunConfig& cfg) {
  if (cfg.times.empty()) throw std::invalid_argument("no times given");
  const dhl::SpectralModel model(cfg.params);
  std::vector<dhl::Site> sites;
  for (std::size_t k = 0; k < model.dimension(); ++k) sites.push_back(model.lattice().site(k));
  if (!model.lattice().contains(cfg.source)) {
    throw std::invalid_argument("source " + dhl::to_string(cfg.source) + " outside the lattice");
  }
  const auto records = dhl::amplitude_timeseries(model, cfg.source, sites, cfg.times);
  std::ostringstream os;
  if (cfg.format == dhl::OutputFormat::csv) {
    dhl::write_csv(os, records);
  } else {
    nlohmann::json j;
    j["config"] = dhl::to_json(cfg);
    j["records"] = dhl::to_json(records);
    os << j.dump(2) << '\n';
  }
  emit(cfg.output_path, os.str());
  return kOk;
}

dhl::RunConfig figure_config(int id) {
  dhl::RunConfig cfg;
  switch (id) {
    case 1:
      cfg.params = dhl::ModelParams::parse("53/3", "34/3", "1/6", 6);
      for (const char* t : {"0/1", "1/1", "2/1", "3/1"}) cfg.times.push_back(dhl::Time::parse(t));
      break;
    case 2:
      cfg.params = dhl::ModelParams::parse("19", "23/2", "1/4", 6);
      for (const char* t : {"0/1", "1/2", "1/1", "3/2", "2/1"}) cfg.times.push_back(dhl::Time::parse(t));
      break;
    case 3:
      cfg.params = dhl::ModelParams::parse("53/3", "34/3", "1/6", 6);
      cfg.source = {1, 2};
      for (const char* t : {"0/1", "1/1", "2/1", "3/1"}) cfg.times.push_back(dhl::Time::parse(t));
      break;
    default:
      throw std::invalid_argument("figure id must be 1, 2 or 3");
  }
  return cfg;
}

int cmd_scan(const dhl::ScanBounds& bounds, const std::string& format, const std::string& output) {
  const auto rows = dhl::scan_families(bounds);
  std::ostringstream os;
  bool all_pst = true;
  for (const auto& r : rows) all_pst = all_pst && r.pst;
  if (format == "json") {
    auto arr = nlohmann::json::array();
    for (const auto& r : rows) arr.push_back(dhl::to_json(r));
    os << nlohmann::json{{"N", bounds.N}, {"tol", bounds.tol}, {"rows", arr}}.dump(2) << '\n';
  } else if (format == "csv") {
    os << "family,k,p,q,a,b,c,time_over_pi,phase_condition,pst,min_mirror_modulus,max_cross_column\n";
    for (const auto& r : rows) {
      os << dhl::to_string(r.spec.family) << ',' << r.spec.k << ',' << r.spec.p << ',' << r.spec.q << ','
         << dhl::to_string(r.params.a) << ',' << dhl::to_string(r.params.b) << ','
         << dhl::to_string(r.params.c) << ',' << dhl::to_string(r.period.over_pi()) << ','
         << (r.phase_condition ? "yes" : "no") << ',' << (r.pst ? "yes" : "no") << ','
         << dhl::format_double(r.min_mirror_modulus) << ',' << dhl::format_double(r.max_cross_column) << '\n';
    }
  } else {
    throw std::invalid_argument("unknown scan format '" + format + "'");
  }
  emit(output, os.str());
  std::cerr << rows.size() << " admissible parameter sets, "
            << (all_pst ? "all certified PST" : "NOT all certified PST") << '\n';
  return all_pst ? kOk : kNumericalFailure;
}

int cmd_verify(const std::string& level, const std::string& variant, bool as_json) {
  const dhl::VerifyLevel lv = level == "full" ? dhl::VerifyLevel::full : dhl::VerifyLevel::quick;
  if (level != "full" && level != "quick") throw std::invalid_argument("level must be quick or full");
  const auto results = dhl::run_verification(lv, parse_variant(variant));
  const nlohmann::json j = dhl::to_json(results);
  if (as_json) {
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "  value=" << dhl::format_double(r.value)
                << " threshold=" << dhl::format_double(r.threshold) << '\n';
    }
    std::cout << results.size() << " checks, " << j["failures"].size() << " failed\n";
  }
  return j["passed"].get<bool>() ? kOk : kNumericalFailure;
}

int cmd_dump(const ModelOptions& o, const std::string& variant) {
  const dhl::RunConfig cfg = resolve(o);
  const dhl::Hamiltonian h = dhl::assemble(cfg.params, parse_variant(variant));
  emit(o.output.value_or(""), dhl::to_json(h).dump(2) + "\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangular dual-Hahn spin lattice: dynamics, perfect state transfer and fractional revival"};
  app.require_subcommand(1);

  ModelOptions validate_opts;
  bool validate_json = false;
  auto* validate = app.add_subcommand("validate", "check parameter admissibility and PST family membership");
  add_model_options(validate, validate_opts);
  validate->add_flag("--json", validate_json, "JSON output");

  ModelOptions sim_opts;
  auto* simulate = app.add_subcommand("simulate", "transition amplitudes from a source to every site");
  add_model_options(simulate, sim_opts);
  add_run_options(simulate, sim_opts);

  int figure_id = 1;
  ModelOptions fig_opts;
  auto* figure = app.add_subcommand("figure", "amplitude data for the reference figures 1-3");
  figure->add_option("--id", figure_id, "figure number")->check(CLI::Range(1, 3));
  figure->add_option("--format", fig_opts.format, "csv or json");
  figure->add_option("-o,--output", fig_opts.output, "output file (default stdout)");

  dhl::ScanBounds bounds;
  std::string family = "both";
  std::string scan_format = "csv";
  std::string scan_output;
  auto* scan = app.add_subcommand("scan", "certify PST across the parameter families");
  scan->add_option("-N", bounds.N, "lattice size")->check(CLI::PositiveNumber);
  scan->add_option("--k-max", bounds.k_max, "largest k")->check(CLI::PositiveNumber);
  scan->add_option("--p-max", bounds.p_max, "largest p")->check(CLI::PositiveNumber);
  scan->add_option("--q-max", bounds.q_max, "largest q")->check(CLI::PositiveNumber);
  scan->add_option("--family", family, "odd, even or both")->check(CLI::IsMember({"odd", "even", "both"}));
  scan->add_option("--tol", bounds.tol, "PST tolerance");
  scan->add_option("--format", scan_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("-o,--output", scan_output, "output file (default stdout)");

  std::string level = "quick";
  std::string verify_variant = "corrected";
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--j-variant", verify_variant, "coupling variant (diagnostic)")
      ->check(CLI::IsMember({"corrected", "printed"}));
  verify->add_flag("--json", verify_json, "JSON output");

  ModelOptions dump_opts;
  std::string dump_variant = "corrected";
  auto* dump = app.add_subcommand("dump", "serialize the single-excitation Hamiltonian");
  add_model_options(dump, dump_opts);
  dump->add_option("-o,--output", dump_opts.output, "output file (default stdout)");
  dump->add_option("--j-variant", dump_variant, "coupling variant")->check(CLI::IsMember({"corrected", "printed"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParameterFailure;
  }

  try {
    if (*validate) return cmd_validate(validate_opts, validate_json);
    if (*simulate) return write_records(resolve(sim_opts));
    if (*figure) {
      dhl::RunConfig cfg = figure_config(figure_id);
      if (fig_opts.format) cfg.format = dhl::parse_format(*fig_opts.format);
      if (fig_opts.output) cfg.output_path = *fig_opts.output;
      return write_records(cfg);
    }
    if (*scan) {
      if (family == "odd") bounds.families = {dhl::Family::odd_period};
      if (family == "even") bounds.families = {dhl::Family::even_period};
      return cmd_scan(bounds, scan_format, scan_output);
    }
    if (*verify) return cmd_verify(level, verify_variant, verify_json);
    if (*dump) return cmd_dump(dump_opts, dump_variant);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const dhl::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParameterFailure;
  }
  return kOk;
}
