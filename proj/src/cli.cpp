#include "zetaglue/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zetaglue/cylinder.hpp"
#include "zetaglue/error.hpp"
#include "zetaglue/gluing.hpp"
#include "zetaglue/interface_ops.hpp"
#include "zetaglue/oracle.hpp"
#include "zetaglue/report.hpp"

namespace zg {
namespace {

const std::vector<std::string> kCommands = {"det", "dn-spec", "glue", "zeta", "oracle-compare"};

ZetaBackend parse_backend(const std::string& s) {
  if (s == "auto") return ZetaBackend::Auto;
  if (s == "closed") return ZetaBackend::ClosedForm;
  if (s == "numeric") return ZetaBackend::Numeric;
  fail(ErrorKind::Validation, "unknown backend '" + s + "' (auto, closed, numeric)");
}

void validate(const RunConfig& c) {
  require(std::find(kCommands.begin(), kCommands.end(), c.command) != kCommands.end(), ErrorKind::Validation,
          "unknown command '" + c.command + "'");
  require(c.format == "json" || c.format == "table", ErrorKind::Validation, "format must be json or table");
  require(std::isfinite(c.L) && c.L > 0.0, ErrorKind::Validation, "L must be positive");
  require(std::isfinite(c.alpha), ErrorKind::Validation, "alpha must be finite");
  if (c.a) require(*c.a > 0.0 && *c.a < c.L, ErrorKind::Validation, "the cut a must lie in (0, L)");
  const auto& o = c.numeric;
  require(o.target > 0.0 && o.series_tol > 0.0, ErrorKind::Validation, "tolerances must be positive");
  require(o.cutoff_scale > 0.0, ErrorKind::Validation, "cutoff-scale must be positive");
  require(o.mellin_split >= 0.0, ErrorKind::Validation, "mellin-split must be >= 0");
  require(c.cutoff > 0.0, ErrorKind::Validation, "cutoff must be positive");
  parse_backend(c.backend);
}

double need_cut(const RunConfig& c) {
  require(c.a.has_value(), ErrorKind::Validation, c.command + " needs the cut position --a");
  return *c.a;
}

Json run_det(const RunConfig& c) {
  const auto [l, r] = parse_bc_pair(c.bc, c.alpha);
  const CylinderSpec spec{CrossSection::parse(c.cross_section), c.L, l, r};
  return to_json(log_det_cylinder(spec, c.numeric, parse_backend(c.backend)));
}

Json run_dn_spec(const RunConfig& c) {
  const CrossSection cs = CrossSection::parse(c.cross_section);
  const ZetaBackend backend = parse_backend(c.backend);
  Json j;
  if (c.geometry == "rs0") {
    const double a = need_cut(c);
    const DetReport det = log_det_star_RS0(cs, c.L, a, c.alpha, c.numeric, backend);
    j = to_json(det);
    j["spectrum"] = to_json(spec_RS0(cs, c.L, a, c.alpha, c.cutoff));
    return j;
  }
  double length = c.L;
  if (c.geometry == "cut_left") length = need_cut(c);
  if (c.geometry == "cut_right") length = c.L - need_cut(c);
  const InterfaceGeometry g = InterfaceGeometry::parse(c.geometry, length);
  check_interface_invertible(cs, g, c.alpha);
  j = to_json(log_det_interface(cs, g, c.alpha, c.numeric, backend));
  j["spectrum"] = to_json(spec_interface(cs, g, c.alpha, c.cutoff));
  return j;
}

Json run_glue(const RunConfig& c) {
  const GluingConfig g{CrossSection::parse(c.cross_section), c.L, need_cut(c), c.alpha};
  const ZetaBackend backend = parse_backend(c.backend);
  return to_json(c.alpha == 0.0 ? glue_neumann_check(g, c.numeric, backend) : glue_robin_check(g, c.numeric, backend));
}

Json run_zeta(const RunConfig& c) {
  const ZetaPoint z = zeta_point(CrossSection::parse(c.cross_section), c.s, c.include_zero, c.numeric,
                                 parse_backend(c.backend));
  Json j = to_json(z);
  j["include_zero"] = c.include_zero;
  j["tolerance_achieved"] = c.numeric.target;
  j["citations"] = Json::array({"zeta(s) = sum_mu m mu^{-s}, Mellin split against the heat expansion"});
  return j;
}

Json run_oracle(const RunConfig& c) {
  require(CrossSection::parse(c.cross_section).is_point(), ErrorKind::Validation,
          "oracle-compare works on the interval alone (--cross point)");
  require(c.n >= 64, ErrorKind::Validation, "oracle-compare needs --n >= 64");
  const auto [pl, pr] = parse_bc_pair(c.bc, c.alpha);
  const auto [rl, rr] = parse_bc_pair(c.reference, c.alpha);
  const SecularProblem p{c.L, pl, pr}, ref{c.L, rl, rr};
  const OracleRelative o = relative_log_det(p, ref, c.n);
  const DetReport dp = log_det_segment(c.L, pl, pr);
  const DetReport dr = log_det_segment(c.L, rl, rr);
  const double closed = dp.log_det - dr.log_det;
  Json j;
  j["value"] = o.value;
  j["closed_form"] = closed;
  j["difference"] = o.value - closed;
  j["phase"] = dp.phase_multiple - dr.phase_multiple;
  j["problem"] = pl.describe() + "/" + pr.describe();
  j["reference"] = rl.describe() + "/" + rr.describe();
  j["eigenvalues"] = c.n;
  j["zero_modes"] = Json::array({o.zero_modes_p, o.zero_modes_ref});
  j["pairing_constant"] = o.pairing_constant;
  j["tolerance_achieved"] = o.error;
  j["terms"] = Json::array({to_json(Term{"ln Det problem", dp.log_det, dp.phase_multiple, dp.formula}),
                            to_json(Term{"-ln Det reference", -dr.log_det, -dr.phase_multiple, dr.formula})});
  j["citations"] = Json::array({dp.formula, dr.formula});
  return j;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Validation:
    case ErrorKind::Domain:
      return 2;
    case ErrorKind::InsufficientSpectrum:
    case ErrorKind::NonConvergence:
      return 3;
    case ErrorKind::SingularParameter:
      return 4;
  }
  return 1;
}

}  // namespace

RunOutput run(const RunConfig& cfg) {
  RunOutput out;
  try {
    validate(cfg);
    Json body;
    if (cfg.command == "det") body = run_det(cfg);
    else if (cfg.command == "dn-spec") body = run_dn_spec(cfg);
    else if (cfg.command == "glue") body = run_glue(cfg);
    else if (cfg.command == "zeta") body = run_zeta(cfg);
    else body = run_oracle(cfg);

    Json report;
    report["command"] = cfg.command;
    for (auto& [k, v] : body.items()) report[k] = v;
    report["config"] = config_to_json(cfg);
    out.out = cfg.format == "table" ? format_table(report) : dump_json(report);
  } catch (const InsufficientSpectrumError& e) {
    out.exit_code = 3;
    out.err = std::string("error: ") + e.what() + " (spectrum trusted up to " + std::to_string(e.trusted_cutoff()) +
              ")\n";
  } catch (const Error& e) {
    out.exit_code = exit_code(e.kind());
    out.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    out.exit_code = 1;
    out.err = std::string("internal error: ") + e.what() + "\n";
  }
  return out;
}

nlohmann::ordered_json config_to_json(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  j["cross_section"] = c.cross_section;
  j["L"] = c.L;
  j["a"] = c.a ? Json(*c.a) : Json(nullptr);
  j["alpha"] = c.alpha;
  j["bc"] = c.bc;
  j["geometry"] = c.geometry;
  j["s"] = c.s;
  j["include_zero"] = c.include_zero;
  j["cutoff"] = c.cutoff;
  j["n"] = c.n;
  j["reference"] = c.reference;
  j["backend"] = c.backend;
  j["format"] = c.format;
  j["target"] = c.numeric.target;
  j["series_tol"] = c.numeric.series_tol;
  j["cutoff_scale"] = c.numeric.cutoff_scale;
  j["mellin_split"] = c.numeric.mellin_split;
  return j;
}

RunConfig config_from_json(const nlohmann::ordered_json& j, RunConfig c) {
  require(j.is_object(), ErrorKind::Validation, "config must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    auto num = [&]() {
      require(v.is_number(), ErrorKind::Validation, "config key '" + key + "' must be a number");
      return v.get<double>();
    };
    auto str = [&]() {
      require(v.is_string(), ErrorKind::Validation, "config key '" + key + "' must be a string");
      return v.get<std::string>();
    };
    if (key == "command") c.command = str();
    else if (key == "cross_section") c.cross_section = str();
    else if (key == "L") c.L = num();
    else if (key == "a") c.a = v.is_null() ? std::nullopt : std::optional<double>(num());
    else if (key == "alpha") c.alpha = num();
    else if (key == "bc") c.bc = str();
    else if (key == "geometry") c.geometry = str();
    else if (key == "s") c.s = num();
    else if (key == "include_zero") {
      require(v.is_boolean(), ErrorKind::Validation, "config key 'include_zero' must be a boolean");
      c.include_zero = v.get<bool>();
    } else if (key == "cutoff") c.cutoff = num();
    else if (key == "n") {
      require(v.is_number_integer(), ErrorKind::Validation, "config key 'n' must be an integer");
      c.n = v.get<int>();
    } else if (key == "reference") c.reference = str();
    else if (key == "backend") c.backend = str();
    else if (key == "format") c.format = str();
    else if (key == "target") c.numeric.target = num();
    else if (key == "series_tol") c.numeric.series_tol = num();
    else if (key == "cutoff_scale") c.numeric.cutoff_scale = num();
    else if (key == "mellin_split") c.numeric.mellin_split = num();
    else fail(ErrorKind::Validation, "unknown config key '" + key + "'");
  }
  return c;
}

RunOutput run_args(const std::vector<std::string>& args) {
  CLI::App app{"Zeta-regularized determinants on product cylinders and gluing checks", "zetaglue"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  RunConfig flags;
  std::string config_path;
  double a = 0.0;
  auto* o_config = app.add_option("--config", config_path, "JSON file with RunConfig keys; flags override it");
  auto* o_cross = app.add_option("--cross", flags.cross_section, "point | circle:L | torus:L1,L2 | explicit:path");
  auto* o_L = app.add_option("--L", flags.L, "cylinder length");
  auto* o_a = app.add_option("--a", a, "cut position in (0, L)");
  auto* o_alpha = app.add_option("--alpha", flags.alpha, "Robin parameter");
  auto* o_bc = app.add_option("--bc", flags.bc, "boundary pair: dd nn nd dn rr nr rn dr rd");
  auto* o_geom = app.add_option("--geometry", flags.geometry,
                                "both_ends | left_neumann_cut | neumann_robin_end | cut_left | cut_right | rs0");
  auto* o_s = app.add_option("--s", flags.s, "zeta argument");
  auto* o_zero = app.add_flag("--include-zero", flags.include_zero, "count zero modes in zeta(0)");
  auto* o_cutoff = app.add_option("--cutoff", flags.cutoff, "largest Delta_Y eigenvalue listed by dn-spec");
  auto* o_n = app.add_option("--n", flags.n, "oracle eigenvalue count");
  auto* o_ref = app.add_option("--reference", flags.reference, "reference boundary pair for oracle-compare");
  auto* o_backend = app.add_option("--backend", flags.backend, "auto | closed | numeric");
  auto* o_format = app.add_option("--format", flags.format, "json | table");
  auto* o_target = app.add_option("--target", flags.numeric.target, "absolute target for regularized values");
  auto* o_stol = app.add_option("--series-tol", flags.numeric.series_tol, "tail bound for convergent series");
  auto* o_scale = app.add_option("--cutoff-scale", flags.numeric.cutoff_scale, "multiplier on spectral cutoffs");
  auto* o_split = app.add_option("--mellin-split", flags.numeric.mellin_split, "Mellin split point (0 = auto)");

  std::vector<CLI::App*> subs;
  subs.push_back(app.add_subcommand("det", "ln Det of the cylinder Laplacian"));
  subs.push_back(app.add_subcommand("dn-spec", "spectrum and ln Det of an interface operator"));
  subs.push_back(app.add_subcommand("glue", "term-by-term gluing residual"));
  subs.push_back(app.add_subcommand("zeta", "spectral zeta function of the cross-section"));
  subs.push_back(app.add_subcommand("oracle-compare", "segment determinants against eigenvalue sums"));

  RunOutput out;
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out.out = app.help();
    return out;
  } catch (const CLI::CallForAllHelp&) {
    out.out = app.help("", CLI::AppFormatMode::All);
    return out;
  } catch (const CLI::ParseError& e) {
    out.exit_code = 2;
    out.err = std::string("error: ") + e.what() + "\n";
    return out;
  }

  RunConfig cfg;
  try {
    if (o_config->count() > 0) {
      std::ifstream in(config_path);
      require(bool(in), ErrorKind::Validation, "cannot open config '" + config_path + "'");
      Json j;
      try {
        j = Json::parse(in);
      } catch (const Json::parse_error& e) {
        fail(ErrorKind::Validation, "config '" + config_path + "': " + e.what());
      }
      cfg = config_from_json(j);
    }
  } catch (const Error& e) {
    out.exit_code = 2;
    out.err = std::string("error: ") + e.what() + "\n";
    return out;
  }

  for (auto* s : subs)
    if (s->parsed()) cfg.command = s->get_name();
  if (o_cross->count()) cfg.cross_section = flags.cross_section;
  if (o_L->count()) cfg.L = flags.L;
  if (o_a->count()) cfg.a = a;
  if (o_alpha->count()) cfg.alpha = flags.alpha;
  if (o_bc->count()) cfg.bc = flags.bc;
  if (o_geom->count()) cfg.geometry = flags.geometry;
  if (o_s->count()) cfg.s = flags.s;
  if (o_zero->count()) cfg.include_zero = flags.include_zero;
  if (o_cutoff->count()) cfg.cutoff = flags.cutoff;
  if (o_n->count()) cfg.n = flags.n;
  if (o_ref->count()) cfg.reference = flags.reference;
  if (o_backend->count()) cfg.backend = flags.backend;
  if (o_format->count()) cfg.format = flags.format;
  if (o_target->count()) cfg.numeric.target = flags.numeric.target;
  if (o_stol->count()) cfg.numeric.series_tol = flags.numeric.series_tol;
  if (o_scale->count()) cfg.numeric.cutoff_scale = flags.numeric.cutoff_scale;
  if (o_split->count()) cfg.numeric.mellin_split = flags.numeric.mellin_split;

  if (cfg.command.empty()) {
    out.exit_code = 2;
    out.err = "error: no command given (det, dn-spec, glue, zeta, oracle-compare)\n";
    return out;
  }
  return run(cfg);
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const RunOutput r = run_args(args);
  std::cout << r.out << std::flush;
  std::cerr << r.err << std::flush;
  return r.exit_code;
}

}  // namespace zg
