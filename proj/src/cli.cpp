#include "bras/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bras/csv_io.hpp"
#include "bras/version.hpp"

namespace bras {

namespace {

std::string fmt_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct RawOptions {
  std::string system = "lambda";
  std::string abscissa = "delta";
  std::string range = "-20:20:2001";
  double field_b = 5.0;
  double probe_delta = 0.0;
  std::string probe_lock;
  double omega = 0.0;
  double delta_pump = 0.0;
  std::string pump_lock;
  double gamma_epg = 4.0 / 3.0;
  double gamma_emg = 1.0;
  double gamma_fg = 0.0;
  double gamma_upper = 0.45;
  double od = 0.0;
  double density_cm3 = 0.0;
  double wavelength_nm = 0.0;
  double length_cm = 0.0;
  std::string profile = "lorentz";
  double width = 0.0;
  std::string out;
  int precision = 12;
};

struct SubOptions {
  CLI::App* sub = nullptr;
  RawOptions raw{};
  CLI::Option* opt_b = nullptr;
  CLI::Option* opt_delta = nullptr;
  CLI::Option* opt_delta_lock = nullptr;
  CLI::Option* opt_pump = nullptr;
  CLI::Option* opt_pump_lock = nullptr;
  CLI::Option* opt_od = nullptr;
  CLI::Option* opt_density = nullptr;
};

void add_output_options(CLI::App* sub, RawOptions& raw) {
  sub->add_option("--out", raw.out, "output path (default: stdout)");
  sub->add_option("--precision", raw.precision,
                  "significant digits in emitted values")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();
}

void add_physics_options(SubOptions& s, bool with_axis) {
  CLI::App* sub = s.sub;
  RawOptions& raw = s.raw;
  sub->add_option("--system", raw.system, "level scheme")
      ->check(CLI::IsMember({"lambda", "ladder"}))
      ->capture_default_str();
  if (with_axis) {
    sub->add_option("--abscissa", raw.abscissa, "scan axis")
        ->check(CLI::IsMember({"delta", "field"}))
        ->capture_default_str();
    sub->add_option("--range", raw.range, "grid as start:stop:count")
        ->capture_default_str();
  }
  s.opt_b = sub->add_option("--B", raw.field_b,
                            "field magnitude |B|, gamma units")
                ->check(CLI::PositiveNumber)
                ->capture_default_str();
  s.opt_delta =
      sub->add_option("--delta", raw.probe_delta,
                      "probe detuning, gamma units")
          ->capture_default_str();
  if (with_axis) {
    s.opt_delta_lock =
        sub->add_option("--delta-lock", raw.probe_lock,
                        "bind the probe detuning to the field in field scans")
            ->check(CLI::IsMember({"-B", "+B"}));
    s.opt_delta->excludes(s.opt_delta_lock);
    s.opt_delta_lock->excludes(s.opt_delta);
  }
  sub->add_option("--Omega", raw.omega,
                  "control half Rabi frequency, gamma units")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  s.opt_pump = sub->add_option("--Delta", raw.delta_pump,
                               "pump detuning, gamma units")
                   ->capture_default_str();
  s.opt_pump_lock =
      sub->add_option("--Delta-lock", raw.pump_lock,
                      "bind the pump detuning to the field")
          ->check(CLI::IsMember({"2B", "-B"}));
  s.opt_pump->excludes(s.opt_pump_lock);
  s.opt_pump_lock->excludes(s.opt_pump);
  sub->add_option("--Gamma-epg", raw.gamma_epg,
                  "sigma+ coherence decay (lambda scheme)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sub->add_option("--Gamma-emg", raw.gamma_emg,
                  "sigma- coherence decay (lambda scheme)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sub->add_option("--Gamma-fg", raw.gamma_fg,
                  "ground-state dephasing (lambda scheme)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sub->add_option("--Gamma-upper", raw.gamma_upper,
                  "upper-level width (ladder scheme)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  s.opt_od = sub->add_option("--od", raw.od, "optical depth (dimensionless)")
                 ->check(CLI::NonNegativeNumber)
                 ->capture_default_str();
  s.opt_density = sub->add_option("--N", raw.density_cm3,
                                  "number density, cm^-3")
                      ->check(CLI::NonNegativeNumber);
  CLI::Option* opt_lam = sub->add_option("--lambda-nm", raw.wavelength_nm,
                                         "probe wavelength, nm")
                             ->check(CLI::PositiveNumber);
  CLI::Option* opt_len =
      sub->add_option("--L-cm", raw.length_cm, "cell length, cm")
          ->check(CLI::PositiveNumber);
  s.opt_od->excludes(s.opt_density);
  s.opt_od->excludes(opt_lam);
  s.opt_od->excludes(opt_len);
  s.opt_density->needs(opt_lam);
  s.opt_density->needs(opt_len);
  opt_lam->needs(s.opt_density);
  opt_len->needs(s.opt_density);
  add_output_options(sub, raw);
  sub->set_config("--config", "",
                  "scenario file with flat key = value lines");
  sub->allow_config_extras(CLI::config_extras_mode::error);
}

ScanRange parse_range(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(':', second + 1) != std::string::npos) {
    throw CliError("--range: expected start:stop:count, got '" + text + "'",
                   1);
  }
  ScanRange range;
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, first);
    const std::string b = text.substr(first + 1, second - first - 1);
    const std::string c = text.substr(second + 1);
    range.start = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    range.stop = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    range.count = std::stoi(c, &used);
    if (used != c.size()) throw std::invalid_argument(c);
  } catch (const std::exception&) {
    throw CliError("--range: expected start:stop:count, got '" + text + "'",
                   1);
  }
  if (range.count < 2) throw CliError("--range: count must be >= 2", 1);
  if (!(range.start < range.stop)) {
    throw CliError("--range: start must be < stop", 1);
  }
  return range;
}

ProbeLock parse_probe_lock(const std::string& text) {
  if (text == "-B") return ProbeLock::minus_b;
  if (text == "+B") return ProbeLock::plus_b;
  return ProbeLock::free_value;
}

PumpLock parse_pump_lock(const std::string& text) {
  if (text == "2B") return PumpLock::twice_b;
  if (text == "-B") return PumpLock::minus_b;
  return PumpLock::free_value;
}

// Assemble the ScanSpec shared by scan, point and doppler from the raw flag
// values, rejecting combinations that have no meaning for the command.
void build_spec(const SubOptions& s, bool with_axis, bool with_doppler,
                RunConfig& cfg) {
  const RawOptions& raw = s.raw;
  ScanSpec& spec = cfg.spec;
  spec.system = raw.system == "ladder" ? Scheme::ladder : Scheme::lambda;
  if (with_axis) {
    spec.abscissa =
        raw.abscissa == "field" ? Abscissa::field : Abscissa::delta;
    spec.range = parse_range(raw.range);
    if (spec.abscissa == Abscissa::delta) {
      if (s.opt_delta_lock->count() > 0) {
        throw CliError("--delta-lock requires --abscissa field", 1);
      }
      if (s.opt_delta->count() > 0) {
        throw CliError(
            "--delta conflicts with --abscissa delta (the probe detuning is "
            "the scan axis)",
            1);
      }
    } else {
      if (s.opt_b->count() > 0) {
        throw CliError(
            "--B conflicts with --abscissa field (the field magnitude is "
            "the scan axis)",
            1);
      }
      if (!(spec.range.start > 0.0)) {
        throw CliError("--range: field scans require start > 0", 1);
      }
    }
  }
  spec.field_b = raw.field_b;
  spec.probe_delta = raw.probe_delta;
  spec.probe_lock = parse_probe_lock(raw.probe_lock);
  spec.drive.omega = raw.omega;
  spec.drive.delta_pump = raw.delta_pump;
  spec.pump_lock = parse_pump_lock(raw.pump_lock);
  spec.lambda_medium = {raw.gamma_epg, raw.gamma_emg, raw.gamma_fg};
  spec.ladder_medium = {raw.gamma_upper};
  std::string od_provenance = "default";
  if (s.opt_density->count() > 0) {
    spec.geometry = PropagationGeometry::from_medium(
        raw.density_cm3, raw.wavelength_nm * 1e-7, raw.length_cm);
    od_provenance = "derived";
  } else {
    spec.geometry = PropagationGeometry::from_optical_depth(raw.od);
    if (s.opt_od->count() > 0) od_provenance = "explicit";
  }
  if (with_doppler) {
    if (spec.system != Scheme::lambda) {
      throw CliError(
          "Doppler averaging is not supported for the ladder scheme", 1);
    }
    if (!(raw.width > 0.0)) {
      throw CliError("--width must be > 0", 1);
    }
    spec.doppler = VelocityProfile{
        raw.profile == "maxwell" ? ProfileKind::maxwell : ProfileKind::lorentz,
        raw.width};
  }
  cfg.point_delta = raw.probe_delta;
  cfg.out_path = raw.out;
  cfg.precision = raw.precision;

  const char* command_name = with_doppler ? "doppler"
                             : with_axis  ? "scan"
                                          : "point";
  spec.metadata.emplace_back("command", command_name);
  if (!with_axis) {
    // Point evaluations have no axis; record the probe detuning instead.
    spec.metadata.emplace_back("delta", fmt_num(cfg.point_delta));
    spec.metadata.emplace_back("B", fmt_num(spec.field_b));
  }
  append_parameter_metadata(spec, od_provenance);
  if (with_doppler) {
    spec.metadata.emplace_back("doppler_profile", raw.profile);
    spec.metadata.emplace_back("doppler_width", fmt_num(raw.width));
    spec.metadata.emplace_back("doppler_width_provenance", "user");
  }
}

std::string metadata_header(const ScanSpec& spec) {
  std::string line = "# bras-sim v";
  line += kVersion;
  line += "; params: ";
  bool first = true;
  for (const auto& [key, value] : spec.metadata) {
    if (!first) line += ',';
    line += key;
    line += '=';
    line += value;
    first = false;
  }
  return line;
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
  RunConfig cfg;
  CLI::App app{"unpolarized-light transmission asymmetry in magnetized "
               "three-level vapors"};
  app.name("bras-sim");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("bras-sim v") + kVersion);

  CLI::App* fig = app.add_subcommand(
      "figure", "run a built-in scenario preset and emit its CSV table");
  std::string figure_name;
  fig->add_option("name", figure_name, "preset name, e.g. fig3")->required();
  RawOptions fig_raw;
  add_output_options(fig, fig_raw);

  SubOptions scan;
  scan.sub = app.add_subcommand(
      "scan", "scan the probe detuning or the field magnitude");
  add_physics_options(scan, /*with_axis=*/true);

  SubOptions point;
  point.sub = app.add_subcommand(
      "point", "evaluate susceptibilities and transmittivities at one point");
  add_physics_options(point, /*with_axis=*/false);

  SubOptions doppler;
  doppler.sub = app.add_subcommand(
      "doppler", "scan with velocity averaging (lambda scheme only)");
  add_physics_options(doppler, /*with_axis=*/true);
  doppler.sub->add_option("--profile", doppler.raw.profile,
                          "velocity profile")
      ->check(CLI::IsMember({"maxwell", "lorentz"}))
      ->capture_default_str();
  doppler.sub->add_option("--width", doppler.raw.width,
                          "profile width k*omega_D, gamma units")
      ->check(CLI::PositiveNumber)
      ->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("bras-sim");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    throw CliError(app.help(), 0);
  } catch (const CLI::CallForVersion& e) {
    throw CliError(std::string("bras-sim v") + kVersion + "\n", 0);
  } catch (const CLI::ParseError& e) {
    const int code = e.get_exit_code();
    throw CliError(e.what(), code == 0 ? 1 : code);
  }

  if (fig->parsed()) {
    cfg.command = RunConfig::Command::figure;
    cfg.figure_name = figure_name;
    try {
      cfg.spec = figure_preset(figure_name);
    } catch (const std::invalid_argument& e) {
      throw CliError(e.what(), 1);
    }
    cfg.out_path = fig_raw.out;
    cfg.precision = fig_raw.precision;
    return cfg;
  }
  if (scan.sub->parsed()) {
    cfg.command = RunConfig::Command::scan;
    build_spec(scan, true, false, cfg);
    return cfg;
  }
  if (point.sub->parsed()) {
    cfg.command = RunConfig::Command::point;
    build_spec(point, false, false, cfg);
    return cfg;
  }
  cfg.command = RunConfig::Command::doppler;
  build_spec(doppler, true, true, cfg);
  return cfg;
}

void point_eval(const RunConfig& config, std::ostream& out) {
  const ScanSpec& spec = config.spec;
  const double b = spec.field_b;
  if (!(b > 0.0)) throw std::invalid_argument("field magnitude must be > 0");
  Drive drive = spec.drive;
  switch (spec.pump_lock) {
    case PumpLock::twice_b:
      drive.delta_pump = 2.0 * b;
      break;
    case PumpLock::minus_b:
      drive.delta_pump = -b;
      break;
    case PumpLock::free_value:
      break;
  }
  const double delta = config.point_delta;
  SusceptibilityPair fwd, rev;
  if (spec.system == Scheme::lambda) {
    fwd = chi_lambda_dressed(delta, {.b = b}, drive, spec.lambda_medium);
    rev = chi_lambda_dressed(delta, {.b = -b}, drive, spec.lambda_medium);
  } else {
    fwd = chi_ladder_dressed(delta, {.b = b}, drive, spec.ladder_medium);
    rev = chi_ladder_dressed(delta, {.b = -b}, drive, spec.ladder_medium);
  }
  const TransmissionPair t =
      transmission_from_susceptibilities(fwd, rev, spec.geometry);

  const int p = config.precision;
  out << metadata_header(spec) << '\n';
  out << "re_chi_plus_fwd = " << format_csv_value(fwd.chi_plus.real(), p)
      << '\n';
  out << "im_chi_plus_fwd = " << format_csv_value(fwd.chi_plus.imag(), p)
      << '\n';
  out << "re_chi_minus_fwd = " << format_csv_value(fwd.chi_minus.real(), p)
      << '\n';
  out << "im_chi_minus_fwd = " << format_csv_value(fwd.chi_minus.imag(), p)
      << '\n';
  out << "re_chi_plus_rev = " << format_csv_value(rev.chi_plus.real(), p)
      << '\n';
  out << "im_chi_plus_rev = " << format_csv_value(rev.chi_plus.imag(), p)
      << '\n';
  out << "re_chi_minus_rev = " << format_csv_value(rev.chi_minus.real(), p)
      << '\n';
  out << "im_chi_minus_rev = " << format_csv_value(rev.chi_minus.imag(), p)
      << '\n';
  out << "T_fwd = " << format_csv_value(t.t_forward, p) << '\n';
  out << "T_rev = " << format_csv_value(t.t_reversed, p) << '\n';
  out << "ratio = " << format_csv_value(t.ratio, p) << '\n';
}

int run_cli(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);

  RunConfig cfg;
  try {
    cfg = parse_config(args);
  } catch (const CliError& e) {
    if (e.exit_code == 0) {
      std::cout << e.what();
      return 0;
    }
    std::cerr << "bras-sim: " << e.what() << '\n';
    return e.exit_code;
  }

  try {
    if (cfg.command == RunConfig::Command::point) {
      if (cfg.out_path.empty()) {
        point_eval(cfg, std::cout);
      } else {
        std::ofstream file(cfg.out_path, std::ios::binary);
        if (!file) {
          throw std::runtime_error("cannot open '" + cfg.out_path +
                                   "' for writing");
        }
        point_eval(cfg, file);
      }
    } else {
      const ScanTable table = run_scan(cfg.spec);
      if (cfg.out_path.empty()) {
        emit_csv(table, std::cout, cfg.precision);
      } else {
        write_csv_file(table, cfg.out_path, cfg.precision);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "bras-sim: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace bras
