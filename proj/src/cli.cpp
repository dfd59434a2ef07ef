#include "fermisea/cli.hpp"

#include <algorithm>
#include <array>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "fermisea/emission.hpp"
#include "fermisea/errors.hpp"
#include "fermisea/quadrature.hpp"
#include "fermisea/recoil.hpp"
#include "fermisea/special.hpp"
#include "fermisea/svg.hpp"

namespace fermisea::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double kPi = std::numbers::pi;
constexpr double kDegPerRad = 180.0 / std::numbers::pi;

// ---------------------------------------------------------------------------
// Tabular output

struct Column {
  std::string name;
  std::variant<std::vector<long long>, std::vector<double>, std::vector<std::string>> values;
};

struct Dataset {
  std::vector<Column> columns;

  std::size_t rows() const {
    if (columns.empty()) return 0;
    return std::visit([](const auto& v) { return v.size(); }, columns.front().values);
  }
};

struct CommandOutput {
  Dataset data;
  std::vector<svg::Panel> panels;
  std::string svg_meta;
};

// 12 significant digits, '.' decimal separator, locale independent.
std::string format_value(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::string format_value(long long v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string to_csv(const Dataset& data) {
  std::ostringstream out;
  for (std::size_t c = 0; c < data.columns.size(); ++c) {
    if (c) out << ',';
    out << data.columns[c].name;
  }
  out << '\n';
  const std::size_t rows = data.rows();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < data.columns.size(); ++c) {
      if (c) out << ',';
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::vector<std::string>>) {
              out << v[r];
            } else {
              out << format_value(v[r]);
            }
          },
          data.columns[c].values);
    }
    out << '\n';
  }
  return out.str();
}

json params_object(const RunConfig& config) {
  json p;
  p["command"] = to_string(config.command);
  switch (config.command) {
    case Command::Pattern:
      p["shape"] = to_string(config.shape);
      p["lambda"] = config.lambda;
      p["eta2"] = config.eta2;
      p["nf"] = config.fermi_shell;
      p["theta_samples"] = config.theta_samples;
      break;
    case Command::Shells:
      p["shape"] = to_string(config.shape);
      p["lambda"] = config.lambda;
      p["eta2"] = config.eta2;
      break;
    case Command::Degeneracy:
    case Command::Count:
      p["shape"] = to_string(config.shape);
      p["lambda"] = config.lambda;
      p["nf"] = config.fermi_shell;
      break;
    case Command::TightSweep:
      p["shape"] = to_string(config.shape);
      p["eta2"] = config.eta2;
      p["nf"] = config.fermi_shell;
      p["lambda_min"] = config.lambda_min;
      p["lambda_max"] = config.lambda_max;
      p["lambda_samples"] = config.lambda_samples;
      break;
    case Command::FermiShell:
      p["shape"] = to_string(config.shape);
      p["lambda"] = config.lambda;
      p["atoms"] = config.atoms;
      break;
    case Command::Figure:
      p["figure"] = config.figure_id;
      p["theta_samples"] = config.theta_samples;
      break;
  }
  p["format"] = to_string(config.format);
  p["out"] = config.out_path;
  return p;
}

std::string to_json_text(const RunConfig& config, const Dataset& data) {
  json doc;
  doc["params"] = params_object(config);
  json series;
  for (const Column& col : data.columns) {
    std::visit([&](const auto& v) { series[col.name] = v; }, col.values);
  }
  doc["series"] = series;
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Command handlers

std::vector<double> degrees(const std::vector<double>& radians) {
  std::vector<double> out(radians.size());
  for (std::size_t i = 0; i < radians.size(); ++i) out[i] = radians[i] * kDegPerRad;
  return out;
}

CommandOutput handle_pattern(const RunConfig& config) {
  const EmissionProblem problem(TrapGeometry(config.shape, config.lambda),
                                FermiSea(config.fermi_shell), config.eta2);
  const AngularPattern pattern = sample_pattern(problem, config.theta_samples);

  CommandOutput out;
  out.data.columns = {{"theta_deg", degrees(pattern.theta)}, {"m_f", pattern.value}};
  svg::Panel panel;
  panel.kind = svg::Panel::Kind::Polar;
  panel.title = "M_f(theta), " + to_string(config.shape) +
                ", lambda=" + format_value(static_cast<long long>(config.lambda)) +
                ", eta2=" + format_value(config.eta2) +
                ", nF=" + format_value(static_cast<long long>(config.fermi_shell));
  panel.y_label = "M_f";
  panel.series = {{"M_f", pattern.theta, pattern.value}};
  out.panels = {panel};
  out.svg_meta = "radial scale: linear";
  return out;
}

CommandOutput handle_shells(const RunConfig& config) {
  const RecoilCoupling coupling(TrapGeometry(config.shape, config.lambda), config.eta2);
  const ShellSpectrum spectrum = shell_spectrum(coupling);

  std::vector<long long> shells(spectrum.probabilities.size());
  for (std::size_t i = 0; i < shells.size(); ++i) shells[i] = static_cast<long long>(i);

  CommandOutput out;
  out.data.columns = {{"n", shells}, {"p_e", spectrum.probabilities}};
  svg::Panel panel;
  panel.kind = svg::Panel::Kind::Stem;
  panel.title = "Shell emission probability, " + to_string(config.shape) +
                ", lambda=" + format_value(static_cast<long long>(config.lambda)) +
                ", eta2=" + format_value(config.eta2);
  panel.x_label = "shell n";
  panel.y_label = "P_e";
  svg::Series series{"P_e", {}, spectrum.probabilities};
  series.x.resize(shells.size());
  for (std::size_t i = 0; i < shells.size(); ++i) series.x[i] = static_cast<double>(i);
  panel.series = {series};
  out.panels = {panel};
  return out;
}

CommandOutput handle_degeneracy(const RunConfig& config) {
  const TrapGeometry geom(config.shape, config.lambda);
  std::vector<long long> shells;
  std::vector<long long> degeneracies;
  std::vector<long long> cumulative;
  for (int n = 0; n <= config.fermi_shell; ++n) {
    shells.push_back(n);
    degeneracies.push_back(degeneracy(geom, n));
    cumulative.push_back(cumulative_states(geom, n));
  }

  CommandOutput out;
  out.data.columns = {
      {"n", shells}, {"degeneracy", degeneracies}, {"cumulative_states", cumulative}};
  svg::Panel panel;
  panel.kind = svg::Panel::Kind::Stem;
  panel.title = "Shell degeneracy, " + to_string(config.shape) +
                ", lambda=" + format_value(static_cast<long long>(config.lambda));
  panel.x_label = "shell n";
  panel.y_label = "g_n";
  svg::Series series{"g_n", {}, {}};
  for (std::size_t i = 0; i < shells.size(); ++i) {
    series.x.push_back(static_cast<double>(shells[i]));
    series.y.push_back(static_cast<double>(degeneracies[i]));
  }
  panel.series = {series};
  out.panels = {panel};
  return out;
}

CommandOutput handle_count(const RunConfig& config) {
  const TrapGeometry geom(config.shape, config.lambda);
  const long long states = cumulative_states(geom, config.fermi_shell);

  CommandOutput out;
  out.data.columns = {
      {"n_f", std::vector<long long>{config.fermi_shell}},
      {"states", std::vector<long long>{states}},
  };
  svg::Panel panel;
  panel.kind = svg::Panel::Kind::Stem;
  panel.title = "Cumulative state count";
  panel.x_label = "n_F";
  panel.y_label = "S";
  panel.series = {{"S", {static_cast<double>(config.fermi_shell)}, {static_cast<double>(states)}}};
  out.panels = {panel};
  return out;
}

CommandOutput handle_tight_sweep(const RunConfig& config) {
  const auto sweep = tight_sweep(config.shape, config.eta2, config.fermi_shell,
                                 config.lambda_min, config.lambda_max, config.lambda_samples);
  std::vector<double> lambdas;
  std::vector<double> values;
  lambdas.reserve(sweep.size());
  values.reserve(sweep.size());
  for (const auto& [lambda, value] : sweep) {
    lambdas.push_back(lambda);
    values.push_back(value);
  }

  CommandOutput out;
  out.data.columns = {{"lambda", lambdas}, {"m_f", values}};
  svg::Panel panel;
  panel.kind = svg::Panel::Kind::XY;
  panel.title = "Tight-axis M_f sweep, eta2=" + format_value(config.eta2) +
                ", nF=" + format_value(static_cast<long long>(config.fermi_shell));
  panel.x_label = "lambda";
  panel.y_label = "M_f";
  panel.series = {{"M_f", lambdas, values}};
  out.panels = {panel};
  return out;
}

CommandOutput handle_fermi_shell(const RunConfig& config) {
  const TrapGeometry geom(config.shape, config.lambda);
  const ShellFill fill = fermi_shell_for_atoms(geom, config.atoms);

  CommandOutput out;
  out.data.columns = {
      {"atoms", std::vector<long long>{config.atoms}},
      {"n_f", std::vector<long long>{fill.shell}},
      {"top_shell_occupancy", std::vector<long long>{fill.occupancy}},
  };
  svg::Panel panel;
  panel.kind = svg::Panel::Kind::Stem;
  panel.title = "Fermi shell for atom number";
  panel.x_label = "atoms";
  panel.y_label = "n_F";
  panel.series = {
      {"n_F", {static_cast<double>(config.atoms)}, {static_cast<double>(fill.shell)}}};
  out.panels = {panel};
  return out;
}

// ---------------------------------------------------------------------------
// Figure presets (parameters fixed by the reproduced captions)

CommandOutput figure_spectra_and_inhibition(Shape shape, const RunConfig&) {
  const double eta2 = 36.0;
  const std::vector<int> lambdas = {10, 23, 46};
  const int max_fermi = 100;

  std::vector<std::string> kind;
  std::vector<long long> lambda_col;
  std::vector<long long> x;
  std::vector<double> value;
  svg::Panel spectra;
  spectra.kind = svg::Panel::Kind::Stem;
  spectra.title = "Shell emission probability, " + to_string(shape) + ", eta2=36";
  spectra.x_label = "shell n";
  spectra.y_label = "P_e";
  svg::Panel inhibition;
  inhibition.kind = svg::Panel::Kind::XY;
  inhibition.title = "Angle-averaged M_f vs Fermi shell";
  inhibition.x_label = "n_F";
  inhibition.y_label = "M_f";

  for (int lambda : lambdas) {
    const TrapGeometry geom(shape, lambda);
    const RecoilCoupling coupling(geom, eta2);
    const ShellSpectrum spectrum = shell_spectrum(coupling);
    svg::Series spectrum_series{"lambda=" + format_value(static_cast<long long>(lambda)), {}, {}};
    for (std::size_t n = 0; n < spectrum.probabilities.size(); ++n) {
      kind.push_back("shell_probability");
      lambda_col.push_back(lambda);
      x.push_back(static_cast<long long>(n));
      value.push_back(spectrum.probabilities[n]);
      spectrum_series.x.push_back(static_cast<double>(n));
      spectrum_series.y.push_back(spectrum.probabilities[n]);
    }
    spectra.series.push_back(spectrum_series);

    svg::Series inhibition_series{spectrum_series.label, {}, {}};
    for (int fermi = -1; fermi <= max_fermi; ++fermi) {
      const EmissionProblem problem(geom, FermiSea(fermi), eta2);
      const double averaged = angle_averaged_factor(problem);
      kind.push_back("inhibition");
      lambda_col.push_back(lambda);
      x.push_back(fermi);
      value.push_back(averaged);
      inhibition_series.x.push_back(static_cast<double>(fermi));
      inhibition_series.y.push_back(averaged);
    }
    inhibition.series.push_back(inhibition_series);
  }

  CommandOutput out;
  out.data.columns = {{"kind", kind}, {"lambda", lambda_col}, {"x", x}, {"value", value}};
  out.panels = {spectra, inhibition};
  return out;
}

CommandOutput figure_shell_states(const RunConfig&) {
  const double eta2 = 25.0;
  const int shell = 5;
  const std::vector<int> lambdas = {1, 5};

  std::vector<long long> lambda_col;
  std::vector<long long> nx_col;
  std::vector<long long> ny_col;
  std::vector<long long> nz_col;
  std::vector<long long> multiplicity_col;
  std::vector<double> p_col;
  std::vector<svg::Panel> panels;

  for (int lambda : lambdas) {
    const TrapGeometry geom(Shape::Pancake, lambda);
    const RecoilCoupling coupling(geom, eta2);

    // Group states of the shell into classes whose members share the same
    // angle-averaged probability: x and y are always interchangeable, and in
    // the isotropic trap all three axes are.
    std::map<std::array<int, 3>, long long> classes;
    for (int nz = 0; lambda * nz <= shell; ++nz) {
      for (int nx = 0; nx + lambda * nz <= shell; ++nx) {
        const int ny = shell - lambda * nz - nx;
        std::array<int, 3> key{std::max(nx, ny), std::min(nx, ny), nz};
        if (lambda == 1) {
          std::array<int, 3> sorted{nx, ny, nz};
          std::sort(sorted.begin(), sorted.end(), std::greater<int>());
          key = sorted;
        }
        classes[key] += 1;
      }
    }

    struct ClassRow {
      std::array<int, 3> state;
      long long multiplicity;
      double probability;
    };
    std::vector<ClassRow> rows;
    for (const auto& [key, multiplicity] : classes) {
      const OscillatorState representative{key[0], key[1], key[2]};
      rows.push_back(
          {key, multiplicity,
           state_emission_probability_averaged(coupling, representative)});
    }
    std::sort(rows.begin(), rows.end(), [](const ClassRow& a, const ClassRow& b) {
      if (a.probability != b.probability) return a.probability > b.probability;
      return a.state > b.state;
    });

    svg::Panel panel;
    panel.kind = svg::Panel::Kind::Stem;
    panel.title = "P_e per state in shell 5, pancake, lambda=" +
                  format_value(static_cast<long long>(lambda)) + ", eta2=25";
    panel.x_label = "state class (nx,ny,nz)";
    panel.y_label = "P_e";
    svg::Series series{"P_e", {}, {}};
    for (std::size_t i = 0; i < rows.size(); ++i) {
      lambda_col.push_back(lambda);
      nx_col.push_back(rows[i].state[0]);
      ny_col.push_back(rows[i].state[1]);
      nz_col.push_back(rows[i].state[2]);
      multiplicity_col.push_back(rows[i].multiplicity);
      p_col.push_back(rows[i].probability);
      series.x.push_back(static_cast<double>(i));
      series.y.push_back(rows[i].probability);
      panel.x_tick_text.push_back("(" + std::to_string(rows[i].state[0]) + "," +
                                  std::to_string(rows[i].state[1]) + "," +
                                  std::to_string(rows[i].state[2]) + ")");
    }
    panel.series = {series};
    panels.push_back(panel);
  }

  CommandOutput out;
  out.data.columns = {{"lambda", lambda_col},       {"nx", nx_col},
                      {"ny", ny_col},               {"nz", nz_col},
                      {"multiplicity", multiplicity_col}, {"p_state", p_col}};
  out.panels = panels;
  return out;
}

CommandOutput figure_tight_sawtooth(const RunConfig& config) {
  RunConfig sweep = config;
  sweep.shape = Shape::Pancake;
  sweep.eta2 = 49.0;
  sweep.fermi_shell = 60;
  sweep.lambda_min = 1.0;
  sweep.lambda_max = 70.0;
  sweep.lambda_samples = 13801;  // step 0.005
  return handle_tight_sweep(sweep);
}

CommandOutput figure_degenerate_patterns(const RunConfig& config) {
  const double eta2 = 25.0;

  std::vector<std::string> panel_col;
  std::vector<long long> lambda_col;
  std::vector<long long> fermi_col;
  std::vector<double> theta_col;
  std::vector<double> value_col;

  svg::Panel panel_a;
  panel_a.kind = svg::Panel::Kind::Polar;
  panel_a.title = "M_f(theta), pancake, lambda=4, eta2=25, nF=31..36";
  panel_a.y_label = "M_f";
  svg::Panel panel_b;
  panel_b.kind = svg::Panel::Kind::Polar;
  panel_b.title = "M_f(theta), pancake, lambda=11, eta2=25, nF=23";
  panel_b.y_label = "M_f";

  const auto append = [&](const std::string& panel_name, int lambda, int fermi,
                          svg::Panel& panel) {
    const EmissionProblem problem(TrapGeometry(Shape::Pancake, lambda), FermiSea(fermi), eta2);
    const AngularPattern pattern = sample_pattern(problem, config.theta_samples);
    for (std::size_t i = 0; i < pattern.theta.size(); ++i) {
      panel_col.push_back(panel_name);
      lambda_col.push_back(lambda);
      fermi_col.push_back(fermi);
      theta_col.push_back(pattern.theta[i] * kDegPerRad);
      value_col.push_back(pattern.value[i]);
    }
    panel.series.push_back({"nF=" + format_value(static_cast<long long>(fermi)), pattern.theta,
                            pattern.value});
  };

  for (int fermi = 31; fermi <= 36; ++fermi) append("a", 4, fermi, panel_a);
  append("b", 11, 23, panel_b);

  CommandOutput out;
  out.data.columns = {{"panel", panel_col},
                      {"lambda", lambda_col},
                      {"n_f", fermi_col},
                      {"theta_deg", theta_col},
                      {"m_f", value_col}};
  out.panels = {panel_a, panel_b};
  out.svg_meta = "radial scale: linear";
  return out;
}

CommandOutput figure_directional_limit(const RunConfig& config) {
  const double eta2 = 49.0;
  const int fermi = 45;

  std::vector<std::string> series_col;
  std::vector<double> theta_col;
  std::vector<double> value_col;
  svg::Panel panel;
  panel.kind = svg::Panel::Kind::Polar;
  panel.title = "M_f(theta), cigar, eta2=49, nF=45";
  panel.y_label = "M_f";

  const auto append = [&](const std::string& label, int lambda, PatternVariant variant) {
    const EmissionProblem problem(TrapGeometry(Shape::Cigar, lambda), FermiSea(fermi), eta2);
    const AngularPattern pattern = sample_pattern(problem, config.theta_samples, variant);
    for (std::size_t i = 0; i < pattern.theta.size(); ++i) {
      series_col.push_back(label);
      theta_col.push_back(pattern.theta[i] * kDegPerRad);
      value_col.push_back(pattern.value[i]);
    }
    panel.series.push_back({label, pattern.theta, pattern.value});
  };

  append("lambda=46", 46, PatternVariant::full());
  append("lambda=96", 96, PatternVariant::full());
  append("lambda=inf", 1, PatternVariant::limit());

  CommandOutput out;
  out.data.columns = {{"series", series_col}, {"theta_deg", theta_col}, {"m_f", value_col}};
  out.panels = {panel};
  out.svg_meta = "radial scale: linear";
  return out;
}

CommandOutput handle_figure(const RunConfig& config) {
  switch (config.figure_id) {
    case 1: return figure_spectra_and_inhibition(Shape::Pancake, config);
    case 2: return figure_spectra_and_inhibition(Shape::Cigar, config);
    case 3: return figure_shell_states(config);
    case 4: return figure_tight_sawtooth(config);
    case 5: return figure_degenerate_patterns(config);
    case 6: return figure_directional_limit(config);
    default: throw usage_error("BadFigure", "figure id must be 1..6");
  }
}

CommandOutput dispatch(const RunConfig& config) {
  switch (config.command) {
    case Command::Pattern: return handle_pattern(config);
    case Command::Shells: return handle_shells(config);
    case Command::Degeneracy: return handle_degeneracy(config);
    case Command::Count: return handle_count(config);
    case Command::TightSweep: return handle_tight_sweep(config);
    case Command::FermiShell: return handle_fermi_shell(config);
    case Command::Figure: return handle_figure(config);
  }
  throw usage_error("BadCommand", "unknown command");
}

}  // namespace

std::string to_string(Command command) {
  switch (command) {
    case Command::Pattern: return "pattern";
    case Command::Shells: return "shells";
    case Command::Degeneracy: return "degeneracy";
    case Command::Count: return "count";
    case Command::TightSweep: return "tight-sweep";
    case Command::FermiShell: return "fermi-shell";
    case Command::Figure: return "figure";
  }
  return "?";
}

std::string to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Json: return "json";
    case OutputFormat::Svg: return "svg";
  }
  return "?";
}

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig config;
  std::string shape_name = "pancake";
  std::string format_name = "csv";

  CLI::App app{"Spontaneous-emission patterns of a trapped fermion above a Fermi sea"};
  app.require_subcommand(1);

  const auto add_shape = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--shape", shape_name, "Trap shape: pancake or cigar")
                    ->check(CLI::IsMember({"pancake", "cigar"}));
    if (required) opt->required();
  };
  // No Range validator here: CLI11 validators run on the raw token, which
  // would fold "not an integer" and "out of range" into one error class.
  // Letting the int conversion fail keeps non-integer lambda a distinct
  // ConversionError; the bounds are checked after parsing.
  const auto add_lambda = [&](CLI::App* cmd) {
    cmd->add_option("--lambda", config.lambda, "Integer aspect ratio (>= 1)")->required();
  };
  const auto add_eta2 = [&](CLI::App* cmd) {
    cmd->add_option("--eta2", config.eta2, "Squared Lamb-Dicke parameter (>= 0)")
        ->required()
        ->check(CLI::NonNegativeNumber);
  };
  const auto add_nf = [&](CLI::App* cmd, int lowest) {
    cmd->add_option("--nf", config.fermi_shell, "Fermi shell index (-1 = empty trap)")
        ->required()
        ->check(CLI::Range(lowest, 1000000));
  };
  const auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    cmd->add_option("--out", config.out_path, "Output path (default stdout for csv/json)");
  };
  const auto add_theta_samples = [&](CLI::App* cmd) {
    cmd->add_option("--theta-samples", config.theta_samples,
                    "Number of theta samples over [0, 180] degrees")
        ->check(CLI::Range(2, 10000000));
  };

  auto* pattern = app.add_subcommand("pattern", "Angular modification factor M_f(theta)");
  add_shape(pattern, true);
  add_lambda(pattern);
  add_eta2(pattern);
  add_nf(pattern, -1);
  add_theta_samples(pattern);
  add_output(pattern);

  auto* shells = app.add_subcommand("shells", "Angle-averaged emission probability per shell");
  add_shape(shells, true);
  add_lambda(shells);
  add_eta2(shells);
  add_output(shells);

  auto* degeneracy_cmd = app.add_subcommand("degeneracy", "Shell degeneracy table");
  add_shape(degeneracy_cmd, true);
  add_lambda(degeneracy_cmd);
  add_nf(degeneracy_cmd, 0);
  add_output(degeneracy_cmd);

  auto* count = app.add_subcommand("count", "Cumulative state count up to the Fermi shell");
  add_shape(count, true);
  add_lambda(count);
  add_nf(count, -1);
  add_output(count);

  auto* sweep = app.add_subcommand("tight-sweep", "Tight-axis M_f over an aspect-ratio range");
  add_shape(sweep, true);
  add_eta2(sweep);
  add_nf(sweep, -1);
  sweep->add_option("--lambda-min", config.lambda_min, "Sweep start (real, > 0)")
      ->required()
      ->check(CLI::PositiveNumber);
  sweep->add_option("--lambda-max", config.lambda_max, "Sweep end (real, > 0)")
      ->required()
      ->check(CLI::PositiveNumber);
  sweep->add_option("--lambda-samples", config.lambda_samples, "Number of sweep samples")
      ->check(CLI::Range(2, 10000000));
  add_output(sweep);

  auto* fermi = app.add_subcommand("fermi-shell", "Fermi shell reached by a given atom number");
  add_shape(fermi, true);
  add_lambda(fermi);
  fermi->add_option("--atoms", config.atoms, "Number of sea atoms (>= 0)")
      ->required()
      ->check(CLI::Range(static_cast<long long>(0), static_cast<long long>(1) << 60));
  add_output(fermi);

  auto* figure = app.add_subcommand("figure", "Reproduce a preset figure dataset (1..6)");
  figure->add_option("id", config.figure_id, "Figure number")->required()->check(CLI::Range(1, 6));
  add_theta_samples(figure);
  add_output(figure);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw help_requested{app.help()};
  } catch (const CLI::ConversionError& e) {
    throw usage_error("ConversionError", e.what());
  } catch (const CLI::ValidationError& e) {
    throw usage_error("ValidationError", e.what());
  } catch (const CLI::RequiredError& e) {
    throw usage_error("RequiredError", e.what());
  } catch (const CLI::ExtrasError& e) {
    throw usage_error("UnknownArgument", e.what());
  } catch (const CLI::ParseError& e) {
    throw usage_error(e.get_name(), e.what());
  }

  if (pattern->parsed()) config.command = Command::Pattern;
  if (shells->parsed()) config.command = Command::Shells;
  if (degeneracy_cmd->parsed()) config.command = Command::Degeneracy;
  if (count->parsed()) config.command = Command::Count;
  if (sweep->parsed()) config.command = Command::TightSweep;
  if (fermi->parsed()) config.command = Command::FermiShell;
  if (figure->parsed()) config.command = Command::Figure;

  config.shape = shape_from_string(shape_name);
  if (format_name == "csv") config.format = OutputFormat::Csv;
  if (format_name == "json") config.format = OutputFormat::Json;
  if (format_name == "svg") config.format = OutputFormat::Svg;

  const bool uses_lambda = config.command != Command::TightSweep;
  if (uses_lambda && (config.lambda < 1 || config.lambda > 1000000)) {
    throw usage_error("BadAspectRatio", "--lambda must be an integer in [1, 1000000]");
  }
  if (config.command == Command::TightSweep && config.lambda_min > config.lambda_max) {
    throw usage_error("BadRange", "--lambda-min must not exceed --lambda-max");
  }
  if (config.format == OutputFormat::Svg && config.out_path.empty()) {
    throw usage_error("MissingOutput", "svg output requires --out");
  }
  return config;
}

std::vector<std::pair<double, double>> tight_sweep(Shape shape, double eta2, int fermi_shell,
                                                   double lambda_min, double lambda_max,
                                                   int samples) {
  (void)shape;  // the tight-axis closed form is the same for both shapes
  if (!(lambda_min > 0.0) || !(lambda_max >= lambda_min)) {
    throw std::invalid_argument("tight_sweep: need 0 < lambda_min <= lambda_max");
  }
  if (samples < 2) throw std::invalid_argument("tight_sweep: need at least 2 samples");
  std::vector<std::pair<double, double>> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double lambda =
        lambda_min + (lambda_max - lambda_min) * static_cast<double>(i) / (samples - 1);
    out.emplace_back(lambda, tight_axis_factor_continuous(lambda, eta2, fermi_shell));
  }
  return out;
}

std::string params_json(const RunConfig& config) { return params_object(config).dump(2); }

std::string render_output(const RunConfig& config) {
  const CommandOutput output = dispatch(config);
  switch (config.format) {
    case OutputFormat::Csv: return to_csv(output.data);
    case OutputFormat::Json: return to_json_text(config, output.data);
    case OutputFormat::Svg: return svg::render(output.panels, output.svg_meta);
  }
  return {};
}

void run(const RunConfig& config, std::ostream& console) {
  const std::string bytes = render_output(config);
  if (config.out_path.empty()) {
    console << bytes;
    console.flush();
    return;
  }
  std::ofstream file(config.out_path, std::ios::binary);
  if (!file) {
    throw io_error("cannot open '" + config.out_path + "' for writing: " +
                   std::strerror(errno));
  }
  file << bytes;
  file.flush();
  if (!file) {
    throw io_error("failed while writing '" + config.out_path + "': " + std::strerror(errno));
  }
}

int run_main(const std::vector<std::string>& args, std::ostream& console, std::ostream& errors) {
  try {
    const RunConfig config = parse_args(args);
    run(config, console);
    return 0;
  } catch (const help_requested& help) {
    console << help.text;
    return 0;
  } catch (const usage_error& e) {
    errors << "usage error [" << e.kind << "]: " << e.what() << "\n";
    return 2;
  } catch (const io_error& e) {
    errors << "i/o error: " << e.what() << "\n";
    return 3;
  } catch (const guard_error& e) {
    errors << "numerical guard: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    errors << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace fermisea::cli
