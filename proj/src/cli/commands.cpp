#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sphlap2/cli.hpp"
#include "sphlap2/error.hpp"
#include "sphlap2/io.hpp"
#include "sphlap2/predict.hpp"
#include "sphlap2/svg.hpp"
#include "sphlap2/variogram.hpp"

namespace sphlap2::cli {

namespace fs = std::filesystem;

namespace {

Lap2Params resolve_params(const RunConfig& cfg) {
  if (cfg.theta.has_value() == cfg.matern_xi.has_value()) {
    throw Error(ErrorCode::ParseError, "exactly one of --theta / --matern-xi is required");
  }
  if (cfg.matern_xi) return matern_theta(*cfg.matern_xi);
  const auto fields = io::split_fields(*cfg.theta);
  if (fields.size() != 3) {
    throw Error(ErrorCode::ParseError, "--theta expects t0,t1,t2");
  }
  return Lap2Params::validate(io::parse_double(fields[0]), io::parse_double(fields[1]),
                              io::parse_double(fields[2]));
}

void require_input(const std::optional<std::string>& path, const char* flag) {
  if (!path) throw Error(ErrorCode::ParseError, std::string(flag) + " is required");
  if (!fs::is_regular_file(*path)) throw Error(ErrorCode::IoError, "no such file: " + *path);
}

void require_output(const std::optional<std::string>& path) {
  if (!path) return;
  const fs::path parent = fs::path(*path).parent_path();
  if (!parent.empty() && !fs::is_directory(parent)) {
    throw Error(ErrorCode::IoError, "output directory does not exist: " + parent.string());
  }
}

// Collects output text, then writes it either to --out or to the stream.
class Sink {
 public:
  Sink(const std::optional<std::string>& path, std::ostream& fallback) : path_(path), fallback_(fallback) {}
  std::ostream& stream() { return buffer_; }
  void flush() {
    if (!path_) {
      fallback_ << buffer_.str();
      return;
    }
    std::ofstream file(*path_, std::ios::binary);
    if (!file) throw Error(ErrorCode::IoError, "cannot write " + *path_);
    file << buffer_.str();
    if (!file) throw Error(ErrorCode::IoError, "write failed for " + *path_);
  }

 private:
  const std::optional<std::string>& path_;
  std::ostream& fallback_;
  std::ostringstream buffer_;
};

void run_validate(const RunConfig& cfg, std::ostream& out) {
  const Lap2Params p = resolve_params(cfg);
  out << "valid (" << to_string(p.regime()) << ")\n";
  out << "theta=" << io::format_double(p.theta0()) << ',' << io::format_double(p.theta1()) << ','
      << io::format_double(p.theta2()) << '\n';
}

void run_precision_fn(const RunConfig& cfg, std::ostream& out) {
  require_output(cfg.out_path);
  require_output(cfg.plot_path);
  if (cfg.samples < 2) throw Error(ErrorCode::ParseError, "--n must be >= 2");
  if (!(cfg.rmax > 0.0)) throw Error(ErrorCode::NonPositiveRadius, "--rmax must be > 0");
  const PrecisionFunction pf(resolve_params(cfg), GaussianKernel(cfg.h, cfg.d));
  const double scale = cfg.normalize ? pf.value_at_zero() : 1.0;

  svg::LineSeries series;
  series.label = cfg.normalize ? "Q*(r)/Q*(0)" : "Q*(r)";
  Sink sink(cfg.out_path, out);
  sink.stream() << "r,Q\n";
  for (int i = 0; i < cfg.samples; ++i) {
    const double r = cfg.rmax * i / (cfg.samples - 1);
    const double q = pf.value(r) / scale;
    sink.stream() << io::format_double(r) << ',' << io::format_double(q) << '\n';
    series.x.push_back(r);
    series.y.push_back(q);
  }
  sink.flush();
  if (cfg.plot_path) {
    svg::emit_svg_lineplot({series}, *cfg.plot_path, {"SPH-LAP2 precision function", "r", series.label});
  }
}

void run_precision_matrix(const RunConfig& cfg, std::ostream& out) {
  require_input(cfg.points_path, "--points");
  require_output(cfg.out_path);
  const Lap2Params params = resolve_params(cfg);
  const PointSet points = io::read_points_csv(*cfg.points_path);
  const PrecisionFunction pf(params, GaussianKernel(cfg.h, points.dimension()));
  const PrecisionMatrix q = assemble(pf, points, cfg.epsilon);
  Sink sink(cfg.out_path, out);
  if (cfg.sparse || q.is_sparse()) {
    io::write_triplets_csv(sink.stream(), q);
  } else {
    io::write_dense_csv(sink.stream(), q);
  }
  sink.flush();
}

void run_energy(const RunConfig& cfg, std::ostream& out) {
  require_input(cfg.points_path, "--points");
  const Lap2Params params = resolve_params(cfg);
  const PointSet points = io::read_points_csv(*cfg.points_path);
  if (!points.has_values()) {
    throw Error(ErrorCode::MissingValues, "energy needs a value column");
  }
  const PrecisionFunction pf(params, GaussianKernel(cfg.h, points.dimension()));
  const PrecisionMatrix q = assemble(pf, points, cfg.epsilon);
  out << io::format_double(energy(q, *points.values())) << '\n';
}

std::string numbered_path(const std::string& path, int index) {
  const fs::path p(path);
  fs::path name = p.stem();
  name += "_" + std::to_string(index);
  name += p.extension();
  return (p.parent_path() / name).string();
}

void run_simulate(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.seed) throw Error(ErrorCode::ParseError, "--seed is required for simulate");
  if (cfg.reps < 1) throw Error(ErrorCode::ParseError, "--reps must be >= 1");
  if (cfg.reps > 1 && !cfg.out_path) {
    throw Error(ErrorCode::ParseError, "--out is required when --reps > 1");
  }
  require_output(cfg.out_path);
  require_output(cfg.svg_path);
  const PrecisionFunction pf(resolve_params(cfg), GaussianKernel(cfg.h, cfg.d));
  for (int rep = 0; rep < cfg.reps; ++rep) {
    const LatticeField field = simulate(pf, cfg.side, cfg.spacing, *cfg.seed + static_cast<std::uint64_t>(rep));
    std::optional<std::string> path = cfg.out_path;
    if (cfg.reps > 1) path = numbered_path(*cfg.out_path, rep);
    Sink sink(path, out);
    io::write_grid_csv(sink.stream(), field);
    sink.flush();
    if (rep == 0 && cfg.svg_path) {
      svg::emit_svg_heatmap(field.values, field.rows(), field.columns(), *cfg.svg_path);
    }
  }
}

void run_variogram(const RunConfig& cfg, std::ostream& out) {
  require_input(cfg.grid_path, "--grid");
  require_output(cfg.out_path);
  require_output(cfg.svg_path);
  const bool with_model = cfg.model.has_value();
  if (with_model) {
    if (*cfg.model != "matern") throw Error(ErrorCode::ParseError, "unknown model '" + *cfg.model + "'");
    if (!cfg.model_xi) throw Error(ErrorCode::ParseError, "--model matern needs --xi");
    if (!(*cfg.model_xi > 0.0)) throw Error(ErrorCode::NonPositiveXi, "--xi must be > 0");
  }
  const LatticeField field = io::read_grid_csv(*cfg.grid_path, cfg.spacing);
  const bool two_d = field.dimension == 2;
  VariogramEstimate rows = empirical_variogram(field, cfg.max_lag, Axis::Rows);
  std::optional<VariogramEstimate> cols;
  if (two_d) cols = empirical_variogram(field, cfg.max_lag, Axis::Columns);
  VariogramEstimate avg = empirical_variogram(field, cfg.max_lag, Axis::Averaged);
  if (with_model || cfg.normalize) {
    const double var = sample_variance(field);
    rows = normalized(std::move(rows), var);
    if (cols) cols = normalized(std::move(*cols), var);
    avg = normalized(std::move(avg), var);
  }

  Sink sink(cfg.out_path, out);
  sink.stream() << "lag,gamma_rows,gamma_cols,gamma_avg" << (with_model ? ",gamma_model" : "") << '\n';
  svg::LineSeries s_rows{"rows", {}, {}, "#d62728", true};
  svg::LineSeries s_cols{"columns", {}, {}, "#2ca02c", true};
  svg::LineSeries s_avg{"average", {}, {}, "#1f77b4", false};
  svg::LineSeries s_model{"Matern nu=1", {}, {}, "#000000", false};
  for (std::size_t l = 0; l < rows.lags.size(); ++l) {
    const double lag = rows.lags[l] * field.spacing;
    sink.stream() << rows.lags[l] << ',' << io::format_double(rows.semivariance[l]) << ','
                  << (cols ? io::format_double(cols->semivariance[l]) : std::string()) << ','
                  << io::format_double(avg.semivariance[l]);
    s_rows.x.push_back(lag);
    s_rows.y.push_back(rows.semivariance[l]);
    if (cols) {
      s_cols.x.push_back(lag);
      s_cols.y.push_back(cols->semivariance[l]);
    }
    s_avg.x.push_back(lag);
    s_avg.y.push_back(avg.semivariance[l]);
    if (with_model) {
      const double g = matern1_variogram(lag, *cfg.model_xi);
      sink.stream() << ',' << io::format_double(g);
      s_model.x.push_back(lag);
      s_model.y.push_back(g);
    }
    sink.stream() << '\n';
  }
  sink.flush();
  if (cfg.svg_path) {
    std::vector<svg::LineSeries> series{s_rows};
    if (cols) series.push_back(s_cols);
    series.push_back(s_avg);
    if (with_model) series.push_back(s_model);
    svg::emit_svg_lineplot(series, *cfg.svg_path, {"Empirical variogram", "lag", "gamma"});
  }
}

void run_predict(const RunConfig& cfg, std::ostream& out) {
  require_input(cfg.points_path, "--points");
  require_input(cfg.targets_path, "--targets");
  require_output(cfg.out_path);
  const Lap2Params params = resolve_params(cfg);
  const PointSet points = io::read_points_csv(*cfg.points_path);
  const Eigen::MatrixXd targets = io::read_targets_csv(*cfg.targets_path);
  const PrecisionFunction pf(params, GaussianKernel(cfg.h, points.dimension()));
  const auto predictions = predict_batch(pf, points, targets);

  Sink sink(cfg.out_path, out);
  for (int c = 0; c < points.dimension(); ++c) sink.stream() << 'x' << c + 1 << ',';
  sink.stream() << "mean,variance\n";
  for (const auto& p : predictions) {
    for (Eigen::Index c = 0; c < p.location.size(); ++c) {
      sink.stream() << io::format_double(p.location[c]) << ',';
    }
    sink.stream() << io::format_double(p.mean) << ',' << io::format_double(p.variance) << '\n';
  }
  sink.flush();
}

}  // namespace

void execute(const RunConfig& config, std::ostream& out) {
  switch (config.command) {
    case Command::Validate: return run_validate(config, out);
    case Command::PrecisionFn: return run_precision_fn(config, out);
    case Command::PrecisionMatrix: return run_precision_matrix(config, out);
    case Command::Simulate: return run_simulate(config, out);
    case Command::Variogram: return run_variogram(config, out);
    case Command::Predict: return run_predict(config, out);
    case Command::Energy: return run_energy(config, out);
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Mesh-free SPH-LAP2 Gaussian random fields"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  auto add_theta = [&cfg](CLI::App* sub) {
    auto* theta = sub->add_option("--theta", cfg.theta, "LAP2 coefficients t0,t1,t2");
    auto* xi = sub->add_option("--matern-xi", cfg.matern_xi, "Matern nu=1 parametrization length");
    theta->excludes(xi);
    xi->excludes(theta);
  };
  auto add_kernel = [&cfg](CLI::App* sub, bool with_dimension) {
    sub->add_option("--h", cfg.h, "Gaussian kernel bandwidth")->required();
    if (with_dimension) sub->add_option("--d", cfg.d, "Spatial dimension");
  };

  auto* validate = app.add_subcommand("validate", "Check a coefficient vector against C1/C2");
  add_theta(validate);

  auto* pfn = app.add_subcommand("precision-fn", "Tabulate Q*(r) as CSV r,Q");
  add_theta(pfn);
  add_kernel(pfn, true);
  pfn->add_option("--rmax", cfg.rmax, "Largest radius");
  pfn->add_option("--n", cfg.samples, "Number of samples in [0, rmax]");
  pfn->add_flag("--normalize", cfg.normalize, "Divide by Q*(0)");
  pfn->add_option("--plot", cfg.plot_path, "SVG line plot path");
  pfn->add_option("--out", cfg.out_path, "CSV output path (default stdout)");

  auto* pmat = app.add_subcommand("precision-matrix", "Assemble Q for a point-set CSV");
  add_theta(pmat);
  add_kernel(pmat, false);
  pmat->add_option("--points", cfg.points_path, "Point-set CSV")->required();
  pmat->add_option("--epsilon", cfg.epsilon, "Relative truncation threshold");
  pmat->add_flag("--sparse", cfg.sparse, "Emit i,j,q triplets");
  pmat->add_option("--out", cfg.out_path, "CSV output path (default stdout)");

  auto* sim = app.add_subcommand("simulate", "Spectral FFT lattice simulation");
  add_theta(sim);
  add_kernel(sim, true);
  sim->add_option("--L", cfg.side, "Nodes per side (even)");
  sim->add_option("--spacing", cfg.spacing, "Lattice step");
  sim->add_option("--seed", cfg.seed, "RNG seed")->required();
  sim->add_option("--reps", cfg.reps, "Realizations; realization i uses seed + i");
  sim->add_option("--svg", cfg.svg_path, "Grayscale heatmap of the first realization");
  sim->add_option("--out", cfg.out_path, "Grid CSV path; numbered _i when --reps > 1");

  auto* vgm = app.add_subcommand("variogram", "Row/column empirical variograms of a grid CSV");
  vgm->add_option("--grid", cfg.grid_path, "Grid CSV")->required();
  vgm->add_option("--max-lag", cfg.max_lag, "Largest lag");
  vgm->add_option("--model", cfg.model, "Overlay model (matern)");
  vgm->add_option("--xi", cfg.model_xi, "Matern correlation length");
  vgm->add_option("--spacing", cfg.spacing, "Lattice step");
  vgm->add_flag("--normalize", cfg.normalize, "Divide by the sample variance");
  vgm->add_option("--svg", cfg.svg_path, "SVG overlay plot path");
  vgm->add_option("--out", cfg.out_path, "CSV output path (default stdout)");

  auto* pred = app.add_subcommand("predict", "Single-point conditional mean and variance");
  add_theta(pred);
  add_kernel(pred, false);
  pred->add_option("--points", cfg.points_path, "Point-set CSV with a value column")->required();
  pred->add_option("--targets", cfg.targets_path, "Target CSV")->required();
  pred->add_option("--out", cfg.out_path, "CSV output path (default stdout)");

  auto* en = app.add_subcommand("energy", "1/2 x^T Q x for the point-set values");
  add_theta(en);
  add_kernel(en, false);
  en->add_option("--points", cfg.points_path, "Point-set CSV with a value column")->required();
  en->add_option("--epsilon", cfg.epsilon, "Relative truncation threshold");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: UsageError: " << e.what() << '\n';
    return 2;
  }

  const std::pair<CLI::App*, Command> table[] = {
      {validate, Command::Validate}, {pfn, Command::PrecisionFn}, {pmat, Command::PrecisionMatrix},
      {sim, Command::Simulate},      {vgm, Command::Variogram},   {pred, Command::Predict},
      {en, Command::Energy},
  };
  for (const auto& [sub, command] : table) {
    if (sub->parsed()) cfg.command = command;
  }

  try {
    execute(cfg, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: Internal: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace sphlap2::cli
