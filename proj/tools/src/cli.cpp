#include "ptdirac_cli/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#if __has_include("CLI11.hpp")
#include "CLI11.hpp"
#else
#include <CLI/CLI.hpp>
#endif
#include "ptdirac/ptdirac.hpp"
#include "ptdirac_cli/table.hpp"

namespace ptdirac::cli {

namespace {

constexpr const char* kUnitsNote =
    "Natural units (c = hbar = 1): masses, momenta and energies share one arbitrary unit.\n"
    "PTDIRAC_TOL overrides the default reality tolerance (1e-10).";

/// Rejected parameter combinations that are usage errors rather than domain
/// failures (empty ranges, missing symbols).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OutputOptions {
  std::string format = "csv";
  std::string path;
  int precision = 9;

  OutputFormat output_format() const {
    return format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  }
};

struct Range {
  std::vector<double> spec;  // min, max, steps

  bool given() const { return !spec.empty(); }
  std::vector<double> points(const std::string& name) const {
    const double steps = spec.at(2);
    if (steps != std::floor(steps) || steps < 2) {
      throw UsageError(name + ": steps must be an integer >= 2");
    }
    if (!(spec[0] < spec[1])) throw UsageError(name + ": requires min < max");
    return linspace(spec[0], spec[1], static_cast<int>(steps));
  }
};

const CLI::Validator kFinite(
    [](std::string& s) -> std::string {
      try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size() || !std::isfinite(v)) return "value must be a finite number";
      } catch (const std::exception&) {
        return "value must be a finite number";
      }
      return {};
    },
    "FINITE");

double default_tolerance() {
  if (const char* env = std::getenv("PTDIRAC_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
      throw UsageError(std::string("PTDIRAC_TOL must be a positive number, got '") + env + "'");
    }
    return v;
  }
  return kDefaultRealityTol;
}

void add_output_options(CLI::App* app, OutputOptions& opts) {
  app->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app->add_option("--out", opts.path, "Write records to PATH instead of standard output");
  app->add_option("--precision", opts.precision, "Significant digits for numeric fields")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();
}

std::vector<std::string> eigen_columns(int dim) {
  std::vector<std::string> cols;
  for (int i = 1; i <= dim; ++i) {
    cols.push_back("lambda" + std::to_string(i) + "_re");
    cols.push_back("lambda" + std::to_string(i) + "_im");
  }
  return cols;
}

void append_eigen_cells(std::vector<Cell>& row, const SpectralResult& r, int precision) {
  for (const auto& z : r.eigenvalues) {
    row.push_back(Cell::number(z.real(), precision));
    row.push_back(Cell::number(z.imag(), precision));
  }
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
  double m1 = 0.0;
  double m2 = 0.0;
  std::optional<double> p;
  Range p_range;
  int dim = 2;
  std::optional<double> tol;
  OutputOptions out;
};

Table cmd_spectrum(const SpectrumArgs& a) {
  const double tol = a.tol.value_or(default_tolerance());
  if (!(tol > 0.0)) throw UsageError("--tol must be positive");
  if (a.p && a.p_range.given()) throw UsageError("give either --p or --p-range, not both");
  const std::vector<double> momenta =
      a.p_range.given() ? a.p_range.points("--p-range") : std::vector<double>{a.p.value_or(0.0)};

  const auto basis = build_basis(a.dim);
  std::vector<std::string> cols{"p"};
  for (auto& c : eigen_columns(a.dim)) cols.push_back(std::move(c));
  cols.insert(cols.end(), {"is_real", "is_diagonalizable"});
  Table table(cols);
  for (double p : momenta) {
    const auto r = spectrum(build_hamiltonian(basis, Momentum::along_x(p, basis.spatial_dim()),
                                              a.m1, a.m2),
                            SpectrumOptions{tol, true});
    std::vector<Cell> row{Cell::number(p, a.out.precision)};
    append_eigen_cells(row, r, a.out.precision);
    row.push_back(Cell::boolean(r.is_real));
    row.push_back(Cell::boolean(r.is_diagonalizable));
    table.add_row(std::move(row));
  }
  return table;
}

// ------------------------------------------------------------------ metric

struct MetricArgs {
  double m1 = 0.0;
  double m2 = 0.0;
  double p = 0.0;
  int dim = 2;
  OutputOptions out;
};

Table cmd_metric(const MetricArgs& a) {
  const auto basis = build_basis(a.dim);
  const Momentum p = Momentum::along_x(a.p, basis.spatial_dim());
  const auto metric = metric_operator(basis, a.m1, a.m2);
  const auto h = build_hamiltonian(basis, p, a.m1, a.m2).matrix;
  const auto h_adj = build_adjoint_hamiltonian(basis, p, a.m1, a.m2).matrix;
  const double intertwining = verify_intertwining(h, h_adj, metric.eta);
  const auto counterpart = hermitian_counterpart(basis, p, a.m1, a.m2);
  const double hermiticity =
      hermiticity_residual(counterpart) / std::max(frobenius_norm(counterpart), 1e-300);

  Table table({"m1", "m2", "p", "alpha_exponent", "intertwining_residual",
               "counterpart_hermiticity_residual"});
  table.add_row({Cell::number(a.m1, a.out.precision), Cell::number(a.m2, a.out.precision),
                 Cell::number(a.p, a.out.precision),
                 Cell::number(metric.alpha_exponent, a.out.precision),
                 Cell::scientific(intertwining, 6), Cell::scientific(hermiticity, 6)});
  return table;
}

// ---------------------------------------------------------------- classify

inline constexpr double kCliRegionTol = 1e-7;

struct ClassifyArgs {
  double m1 = 0.0;
  double m2 = 0.0;
  double tol = kCliRegionTol;
  OutputOptions out;
};

std::vector<Cell> mass_cells(double m1, double m2, int precision) {
  const auto m = physical_mass(m1, m2);
  const auto bound = mass_bound(m1, m2);
  std::vector<Cell> cells;
  cells.push_back(m.imag() > 0.0 ? Cell::text_value("imaginary") : Cell::number(m.real(), precision));
  cells.push_back(bound ? Cell::number(*bound, precision) : Cell::text_value("inf"));
  return cells;
}

Table cmd_classify(const ClassifyArgs& a) {
  if (!(a.m1 > 0.0)) throw UsageError("--m1 must be positive");
  if (!(a.tol >= 0.0)) throw UsageError("--tol must be non-negative");
  const RegionLabel region = classify(a.m1, a.m2, a.tol);
  Table table({"m1", "m2", "m", "m_max", "alpha", "theta", "region"});
  std::vector<Cell> row{Cell::number(a.m1, a.out.precision), Cell::number(a.m2, a.out.precision)};
  for (auto& c : mass_cells(a.m1, a.m2, a.out.precision)) row.push_back(std::move(c));
  const MassParams mp(a.m1, a.m2);
  const auto alpha = mp.alpha();
  const auto theta = mp.theta();
  row.push_back(alpha ? Cell::number(*alpha, a.out.precision) : Cell::text_value("n/a"));
  row.push_back(theta ? Cell::number(*theta, a.out.precision) : Cell::text_value("n/a"));
  row.push_back(Cell::text_value(std::string(to_string(region))));
  table.add_row(std::move(row));
  return table;
}

// --------------------------------------------------------------------- fig

struct FigArgs {
  int id = 0;
  std::optional<int> steps;
  double alpha_min = 0.0;
  double alpha_max = 5.0;
  double nu_min = 0.0;
  double nu_max = 1.0;
  double nu1_max = kFig3DefaultNu1Max;
  double nu2_max = kFig3DefaultNu2Max;
  OutputOptions out;
};

Table cmd_fig(const FigArgs& a) {
  const int prec = a.out.precision;
  auto grid = [&](double lo, double hi, int default_steps, const char* what) {
    const int steps = a.steps.value_or(default_steps);
    if (steps < 2 || !(lo < hi)) {
      throw UsageError(std::string(what) + ": need min < max and --steps >= 2");
    }
    return linspace(lo, hi, steps);
  };

  switch (a.id) {
    case 1: {
      if (a.alpha_min < 0.0) throw UsageError("--alpha-min must be non-negative");
      Table table({"alpha", "nu", "nu1", "nu2"});
      for (const auto& r : fig1_curves(grid(a.alpha_min, a.alpha_max, 501, "alpha grid"))) {
        table.add_row({Cell::number(r.alpha, prec), Cell::number(r.nu, prec),
                       Cell::number(r.nu1, prec), Cell::number(r.nu2, prec)});
      }
      return table;
    }
    case 2: {
      if (a.nu_min < 0.0 || a.nu_max > 1.0) throw UsageError("nu grid must lie within [0, 1]");
      Table table({"nu", "nu1", "nu2", "nu3", "nu4"});
      for (const auto& r : fig2_curves(grid(a.nu_min, a.nu_max, 101, "nu grid"))) {
        table.add_row({Cell::number(r.nu, prec), Cell::number(r.nu1, prec),
                       Cell::number(r.nu2, prec), Cell::number(r.nu3, prec),
                       Cell::number(r.nu4, prec)});
      }
      return table;
    }
    case 3: {
      const int cells = a.steps.value_or(kFig3DefaultCells);
      if (cells < 2 || !(a.nu1_max > 0.0) || !(a.nu2_max > 0.0)) {
        throw UsageError("fig 3: need positive --nu1-max, --nu2-max and --steps >= 2");
      }
      const auto mask = fig3_default_mask(cells, a.nu1_max, a.nu2_max);
      Table table({"nu1", "nu2", "region"});
      for (std::size_t i = 0; i < mask.nu1.size(); ++i) {
        for (std::size_t j = 0; j < mask.nu2.size(); ++j) {
          table.add_row({Cell::number(mask.nu1[i], prec), Cell::number(mask.nu2[j], prec),
                         Cell::text_value(std::string(to_string(mask.at(i, j))))});
        }
      }
      return table;
    }
    default:
      throw UsageError("unknown figure id " + std::to_string(a.id) + " (expected 1, 2 or 3)");
  }
}

// ------------------------------------------------------------------- sweep

struct SweepArgs {
  std::string mode;
  std::optional<double> m1;
  std::optional<double> m2;
  Range m1_range;
  Range m2_range;
  std::optional<std::string> branch;
  Range nu_range;
  std::optional<double> m_max;
  double p = 0.0;
  int dim = 2;
  std::optional<double> tol;
  int check_every = 16;
  OutputOptions out;
};

std::vector<double> swept_or_fixed(const std::optional<double>& fixed, const Range& range,
                                   const std::string& name) {
  if (fixed && range.given()) throw UsageError("give either --" + name + " or --" + name + "-range");
  if (range.given()) return range.points("--" + name + "-range");
  if (fixed) return {*fixed};
  throw UsageError("sweep: --" + name + " or --" + name + "-range is required");
}

Table cmd_sweep(const SweepArgs& a) {
  const double tol = a.tol.value_or(default_tolerance());
  if (!(tol > 0.0)) throw UsageError("--tol must be positive");
  if (a.check_every < 1) throw UsageError("--check-every must be >= 1");
  const int prec = a.out.precision;
  const auto basis = build_basis(a.dim);
  const Momentum p = Momentum::along_x(a.p, basis.spatial_dim());

  struct Point {
    std::string branch;
    double nu;
    double m1;
    double m2;
  };
  std::vector<Point> points;
  const bool branch_mode =
      a.mode.empty() ? (a.branch || a.nu_range.given() || a.m_max) : a.mode == "branch";
  if (branch_mode) {
    if (a.m1 || a.m2 || a.m1_range.given() || a.m2_range.given()) {
      throw UsageError("sweep --mode branch takes --nu-range and --m-max, not m1/m2");
    }
    const double m_max = a.m_max.value_or(1.0);
    if (!(m_max > 0.0)) throw UsageError("--m-max must be positive");
    const std::string branch = a.branch.value_or("both");
    const auto nus = a.nu_range.given() ? a.nu_range.points("--nu-range") : linspace(0.0, 1.0, 101);
    if (nus.front() < 0.0 || nus.back() > 1.0) throw UsageError("--nu-range must lie within [0, 1]");
    std::vector<BranchId> branches;
    if (branch != "exotic") branches.push_back(BranchId::Ordinary);
    if (branch != "ordinary") branches.push_back(BranchId::Exotic);
    for (BranchId b : branches) {
      for (double nu : nus) {
        const NuPoint pt = branch_point(nu, b);
        points.push_back({to_string(b), nu, pt.nu1 * m_max, pt.nu2 * m_max});
      }
    }
  } else {
    if (a.nu_range.given() || a.branch || a.m_max) {
      throw UsageError("--nu-range, --branch and --m-max require branch mode");
    }
    const auto m1s = swept_or_fixed(a.m1, a.m1_range, "m1");
    const auto m2s = swept_or_fixed(a.m2, a.m2_range, "m2");
    if (!a.m1_range.given() && !a.m2_range.given()) {
      throw UsageError("sweep: at least one of --m1-range, --m2-range is required");
    }
    for (double m1 : m1s) {
      for (double m2 : m2s) points.push_back({"", 0.0, m1, m2});
    }
  }

  std::vector<std::string> cols;
  if (branch_mode) cols = {"branch", "nu"};
  cols.insert(cols.end(), {"m1", "m2", "p", "m", "m_max", "region"});
  for (auto& c : eigen_columns(a.dim)) cols.push_back(std::move(c));
  cols.insert(cols.end(), {"is_real", "is_diagonalizable", "intertwining_residual"});
  Table table(cols);

  for (std::size_t k = 0; k < points.size(); ++k) {
    const Point& pt = points[k];
    std::vector<Cell> row;
    if (branch_mode) {
      row.push_back(Cell::text_value(pt.branch));
      row.push_back(Cell::number(pt.nu, prec));
    }
    row.push_back(Cell::number(pt.m1, prec));
    row.push_back(Cell::number(pt.m2, prec));
    row.push_back(Cell::number(a.p, prec));
    for (auto& c : mass_cells(pt.m1, pt.m2, prec)) row.push_back(std::move(c));
    row.push_back(pt.m1 > 0.0 ? Cell::text_value(std::string(to_string(classify(pt.m1, pt.m2))))
                              : Cell::text_value("n/a"));

    const auto h = build_hamiltonian(basis, p, pt.m1, pt.m2);
    const bool check = k % static_cast<std::size_t>(a.check_every) == 0;
    const auto r = spectrum(h, SpectrumOptions{tol, check});
    append_eigen_cells(row, r, prec);
    row.push_back(Cell::boolean(r.is_real));
    row.push_back(Cell::boolean(r.is_diagonalizable));
    if (pt.m1 > 0.0 && std::abs(pt.m2) < pt.m1) {
      const auto metric = metric_operator(basis, pt.m1, pt.m2);
      const auto h_adj = build_adjoint_hamiltonian(basis, p, pt.m1, pt.m2).matrix;
      row.push_back(Cell::scientific(verify_intertwining(h.matrix, h_adj, metric.eta), 6));
    } else {
      row.push_back(Cell::text_value("n/a"));
    }
    table.add_row(std::move(row));
  }
  return table;
}

// ----------------------------------------------------------------- driver

int emit(const Table& table, const OutputOptions& opts, std::ostream& out, std::ostream& err) {
  const std::string text = table.render(opts.output_format());
  if (opts.path.empty()) {
    out << text;
    out.flush();
    return kSuccess;
  }
  std::ofstream file(opts.path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open '" << opts.path << "' for writing\n";
    return kDomainFailure;
  }
  file << text;
  if (!file) {
    err << "error: write to '" << opts.path << "' failed\n";
    return kDomainFailure;
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ptdirac: gamma5-mass Dirac Hamiltonian analysis", "ptdirac"};
  app.footer(kUnitsNote);
  app.require_subcommand(1);

  SpectrumArgs spectrum_args;
  auto* sp = app.add_subcommand("spectrum", "Eigenvalues of H over a momentum grid");
  sp->add_option("--m1", spectrum_args.m1, "Scalar mass m1")->required()->check(kFinite);
  sp->add_option("--m2", spectrum_args.m2, "gamma5 mass m2")->required()->check(kFinite);
  sp->add_option("--p", spectrum_args.p, "Momentum (x component); default 0")->check(kFinite);
  sp->add_option("--p-range", spectrum_args.p_range.spec, "Momentum grid: MIN MAX STEPS")
      ->expected(3);
  sp->add_option("--dim", spectrum_args.dim, "Spinor dimension")
      ->check(CLI::IsMember({2, 4}))
      ->capture_default_str();
  sp->add_option("--tol", spectrum_args.tol, "Reality tolerance on |Im lambda|")->check(kFinite);
  add_output_options(sp, spectrum_args.out);
  sp->footer(
      "Columns: p, lambda<i>_re, lambda<i>_im (sorted by real then imaginary part),\n"
      "is_real, is_diagonalizable.");

  MetricArgs metric_args;
  auto* mt = app.add_subcommand("metric", "Metric operator eta = exp(a gamma5) and residuals");
  mt->add_option("--m1", metric_args.m1, "Scalar mass m1")->required()->check(kFinite);
  mt->add_option("--m2", metric_args.m2, "gamma5 mass m2")->required()->check(kFinite);
  mt->add_option("--p", metric_args.p, "Momentum (x component)")->check(kFinite)->capture_default_str();
  mt->add_option("--dim", metric_args.dim, "Spinor dimension")
      ->check(CLI::IsMember({2, 4}))
      ->capture_default_str();
  add_output_options(mt, metric_args.out);
  mt->footer(
      "Columns: m1, m2, p, alpha_exponent (artanh(m2/m1)), intertwining_residual\n"
      "(||eta H eta^-1 - H^+|| / ||H||), counterpart_hermiticity_residual.\n"
      "Exits 1 when |m2| >= m1 (exceptional line or broken phase).");

  ClassifyArgs classify_args;
  auto* cl = app.add_subcommand("classify", "Phase of an (m1, m2) point");
  cl->add_option("--m1", classify_args.m1, "Scalar mass m1 (> 0)")->required()->check(kFinite);
  cl->add_option("--m2", classify_args.m2, "gamma5 mass m2")->required()->check(kFinite);
  cl->add_option("--tol", classify_args.tol, "Relative half-width of boundary bands")
      ->check(kFinite)
      ->capture_default_str();
  add_output_options(cl, classify_args.out);
  cl->footer(
      "Columns: m1, m2, m (or 'imaginary'), m_max (or 'inf'), alpha, theta (or 'n/a'),\n"
      "region: ExoticI | OrdinaryII | ExoticIII | MaximonBoundaryUpper |\n"
      "MaximonBoundaryLower | HermitianAxis | BrokenPT | ExceptionalLine.");

  FigArgs fig_args;
  auto* fg = app.add_subcommand("fig", "Curve and region data for figures 1-3");
  fg->add_option("id", fig_args.id, "Figure id: 1 (nu vs alpha), 2 (branches vs nu), 3 (regions)")
      ->required();
  fg->add_option("--steps", fig_args.steps,
                 "Grid points (fig 1: 501, fig 2: 101) or cells per axis (fig 3: 401)");
  fg->add_option("--alpha-min", fig_args.alpha_min, "fig 1 alpha lower bound")
      ->check(kFinite)
      ->capture_default_str();
  fg->add_option("--alpha-max", fig_args.alpha_max, "fig 1 alpha upper bound")
      ->check(kFinite)
      ->capture_default_str();
  fg->add_option("--nu-min", fig_args.nu_min, "fig 2 nu lower bound")->check(kFinite)->capture_default_str();
  fg->add_option("--nu-max", fig_args.nu_max, "fig 2 nu upper bound")->check(kFinite)->capture_default_str();
  fg->add_option("--nu1-max", fig_args.nu1_max, "fig 3 nu1 extent (0, max]")
      ->check(kFinite)
      ->capture_default_str();
  fg->add_option("--nu2-max", fig_args.nu2_max, "fig 3 nu2 extent [-max, max]")
      ->check(kFinite)
      ->capture_default_str();
  add_output_options(fg, fig_args.out);
  fg->footer(
      "fig 1 columns: alpha, nu, nu1, nu2\n"
      "fig 2 columns: nu, nu1, nu2 (ordinary), nu3, nu4 (exotic)\n"
      "fig 3 columns: nu1, nu2, region (cell centers, nu1 outer)");

  SweepArgs sweep_args;
  auto* sw = app.add_subcommand("sweep", "Batch evaluation over an (m1, m2) or (nu, branch) grid");
  sw->add_option("--mode", sweep_args.mode,
                 "Grid kind; inferred as branch when --branch, --nu-range or --m-max is given")
      ->check(CLI::IsMember({"mass", "branch"}));
  sw->add_option("--m1", sweep_args.m1, "Fixed m1 (mass mode)")->check(kFinite);
  sw->add_option("--m2", sweep_args.m2, "Fixed m2 (mass mode)")->check(kFinite);
  sw->add_option("--m1-range", sweep_args.m1_range.spec, "m1 grid: MIN MAX STEPS")->expected(3);
  sw->add_option("--m2-range", sweep_args.m2_range.spec, "m2 grid: MIN MAX STEPS")->expected(3);
  sw->add_option("--branch", sweep_args.branch, "Branch (branch mode, default both)")
      ->check(CLI::IsMember({"ordinary", "exotic", "both"}));
  sw->add_option("--nu-range", sweep_args.nu_range.spec, "nu grid: MIN MAX STEPS (default 0 1 101)")
      ->expected(3);
  sw->add_option("--m-max", sweep_args.m_max, "Mass bound scale (branch mode, default 1)")
      ->check(kFinite);
  sw->add_option("--p", sweep_args.p, "Momentum (x component)")->check(kFinite)->capture_default_str();
  sw->add_option("--dim", sweep_args.dim, "Spinor dimension")
      ->check(CLI::IsMember({2, 4}))
      ->capture_default_str();
  sw->add_option("--tol", sweep_args.tol, "Reality tolerance on |Im lambda|")->check(kFinite);
  sw->add_option("--check-every", sweep_args.check_every,
                 "Cross-check closed-form spectrum on every N-th point")
      ->capture_default_str();
  add_output_options(sw, sweep_args.out);
  sw->footer(
      "Rows are ordered outer-major (m1 then m2; branch then nu).\n"
      "Columns: [branch, nu,] m1, m2, p, m, m_max, region, lambda<i>_re, lambda<i>_im,\n"
      "is_real, is_diagonalizable, intertwining_residual ('n/a' outside |m2| < m1).");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kUsageError;
  }

  try {
    std::function<Table()> command;
    const OutputOptions* out_opts = nullptr;
    if (sp->parsed()) {
      command = [&] { return cmd_spectrum(spectrum_args); };
      out_opts = &spectrum_args.out;
    } else if (mt->parsed()) {
      command = [&] { return cmd_metric(metric_args); };
      out_opts = &metric_args.out;
    } else if (cl->parsed()) {
      command = [&] { return cmd_classify(classify_args); };
      out_opts = &classify_args.out;
    } else if (fg->parsed()) {
      command = [&] { return cmd_fig(fig_args); };
      out_opts = &fig_args.out;
    } else {
      command = [&] { return cmd_sweep(sweep_args); };
      out_opts = &sweep_args.out;
    }
    return emit(command(), *out_opts, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.get_subcommands().front()->help();
    return kUsageError;
  } catch (const NoMetricError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainFailure;
  } catch (const CrossCheckError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainFailure;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace ptdirac::cli
