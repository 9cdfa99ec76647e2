#include "pileup/discrete.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "pileup/kernels.hpp"

namespace pileup::discrete {

namespace {

constexpr double kPi = std::numbers::pi;

// Pair interaction used by the solver: stress, its derivative, and the pair
// energy (the primitive of -stress).
struct Interaction {
  double (*stress)(double);
  double (*stress_prime)(double);
  double (*energy)(double);
};

double wall_stress(double s) { return kernels::phi(s); }
double wall_stress_prime(double s) { return kernels::phi_prime(s); }
double wall_energy(double s) { return kernels::V(s); }

double efn_stress(double s) { return kernels::psi(s); }
double efn_stress_prime(double s) { return -1.0 / (kPi * kPi * s * s); }
// Primitive of -psi; diverges at infinity, which is harmless for the finite
// sums used in the line search.
double efn_energy(double s) { return -std::log(std::abs(s)) / (kPi * kPi); }

constexpr Interaction kWallInteraction{wall_stress, wall_stress_prime,
                                       wall_energy};
constexpr Interaction kEfnInteraction{efn_stress, efn_stress_prime,
                                      efn_energy};

double pair_energy(const std::vector<double>& x, const MaterialParams& p,
                   const Interaction& inter) {
  // One-sided sum over neighbour offsets, pinned wall included as x_0 = 0.
  const int n = static_cast<int>(x.size());
  double interaction = 0.0;
  for (int k = 1; k <= n; ++k) {
    for (int j = 0; j + k <= n; ++j) {
      const double lo = j == 0 ? 0.0 : x[j - 1];
      const double hi = x[j + k - 1];
      interaction += inter.energy((hi - lo) / p.h);
    }
  }
  double linear = 0.0;
  for (double xi : x) linear += xi;
  return p.K * interaction + p.sigma * linear;
}

void residual_into(const std::vector<double>& x, const MaterialParams& p,
                   const Interaction& inter, std::vector<double>& r) {
  const int n = static_cast<int>(x.size());
  r.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double sum = inter.stress(x[i] / p.h);  // pinned wall at 0
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      sum += inter.stress((x[i] - x[j]) / p.h);
    }
    r[i] = (p.K / p.h) * sum - p.sigma;
  }
}

void check_ordered(const std::vector<double>& x) {
  double prev = 0.0;
  for (double xi : x) {
    if (!(xi > prev))
      throw std::domain_error(
          "singular configuration: wall positions must satisfy 0 < x_1 < ... "
          "< x_n");
    prev = xi;
  }
}

bool admissible(const std::vector<double>& x, double margin) {
  double prev = 0.0;
  for (double xi : x) {
    if (!(xi > prev + margin)) return false;
    prev = xi;
  }
  return true;
}

std::vector<double> initial_positions(const MaterialParams& p,
                                      const SolveSettings& settings,
                                      bool efn_model) {
  if (settings.initial_guess == SolveSettings::InitialGuess::user_supplied) {
    check_ordered(settings.user_positions);
    if (static_cast<int>(settings.user_positions.size()) != p.n)
      throw std::invalid_argument("user initial guess has wrong size");
    return settings.user_positions;
  }
  // Equispaced walls over (0, l]; the EFN model has no h-dependence, so its
  // natural extent is the inverse-square-root pile-up length.
  const double extent =
      efn_model ? 2.0 * p.n * p.K / (kPi * kPi * p.sigma)
                : scaling::classify(p).length_scale;
  std::vector<double> x(p.n);
  for (int i = 0; i < p.n; ++i) x[i] = extent * (i + 1.0) / p.n;
  return x;
}

SolveReport solve_newton(const MaterialParams& params,
                         const SolveSettings& settings,
                         const Interaction& inter, bool efn_model) {
  params.validate();
  settings.validate();
  const int n = params.n;
  std::vector<double> x = initial_positions(params, settings, efn_model);
  std::vector<double> r(n), x_trial(n);
  Eigen::MatrixXd hess(n, n);
  Eigen::VectorXd rhs(n), step(n);

  SolveReport report;
  report.energy_trace.reserve(settings.max_iterations + 1);
  double energy = pair_energy(x, params, inter);
  report.energy_trace.push_back(energy);

  const double stress_tol = settings.residual_tolerance * params.sigma;
  const double kh2 = params.K / (params.h * params.h);

  for (int iter = 0; iter < settings.max_iterations; ++iter) {
    residual_into(x, params, inter, r);
    double rnorm = 0.0;
    for (double ri : r) rnorm = std::max(rnorm, std::abs(ri));
    report.iterations = iter;
    report.residual_norm = rnorm;
    if (rnorm < stress_tol) {
      report.converged = true;
      report.configuration = {x, Frame::dimensional, 0.0};
      return report;
    }

    // H = -J is the energy Hessian: strictly diagonally dominant SPD, the
    // pinned-wall term providing the strict part.
    for (int i = 0; i < n; ++i) {
      double diag = -inter.stress_prime(x[i] / params.h);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const double w = -inter.stress_prime((x[i] - x[j]) / params.h);
        diag += w;
        hess(i, j) = -kh2 * w;
      }
      hess(i, i) = kh2 * diag;
    }
    for (int i = 0; i < n; ++i) rhs(i) = r[i];

    bool newton_ok = false;
    Eigen::LLT<Eigen::MatrixXd> llt(hess);
    if (llt.info() == Eigen::Success) {
      step = llt.solve(rhs);
      newton_ok = step.allFinite();
    }

    const double margin = 1e-12 * x.back();
    double alpha = 1.0;
    bool accepted = false;
    if (newton_ok) {
      for (int cut = 0; cut < 60; ++cut) {
        for (int i = 0; i < n; ++i) x_trial[i] = x[i] + alpha * step(i);
        if (admissible(x_trial, margin)) {
          const double e_trial = pair_energy(x_trial, params, inter);
          if (e_trial <= energy + 1e-14 * std::abs(energy)) {
            x = x_trial;
            energy = e_trial;
            accepted = true;
            break;
          }
        }
        alpha *= settings.line_search_shrink;
      }
    }

    if (!accepted) {
      // Gradient-flow fallback: move along the residual with a step bounded
      // by a fraction of the smallest gap.
      ++report.gradient_fallback_steps;
      double min_gap = x[0];
      for (int i = 1; i < n; ++i) min_gap = std::min(min_gap, x[i] - x[i - 1]);
      double rmax = 0.0;
      for (double ri : r) rmax = std::max(rmax, std::abs(ri));
      double dt = 0.2 * min_gap / std::max(rmax, 1e-300);
      for (int cut = 0; cut < 80; ++cut) {
        for (int i = 0; i < n; ++i) x_trial[i] = x[i] + dt * r[i];
        if (admissible(x_trial, margin)) {
          const double e_trial = pair_energy(x_trial, params, inter);
          if (e_trial <= energy + 1e-14 * std::abs(energy)) {
            x = x_trial;
            energy = e_trial;
            accepted = true;
            break;
          }
        }
        dt *= 0.5;
      }
    }

    report.energy_trace.push_back(energy);
    if (!accepted) {
      throw SolveError(
          "equilibrium solve stalled: no admissible descent step at residual "
          "norm " +
              std::to_string(rnorm),
          x, rnorm);
    }
  }

  residual_into(x, params, inter, r);
  double rnorm = 0.0;
  for (double ri : r) rnorm = std::max(rnorm, std::abs(ri));
  if (rnorm < stress_tol) {
    report.converged = true;
    report.iterations = settings.max_iterations;
    report.residual_norm = rnorm;
    report.configuration = {x, Frame::dimensional, 0.0};
    return report;
  }
  throw SolveError("equilibrium solve did not converge in " +
                       std::to_string(settings.max_iterations) +
                       " iterations (residual norm " + std::to_string(rnorm) +
                       ")",
                   x, rnorm);
}

}  // namespace

void WallConfiguration::validate() const { check_ordered(positions); }

void SolveSettings::validate() const {
  if (!(residual_tolerance > 0.0))
    throw std::invalid_argument("SolveSettings: residual_tolerance must be > 0");
  if (max_iterations < 1)
    throw std::invalid_argument("SolveSettings: max_iterations must be >= 1");
  if (!(line_search_shrink > 0.0) || !(line_search_shrink < 1.0))
    throw std::invalid_argument(
        "SolveSettings: line_search_shrink must lie in (0,1)");
}

double dimensional_energy(const WallConfiguration& config,
                          const MaterialParams& params) {
  params.validate();
  config.validate();
  return pair_energy(config.positions, params, kWallInteraction);
}

double dimensional_energy_double_sum(const WallConfiguration& config,
                                     const MaterialParams& params) {
  params.validate();
  config.validate();
  const auto& x = config.positions;
  const int n = config.n();
  double interaction = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double xi = i == 0 ? 0.0 : x[i - 1];
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      const double xj = j == 0 ? 0.0 : x[j - 1];
      interaction += kernels::V((xi - xj) / params.h);
    }
  }
  double linear = 0.0;
  for (double xi : x) linear += xi;
  return 0.5 * params.K * interaction + params.sigma * linear;
}

std::vector<double> residual(const WallConfiguration& config,
                             const MaterialParams& params) {
  params.validate();
  config.validate();
  std::vector<double> r;
  residual_into(config.positions, params, kWallInteraction, r);
  return r;
}

std::vector<double> efn_residual(const WallConfiguration& config,
                                 const MaterialParams& params) {
  params.validate();
  config.validate();
  std::vector<double> r;
  residual_into(config.positions, params, kEfnInteraction, r);
  return r;
}

double dimensionless_energy(const WallConfiguration& config,
                            const MaterialParams& params,
                            const scaling::RegimeClassification& regime) {
  params.validate();
  config.validate();
  if (config.frame != Frame::dimensionless)
    throw std::invalid_argument(
        "dimensionless_energy requires a dimensionless configuration");
  const auto& x = config.positions;
  const int n = config.n();
  const double scale = params.n * regime.alpha;   // kernel argument factor
  const double coeff = regime.beta * regime.beta / (params.n * regime.alpha);
  const bool renormalized = regime.regime == scaling::Regime::subcritical;

  double interaction = 0.0;
  for (int k = 1; k <= n; ++k) {
    for (int j = 0; j + k <= n; ++j) {
      const double lo = j == 0 ? 0.0 : x[j - 1];
      const double hi = x[j + k - 1];
      interaction += renormalized
                         ? kernels::V_hat(scale * (hi - lo), params.n,
                                          regime.beta)
                         : kernels::V(scale * (hi - lo));
    }
  }
  double linear = 0.0;
  for (double xi : x) linear += xi;
  return coeff * interaction + linear / params.n;
}

double dimensionless_energy_general(const WallConfiguration& config,
                                    const MaterialParams& params,
                                    double alpha) {
  params.validate();
  config.validate();
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be > 0");
  const auto& x = config.positions;
  const int n = config.n();
  const double scale = params.n * alpha;
  const double coeff =
      params.K / (static_cast<double>(params.n) * params.n * params.sigma *
                  params.h * alpha);
  double interaction = 0.0;
  for (int k = 1; k <= n; ++k) {
    for (int j = 0; j + k <= n; ++j) {
      const double lo = j == 0 ? 0.0 : x[j - 1];
      const double hi = x[j + k - 1];
      interaction += kernels::V(scale * (hi - lo));
    }
  }
  double linear = 0.0;
  for (double xi : x) linear += xi;
  return coeff * interaction + linear / params.n;
}

SolveReport solve_equilibrium_report(const MaterialParams& params,
                                     const SolveSettings& settings) {
  return solve_newton(params, settings, kWallInteraction, false);
}

WallConfiguration solve_equilibrium(const MaterialParams& params,
                                    const SolveSettings& settings) {
  return solve_equilibrium_report(params, settings).configuration;
}

SolveReport solve_efn_report(const MaterialParams& params,
                             const SolveSettings& settings) {
  return solve_newton(params, settings, kEfnInteraction, true);
}

WallConfiguration solve_efn(const MaterialParams& params,
                            const SolveSettings& settings) {
  return solve_efn_report(params, settings).configuration;
}

DensityField discrete_density(const WallConfiguration& config) {
  config.validate();
  const auto& x = config.positions;
  std::vector<double> values(x.size());
  double prev = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    values[i] = 1.0 / (x[i] - prev);
    prev = x[i];
  }
  return DensityField(x, values, config.frame);
}

DensityField dimensionless_density(const WallConfiguration& config,
                                   const MaterialParams& params,
                                   const scaling::RegimeClassification& cls) {
  if (config.frame != Frame::dimensional)
    throw std::invalid_argument(
        "dimensionless_density expects a dimensional configuration");
  DensityField dens = discrete_density(config);
  std::vector<double> grid(dens.grid.size()), values(dens.values.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i] = dens.grid[i] / cls.length_scale;
    values[i] = dens.values[i] * cls.length_scale / params.n;
  }
  return DensityField(std::move(grid), std::move(values),
                      Frame::dimensionless);
}

}  // namespace pileup::discrete
