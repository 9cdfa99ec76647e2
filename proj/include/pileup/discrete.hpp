#ifndef PILEUP_DISCRETE_HPP
#define PILEUP_DISCRETE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "pileup/density_field.hpp"
#include "pileup/params.hpp"
#include "pileup/scaling.hpp"

// Discrete n-wall pile-up: energies, force residuals, and the equilibrium
// solvers for the wall model (kernel phi) and the single-slip-plane EFN
// model (kernel psi). The pinned wall at position 0 takes part in every
// interaction sum but carries no unknown.

namespace pileup::discrete {

struct WallConfiguration {
  std::vector<double> positions;  // x_1 < ... < x_n, all > 0
  Frame frame = Frame::dimensional;
  double length_scale = 0.0;  // l_n behind a dimensionless frame; else unused

  int n() const { return static_cast<int>(positions.size()); }
  void validate() const;  // throws std::domain_error on ordering violations
};

struct SolveSettings {
  enum class InitialGuess { equispaced_at_regime_length, user_supplied };

  double residual_tolerance = 1e-10;  // relative to sigma
  int max_iterations = 200;
  double line_search_shrink = 0.5;
  InitialGuess initial_guess = InitialGuess::equispaced_at_regime_length;
  std::vector<double> user_positions;

  void validate() const;
};

// Carried by SolveError and returned by the *_report solver entry points.
struct SolveReport {
  WallConfiguration configuration;
  int iterations = 0;
  double residual_norm = 0.0;  // max-norm of the final residual
  bool converged = false;
  std::vector<double> energy_trace;  // energy after each accepted step
  int gradient_fallback_steps = 0;
};

class SolveError : public std::runtime_error {
 public:
  SolveError(const std::string& what, std::vector<double> best_positions,
             double residual_norm)
      : std::runtime_error(what),
        best_positions_(std::move(best_positions)),
        residual_norm_(residual_norm) {}

  const std::vector<double>& best_positions() const { return best_positions_; }
  double residual_norm() const { return residual_norm_; }

 private:
  std::vector<double> best_positions_;
  double residual_norm_;
};

// Total energy E = K sum_{k=1..n} sum_{j=0..n-k} V((x_{j+k}-x_j)/h)
//                + sigma sum_j x_j  (one-sided pair sum).
double dimensional_energy(const WallConfiguration& config,
                          const MaterialParams& params);

// The same energy as the symmetric double sum (K/2) sum_{i != j} V(...);
// agrees with dimensional_energy to rounding.
double dimensional_energy_double_sum(const WallConfiguration& config,
                                     const MaterialParams& params);

// Net stress on each free wall: (K/h) sum_{j != i} phi((x_i-x_j)/h) - sigma.
// Equals minus the energy gradient: residual_i = -dE/dx_i.
std::vector<double> residual(const WallConfiguration& config,
                             const MaterialParams& params);

// Rescaled energy in the regime frame: (beta^2/(n alpha)) sum V(n alpha dx)
// + (1/n) sum x, with V replaced by V_hat in the subcritical regime.
double dimensionless_energy(const WallConfiguration& config,
                            const MaterialParams& params,
                            const scaling::RegimeClassification& regime);

// General rescaled form for an explicit aspect ratio (kernel V).
double dimensionless_energy_general(const WallConfiguration& config,
                                    const MaterialParams& params,
                                    double alpha);

// Damped Newton on the residual with an energy backtracking line search.
// The result satisfies max|residual| < residual_tolerance * sigma; throws
// SolveError (with best iterate) on non-convergence.
WallConfiguration solve_equilibrium(const MaterialParams& params,
                                    const SolveSettings& settings = {});
SolveReport solve_equilibrium_report(const MaterialParams& params,
                                     const SolveSettings& settings = {});

// Same contracts for the EFN single-slip-plane model (kernel psi).
WallConfiguration solve_efn(const MaterialParams& params,
                            const SolveSettings& settings = {});
SolveReport solve_efn_report(const MaterialParams& params,
                             const SolveSettings& settings = {});
std::vector<double> efn_residual(const WallConfiguration& config,
                                 const MaterialParams& params);

// rho(x_i) = 1 / (x_i - x_{i-1}), sampled at the wall positions (x_0 = 0).
DensityField discrete_density(const WallConfiguration& config);

// Discrete density mapped to the dimensionless frame of the given
// classification: x -> x / l_n, rho -> rho * l_n / n.
DensityField dimensionless_density(const WallConfiguration& config,
                                   const MaterialParams& params,
                                   const scaling::RegimeClassification& cls);

}  // namespace pileup::discrete

#endif
