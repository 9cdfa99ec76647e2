#include "pileup/scaling.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace pileup::scaling {

namespace {

constexpr double kPi = std::numbers::pi;

// alpha_n for the supercritical regime; requires 2 beta^2 / pi > 1.
double supercritical_alpha(double beta_value) {
  const double log_arg = 2.0 * beta_value * beta_value / kPi;
  if (!(log_arg > 1.0))
    throw std::domain_error(
        "supercritical scaling inadmissible: 2 beta^2 / pi <= 1 gives a "
        "nonpositive length scale");
  return std::log(log_arg) / (2.0 * kPi);
}

RegimeClassification build(const MaterialParams& params, Regime regime,
                           double beta_value) {
  RegimeClassification out;
  out.regime = regime;
  out.beta = beta_value;
  out.margin_n_beta = params.n * beta_value;
  out.margin_beta = beta_value;
  out.critical_constant = params.n * beta_value;
  switch (regime) {
    case Regime::subcritical:
      out.alpha = params.n * beta_value * beta_value;  // K / (sigma h)
      break;
    case Regime::first_critical:
    case Regime::intermediate:
    case Regime::second_critical:
      out.alpha = beta_value;
      break;
    case Regime::supercritical:
      out.alpha = supercritical_alpha(beta_value);
      break;
  }
  out.length_scale = out.alpha * params.n * params.h;
  return out;
}

}  // namespace

const char* regime_name(Regime regime) {
  switch (regime) {
    case Regime::subcritical:
      return "Subcritical";
    case Regime::first_critical:
      return "FirstCritical";
    case Regime::intermediate:
      return "Intermediate";
    case Regime::second_critical:
      return "SecondCritical";
    case Regime::supercritical:
      return "Supercritical";
  }
  return "?";
}

Regime regime_from_index(int index) {
  if (index < 1 || index > 5)
    throw std::invalid_argument("regime index must be in 1..5");
  return static_cast<Regime>(index);
}

void ClassifierThresholds::validate() const {
  const bool low_ok = low_band[0] > 0.0 && low_band[0] < 1.0 && low_band[1] > 1.0;
  const bool high_ok =
      high_band[0] > 0.0 && high_band[0] < 1.0 && high_band[1] > 1.0;
  if (!low_ok || !high_ok)
    throw std::invalid_argument(
        "ClassifierThresholds: bands must be ordered and contain 1");
}

double beta(const MaterialParams& params) {
  params.validate();
  return std::sqrt(params.K / (params.n * params.sigma * params.h));
}

RegimeClassification classify(const MaterialParams& params,
                              const ClassifierThresholds& thresholds) {
  thresholds.validate();
  const double b = beta(params);
  const double nb = params.n * b;
  Regime regime;
  if (nb < thresholds.low_band[0])
    regime = Regime::subcritical;
  else if (nb <= thresholds.low_band[1])
    regime = Regime::first_critical;
  else if (b < thresholds.high_band[0])
    regime = Regime::intermediate;
  else if (b <= thresholds.high_band[1])
    regime = Regime::second_critical;
  else
    regime = Regime::supercritical;
  return build(params, regime, b);
}

RegimeClassification classify_as(const MaterialParams& params, Regime regime) {
  return build(params, regime, beta(params));
}

double pileup_length(const MaterialParams& params, Regime regime) {
  params.validate();
  switch (regime) {
    case Regime::subcritical:
      return 2.0 * params.n * params.K / (kPi * kPi * params.sigma);
    case Regime::intermediate:
      return std::sqrt(2.0 * params.n * params.K * params.h /
                       (3.0 * kPi * params.sigma));
    case Regime::supercritical:
      return supercritical_alpha(beta(params)) * params.n * params.h;
    case Regime::first_critical:
    case Regime::second_critical:
      throw NoClosedFormLength(
          std::string("no closed-form pile-up length in the ") +
          regime_name(regime) +
          " regime; solve the continuum equilibrium numerically");
  }
  throw std::invalid_argument("unknown regime");
}

}  // namespace pileup::scaling
