#ifndef PILEUP_SCALING_HPP
#define PILEUP_SCALING_HPP

#include <array>
#include <stdexcept>

#include "pileup/params.hpp"

// Scaling-regime classification for wall pile-ups. The control parameter is
// beta = sqrt(K / (n sigma h)); the five regimes are separated by the
// magnitudes of n*beta and beta:
//
//   (1) subcritical     n*beta << 1      l_n = K n / sigma
//   (2) first critical  n*beta ~ 1       l_n = sqrt(K n h / sigma)
//   (3) intermediate    1/n << beta << 1 l_n = sqrt(K n h / sigma)
//   (4) second critical beta ~ 1         l_n = sqrt(K n h / sigma)
//   (5) supercritical   beta >> 1        l_n = (n h / 2 pi) ln(2 beta^2 / pi)
//
// The aspect ratio alpha_n always equals l_n / (n h).

namespace pileup::scaling {

enum class Regime {
  subcritical = 1,
  first_critical = 2,
  intermediate = 3,
  second_critical = 4,
  supercritical = 5,
};

const char* regime_name(Regime regime);
Regime regime_from_index(int index);  // 1..5

// Finite-n decision bands around the asymptotic statements n*beta ~ 1 and
// beta ~ 1. A value inside a band maps to the corresponding critical regime.
struct ClassifierThresholds {
  std::array<double, 2> low_band = {0.6, 6.0};   // applied to n*beta
  std::array<double, 2> high_band = {0.6, 6.0};  // applied to beta

  void validate() const;
};

struct RegimeClassification {
  Regime regime = Regime::second_critical;
  double beta = 0.0;
  double alpha = 0.0;          // aspect ratio alpha_n = l_n / (n h)
  double length_scale = 0.0;   // l_n
  double margin_n_beta = 0.0;  // n * beta, distance marker to the low band
  double margin_beta = 0.0;    // beta, distance marker to the high band
  double critical_constant = 0.0;  // c = n * beta at this n
};

// Thrown when a closed-form pile-up length does not exist for the regime.
class NoClosedFormLength : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

double beta(const MaterialParams& params);

RegimeClassification classify(const MaterialParams& params,
                              const ClassifierThresholds& thresholds = {});

// Classification with the regime forced; alpha and l_n follow the forced
// regime's formulas. Supercritical admissibility is still enforced.
RegimeClassification classify_as(const MaterialParams& params, Regime regime);

// Physical pile-up length l (same scaling as l_n, different constant):
//   subcritical   2 n K / (pi^2 sigma)
//   intermediate  sqrt(2 n K h / (3 pi sigma))
//   supercritical (n h / 2 pi) ln(2 beta^2 / pi)
// The two critical regimes have no closed form and throw NoClosedFormLength.
double pileup_length(const MaterialParams& params, Regime regime);

}  // namespace pileup::scaling

#endif
