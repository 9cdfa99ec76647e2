#include "pileup/kernels.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace pileup::kernels {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// The closed form of V is a difference of two terms that both grow like
// s/pi, while V itself decays like e^(-2 pi s); the cancellation costs about
// e^(2 pi s) * eps in relative accuracy, which passes 1e-12 already near
// s = 4.5. The exponential series below is exact and convergent for every
// s > 0, so it takes over from here on.
constexpr double kVExpSwitch = 0.5;

constexpr std::size_t kMaxTerms = 10'000'000;

// phi(s) = 4 s sum_{m>=1} m e^(-2 pi m s); truncated after m = 3 the
// relative error is 4 e^(-6 pi s), i.e. < 1e-16 for s >= 2.
double phi_large(double a) {
  const double q = std::exp(-2.0 * kPi * a);
  return 4.0 * a * q * (1.0 + q * (2.0 + 3.0 * q));
}

// Laurent series: phi(s) = (1 - u/3 + u^2/15 - 2u^3/189)/(pi^2 s), u = (pi s)^2.
double phi_small(double a) {
  const double u = kPi2 * a * a;
  return (1.0 + u * (-1.0 / 3.0 + u * (1.0 / 15.0 - u * (2.0 / 189.0)))) /
         (kPi2 * a);
}

double phi_abs(double a, const EvalPolicy& policy) {
  if (a < policy.small_arg_threshold) return phi_small(a);
  if (a > policy.large_arg_threshold) return phi_large(a);
  const double sh = std::sinh(kPi * a);
  return a / (sh * sh);
}

// phi'(s) = sum_m 4 m (1 - 2 pi m s) e^(-2 pi m s).
double phi_prime_large(double a) {
  const double q = std::exp(-2.0 * kPi * a);
  const double w = 2.0 * kPi * a;
  return q * (4.0 * (1.0 - w) +
              q * (8.0 * (1.0 - 2.0 * w) + q * 12.0 * (1.0 - 3.0 * w)));
}

double phi_prime_abs(double a, const EvalPolicy& policy) {
  if (a < policy.small_arg_threshold) {
    // phi = 1/(pi^2 s) - s/3 + pi^2 s^3/15 - 2 pi^4 s^5/189, differentiated.
    const double a2 = a * a;
    return -1.0 / (kPi2 * a2) - 1.0 / 3.0 +
           a2 * (kPi2 / 5.0 - a2 * (10.0 * kPi2 * kPi2 / 189.0));
  }
  if (a > policy.large_arg_threshold) return phi_prime_large(a);
  const double t = kPi * a;
  const double sh = std::sinh(t);
  const double ch = std::cosh(t);
  return (1.0 - 2.0 * t * ch / sh) / (sh * sh);
}

// V(s) = sum_{m>=1} (2s/pi + 1/(pi^2 m)) e^(-2 pi m s), convergent for s > 0.
double V_exp_series(double a) {
  const double q = std::exp(-2.0 * kPi * a);
  double qm = q;
  double sum = 0.0;
  for (int m = 1; m <= 64; ++m) {
    const double term = (2.0 * a / kPi + 1.0 / (kPi2 * m)) * qm;
    sum += term;
    if (term <= sum * kEps) break;
    qm *= q;
  }
  return sum;
}

// V(s) = (1 - log(2 pi s))/pi^2 + s^2/6 - pi^2 s^4/60 + pi^4 s^6/567 - ...
double V_small(double a) {
  const double a2 = a * a;
  return (1.0 - std::log(2.0 * kPi * a)) / kPi2 +
         a2 * (1.0 / 6.0 +
               a2 * (-kPi2 / 60.0 + a2 * (kPi2 * kPi2 / 567.0)));
}

double V_abs(double a, const EvalPolicy& policy) {
  if (a < policy.small_arg_threshold) return V_small(a);
  const double exp_switch = std::min(kVExpSwitch, policy.large_arg_threshold);
  if (a >= exp_switch) return V_exp_series(a);
  const double t = kPi * a;
  const double sh = std::sinh(t);
  return (a / kPi) * (std::cosh(t) / sh) - std::log(2.0 * sh) / kPi2;
}

enum class EffKind { v, phi, phi_prime };

SumResult effective_sum(double t, const EvalPolicy& policy, EffKind kind) {
  policy.validate();
  if (!(t > 0.0)) throw std::domain_error("effective sum requires t > 0");

  const auto asymptote = [&]() -> double {
    switch (kind) {
      case EffKind::v:
        return 1.0 / (6.0 * kPi * t);
      case EffKind::phi:
        return 1.0 / (6.0 * kPi * t * t);
      case EffKind::phi_prime:
      default:
        return -1.0 / (3.0 * kPi * t * t * t);
    }
  };

  // The tail certificate below needs k t >= 2; if that is out of reach
  // within the term cap, return the small-spacing asymptote directly.
  if (t * static_cast<double>(kMaxTerms) < 2.0)
    return {asymptote(), kMaxTerms, true};

  const int ratio_pow = kind == EffKind::v ? 1 : (kind == EffKind::phi ? 2 : 3);
  const double q = std::exp(-2.0 * kPi * t);
  double sum = 0.0;
  for (std::size_t k = 1; k <= kMaxTerms; ++k) {
    const double dk = static_cast<double>(k);
    const double s = dk * t;
    double term;
    switch (kind) {
      case EffKind::v:
        term = V_abs(s, policy);
        break;
      case EffKind::phi:
        term = dk * phi_abs(s, policy);
        break;
      case EffKind::phi_prime:
      default:
        term = dk * dk * phi_prime_abs(s, policy);
        break;
    }
    sum += term;
    if (term == 0.0) return {sum, k, false};
    if (s >= 2.0) {
      // Beyond s = 2 every summand behaves like s^p e^(-2 pi s) up to a
      // relative e^(-4 pi s) < 4e-11, so successive terms shrink at least
      // by ((k+1)/k)^p q and the remainder is geometric.
      const double r =
          std::pow((dk + 1.0) / dk, ratio_pow) * q * (1.0 + 1e-9);
      if (r < 1.0) {
        const double tail = std::abs(term) * r / (1.0 - r);
        if (tail <= policy.tail_tolerance * std::abs(sum))
          return {sum, k, false};
      }
    }
  }
  return {asymptote(), kMaxTerms, true};
}

}  // namespace

void EvalPolicy::validate() const {
  if (!(small_arg_threshold > 0.0) ||
      !(small_arg_threshold < large_arg_threshold))
    throw std::invalid_argument(
        "EvalPolicy: need 0 < small_arg_threshold < large_arg_threshold");
  if (!(tail_tolerance > 0.0))
    throw std::invalid_argument("EvalPolicy: tail_tolerance must be > 0");
}

double phi(double s, const EvalPolicy& policy) {
  policy.validate();
  if (s == 0.0) throw std::domain_error("phi is singular at s = 0");
  const double value = phi_abs(std::abs(s), policy);
  return s > 0.0 ? value : -value;
}

double phi_prime(double s, const EvalPolicy& policy) {
  policy.validate();
  if (s == 0.0) throw std::domain_error("phi' is singular at s = 0");
  return phi_prime_abs(std::abs(s), policy);
}

double V(double s, const EvalPolicy& policy) {
  policy.validate();
  if (s == 0.0) throw std::domain_error("V is singular at s = 0");
  return V_abs(std::abs(s), policy);
}

double psi(double s) {
  if (s == 0.0) throw std::domain_error("psi is singular at s = 0");
  return 1.0 / (kPi2 * s);
}

double V_hat(double s, int n, double beta, const EvalPolicy& policy) {
  if (n < 1) throw std::invalid_argument("V_hat requires n >= 1");
  if (!(beta > 0.0)) throw std::invalid_argument("V_hat requires beta > 0");
  const double n_alpha = static_cast<double>(n) * n * beta * beta;
  return V(s, policy) + (-1.0 + std::log(2.0 * kPi * n_alpha)) / kPi2;
}

SumResult V_eff_sum(double t, const EvalPolicy& policy) {
  return effective_sum(t, policy, EffKind::v);
}

SumResult phi_eff_sum(double t, const EvalPolicy& policy) {
  return effective_sum(t, policy, EffKind::phi);
}

SumResult phi_eff_prime_sum(double t, const EvalPolicy& policy) {
  return effective_sum(t, policy, EffKind::phi_prime);
}

double V_eff(double t, const EvalPolicy& policy) {
  return V_eff_sum(t, policy).value;
}

double phi_eff(double t, const EvalPolicy& policy) {
  return phi_eff_sum(t, policy).value;
}

double phi_eff_prime(double t, const EvalPolicy& policy) {
  return phi_eff_prime_sum(t, policy).value;
}

}  // namespace pileup::kernels
