#ifndef PILEUP_KERNELS_HPP
#define PILEUP_KERNELS_HPP

#include <cstddef>

// Scalar interaction kernels for dislocation-wall pile-ups.
//
//   phi(s) = s / sinh^2(pi s)                                  wall-wall stress
//   V(s)   = (1/pi) s coth(pi s) - (1/pi^2) log(2 sinh(pi s))  potential, V' = -phi
//   psi(s) = 1 / (pi^2 s)                                      single-slip-plane stress
//
// plus the renormalized potential V_hat and the k-th-neighbour effective
// sums V_eff(t) = sum_k V(kt), phi_eff(t) = sum_k k phi(kt) and its
// derivative phi_eff_prime(t) = sum_k k^2 phi'(kt).
//
// Every function is pure and safe for concurrent use.

namespace pileup::kernels {

// Branch selection and truncation control for finite-precision evaluation.
struct EvalPolicy {
  double small_arg_threshold = 1e-4;  // below: power series around s = 0
  double large_arg_threshold = 15.0;  // above: exponential series
  double tail_tolerance = 1e-14;      // relative tail bound for effective sums

  void validate() const;  // throws std::invalid_argument on violation
};

// phi(s) = s / sinh^2(pi s); odd; throws std::domain_error at s = 0.
double phi(double s, const EvalPolicy& policy = {});

// d phi / ds; even; negative for all s != 0.
double phi_prime(double s, const EvalPolicy& policy = {});

// V(s) = (1/pi) s coth(pi s) - (1/pi^2) log(2 sinh(pi s)); even; V' = -phi.
// Grows like (1 - log(2 pi |s|)) / pi^2 near zero and decays like
// (2/pi) |s| e^(-2 pi |s|) at infinity.
double V(double s, const EvalPolicy& policy = {});

// psi(s) = 1 / (pi^2 s); odd; throws std::domain_error at s = 0.
double psi(double s);

// V_hat(s) = V(s) + (-1 + log(2 pi n alpha_n)) / pi^2 with alpha_n = n beta^2.
double V_hat(double s, int n, double beta, const EvalPolicy& policy = {});

// Result of a truncated effective sum. `truncated_to_asymptote` is set when
// the term cap was reached and the small-spacing asymptote was returned
// instead of the partial sum.
struct SumResult {
  double value = 0.0;
  std::size_t terms = 0;
  bool truncated_to_asymptote = false;
};

SumResult V_eff_sum(double t, const EvalPolicy& policy = {});
SumResult phi_eff_sum(double t, const EvalPolicy& policy = {});
SumResult phi_eff_prime_sum(double t, const EvalPolicy& policy = {});

// Value-only conveniences.
double V_eff(double t, const EvalPolicy& policy = {});
double phi_eff(double t, const EvalPolicy& policy = {});
double phi_eff_prime(double t, const EvalPolicy& policy = {});

}  // namespace pileup::kernels

#endif
