#ifndef PILEUP_PARAMS_HPP
#define PILEUP_PARAMS_HPP

namespace pileup {

// Physical constants of one pile-up problem. K is the interaction
// pre-factor pi G b / (2 (1 - nu)) with units stress * length; h is the
// in-wall dislocation spacing; sigma the applied shear stress; n the number
// of free walls (the pinned wall at 0 is implicit).
struct MaterialParams {
  double K = 1.0;
  double h = 1.0;
  double sigma = 1.0;
  int n = 1;

  static MaterialParams from_elastic(double G, double b, double nu, double h,
                                     double sigma, int n);

  void validate() const;  // throws std::invalid_argument
};

}  // namespace pileup

#endif
