#include "pileup/params.hpp"

#include <numbers>
#include <stdexcept>

namespace pileup {

MaterialParams MaterialParams::from_elastic(double G, double b, double nu,
                                            double h, double sigma, int n) {
  if (!(G > 0.0) || !(b > 0.0))
    throw std::invalid_argument("MaterialParams: G and b must be > 0");
  if (!(nu >= 0.0) || !(nu < 0.5))
    throw std::invalid_argument("MaterialParams: need 0 <= nu < 0.5");
  MaterialParams p;
  p.K = std::numbers::pi * G * b / (2.0 * (1.0 - nu));
  p.h = h;
  p.sigma = sigma;
  p.n = n;
  p.validate();
  return p;
}

void MaterialParams::validate() const {
  if (!(K > 0.0)) throw std::invalid_argument("MaterialParams: K must be > 0");
  if (!(h > 0.0)) throw std::invalid_argument("MaterialParams: h must be > 0");
  if (!(sigma > 0.0))
    throw std::invalid_argument("MaterialParams: sigma must be > 0");
  if (n < 1) throw std::invalid_argument("MaterialParams: n must be >= 1");
}

}  // namespace pileup
