#pragma once

namespace cvqkd {

// Modified Bessel functions of the first kind, orders 0 and 1.
// Power series below the crossover, asymptotic expansion above; relative
// accuracy ~1e-13 over the range used by the fading model (x up to ~10^2).
double bessel_i0(double x);
double bessel_i1(double x);

// exp(-|x|) * I0(x) and exp(-|x|) * I1(x); safe for large arguments where
// the unscaled functions overflow.
double bessel_i0_scaled(double x);
double bessel_i1_scaled(double x);

}  // namespace cvqkd
