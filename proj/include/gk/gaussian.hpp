#pragma once

#include <complex>
#include <cstdint>

#include "gk/types.hpp"

namespace gk::gaussian {

// sign(z) = z/|z| for z != 0, else 0.
double sign_f(double z);
Complex sign_f(Complex z);

struct MonteCarloEstimate {
  Complex mean{0.0, 0.0};
  double std_error = 0.0;  // sqrt(total sample variance / samples)
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};

// Monte Carlo estimate of  E[ sign<u,z> sign<z,v> ]  with z drawn from the
// field-matched standard Gaussian (complex coordinates have variance 1/2
// per real part).  Deterministic for fixed (seed, samples): sampling is cut
// into fixed-size chunks, each with its own derived stream, and partial
// sums are reduced in chunk order regardless of threading.
MonteCarloEstimate mc_pair_identity(const Vector& u, const Vector& v,
                                    Field field, std::int64_t samples,
                                    std::uint64_t seed, int threads = 0);

// Closed form the estimate converges to: (2/pi) arcsin q over the reals,
// H(q) over the complexes.
Complex analytic_pair_value(Complex q, Field field);

// (1/4) int_0^{2pi} sign(Re(e^{-i theta} z)) e^{i theta} dtheta by composite
// midpoint with panel boundaries on the two jumps at arg z +- pi/2; equals
// sign(z).  `panels` is the midpoint count per smooth piece.
Complex verify_phase_identity(Complex z, int panels);

}  // namespace gk::gaussian
