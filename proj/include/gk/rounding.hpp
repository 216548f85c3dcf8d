#pragma once

#include <cstdint>

#include "gk/types.hpp"

namespace gk::rounding {

enum class Scheme { kKrivine, kHaagerup };

inline const char* scheme_name(Scheme s) {
  return s == Scheme::kKrivine ? "krivine" : "haagerup";
}

// Gram matrix of the embedded vectors together with an explicit
// factorisation.  Entries come from closed forms, so the matrix is PSD up
// to rounding; tiny negative eigenvalues are clipped before factoring and
// their total mass recorded.
struct GramEmbedding {
  Matrix gram;     // (m+n) x (m+n), Hermitian, unit diagonal
  Matrix factors;  // rows are the factor vectors; factors * factors^H = gram
  Scheme scheme = Scheme::kKrivine;
  Field field = Field::kReal;
  double clip_magnitude = 0.0;
  int m = 0;
  int n = 0;
};

// Blocks (c = arcsinh 1):  <S(x),S(x')> = sinh(c<x,x'>),
// <S(x),T(y)> = sin(c<x,y>), <T(y),T(y')> = sinh(c<y,y'>).
// Unit diagonal because sinh(c) = 1.
GramEmbedding krivine_transform(const UnitVectorAssignment& a);

// Complex scheme: cross block H^{-1}(c0 q) = sign(q) sum b_{2k+1}|c0 q|^{2k+1};
// same-side blocks sign(q) phi(c0 |q|).  Diagonal phi(c0) = 1.
GramEmbedding haagerup_transform(const UnitVectorAssignment& a,
                                 int series_order = 256);

struct RoundingResult {
  SignAssignment best;      // best feasible sample (delta conjugated so the
                            // pair is feasible for the bilinear maximum)
  double mean_value = 0.0;  // E[ Re sum M_ij eps_i conj(delta_j) ]
  double std_error = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  double per_pair_check = 0.0;  // max_ij |E^[eps_i conj(delta_j)] - analytic|
  double per_pair_sigma = 0.0;  // largest per-pair std error
};

// Gaussian sign rounding: for each field-matched Gaussian z set
// eps_i = sign<u_i,z>, delta_j = sign<v_j,z> (sign 0 -> 1).  Tracks the
// expectation of the bilinear form, the best single sample, and the
// per-pair expectation against (2/pi) arcsin <u_i,v_j> resp. H(<u_i,v_j>).
RoundingResult gaussian_sign_round(const GramEmbedding& e,
                                   const ProblemInstance& M,
                                   std::int64_t samples, std::uint64_t seed,
                                   int threads = 0);

struct Certificate {
  UnitVectorAssignment relaxation;
  GramEmbedding embedding;
  RoundingResult rounding;
  double k_bound = 0.0;         // K for the field
  double ratio = 0.0;           // mean / relaxation value
  double ratio_target = 0.0;    // 1/K
  double ratio_sigma = 0.0;     // std error of the ratio
  bool expectation_ok = false;  // |ratio - 1/K| <= 5 sigma
  bool best_feasible_ok = true; // best <= discrete oracle (when available)
  double discrete_value = -1.0; // oracle value, -1 when unavailable
};

// relaxation_opt -> transform -> round, with the 5-sigma expectation check
// and, for real instances small enough to enumerate, the feasibility check
// best <= discrete + 1e-9.
Certificate rounding_certificate(const ProblemInstance& M, std::int64_t samples,
                                 std::uint64_t seed, int iters = 20000,
                                 int starts = 16, int threads = 0,
                                 int series_order = 256);

}  // namespace gk::rounding
