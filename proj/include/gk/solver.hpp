#pragma once

#include <cstdint>

#include "gk/types.hpp"

namespace gk::solver {

// Thrown when an exact enumeration would exceed its budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact optimum of |sum M_ij eps_i delta_j| over eps, delta in {+-1} by
// enumerating delta (2^n patterns, lexicographic, incremental row sums) with
// eps_i = sign(sum_j M_ij delta_j) in closed form.  Zero row sums take +1.
SignAssignment discrete_opt_real(const ProblemInstance& M);

// Lower bound for the complex problem: alternating phase alignment from
// `starts` random phase initialisations.  Monotone per half-sweep; the
// result is a local optimum, not certified global.
SignAssignment discrete_opt_complex(const ProblemInstance& M, int starts,
                                    std::uint64_t seed);

// Block-coordinate ascent for the unit-vector relaxation in dimension
// l = m+n (sufficient for any Gram matrix of m+n vectors).  With ys fixed
// the optimal x_i is the normalisation of sum_j conj(M_ij) y_j, and
// symmetrically; zero updates keep the previous vector.  Multistart; the
// returned assignment has its global phase fixed so that
// sum M_ij <x_i,y_j> is real nonnegative.
UnitVectorAssignment relaxation_opt(const ProblemInstance& M, int iters,
                                    int starts, std::uint64_t seed);

// Rescales M by its discrete optimum and returns
// |sum  M~_ij arcsin<x_i,y_j>|   (real)   resp.
// |sum  M~_ij H(<x_i,y_j>)|      (complex);
// callers assert <= pi/2 resp. 1 (+ tolerance).
double verify_corollary(const ProblemInstance& M, const UnitVectorAssignment& a,
                        int starts = 16, std::uint64_t seed = 42);

// Objective helpers shared with tests.
double bilinear_value(const ProblemInstance& M, const Vector& eps,
                      const Vector& delta);
Complex relaxation_objective(const ProblemInstance& M,
                             const UnitVectorAssignment& a);

}  // namespace gk::solver
