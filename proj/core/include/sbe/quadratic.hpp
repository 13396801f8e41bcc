// Sparse quadratic polynomials in the modes: coordinate k evaluates to
//   (Qx)_k = sum_{k1+k2=k} quad(k,k1,k2) x_{k1} x_{k2} + sum_j lin(k,j) x_j,
// with all indices restricted to 0 < |.| <= cutoff (truncation indicators are
// absorbed into the coefficient functions). Houses the model nonlinearities
// and the Poisson-equation solution; supplies the coordinate derivatives the
// generator and Dirichlet-energy calculus need.
#pragma once

#include <functional>

#include "sbe/field.hpp"

namespace sbe {

struct QuadraticForm {
    int cutoff = 0;
    // q(k, k1, k2) with k = k1 + k2; null means no quadratic part.
    std::function<cplx(int, int, int)> quad;
    // l(k, j); null means no linear part.
    std::function<cplx(int, int)> lin;
};

// Full evaluation over all output coordinates.
SpectralField evaluate(const QuadraticForm& q, const SpectralField& x);
// Single output coordinate.
cplx evaluate_coord(const QuadraticForm& q, const SpectralField& x, int k);

// d(Qx)_k / dx_dq at x, treating the modes as algebraically independent
// coordinates: sum_{k1+k2=k} quad(k,k1,k2) (1_{k1=dq} x_{k2} + 1_{k2=dq} x_{k1})
// + lin(k,dq).
cplx coord_derivative(const QuadraticForm& q, const SpectralField& x, int k, int dq);

// Symmetrized pair coefficient quad(k,q1,k-q1) + quad(k,k-q1,q1) when all
// three indices are admissible, else 0. The derivative above equals
// pair_coeff(q,k,dq) * x_{k-dq} + lin(k,dq).
cplx pair_coeff(const QuadraticForm& q, int k, int q1);

// Directional derivative sum_q a_q d(Qx)_k/dx_q at x; for the quadratic part
// this is the polarized form sum quad(k,k1,k2)(a_{k1} x_{k2} + x_{k1} a_{k2}).
cplx directional_derivative(const QuadraticForm& q, const SpectralField& x,
                            const SpectralField& a, int k);

}  // namespace sbe
