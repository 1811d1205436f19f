#pragma once

#include "socoulomb/rational.hpp"

#include <map>

namespace socoulomb {

// Laurent polynomial in r with rational coefficients, power -> coefficient.
using RationalSeries = std::map<int, Rational>;

RationalSeries series_derivative(const RationalSeries& f);
RationalSeries series_shift(const RationalSeries& f, int power);  // multiply by r^power
RationalSeries series_add(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_scale(const RationalSeries& f, const Rational& c);
bool series_is_zero(const RationalSeries& f);

// Associated Laguerre polynomial L_n^{(a)}(scale * r), exact coefficients.
RationalSeries laguerre_series(int n, const Rational& a, const Rational& scale);

// Exact certification that rho = r^lambda e^{-beta r} L_n^{2 lambda + 1}(2 beta r)
// solves the radial Coulomb problem at angular parameter lambda with
// beta = alpha / (hbar^2 nu), nu = n + lambda + 1.  The ODE is conjugated by
// r^lambda e^{-beta r}, which turns the check into Laurent-polynomial algebra:
//   T(Q) = -hbar^2/2 Q'' + (hbar^2 beta - hbar^2 (lambda+1)/r) Q'
//        + hbar^2/2 (c - lambda(lambda+1)) Q/r^2 + (hbar^2 beta (lambda+1) - alpha) Q/r
// vanishes identically at the true centrifugal strength c = lambda(lambda+1).
// The control re-runs T with the centrifugal negated, which must leave a
// nonzero residual whenever lambda is not 0 or -1.
struct RadialCheck {
    bool main_zero = false;
    bool control_nonzero = false;
    RationalSeries residual;  // main-run residual, empty when main_zero
};

RadialCheck residual_check_exact(int n, const Rational& lambda, const Rational& hbar,
                                 const Rational& alpha);

}  // namespace socoulomb
