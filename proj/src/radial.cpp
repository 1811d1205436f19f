#include "socoulomb/radial.hpp"

#include <stdexcept>

namespace socoulomb {

namespace {

void put(RationalSeries& s, int power, const Rational& c) {
    if (c.is_zero()) return;
    Rational& slot = s[power];
    slot += c;
    if (slot.is_zero()) s.erase(power);
}

// T(Q) with an explicit centrifugal strength c (see the header).
RationalSeries conjugated_ode(const RationalSeries& q, const Rational& lambda,
                              const Rational& hbar, const Rational& alpha, const Rational& beta,
                              const Rational& centrifugal) {
    Rational h2 = hbar * hbar;
    RationalSeries d1 = series_derivative(q);
    RationalSeries d2 = series_derivative(d1);
    RationalSeries out = series_scale(d2, -h2 / Rational(2));
    out = series_add(out, series_scale(d1, h2 * beta));
    out = series_add(out, series_shift(series_scale(d1, -h2 * (lambda + Rational(1))), -1));
    Rational cdiff = (centrifugal - lambda * (lambda + Rational(1))) * h2 / Rational(2);
    out = series_add(out, series_shift(series_scale(q, cdiff), -2));
    Rational coul = h2 * beta * (lambda + Rational(1)) - alpha;
    out = series_add(out, series_shift(series_scale(q, coul), -1));
    return out;
}

}  // namespace

RationalSeries series_derivative(const RationalSeries& f) {
    RationalSeries out;
    for (const auto& [k, c] : f) {
        if (k != 0) put(out, k - 1, c * Rational(k));
    }
    return out;
}

RationalSeries series_shift(const RationalSeries& f, int power) {
    RationalSeries out;
    for (const auto& [k, c] : f) out.emplace(k + power, c);
    return out;
}

RationalSeries series_add(const RationalSeries& a, const RationalSeries& b) {
    RationalSeries out = a;
    for (const auto& [k, c] : b) put(out, k, c);
    return out;
}

RationalSeries series_scale(const RationalSeries& f, const Rational& c) {
    RationalSeries out;
    if (c.is_zero()) return out;
    for (const auto& [k, v] : f) out.emplace(k, v * c);
    return out;
}

bool series_is_zero(const RationalSeries& f) { return f.empty(); }

RationalSeries laguerre_series(int n, const Rational& a, const Rational& scale) {
    if (n < 0) throw std::invalid_argument("laguerre_series: negative degree");
    RationalSeries out;
    // coefficient of z^k is (-1)^k / k! * C(n + a, n - k)
    for (int k = 0; k <= n; ++k) {
        Rational binom(1);
        for (int t = 0; t < n - k; ++t) binom *= (Rational(n) + a - Rational(t));
        for (int t = 2; t <= n - k; ++t) binom /= Rational(t);
        Rational coeff = binom * scale.pow(k);
        for (int t = 2; t <= k; ++t) coeff /= Rational(t);
        if (k % 2 == 1) coeff = -coeff;
        put(out, k, coeff);
    }
    return out;
}

RadialCheck residual_check_exact(int n, const Rational& lambda, const Rational& hbar,
                                 const Rational& alpha) {
    Rational nu = Rational(n) + lambda + Rational(1);
    if (!(Rational(0) < nu)) throw std::invalid_argument("residual_check_exact: nu <= 0");
    if (hbar.is_zero()) throw std::invalid_argument("residual_check_exact: hbar = 0");
    Rational beta = alpha / (hbar * hbar * nu);
    RationalSeries q = laguerre_series(n, Rational(2) * lambda + Rational(1),
                                       Rational(2) * beta);
    Rational cf = lambda * (lambda + Rational(1));
    RadialCheck out;
    out.residual = conjugated_ode(q, lambda, hbar, alpha, beta, cf);
    out.main_zero = series_is_zero(out.residual);
    RationalSeries flipped = conjugated_ode(q, lambda, hbar, alpha, beta, -cf);
    out.control_nonzero = !series_is_zero(flipped);
    return out;
}

}  // namespace socoulomb
