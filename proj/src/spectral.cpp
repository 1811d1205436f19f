#include "socoulomb/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

namespace socoulomb {

namespace {

void check_half_odd(const Rational& j) {
    Rational two_j = j * Rational(2);
    if (!two_j.is_integer() || two_j.num() % 2 == 0 || !(Rational(0) < j))
        throw std::invalid_argument("spinor: j must be a positive half-odd-integer");
}

double sturm_eigenvalue(const std::vector<double>& d, double e, int k) {
    // count of eigenvalues below x, by the LDL^T sign recurrence
    auto count_below = [&](double x) {
        int cnt = 0;
        // the first pivot is bare d[0] - x; seeding with infinity kills the e^2 term
        double q = std::numeric_limits<double>::infinity();
        const double tiny = 1e-300;
        for (double di : d) {
            q = (di - x) - e * e / q;
            if (std::abs(q) < tiny) q = -tiny;
            if (q < 0) ++cnt;
        }
        return cnt;
    };
    double lo = d[0], hi = d[0];
    for (double di : d) {
        lo = std::min(lo, di - 2 * std::abs(e));
        hi = std::max(hi, di + 2 * std::abs(e));
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max({1.0, std::abs(lo), std::abs(hi)});
         ++it) {
        double mid = lo + (hi - lo) / 2;
        if (count_below(mid) >= k + 1) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return lo + (hi - lo) / 2;
}

}  // namespace

bool branch_allowed(Branch b, double j, double gamma) {
    return b == Branch::plus ? j > -gamma - 1.0 : j > gamma - 2.0;
}

int l_of(Branch b, double j) {
    return b == Branch::plus ? static_cast<int>(std::lround(j - 0.5))
                             : static_cast<int>(std::lround(j + 0.5));
}

double lambda_param(Branch b, double j, double gamma) {
    return b == Branch::plus ? l_of(b, j) + gamma : l_of(b, j) - gamma;
}

double branch_nu(Branch b, int n, double j, double gamma) {
    return b == Branch::plus ? n + j + gamma + 0.5 : n + j - gamma + 1.5;
}

double closed_form_energy(Branch b, int n, double j, const SpectralParams& sp) {
    double nu = branch_nu(b, n, j, sp.gamma);
    return -sp.alpha * sp.alpha / (2.0 * sp.hbar * sp.hbar * nu * nu);
}

double laguerre_value(int n, double a, double z) {
    if (n < 0) throw std::invalid_argument("laguerre_value: negative degree");
    double lm1 = 0.0, l0 = 1.0;
    for (int k = 0; k < n; ++k) {
        double lp = ((2 * k + 1 + a - z) * l0 - (k + a) * lm1) / (k + 1);
        lm1 = l0;
        l0 = lp;
    }
    return l0;
}

double radial_eigenfunction(Branch b, int n, double j, const SpectralParams& sp, double r) {
    if (r < 0) throw std::invalid_argument("radial_eigenfunction: r < 0");
    double lam = lambda_param(b, j, sp.gamma);
    double beta = sp.alpha / (sp.hbar * sp.hbar * branch_nu(b, n, j, sp.gamma));
    if (r == 0) return lam > 0 ? 0.0 : (lam == 0 ? 1.0 : HUGE_VAL);
    return std::pow(r, lam) * std::exp(-beta * r) * laguerre_value(n, 2 * lam + 1, 2 * beta * r);
}

double fd_eigenvalue(double lambda, int k, const SpectralParams& sp, double rmax, int points) {
    if (lambda <= -1.0)
        throw std::domain_error("fd_eigenvalue: lambda <= -1 is outside the scheme");
    if (points < 8 || rmax <= 0 || k < 0) throw std::invalid_argument("fd_eigenvalue: bad grid");
    const double h = rmax / (points + 1);
    const double h2 = sp.hbar * sp.hbar;
    std::vector<double> diag(points);
    for (int i = 0; i < points; ++i) {
        double r = (i + 1) * h;
        double up = std::pow(r + h, lambda + 1);
        double mid = std::pow(r, lambda + 1);
        double dn = i == 0 ? 0.0 : std::pow(r - h, lambda + 1);
        double vc = (h2 / 2) * (up - 2 * mid + dn) / (h * h * mid);
        diag[i] = h2 / (h * h) + vc - sp.alpha / r;
    }
    return sturm_eigenvalue(diag, -h2 / (2 * h * h), k);
}

double fd_eigenvalue_rich(double lambda, int k, const SpectralParams& sp, double rmax,
                          int points) {
    double coarse = fd_eigenvalue(lambda, k, sp, rmax, points);
    double fine = fd_eigenvalue(lambda, k, sp, rmax, 2 * points);
    return (4 * fine - coarse) / 3;
}

std::vector<DegeneracyRow> degeneracy_table(int level, const SpectralParams& sp) {
    if (level < 1) throw std::invalid_argument("degeneracy_table: level < 1");
    std::vector<DegeneracyRow> rows;
    for (int l = 0; l < level; ++l) {
        double j = l + 0.5;
        rows.push_back({Branch::plus, l, j, level - 1 - l,
                        closed_form_energy(Branch::plus, level - 1 - l, j, sp), 2 * l + 2});
    }
    for (int l = 1; l < level; ++l) {
        double j = l - 0.5;
        rows.push_back({Branch::minus, l, j, level - 1 - l,
                        closed_form_energy(Branch::minus, level - 1 - l, j, sp), 2 * l});
    }
    return rows;
}

SpinorCoeff spinor_coefficients(Branch b, const Rational& j, const Rational& k) {
    check_half_odd(j);
    Rational two_k = k * Rational(2);
    if (!two_k.is_integer() || two_k.num() % 2 == 0)
        throw std::invalid_argument("spinor: k must be a half-odd-integer");
    if (j < k || j < -k) throw std::invalid_argument("spinor: |k| > j");
    SpinorCoeff out;
    Rational half(BigInt(1), BigInt(2));
    out.m_up = k - half;
    out.m_dn = k + half;
    if (b == Branch::plus) {
        Rational den = j * Rational(2);
        out.l = static_cast<int>((j - half).num());
        out.up_sq = (j + k) / den;
        out.dn_sq = (j - k) / den;
    } else {
        Rational den = j * Rational(2) + Rational(2);
        out.l = static_cast<int>((j + half).num());
        out.up_sq = (j - k + Rational(1)) / den;
        out.dn_sq = (j + k + Rational(1)) / den;
        out.sign_up = -1;
    }
    out.up = out.sign_up * std::sqrt(out.up_sq.to_double());
    out.dn = out.sign_dn * std::sqrt(out.dn_sq.to_double());
    return out;
}

double spinor_overlap(Branch b1, const Rational& j1, Branch b2, const Rational& j2,
                      const Rational& k) {
    SpinorCoeff a = spinor_coefficients(b1, j1, k);
    SpinorCoeff b = spinor_coefficients(b2, j2, k);
    std::map<std::pair<int, Rational>, double> labels;
    labels[{a.l, a.m_up}] += a.up;
    labels[{a.l, a.m_dn}] += a.dn;
    double acc = 0;
    for (const auto& [lab, coeff] : labels) {
        if (lab == std::pair(b.l, b.m_up)) acc += coeff * b.up;
        if (lab == std::pair(b.l, b.m_dn)) acc += coeff * b.dn;
    }
    return acc;
}

}  // namespace socoulomb
