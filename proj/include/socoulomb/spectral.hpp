#pragma once

#include "socoulomb/rational.hpp"

#include <vector>

namespace socoulomb {

// The two spinor channels of the bound spectrum.
enum class Branch { plus, minus };

struct SpectralParams {
    double hbar = 1.0;
    double alpha = 1.0;
    double gamma = 0.0;
};

// Closed-form bound spectrum.  j is a positive half-odd-integer; the branch is
// admissible when the radial factor r^lambda is normalizable (lambda > -3/2).
bool branch_allowed(Branch b, double j, double gamma);
int l_of(Branch b, double j);                           // j -/+ 1/2
double lambda_param(Branch b, double j, double gamma);  // l + gamma / l - gamma
double branch_nu(Branch b, int n, double j, double gamma);
double closed_form_energy(Branch b, int n, double j, const SpectralParams& sp);

// Associated Laguerre L_n^{(a)}(z) by the three-term recurrence.
double laguerre_value(int n, double a, double z);

// Unnormalized rho(r) = r^lambda e^{-beta r} L_n^{2 lambda + 1}(2 beta r), r > 0.
double radial_eigenfunction(Branch b, int n, double j, const SpectralParams& sp, double r);

// k-th lowest eigenvalue (k = 0, 1, ...) of the radial problem at angular
// parameter lambda on a Dirichlet box [0, rmax] with `points` interior nodes.
// Discretizes u = r R with the centrifugal term renormalized so that the exact
// short-range behavior r^{lambda+1} is annihilated on the grid; requires
// lambda > -1.  Eigenvalues by Sturm-sequence bisection.
double fd_eigenvalue(double lambda, int k, const SpectralParams& sp, double rmax, int points);

// Two-grid Richardson extrapolation (4 E_{2N} - E_N) / 3 of fd_eigenvalue.
double fd_eigenvalue_rich(double lambda, int k, const SpectralParams& sp, double rmax,
                          int points);

// One shell of the bound spectrum: every (branch, l, n) with nu = level -/+
// gamma.  At gamma = 0 the energies collapse and the weights sum to 2 level^2.
struct DegeneracyRow {
    Branch branch;
    int l;
    double j;
    int n;
    double energy;
    int weight;
};
std::vector<DegeneracyRow> degeneracy_table(int level, const SpectralParams& sp);

// Spin-angular amplitudes of the channel (branch, j) at magnetic label k:
// the spinor couples Y_{l, k-1/2} (up) and Y_{l, k+1/2} (down) with exact
// rational squared amplitudes; the minus branch carries the conventional
// relative sign on its upper component.
struct SpinorCoeff {
    int l;
    Rational m_up, m_dn;
    int sign_up = 1, sign_dn = 1;
    Rational up_sq, dn_sq;
    double up = 0, dn = 0;
};
SpinorCoeff spinor_coefficients(Branch b, const Rational& j, const Rational& k);

// Overlap of two channel spinors at the same k; components meet only on equal
// (l, m) labels, so distinct orbital labels are orthogonal outright.
double spinor_overlap(Branch b1, const Rational& j1, Branch b2, const Rational& j2,
                      const Rational& k);

}  // namespace socoulomb
