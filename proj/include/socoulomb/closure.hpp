#pragma once

#include "socoulomb/element.hpp"

#include <vector>

namespace socoulomb {

// Result of expressing a target operator over a basis with polynomial
// coefficients in (hbar, alpha, gamma, m).
struct ClosureFit {
    bool ok = false;
    std::vector<ScalarPoly> coeffs;  // aligned with the basis, empty on failure
    Element leftover{1};             // target - sum c_k B_k for the best attempt
};

// Solve target == sum_k c_k * basis[k] for scalar polynomials c_k, exactly.
// Coefficients are recovered by sampling the symbols on a rational grid,
// solving each sample by Gaussian elimination over Q(i), interpolating the
// samples back to polynomials, and certifying the identity symbolically.
ClosureFit solve_closure(const Element& target, const std::vector<Element>& basis);

}  // namespace socoulomb
