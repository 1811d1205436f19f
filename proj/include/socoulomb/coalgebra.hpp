#pragma once

#include "socoulomb/element.hpp"

#include <map>
#include <string>
#include <vector>

namespace socoulomb {

// One conformal sl(2,R) triple realized on a coordinate subset:
//   J- = sum x_i^2,  J+ = sum p_i^2,  J3 = sum x_i p_i - i hbar n/2
// with n = |subset|, satisfying
//   [J3, J+] = 2 i hbar J+,  [J3, J-] = -2 i hbar J-,  [J-, J+] = 4 i hbar J3.
struct Sl2Triple {
    Element jm, jp, j3;
    std::vector<int> coords;
};

// Realize the triple on the given 1-based coordinate subset of the kernel.
Sl2Triple realize_sl2(int kernel_dim, const std::vector<int>& coords);

// Full-space triple (subset = all coordinates); here J- reduces to r^2.
Sl2Triple realize_sl2(int kernel_dim);

// C = (J+ J- + J- J+)/2 - J3^2.
Element casimir(const Sl2Triple& t);

// The three structure brackets, as residuals that must vanish.
std::vector<std::pair<std::string, Element>> sl2_structure_residuals(const Sl2Triple& t);
bool verify_structure(const Sl2Triple& t);

// The 2n-3 Casimir invariants of the coproduct chain in dimension n (n = 2, 3):
// left chain C(2), ..., C(n) on {1..k}, right partials C_(2), ... on trailing
// subsets.  Keys: "C(2)", "C(3)", "C_(2)".
std::map<std::string, Element> partial_casimirs(int kernel_dim);

}  // namespace socoulomb
