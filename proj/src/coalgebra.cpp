#include "socoulomb/coalgebra.hpp"

#include <stdexcept>

namespace socoulomb {

Sl2Triple realize_sl2(int kernel_dim, const std::vector<int>& coords) {
    if (coords.empty()) throw std::invalid_argument("realize_sl2: empty coordinate subset");
    Sl2Triple t{Element(kernel_dim), Element(kernel_dim), Element(kernel_dim), coords};
    for (int i : coords) {
        Element xi = Element::x(kernel_dim, i), pi = Element::p(kernel_dim, i);
        t.jm += xi * xi;
        t.jp += pi * pi;
        t.j3 += xi * pi;
    }
    ScalarPoly half_n(GRational(Rational(BigInt(coords.size()), BigInt(2))));
    t.j3 -= Element::scalar(kernel_dim, ScalarPoly::i() * ScalarPoly::sym(Sym::hbar) * half_n);
    return t;
}

Sl2Triple realize_sl2(int kernel_dim) {
    std::vector<int> all;
    for (int i = 1; i <= kernel_dim; ++i) all.push_back(i);
    return realize_sl2(kernel_dim, all);
}

Element casimir(const Sl2Triple& t) {
    GRational half(Rational(BigInt(1), BigInt(2)));
    return half * (t.jp * t.jm + t.jm * t.jp) - t.j3 * t.j3;
}

std::vector<std::pair<std::string, Element>> sl2_structure_residuals(const Sl2Triple& t) {
    ScalarPoly two_ih = ScalarPoly(GRational(Rational(0), Rational(2))) * ScalarPoly::sym(Sym::hbar);
    ScalarPoly four_ih = ScalarPoly(GRational(Rational(0), Rational(4))) * ScalarPoly::sym(Sym::hbar);
    return {
        {"[J3,J+] - 2i hbar J+", commutator(t.j3, t.jp) - two_ih * t.jp},
        {"[J3,J-] + 2i hbar J-", commutator(t.j3, t.jm) + two_ih * t.jm},
        {"[J-,J+] - 4i hbar J3", commutator(t.jm, t.jp) - four_ih * t.j3},
    };
}

bool verify_structure(const Sl2Triple& t) {
    for (const auto& [name, res] : sl2_structure_residuals(t))
        if (!res.is_zero()) return false;
    return true;
}

std::map<std::string, Element> partial_casimirs(int kernel_dim) {
    if (kernel_dim < 2)
        throw std::invalid_argument("partial_casimirs: needs at least two coordinates");
    std::map<std::string, Element> out;
    out.emplace("C(2)", casimir(realize_sl2(kernel_dim, {1, 2})));
    if (kernel_dim == 3) {
        out.emplace("C(3)", casimir(realize_sl2(kernel_dim, {1, 2, 3})));
        out.emplace("C_(2)", casimir(realize_sl2(kernel_dim, {2, 3})));
    }
    return out;
}

}  // namespace socoulomb
