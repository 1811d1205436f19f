#include <doctest.h>

#include "socoulomb/coalgebra.hpp"

using namespace socoulomb;

namespace {

ScalarPoly hbar2() { return ScalarPoly::sym(Sym::hbar, 2); }

Element ang(int dim, int a, int b) {  // x_a p_b - x_b p_a
    return Element::x(dim, a) * Element::p(dim, b) - Element::x(dim, b) * Element::p(dim, a);
}

}  // namespace

TEST_CASE("sl2 structure relations hold for every realized subset") {
    CHECK(verify_structure(realize_sl2(1)));
    CHECK(verify_structure(realize_sl2(2)));
    CHECK(verify_structure(realize_sl2(3)));
    CHECK(verify_structure(realize_sl2(3, {1, 2})));
    CHECK(verify_structure(realize_sl2(3, {2, 3})));
    CHECK(verify_structure(realize_sl2(3, {2})));

    // and fail loudly for a broken triple
    Sl2Triple bad = realize_sl2(2);
    bad.jp += Element::x(2, 1);
    CHECK_FALSE(verify_structure(bad));
}

TEST_CASE("full-space J- is r^2 and J3 is the dilation generator") {
    Sl2Triple t = realize_sl2(3);
    CHECK(t.jm == Element::r_pow(3, 2));
    Element d(3);
    for (int i = 1; i <= 3; ++i) d += Element::x(3, i) * Element::p(3, i);
    CHECK(t.j3 == d - Element::scalar(3, ScalarPoly::i() * ScalarPoly::sym(Sym::hbar) *
                                             ScalarPoly(GRational(Rational(BigInt(3), BigInt(2))))));
}

TEST_CASE("casimir is central in its triple") {
    for (const auto& t : {realize_sl2(2), realize_sl2(3), realize_sl2(3, {1, 2})}) {
        Element c = casimir(t);
        CHECK(commutator(c, t.jp).is_zero());
        CHECK(commutator(c, t.jm).is_zero());
        CHECK(commutator(c, t.j3).is_zero());
    }
}

TEST_CASE("casimir values reduce to angular momentum") {
    // one variable: C = -3/4 hbar^2
    Element c1 = casimir(realize_sl2(1));
    CHECK(c1 == Element::scalar(1, hbar2() * ScalarPoly(GRational(Rational(BigInt(-3), BigInt(4))))));

    // two variables: C = L0^2 - hbar^2
    Element c2 = casimir(realize_sl2(2));
    Element l0 = ang(2, 1, 2);
    CHECK(c2 == l0 * l0 - Element::scalar(2, hbar2()));

    // three variables: C = L^2 - 3/4 hbar^2
    Element c3 = casimir(realize_sl2(3));
    Element lsq(3);
    lsq += ang(3, 2, 3) * ang(3, 2, 3);
    lsq += ang(3, 3, 1) * ang(3, 3, 1);
    lsq += ang(3, 1, 2) * ang(3, 1, 2);
    CHECK(c3 == lsq - Element::scalar(3, hbar2() * ScalarPoly(GRational(Rational(BigInt(3), BigInt(4))))));

    // L^2 = r^2 p^2 - D^2 + i hbar (n-2) D for the full triple
    for (int n : {2, 3}) {
        Sl2Triple t = realize_sl2(n);
        Element d(n), psq(n);
        for (int i = 1; i <= n; ++i) {
            d += Element::x(n, i) * Element::p(n, i);
            psq += Element::p(n, i) * Element::p(n, i);
        }
        Element lsq_n = Element::r_pow(n, 2) * psq - d * d +
                        (ScalarPoly::i() * ScalarPoly::sym(Sym::hbar) * ScalarPoly(n - 2)) * d;
        Element expect = casimir(t) - Element::scalar(n, hbar2() * ScalarPoly(GRational(Rational(
                                                             BigInt(n) * (n - 4), BigInt(4)))));
        CHECK(lsq_n == expect);
    }
}

TEST_CASE("partial casimirs of the coproduct chain") {
    auto cs2 = partial_casimirs(2);
    CHECK(cs2.size() == 1);
    CHECK(cs2.count("C(2)") == 1);

    auto cs3 = partial_casimirs(3);
    CHECK(cs3.size() == 3);
    // the {1,2} partial is L3^2 - hbar^2, the trailing {2,3} partial is L1^2 - hbar^2
    Element l3 = ang(3, 1, 2), l1 = ang(3, 2, 3);
    CHECK(cs3.at("C(2)") == l3 * l3 - Element::scalar(3, hbar2()));
    CHECK(cs3.at("C_(2)") == l1 * l1 - Element::scalar(3, hbar2()));
    CHECK(cs3.at("C(3)") == casimir(realize_sl2(3)));

    // left and right partials do not commute with each other, the chain is genuinely nested
    CHECK_FALSE(commutator(cs3.at("C(2)"), cs3.at("C_(2)")).is_zero());
    CHECK(commutator(cs3.at("C(2)"), cs3.at("C(3)")).is_zero());
    CHECK(commutator(cs3.at("C_(2)"), cs3.at("C(3)")).is_zero());
}
