#include <doctest.h>

#include "socoulomb/catalog.hpp"
#include "socoulomb/closure.hpp"

using namespace socoulomb;
namespace cat = socoulomb::catalog;

namespace {

ScalarPoly hb(int k = 1) { return ScalarPoly::sym(Sym::hbar, k); }

}  // namespace

TEST_CASE("closure solver recovers planted polynomial coefficients") {
    // target = c1 * H + c2 * sigma.L + c3 * 1 with nontrivial planted c_k
    ScalarPoly c1 = hb(2) * ScalarPoly::sym(Sym::gamma) + ScalarPoly(3);
    ScalarPoly c2 = ScalarPoly::sym(Sym::alpha) * ScalarPoly::sym(Sym::gamma, 2) -
                    ScalarPoly::i() * hb();
    ScalarPoly c3 = ScalarPoly::sym(Sym::alpha, 2) + ScalarPoly(Rational(BigInt(1), BigInt(2)));
    std::vector<Element> basis = {cat::h3(), cat::sigma_dot_l(), Element::one(3)};
    Element target = c1 * basis[0] + c2 * basis[1] + c3 * basis[2];
    ClosureFit fit = solve_closure(target, basis);
    REQUIRE(fit.ok);
    CHECK(fit.coeffs[0] == c1);
    CHECK(fit.coeffs[1] == c2);
    CHECK(fit.coeffs[2] == c3);
    CHECK(fit.leftover.is_zero());
}

TEST_CASE("closure solver flags a target outside the span") {
    std::vector<Element> basis = {cat::sigma_dot_l(), Element::one(3)};
    Element target = cat::h3();
    ClosureFit fit = solve_closure(target, basis);
    CHECK_FALSE(fit.ok);
    CHECK_FALSE(fit.leftover.is_zero());
}

TEST_CASE("closure solver handles zero targets and empty bases") {
    ClosureFit triv = solve_closure(Element::zero(3), {});
    CHECK(triv.ok);
    ClosureFit z = solve_closure(Element::zero(2), {cat::lhat(2)});
    CHECK(z.ok);
    CHECK(z.coeffs[0].is_zero());
    CHECK_THROWS_AS(solve_closure(cat::h3(), std::vector<Element>{cat::lhat(2)}),
                    std::invalid_argument);
}
