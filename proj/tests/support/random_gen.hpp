#pragma once

#include "socoulomb/element.hpp"
#include "support/action_model.hpp"

#include <random>

namespace socoulomb::testgen {

inline Rational rnd_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

inline GRational rnd_grational(std::mt19937& rng) {
    GRational g(rnd_rational(rng), rnd_rational(rng));
    return g.is_zero() ? GRational(1) : g;
}

inline ScalarPoly rnd_coeff(std::mt19937& rng) {
    std::uniform_int_distribution<int> hpow(0, 2), pick(0, 3);
    ScalarPoly c(rnd_grational(rng));
    if (int h = hpow(rng); h) c *= ScalarPoly::sym(Sym::hbar, h);
    if (pick(rng) == 0) c *= ScalarPoly::sym(Sym::gamma);
    return c;
}

inline Element rnd_element(std::mt19937& rng, int dim, int max_terms = 3, bool with_sigma = true) {
    // Small by design: these feed triply nested products in the law trials.
    std::uniform_int_distribution<int> nterms(1, max_terms), rpow(-2, 2), xexp(0, 2), pexp(0, 1),
        sig(0, with_sigma ? 3 : 0);
    Element e(dim);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Mono m;
        m.rp = rpow(rng);
        for (int i = 0; i < dim; ++i) {
            m.x[i] = xexp(rng);
            m.p[i] = pexp(rng);
        }
        m.s = sig(rng);
        e.add_term(m, rnd_coeff(rng));
    }
    return e;
}

inline oracle::SpinorFn rnd_spinor(std::mt19937& rng, int dim) {
    std::uniform_int_distribution<int> tpow(-1, 2), expo(0, 2);
    oracle::SpinorFn f;
    f.dim = dim;
    for (auto& part : f.comp) {
        oracle::FnKey k;
        k.t = tpow(rng);
        for (int i = 0; i < dim; ++i) k.c[i] = expo(rng);
        oracle::fn_add(part, dim, k, rnd_coeff(rng));
    }
    return f;
}

}  // namespace socoulomb::testgen
