#include <doctest.h>

#include "socoulomb/scalar_poly.hpp"

#include <random>

using namespace socoulomb;

TEST_CASE("rational arithmetic stays reduced") {
    Rational a(BigInt(6), BigInt(-4));  // -3/2
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(a.str() == "-3/2");

    Rational b = Rational::parse("5/15");
    CHECK(b.num() == 1);
    CHECK(b.den() == 3);

    // (-3/2 + 1/3) * 6/7 = (-7/6) * 6/7 = -1
    CHECK((a + b) * Rational(BigInt(6), BigInt(7)) == Rational(-1));
    CHECK(a - a == Rational(0));
    CHECK((a / b).str() == "-9/2");
    CHECK(a < b);
    CHECK(a.pow(3) == Rational(BigInt(-27), BigInt(8)));
    CHECK(a.pow(-2) == Rational(BigInt(4), BigInt(9)));
    CHECK(Rational(BigInt(1), BigInt(3)).to_double() == doctest::Approx(1.0 / 3.0));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("rational survives coefficients beyond 64 bits") {
    // 2^80 as a rational, exercised through arithmetic that int64 would overflow.
    Rational big = Rational(BigInt(1) << 80);
    Rational r = big * big / (big - Rational(1));
    CHECK(r * (big - Rational(1)) == big * big);
    CHECK(Rational::parse(r.str()) == r);
}

TEST_CASE("gaussian rational field operations") {
    GRational i = GRational::i();
    CHECK(i * i == GRational(-1));
    CHECK((i * i * i * i) == GRational(1));

    GRational z(Rational(BigInt(1), BigInt(2)), Rational(-3));
    CHECK(z.conj() == GRational(Rational(BigInt(1), BigInt(2)), Rational(3)));
    CHECK((z * z.conj()).is_real());
    CHECK(z.norm2() == Rational(BigInt(37), BigInt(4)));

    // (1/2 - 3i) / (1/2 - 3i) = 1 and division undoes multiplication
    CHECK(z / z == GRational(1));
    GRational w(Rational(2), Rational(BigInt(5), BigInt(7)));
    CHECK((z * w) / w == z);
    CHECK_THROWS_AS(z / GRational(), std::domain_error);
}

TEST_CASE("gaussian rational literals round-trip") {
    const char* cases[] = {"0",      "1",    "-1",     "3/2",      "-1/2", "1i",
                           "-1i",    "1/2i", "-2/3i",  "1+1i",     "1-1i", "-1/2+3i",
                           "2/7-5/3i"};
    for (const char* s : cases) {
        GRational g = GRational::parse(s);
        CHECK(g.str() == s);
        CHECK(GRational::parse(g.str()) == g);
    }
}

TEST_CASE("scalar polynomial ring operations") {
    ScalarPoly h = ScalarPoly::sym(Sym::hbar);
    ScalarPoly g = ScalarPoly::sym(Sym::gamma);
    ScalarPoly p = (h + g) * (h - g);
    CHECK(p == h * h - g * g);
    CHECK(p.degree(Sym::hbar) == 2);
    CHECK(p.degree(Sym::alpha) == 0);
    CHECK((p - p).is_zero());

    // i * i * h = -h
    CHECK(ScalarPoly::i() * ScalarPoly::i() * h == -h);

    ScalarPoly q = ScalarPoly(GRational(Rational(3), Rational(2))) * h;
    CHECK(q.conj() == ScalarPoly(GRational(Rational(3), Rational(-2))) * h);
    CHECK((q / GRational(Rational(3), Rational(2))) == h);
}

TEST_CASE("substitution and evaluation agree") {
    ScalarPoly h = ScalarPoly::sym(Sym::hbar);
    ScalarPoly a = ScalarPoly::sym(Sym::alpha);
    ScalarPoly poly = h * h * a + ScalarPoly(2) * a - ScalarPoly::i() * h;

    ScalarPoly at_h3 = poly.subst(Sym::hbar, Rational(3));
    CHECK(at_h3.degree(Sym::hbar) == 0);
    // 9a + 2a - 3i = 11a - 3i
    CHECK(at_h3 == ScalarPoly(11) * a - ScalarPoly(GRational(Rational(0), Rational(3))));

    std::array<Rational, kNumSyms> vals{Rational(3), Rational(BigInt(1), BigInt(2)), Rational(0),
                                        Rational(0)};
    CHECK(poly.eval(vals) == GRational(Rational(BigInt(11), BigInt(2)), Rational(-3)));
}

TEST_CASE("symbol shift is the binomial expansion") {
    ScalarPoly m = ScalarPoly::sym(Sym::m);
    ScalarPoly cube = m * m * m;
    // (m+2)^3 = m^3 + 6m^2 + 12m + 8
    ScalarPoly shifted = cube.shift(Sym::m, Rational(2));
    ScalarPoly expect = m * m * m + ScalarPoly(6) * m * m + ScalarPoly(12) * m + ScalarPoly(8);
    CHECK(shifted == expect);
    // shifting back is the identity
    CHECK(shifted.shift(Sym::m, Rational(-2)) == cube);
    // a shift leaves evaluation consistent: f(m+1/2) at m=3/2 equals f(2)
    ScalarPoly f = cube + ScalarPoly(5) * m;
    std::array<Rational, kNumSyms> at2{Rational(0), Rational(0), Rational(0), Rational(2)};
    std::array<Rational, kNumSyms> at32{Rational(0), Rational(0), Rational(0),
                                        Rational(BigInt(3), BigInt(2))};
    CHECK(f.shift(Sym::m, Rational(BigInt(1), BigInt(2))).eval(at32) == f.eval(at2));
}

TEST_CASE("scalar polynomial printing round-trips") {
    ScalarPoly h = ScalarPoly::sym(Sym::hbar);
    ScalarPoly g = ScalarPoly::sym(Sym::gamma);
    ScalarPoly poly =
        ScalarPoly(GRational(Rational(0), Rational(BigInt(-1), BigInt(2)))) * h * h * g +
        ScalarPoly(3) * ScalarPoly::sym(Sym::m) + ScalarPoly(GRational(Rational(1), Rational(1)));
    std::string s = poly.str();
    CHECK(s == "(1+1i) + (3)*m + (-1/2i)*hbar^2*gamma");
    CHECK(ScalarPoly::parse(s) == poly);
    CHECK(ScalarPoly::parse("0").is_zero());
    CHECK(ScalarPoly().str() == "0");
}

TEST_CASE("randomized ring axioms for scalar polynomials") {
    std::mt19937 rng(20260822);
    auto rnd_rat = [&rng]() {
        std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
        return Rational(BigInt(num(rng)), BigInt(den(rng)));
    };
    auto rnd_poly = [&]() {
        ScalarPoly p;
        std::uniform_int_distribution<int> nterms(1, 4), expo(0, 2);
        int n = nterms(rng);
        for (int t = 0; t < n; ++t) {
            ScalarPoly term(GRational(rnd_rat(), rnd_rat()));
            for (int k = 0; k < kNumSyms; ++k) {
                int e = expo(rng);
                if (e) term *= ScalarPoly::sym(static_cast<Sym>(k), e);
            }
            p += term;
        }
        return p;
    };
    for (int trial = 0; trial < 200; ++trial) {
        ScalarPoly a = rnd_poly(), b = rnd_poly(), c = rnd_poly();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a - a).is_zero());
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(ScalarPoly::parse(a.str()) == a);
        // degree is subadditive under multiplication, exact without cancellation in hbar
        CHECK((a * b).degree(Sym::hbar) <= a.degree(Sym::hbar) + b.degree(Sym::hbar));
    }
}
