#pragma once

#include "socoulomb/rational.hpp"

#include <array>
#include <map>
#include <string>

namespace socoulomb {

// The commuting symbols every operator coefficient may depend on.
enum class Sym : int { hbar = 0, alpha = 1, gamma = 2, m = 3 };

inline constexpr int kNumSyms = 4;
inline constexpr const char* kSymNames[kNumSyms] = {"hbar", "alpha", "gamma", "m"};

// Polynomial in (hbar, alpha, gamma, m) with Gaussian-rational coefficients.
// Canonical: zero coefficients are never stored, so operator== is structural.
class ScalarPoly {
public:
    using Exps = std::array<int, kNumSyms>;
    using Terms = std::map<Exps, GRational>;

    ScalarPoly() = default;
    ScalarPoly(long long c) { add(Exps{}, GRational(c)); }
    ScalarPoly(const GRational& c) { add(Exps{}, c); }
    ScalarPoly(const Rational& c) { add(Exps{}, GRational(c)); }

    static ScalarPoly sym(Sym s, int power = 1);
    static ScalarPoly i() { return ScalarPoly(GRational::i()); }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    // Constant term (zero if absent).
    GRational constant() const;

    ScalarPoly operator-() const;
    ScalarPoly& operator+=(const ScalarPoly& o);
    ScalarPoly& operator-=(const ScalarPoly& o);
    friend ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) { return a += b; }
    friend ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) { return a -= b; }
    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
    ScalarPoly& operator*=(const ScalarPoly& o) { return *this = *this * o; }
    // Exact division by a nonzero constant.
    ScalarPoly operator/(const GRational& c) const;

    friend bool operator==(const ScalarPoly& a, const ScalarPoly& b) = default;

    ScalarPoly conj() const;
    // Substitute sym := value; the result no longer involves sym.
    ScalarPoly subst(Sym s, const Rational& value) const;
    // Substitute sym := sym + delta (binomial expansion).
    ScalarPoly shift(Sym s, const Rational& delta) const;
    // Largest / smallest exponent of sym over the support; 0 for the zero polynomial.
    int degree(Sym s) const;
    int min_degree(Sym s) const;
    // Full evaluation at rational symbol values.
    GRational eval(const std::array<Rational, kNumSyms>& vals) const;

    // "(-1/2i)*hbar^2*gamma + (3)*m" ; "0" for zero.  Round-trips through parse.
    std::string str() const;
    static ScalarPoly parse(const std::string& s);

private:
    void add(const Exps& e, const GRational& c);

    Terms t_;
};

inline ScalarPoly operator*(const ScalarPoly& a, const GRational& c) { return a * ScalarPoly(c); }
inline ScalarPoly operator*(const GRational& c, const ScalarPoly& a) { return a * ScalarPoly(c); }

}  // namespace socoulomb
