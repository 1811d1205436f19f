#pragma once

#include "socoulomb/scalar_poly.hpp"

#include <array>
#include <map>
#include <string>

namespace socoulomb {

// Canonical monomial  r^rp * x1^x[0] x2^x[1] x3^x[2] * p1^p[0] p2^p[1] p3^p[2] * sigma_s.
// Comparison order (rp, x, p, s) fixes the serialization order of every element.
struct Mono {
    int rp = 0;
    std::array<int, 3> x{0, 0, 0};
    std::array<int, 3> p{0, 0, 0};
    int s = 0;  // 0 = identity, 1..3 = Pauli matrix index
    friend auto operator<=>(const Mono&, const Mono&) = default;
};

// Element of the operator algebra in dimension dim (1, 2 or 3): a finite sum
//   sum_k c_k(hbar, alpha, gamma, m) * r^s x^a p^b sigma_mu
// kept in normal order with x_dim^2 eliminated through r^2 = x1^2+...+x_dim^2.
// Products apply  p_i g = g p_i - i hbar (d_i g)  exactly; all arithmetic is
// over Gaussian-rational polynomial coefficients.  Mixing dimensions throws.
class Element {
public:
    using Terms = std::map<Mono, ScalarPoly>;

    explicit Element(int dim);

    static Element zero(int dim) { return Element(dim); }
    static Element one(int dim);
    static Element scalar(int dim, const ScalarPoly& c);
    static Element x(int dim, int i);   // position x_i, 1-based, i <= dim
    static Element p(int dim, int i);   // momentum p_i
    static Element r_pow(int dim, int s);  // r^s, any integer s
    static Element sigma(int dim, int k);  // Pauli sigma_k, k in 1..3

    int dim() const { return dim_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }

    // Inserts c * mono, reducing x_dim powers >= 2 via r^2 = sum x_i^2.
    void add_term(const Mono& mono, const ScalarPoly& c);

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Element& a, const Element& b);
    Element& operator*=(const Element& o) { return *this = *this * o; }
    Element pow(int e) const;

    friend bool operator==(const Element& a, const Element& b) = default;

    // Coefficient-wise operations.
    Element scaled(const ScalarPoly& c) const;
    Element subst(Sym s, const Rational& value) const;
    Element shift_sym(Sym s, const Rational& delta) const;

    int degree(Sym s) const;      // max coefficient degree in s
    int min_degree(Sym s) const;  // min coefficient degree in s
    int p_degree() const;         // max total momentum power

    // Re-inserts every stored term; a fixed point of the representation.
    Element canonicalize() const;

    // "d3: [poly] r^-2 x1 p2^2 s3 ; [poly] 1"; parse round-trips str() and pretty().
    std::string str() const;
    std::string pretty() const;
    static Element parse(const std::string& text);

private:
    void check_same_dim(const Element& o) const;

    int dim_;
    Terms t_;
};

inline Element operator*(const ScalarPoly& c, const Element& e) { return e.scaled(c); }
inline Element operator*(const Element& e, const ScalarPoly& c) { return e.scaled(c); }
inline Element operator*(const GRational& c, const Element& e) { return e.scaled(ScalarPoly(c)); }
inline Element operator*(const Element& e, const GRational& c) { return e.scaled(ScalarPoly(c)); }

Element adjoint(const Element& e);
Element commutator(const Element& a, const Element& b);
Element anticommutator(const Element& a, const Element& b);

}  // namespace socoulomb
