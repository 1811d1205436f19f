#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace socoulomb {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number.  Invariant: den > 0, gcd(num, den) = 1, zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const { return raw(-num_, den_); }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        BigInt l = a.num_ * b.den_, r = b.num_ * a.den_;
        return l < r ? std::strong_ordering::less
                     : (l == r ? std::strong_ordering::equal : std::strong_ordering::greater);
    }

    Rational pow(int e) const;

    double to_double() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

    // "p" or "p/q"
    std::string str() const;
    static Rational parse(const std::string& s);

private:
    static Rational raw(BigInt n, BigInt d) {
        Rational q;
        q.num_ = std::move(n);
        q.den_ = std::move(d);
        return q;
    }
    void normalize();

    BigInt num_, den_;
};

// Gaussian rational re + im*i; the coefficient field of the operator algebra.
class GRational {
public:
    GRational() = default;
    GRational(long long re) : re_(re) {}
    GRational(Rational re) : re_(std::move(re)) {}
    GRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GRational i() { return GRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GRational conj() const { return GRational(re_, -im_); }
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    GRational operator-() const { return GRational(-re_, -im_); }

    GRational& operator+=(const GRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GRational& operator-=(const GRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GRational& operator*=(const GRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }
    GRational& operator/=(const GRational& o) {
        if (o.is_zero()) throw std::domain_error("GRational: division by zero");
        Rational n = o.norm2();
        GRational num = *this * o.conj();
        re_ = num.re_ / n;
        im_ = num.im_ / n;
        return *this;
    }

    friend GRational operator+(GRational a, const GRational& b) { return a += b; }
    friend GRational operator-(GRational a, const GRational& b) { return a -= b; }
    friend GRational operator*(GRational a, const GRational& b) { return a *= b; }
    friend GRational operator/(GRational a, const GRational& b) { return a /= b; }

    friend bool operator==(const GRational& a, const GRational& b) = default;

    // "3/2", "-1i", "1/2-3i", ...
    std::string str() const;
    static GRational parse(const std::string& s);

private:
    Rational re_, im_;
};

}  // namespace socoulomb
