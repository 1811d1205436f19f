#include "socoulomb/rational.hpp"

namespace socoulomb {

void Rational::normalize() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::pow(int e) const {
    if (e < 0) return (Rational(1) / *this).pow(-e);
    Rational acc(1), base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
}

Rational Rational::parse(const std::string& s) {
    std::string t = (!s.empty() && s[0] == '+') ? s.substr(1) : s;
    auto slash = t.find('/');
    if (slash == std::string::npos) return Rational(BigInt(t));
    return Rational(BigInt(t.substr(0, slash)), BigInt(t.substr(slash + 1)));
}

std::string GRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string im_part = im_.str() + "i";
    if (re_.is_zero()) return im_part;
    return re_.str() + (im_.sign() > 0 ? "+" : "") + im_part;
}

GRational GRational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("GRational: empty literal");
    if (s.back() != 'i') return GRational(Rational::parse(s));
    std::string body = s.substr(0, s.size() - 1);
    // Split "re+imi"/"re-imi" at the sign that starts the imaginary part (never position 0,
    // and never directly after '/').
    for (size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
            std::string im = body.substr(k);
            if (im == "+" || im == "-") im += "1";
            return GRational(Rational::parse(body.substr(0, k)), Rational::parse(im));
        }
    }
    if (body.empty() || body == "+") return i();
    if (body == "-") return -i();
    return GRational(Rational(0), Rational::parse(body));
}

}  // namespace socoulomb
