#include "socoulomb/element.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace socoulomb {

namespace {

// sigma_a * sigma_b = delta_ab + i eps_abc sigma_c, encoded as (phase, index).
std::pair<GRational, int> pauli_product(int a, int b) {
    if (a == 0) return {GRational(1), b};
    if (b == 0) return {GRational(1), a};
    if (a == b) return {GRational(1), 0};
    int c = 6 - a - b;  // the remaining index
    // eps_abc = +1 for cyclic (1,2,3)
    bool cyclic = (b - a + 3) % 3 == 1;
    return {cyclic ? GRational::i() : -GRational::i(), c};
}

// One term of p^b (r^s x^a) after some pushes; the accumulated coefficient is
// always k * (-i hbar)^h, so it is tracked as an integer and a power.
struct PushTerm {
    BigInt k;
    int h;
    int rp;
    std::array<int, 3> x;
    std::array<int, 3> p;
};

}  // namespace

Element::Element(int dim) : dim_(dim) {
    if (dim < 1 || dim > 3) throw std::invalid_argument("Element: dimension must be 1, 2 or 3");
}

Element Element::one(int dim) {
    Element e(dim);
    e.add_term(Mono{}, ScalarPoly(1));
    return e;
}

Element Element::scalar(int dim, const ScalarPoly& c) {
    Element e(dim);
    e.add_term(Mono{}, c);
    return e;
}

Element Element::x(int dim, int i) {
    Element e(dim);
    if (i < 1 || i > dim) throw std::invalid_argument("Element::x: index out of range");
    Mono m;
    m.x[i - 1] = 1;
    e.add_term(m, ScalarPoly(1));
    return e;
}

Element Element::p(int dim, int i) {
    Element e(dim);
    if (i < 1 || i > dim) throw std::invalid_argument("Element::p: index out of range");
    Mono m;
    m.p[i - 1] = 1;
    e.add_term(m, ScalarPoly(1));
    return e;
}

Element Element::r_pow(int dim, int s) {
    Element e(dim);
    Mono m;
    m.rp = s;
    e.add_term(m, ScalarPoly(1));
    return e;
}

Element Element::sigma(int dim, int k) {
    Element e(dim);
    if (k < 1 || k > 3) throw std::invalid_argument("Element::sigma: index out of range");
    Mono m;
    m.s = k;
    e.add_term(m, ScalarPoly(1));
    return e;
}

void Element::add_term(const Mono& mono, const ScalarPoly& c) {
    if (c.is_zero()) return;
    int n = dim_ - 1;
    if (mono.x[n] >= 2) {
        // x_n^2 = r^2 - x_1^2 - ... - x_{n-1}^2
        Mono base = mono;
        base.x[n] -= 2;
        Mono rr = base;
        rr.rp += 2;
        add_term(rr, c);
        for (int i = 0; i < n; ++i) {
            Mono xi = base;
            xi.x[i] += 2;
            add_term(xi, -c);
        }
        return;
    }
    for (int i = dim_; i < 3; ++i)
        if (mono.x[i] != 0 || mono.p[i] != 0)
            throw std::invalid_argument("Element: factor index exceeds dimension");
    auto [it, inserted] = t_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

void Element::check_same_dim(const Element& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("Element: dimension mismatch");
}

Element Element::operator-() const {
    Element r(dim_);
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
}

Element& Element::operator+=(const Element& o) {
    check_same_dim(o);
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    check_same_dim(o);
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

Element operator*(const Element& a, const Element& b) {
    a.check_same_dim(b);
    int dim = a.dim_;
    Element r(dim);
    // (-i)^h for h = 0..3
    const GRational i_pow[4] = {GRational(1), -GRational::i(), GRational(-1), GRational::i()};
    std::vector<PushTerm> work, next;
    for (const auto& [ma, ca] : a.t_) {
        for (const auto& [mb, cb] : b.t_) {
            auto [phase, sidx] = pauli_product(ma.s, mb.s);
            // Push the p-block of ma through r^rp x^a of mb, rightmost factor first:
            // p_i g = g p_i - i hbar (d_i g).
            work.clear();
            work.push_back(PushTerm{BigInt(1), 0, mb.rp, mb.x, {0, 0, 0}});
            for (int i = dim - 1; i >= 0; --i) {
                for (int rep = 0; rep < ma.p[i]; ++rep) {
                    next.clear();
                    for (const auto& t : work) {
                        PushTerm moved = t;
                        ++moved.p[i];
                        next.push_back(std::move(moved));
                        if (t.rp != 0) {
                            PushTerm dr = t;
                            dr.k *= t.rp;
                            ++dr.h;
                            dr.rp -= 2;
                            ++dr.x[i];
                            next.push_back(std::move(dr));
                        }
                        if (t.x[i] != 0) {
                            PushTerm dx = t;
                            dx.k *= t.x[i];
                            ++dx.h;
                            --dx.x[i];
                            next.push_back(std::move(dx));
                        }
                    }
                    work.swap(next);
                }
            }
            ScalarPoly cc = ca * cb * ScalarPoly(phase);
            for (const auto& t : work) {
                Mono m;
                m.rp = ma.rp + t.rp;
                for (int k = 0; k < 3; ++k) {
                    m.x[k] = ma.x[k] + t.x[k];
                    m.p[k] = t.p[k] + mb.p[k];
                }
                m.s = sidx;
                if (t.h == 0) {
                    r.add_term(m, cc);  // k stays 1 until the first derivative
                } else {
                    r.add_term(m, cc * (ScalarPoly(GRational(Rational(t.k)) * i_pow[t.h % 4]) *
                                        ScalarPoly::sym(Sym::hbar, t.h)));
                }
            }
        }
    }
    return r;
}

Element Element::pow(int e) const {
    if (e < 0) throw std::invalid_argument("Element::pow: negative exponent");
    Element acc = one(dim_);
    for (int k = 0; k < e; ++k) acc *= *this;
    return acc;
}

Element Element::scaled(const ScalarPoly& c) const {
    Element r(dim_);
    for (const auto& [m, v] : t_) r.add_term(m, v * c);
    return r;
}

Element Element::subst(Sym s, const Rational& value) const {
    Element r(dim_);
    for (const auto& [m, c] : t_) r.add_term(m, c.subst(s, value));
    return r;
}

Element Element::shift_sym(Sym s, const Rational& delta) const {
    Element r(dim_);
    for (const auto& [m, c] : t_) r.add_term(m, c.shift(s, delta));
    return r;
}

int Element::degree(Sym s) const {
    int d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, c.degree(s));
    return d;
}

int Element::min_degree(Sym s) const {
    if (t_.empty()) return 0;
    int d = t_.begin()->second.min_degree(s);
    for (const auto& [m, c] : t_) d = std::min(d, c.min_degree(s));
    return d;
}

int Element::p_degree() const {
    int d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.p[0] + m.p[1] + m.p[2]);
    return d;
}

Element Element::canonicalize() const {
    Element r(dim_);
    for (const auto& [m, c] : t_) r.add_term(m, c);
    return r;
}

Element adjoint(const Element& e) {
    // (c r^s x^a p^b sigma)^+ = conj(c) p^b x^a r^s sigma: every factor is
    // self-adjoint, so only the order of the p-block and the spatial block flips.
    int dim = e.dim();
    Element r(dim);
    for (const auto& [m, c] : e.terms()) {
        Element left(dim), right(dim);
        Mono pb;
        pb.p = m.p;
        left.add_term(pb, c.conj());
        Mono sp;
        sp.rp = m.rp;
        sp.x = m.x;
        sp.s = m.s;
        right.add_term(sp, ScalarPoly(1));
        r += left * right;
    }
    return r;
}

Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

Element anticommutator(const Element& a, const Element& b) { return a * b + b * a; }

std::string Element::str() const {
    std::string out = "d" + std::to_string(dim_) + ":";
    if (t_.empty()) return out + " 0";
    bool first = true;
    for (const auto& [m, c] : t_) {
        out += first ? " " : " ; ";
        first = false;
        out += "[" + c.str() + "] ";
        std::string mono;
        auto put = [&mono](const std::string& f) {
            if (!mono.empty()) mono += " ";
            mono += f;
        };
        if (m.rp != 0) put(m.rp == 1 ? "r" : "r^" + std::to_string(m.rp));
        for (int k = 0; k < 3; ++k)
            if (m.x[k] != 0)
                put("x" + std::to_string(k + 1) +
                    (m.x[k] == 1 ? "" : "^" + std::to_string(m.x[k])));
        for (int k = 0; k < 3; ++k)
            if (m.p[k] != 0)
                put("p" + std::to_string(k + 1) +
                    (m.p[k] == 1 ? "" : "^" + std::to_string(m.p[k])));
        if (m.s != 0) put("s" + std::to_string(m.s));
        out += mono.empty() ? "1" : mono;
    }
    return out;
}

std::string Element::pretty() const {
    std::string line = str();
    auto colon = line.find(':');
    std::string out = line.substr(0, colon + 1) + "\n";
    std::string rest = line.substr(colon + 2);
    size_t pos = 0;
    while (pos < rest.size()) {
        size_t next = rest.find(" ; ", pos);
        out += "  " + rest.substr(pos, next == std::string::npos ? next : next - pos) + "\n";
        pos = next == std::string::npos ? rest.size() : next + 3;
    }
    return out;
}

Element Element::parse(const std::string& text) {
    // Header "d<dim>:" then terms joined by " ; " or newlines.
    auto colon = text.find(':');
    if (colon == std::string::npos || colon < 2 || text[0] != 'd')
        throw std::invalid_argument("Element::parse: missing dimension header");
    int dim = std::stoi(text.substr(1, colon - 1));
    Element r(dim);
    std::string body = text.substr(colon + 1);
    for (char& ch : body)
        if (ch == '\n') ch = ';';
    std::stringstream ss(body);
    std::string term;
    while (std::getline(ss, term, ';')) {
        size_t b = term.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        size_t e = term.find_last_not_of(" \t");
        term = term.substr(b, e - b + 1);
        if (term.empty() || term == "0") continue;
        if (term[0] != '[') throw std::invalid_argument("Element::parse: bad term '" + term + "'");
        auto close = term.find(']');
        if (close == std::string::npos)
            throw std::invalid_argument("Element::parse: unterminated coefficient");
        ScalarPoly c = ScalarPoly::parse(term.substr(1, close - 1));
        Mono m;
        std::stringstream fs(term.substr(close + 1));
        std::string f;
        while (fs >> f) {
            if (f == "1") continue;
            int power = 1;
            if (auto caret = f.find('^'); caret != std::string::npos) {
                power = std::stoi(f.substr(caret + 1));
                f.resize(caret);
            }
            if (f == "r")
                m.rp += power;
            else if (f.size() == 2 && (f[0] == 'x' || f[0] == 'p') && f[1] >= '1' && f[1] <= '3') {
                int idx = f[1] - '1';
                (f[0] == 'x' ? m.x : m.p)[idx] += power;
            } else if (f.size() == 2 && f[0] == 's' && f[1] >= '1' && f[1] <= '3')
                m.s = f[1] - '0';
            else
                throw std::invalid_argument("Element::parse: bad factor '" + f + "'");
        }
        r.add_term(m, c);
    }
    return r;
}

}  // namespace socoulomb
