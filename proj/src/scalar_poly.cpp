#include "socoulomb/scalar_poly.hpp"

#include <sstream>
#include <vector>

namespace socoulomb {

void ScalarPoly::add(const Exps& e, const GRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

ScalarPoly ScalarPoly::sym(Sym s, int power) {
    ScalarPoly p;
    Exps e{};
    e[static_cast<int>(s)] = power;
    p.add(e, GRational(1));
    return p;
}

bool ScalarPoly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exps{});
}

GRational ScalarPoly::constant() const {
    auto it = t_.find(Exps{});
    return it == t_.end() ? GRational() : it->second;
}

ScalarPoly ScalarPoly::operator-() const {
    ScalarPoly r;
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& o) {
    for (const auto& [e, c] : o.t_) add(e, c);
    return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& o) {
    for (const auto& [e, c] : o.t_) add(e, -c);
    return *this;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
    ScalarPoly r;
    for (const auto& [ea, ca] : a.t_) {
        for (const auto& [eb, cb] : b.t_) {
            ScalarPoly::Exps e;
            for (int k = 0; k < kNumSyms; ++k) e[k] = ea[k] + eb[k];
            r.add(e, ca * cb);
        }
    }
    return r;
}

ScalarPoly ScalarPoly::operator/(const GRational& c) const {
    if (c.is_zero()) throw std::domain_error("ScalarPoly: division by zero");
    ScalarPoly r;
    for (const auto& [e, v] : t_) r.t_.emplace(e, v / c);
    return r;
}

ScalarPoly ScalarPoly::conj() const {
    ScalarPoly r;
    for (const auto& [e, c] : t_) r.t_.emplace(e, c.conj());
    return r;
}

ScalarPoly ScalarPoly::subst(Sym s, const Rational& value) const {
    int k = static_cast<int>(s);
    ScalarPoly r;
    for (const auto& [e, c] : t_) {
        Exps e2 = e;
        e2[k] = 0;
        r.add(e2, c * GRational(value.pow(e[k])));
    }
    return r;
}

ScalarPoly ScalarPoly::shift(Sym s, const Rational& delta) const {
    int k = static_cast<int>(s);
    ScalarPoly r;
    for (const auto& [e, c] : t_) {
        int n = e[k];
        // (sym + delta)^n expanded with binomial coefficients.
        Rational binom(1);
        for (int j = 0; j <= n; ++j) {
            Exps e2 = e;
            e2[k] = j;
            r.add(e2, c * GRational(binom * delta.pow(n - j)));
            binom *= Rational(n - j);
            binom /= Rational(j + 1);
        }
    }
    return r;
}

int ScalarPoly::degree(Sym s) const {
    int k = static_cast<int>(s), d = 0;
    for (const auto& [e, c] : t_) d = std::max(d, e[k]);
    return d;
}

int ScalarPoly::min_degree(Sym s) const {
    if (t_.empty()) return 0;
    int k = static_cast<int>(s), d = t_.begin()->first[k];
    for (const auto& [e, c] : t_) d = std::min(d, e[k]);
    return d;
}

GRational ScalarPoly::eval(const std::array<Rational, kNumSyms>& vals) const {
    GRational acc;
    for (const auto& [e, c] : t_) {
        Rational f(1);
        for (int k = 0; k < kNumSyms; ++k) f *= vals[k].pow(e[k]);
        acc += c * GRational(f);
    }
    return acc;
}

std::string ScalarPoly::str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : t_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")";
        for (int k = 0; k < kNumSyms; ++k) {
            if (e[k] == 0) continue;
            out += "*";
            out += kSymNames[k];
            if (e[k] != 1) out += "^" + std::to_string(e[k]);
        }
    }
    return out;
}

ScalarPoly ScalarPoly::parse(const std::string& s) {
    ScalarPoly r;
    if (s == "0") return r;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(" + ", pos);
        std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? s.size() : next + 3;

        auto close = term.find(')');
        if (term.empty() || term[0] != '(' || close == std::string::npos)
            throw std::invalid_argument("ScalarPoly: bad term '" + term + "'");
        GRational c = GRational::parse(term.substr(1, close - 1));
        Exps e{};
        size_t fpos = close + 1;
        while (fpos < term.size()) {
            if (term[fpos] != '*') throw std::invalid_argument("ScalarPoly: bad factor list");
            ++fpos;
            size_t fend = term.find('*', fpos);
            std::string factor =
                term.substr(fpos, fend == std::string::npos ? fend : fend - fpos);
            fpos = fend == std::string::npos ? term.size() : fend;
            int power = 1;
            if (auto caret = factor.find('^'); caret != std::string::npos) {
                power = std::stoi(factor.substr(caret + 1));
                factor.resize(caret);
            }
            int k = 0;
            while (k < kNumSyms && factor != kSymNames[k]) ++k;
            if (k == kNumSyms)
                throw std::invalid_argument("ScalarPoly: unknown symbol '" + factor + "'");
            e[k] += power;
        }
        r.add(e, c);
    }
    return r;
}

}  // namespace socoulomb
