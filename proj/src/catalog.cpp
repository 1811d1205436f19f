#include "socoulomb/catalog.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace socoulomb::catalog {

namespace {

ScalarPoly hb(int k = 1) { return ScalarPoly::sym(Sym::hbar, k); }
ScalarPoly ga() { return ScalarPoly::sym(Sym::gamma); }
ScalarPoly al() { return ScalarPoly::sym(Sym::alpha); }
ScalarPoly em() { return ScalarPoly::sym(Sym::m); }
ScalarPoly im() { return ScalarPoly::i(); }
ScalarPoly frac(long long n, long long d) {
    return ScalarPoly(GRational(Rational(BigInt(n), BigInt(d))));
}

Element scal(int dim, const ScalarPoly& c) { return Element::scalar(dim, c); }

}  // namespace

Element dilation(int dim) {
    Element d(dim);
    for (int i = 1; i <= dim; ++i) d += Element::x(dim, i) * Element::p(dim, i);
    return d;
}

Element j3_sl2(int dim) {
    return dilation(dim) - scal(dim, im() * hb() * frac(dim, 2));
}

Element ang(int i) {
    int j = i % 3 + 1, k = j % 3 + 1;  // (i,j,k) cyclic
    return Element::x(3, j) * Element::p(3, k) - Element::x(3, k) * Element::p(3, j);
}

Element l_sq() {
    Element s(3);
    for (int i = 1; i <= 3; ++i) s += ang(i) * ang(i);
    return s;
}

Element sigma_dot_l() {
    Element s(3);
    for (int i = 1; i <= 3; ++i) s += Element::sigma(3, i) * ang(i);
    return s;
}

Element lhat(int dim) {
    if (dim == 2) return Element::x(2, 1) * Element::p(2, 2) - Element::x(2, 2) * Element::p(2, 1);
    if (dim == 3) return sigma_dot_l() + scal(3, hb() * frac(1, 2));
    throw std::invalid_argument("lhat: defined for dimensions 2 and 3");
}

Element ell(int dim, int shift) {
    return lhat(dim) + scal(dim, hb() * (ga() + ScalarPoly(shift)));
}

Element a_tilde(int dim, int shift) {
    Element el = ell(dim, shift);
    Element f = el + scal(dim, hb() * frac(1, 2));  // ell + hbar/2
    return -im() * (f * (j3_sl2(dim) * Element::r_pow(dim, -1))) - scal(dim, al()) +
           f * el * Element::r_pow(dim, -1);
}

Element a_tilde_dag(int dim, int shift) {
    Element el = ell(dim, shift);
    Element f = el + scal(dim, hb() * frac(1, 2));
    return im() * (f * (j3_sl2(dim) * Element::r_pow(dim, -1))) - scal(dim, al()) +
           f * (el + scal(dim, hb())) * Element::r_pow(dim, -1);
}

Element ladder_minus(int dim, int k) {
    Element rinv = Element::r_pow(dim, -1), xk = Element::x(dim, k);
    return xk * rinv * lhat(dim) -
           im() * (rinv * (xk * j3_sl2(dim) - Element::r_pow(dim, 2) * Element::p(dim, k) +
                           im() * hb() * xk));
}

Element ladder_plus(int dim, int k) {
    Element rinv = Element::r_pow(dim, -1), xk = Element::x(dim, k);
    return lhat(dim) * xk * rinv +
           im() * (rinv * (xk * j3_sl2(dim) - Element::r_pow(dim, 2) * Element::p(dim, k)));
}

Element alg_hamiltonian(int dim, int shift) {
    Element j3i = j3_sl2(dim) + scal(dim, im() * hb());
    Element el = ell(dim, shift);
    return frac(1, 2) * (Element::r_pow(dim, -2) * j3i * j3i) +
           frac(1, 2) * (el * el * Element::r_pow(dim, -2)) -
           scal(dim, al()) * Element::r_pow(dim, -1);
}

Element jtotal(int i) { return ang(i) + (hb() * frac(1, 2)) * Element::sigma(3, i); }

Element jtotal_sq() {
    Element s(3);
    for (int i = 1; i <= 3; ++i) s += jtotal(i) * jtotal(i);
    return s;
}

Element h3() {
    Element t(3);
    for (int i = 1; i <= 3; ++i) t += frac(1, 2) * Element::p(3, i) * Element::p(3, i);
    t += (hb() * ga()) * (Element::r_pow(3, -2) * sigma_dot_l());
    t += (hb(2) * ga() * (ga() + ScalarPoly(1)) * frac(1, 2)) * Element::r_pow(3, -2);
    t -= scal(3, al()) * Element::r_pow(3, -1);
    return t;
}

Element x_op(int j) {
    return frac(1, 2) * (ladder_plus(3, j) * a_tilde(3) + a_tilde_dag(3) * ladder_minus(3, j));
}

Element y_op(int j) {
    return (-im() * frac(1, 2)) *
           (ladder_plus(3, j) * a_tilde(3) - a_tilde_dag(3) * ladder_minus(3, j));
}

Element v3() {
    return -scal(3, al()) * Element::r_pow(3, -1) +
           (hb() * ga()) * (Element::r_pow(3, -2) * sigma_dot_l()) +
           (hb(2) * ga() * (ScalarPoly(2) * ga() + ScalarPoly(1)) * frac(1, 2)) *
               Element::r_pow(3, -2);
}

Element runge(int j) {
    int k = j % 3 + 1, l = k % 3 + 1;  // (j,k,l) cyclic
    Element pwl = Element::p(3, k) * ang(l) - Element::p(3, l) * ang(k);
    Element lwp = ang(k) * Element::p(3, l) - ang(l) * Element::p(3, k);
    Element pws = (hb() * frac(1, 2)) *
                  (Element::p(3, k) * Element::sigma(3, l) - Element::p(3, l) * Element::sigma(3, k));
    Element pot = v3();
    return frac(1, 2) * (pwl - lwp) + (ScalarPoly(2) * ga()) * pws +
           frac(1, 2) * (Element::x(3, j) * pot + pot * Element::x(3, j));
}

Element x_runge(int j) {
    Element a = runge(j), sl = sigma_dot_l();
    return frac(1, 2) * (sl * a + a * sl) + (hb() * frac(3, 2)) * a;
}

Element x_explicit(int j) {
    Element p2(3), d = dilation(3), sl = sigma_dot_l();
    for (int i = 1; i <= 3; ++i) p2 += Element::p(3, i) * Element::p(3, i);
    Element rm1 = Element::r_pow(3, -1), rm2 = Element::r_pow(3, -2);

    Element b1 = -scal(3, al()) * rm1 + (hb(2) * ga() * (ga() + ScalarPoly(1))) * rm2 +
                 sl * p2 + (hb() * (ScalarPoly(1) + ScalarPoly(2) * ga())) * p2 +
                 (ScalarPoly(2) * im() * hb(2) * ga()) * (rm2 * d) - (hb() * ga()) * (rm2 * d * d);

    Element b2 = -sl * d + (im() * hb()) * sl - scal(3, im() * hb(2) * ga()) -
                 (hb() * (ScalarPoly(1) + ga())) * d + scal(3, im() * hb(2) * (ScalarPoly(1) + ga())) +
                 (-scal(3, al()) * rm1 + (hb(2) * ga() * ga()) * rm2) * sl;

    Element b3 = (im() * hb() * frac(1, 2)) * p2 + (im() * hb() * frac(1, 2) * al()) * rm1 -
                 (hb(2) * ga() * frac(1, 2)) * (rm2 * d);

    Element b4 = scal(3, hb(2) * (ScalarPoly(1) + ScalarPoly(2) * ga()) * frac(1, 2)) +
                 (im() * hb() * frac(1, 2)) * d;

    int k = j % 3 + 1, l = k % 3 + 1;
    Element xws = Element::x(3, k) * Element::sigma(3, l) - Element::x(3, l) * Element::sigma(3, k);
    Element pws = Element::p(3, k) * Element::sigma(3, l) - Element::p(3, l) * Element::sigma(3, k);

    return Element::x(3, j) * b1 + b2 * Element::p(3, j) + xws * b3 + b4 * pws;
}

Element f_poly() {
    Element sl = sigma_dot_l();
    Element inner = ScalarPoly(4) * sl * sl + (hb() * (ScalarPoly(6) * ga() + ScalarPoly(5))) * sl +
                    scal(3, ScalarPoly(2) * hb(2) * (ga() + ScalarPoly(1)) * (ga() + ScalarPoly(1)));
    return scal(3, al() * al()) + h3() * inner;
}

Element g_printed() {
    Element sl = sigma_dot_l(), jsq = jtotal_sq();
    ScalarPoly g1 = ga() + ScalarPoly(1);
    Element inner = ScalarPoly(4) * (sl * (jsq + sl * sl)) +
                    (ScalarPoly(2) * hb()) *
                        ((ScalarPoly(1) + ScalarPoly(2) * ga()) * jsq + (ScalarPoly(4) * g1) * sl * sl) +
                    (ScalarPoly(4) * hb(2) * g1 * (ga() + ScalarPoly(2))) * sl +
                    scal(3, hb(3) * (ScalarPoly(3) + ScalarPoly(6) * ga() +
                                     ScalarPoly(4) * ga() * ga()));
    Element body = (ScalarPoly(2) * al() * al()) * (sl + scal(3, hb())) + h3() * inner;
    return (-im() * hb() * frac(1, 2)) * body;
}

Element h2_flat() {
    return frac(1, 2) * (Element::p(2, 1) * Element::p(2, 1) + Element::p(2, 2) * Element::p(2, 2)) -
           scal(2, al()) * Element::r_pow(2, -1);
}

Element h2_gauged() {
    return h2_flat() + (hb() * ga()) * (Element::r_pow(2, -2) * lhat(2)) +
           (hb(2) * ga() * ga() * frac(1, 2)) * Element::r_pow(2, -2);
}

Element eplus() {
    return Element::r_pow(2, -1) * (Element::x(2, 1) + im() * Element::x(2, 2));
}

Element eminus() {
    return Element::r_pow(2, -1) * (Element::x(2, 1) - im() * Element::x(2, 2));
}

Element x_2d() {
    return frac(1, 2) * (eplus() * a_tilde(2) + a_tilde_dag(2) * eminus());
}

Element y_2d() {
    return (-im() * frac(1, 2)) * (eplus() * a_tilde(2) - a_tilde_dag(2) * eminus());
}

Element r1_2d(bool alt) {
    Element el = ell(2, 0), p2 = Element::p(2, 2);
    Element lfac = alt ? el * el : el;
    return frac(1, 2) * (p2 * el + el * p2) +
           (im() * hb(2) * ga() * frac(1, 2)) * (Element::x(2, 2) * Element::r_pow(2, -2)) +
           (hb() * ga()) * (Element::x(2, 1) * Element::r_pow(2, -2) * lfac) -
           scal(2, al()) * (Element::x(2, 1) * Element::r_pow(2, -1));
}

Element r2_2d(bool alt) {
    Element el = ell(2, 0), p1 = Element::p(2, 1);
    Element lfac = alt ? el * el : el;
    return -frac(1, 2) * (p1 * el + el * p1) -
           (im() * hb(2) * ga() * frac(1, 2)) * (Element::x(2, 1) * Element::r_pow(2, -2)) +
           (hb() * ga()) * (Element::x(2, 2) * Element::r_pow(2, -2) * lfac) -
           scal(2, al()) * (Element::x(2, 2) * Element::r_pow(2, -1));
}

Element r_flat(int j) {
    Element l0 = lhat(2);
    if (j == 1) {
        Element p2 = Element::p(2, 2);
        return frac(1, 2) * (p2 * l0 + l0 * p2) -
               scal(2, al()) * (Element::x(2, 1) * Element::r_pow(2, -1));
    }
    Element p1 = Element::p(2, 1);
    return -frac(1, 2) * (p1 * l0 + l0 * p1) -
           scal(2, al()) * (Element::x(2, 2) * Element::r_pow(2, -1));
}

Element gauge_conj(const Element& e, int k) {
    Element left = k >= 0 ? eminus() : eplus();
    Element right = k >= 0 ? eplus() : eminus();
    Element out = e;
    for (int rep = 0; rep < std::abs(k); ++rep) out = left * out * right;
    return out;
}

Element dr() { return im() * (Element::r_pow(1, -1) * Element::x(1, 1) * Element::p(1, 1)); }

Element h1m() {
    Element d = dr();
    ScalarPoly mg = em() + ga();
    return -frac(1, 2) * d * d - (hb() * frac(1, 2)) * (Element::r_pow(1, -1) * d) -
           scal(1, al()) * Element::r_pow(1, -1) +
           (hb(2) * frac(1, 2) * mg * mg) * Element::r_pow(1, -2);
}

Element a1m() {
    ScalarPoly c = em() + frac(1, 2) + ga(), mg = em() + ga();
    return (-im() * hb() * c) * dr() - scal(1, im() * al()) +
           (im() * hb(2) * c * mg) * Element::r_pow(1, -1);
}

Element a1m_dag() {
    ScalarPoly c = em() + frac(1, 2) + ga(), mg1 = em() + ga() + ScalarPoly(1);
    return (-im() * hb() * c) * dr() + scal(1, im() * al()) -
           (im() * hb(2) * c * mg1) * Element::r_pow(1, -1);
}

namespace {

const std::map<std::string, std::function<Element()>>& builders() {
    static const std::map<std::string, std::function<Element()>> b = {
        {"A1M", [] { return a1m(); }},
        {"A1M_DAG", [] { return a1m_dag(); }},
        {"A2T", [] { return a_tilde(2); }},
        {"A2T_DAG", [] { return a_tilde_dag(2); }},
        {"A3T", [] { return a_tilde(3); }},
        {"A3T_DAG", [] { return a_tilde_dag(3); }},
        {"D2", [] { return dilation(2); }},
        {"D3", [] { return dilation(3); }},
        {"DR", [] { return dr(); }},
        {"ELL2", [] { return ell(2); }},
        {"ELL3", [] { return ell(3); }},
        {"EMINUS", [] { return eminus(); }},
        {"EPLUS", [] { return eplus(); }},
        {"FHAT", [] { return f_poly(); }},
        {"G_PRINTED", [] { return g_printed(); }},
        {"H1M", [] { return h1m(); }},
        {"H2_ALG", [] { return alg_hamiltonian(2); }},
        {"H2_FLAT", [] { return h2_flat(); }},
        {"H2G", [] { return h2_gauged(); }},
        {"H3", [] { return h3(); }},
        {"H3_ALG", [] { return alg_hamiltonian(3); }},
        {"J3_SL2_2", [] { return j3_sl2(2); }},
        {"J3_SL2_3", [] { return j3_sl2(3); }},
        {"JT1", [] { return jtotal(1); }},
        {"JT2", [] { return jtotal(2); }},
        {"JT3", [] { return jtotal(3); }},
        {"JTSQ", [] { return jtotal_sq(); }},
        {"L0", [] { return lhat(2); }},
        {"L1", [] { return ang(1); }},
        {"L2", [] { return ang(2); }},
        {"L3", [] { return ang(3); }},
        {"LHAT3", [] { return lhat(3); }},
        {"LM1", [] { return ladder_minus(3, 1); }},
        {"LM2", [] { return ladder_minus(3, 2); }},
        {"LM3", [] { return ladder_minus(3, 3); }},
        {"LP1", [] { return ladder_plus(3, 1); }},
        {"LP2", [] { return ladder_plus(3, 2); }},
        {"LP3", [] { return ladder_plus(3, 3); }},
        {"LSQ", [] { return l_sq(); }},
        {"R1_2D", [] { return r1_2d(); }},
        {"R1_2D_ALT", [] { return r1_2d(true); }},
        {"R1_2D_FLAT", [] { return r_flat(1); }},
        {"R2_2D", [] { return r2_2d(); }},
        {"R2_2D_ALT", [] { return r2_2d(true); }},
        {"R2_2D_FLAT", [] { return r_flat(2); }},
        {"RUNGE1", [] { return runge(1); }},
        {"RUNGE2", [] { return runge(2); }},
        {"RUNGE3", [] { return runge(3); }},
        {"SL", [] { return sigma_dot_l(); }},
        {"V3", [] { return v3(); }},
        {"X1", [] { return x_op(1); }},
        {"X2", [] { return x_op(2); }},
        {"X3", [] { return x_op(3); }},
        {"X_2D", [] { return x_2d(); }},
        {"XE1", [] { return x_explicit(1); }},
        {"XE2", [] { return x_explicit(2); }},
        {"XE3", [] { return x_explicit(3); }},
        {"XR1", [] { return x_runge(1); }},
        {"XR2", [] { return x_runge(2); }},
        {"XR3", [] { return x_runge(3); }},
        {"Y1", [] { return y_op(1); }},
        {"Y2", [] { return y_op(2); }},
        {"Y3", [] { return y_op(3); }},
        {"Y_2D", [] { return y_2d(); }},
    };
    return b;
}

}  // namespace

const std::vector<std::string>& keys() {
    static const std::vector<std::string> k = [] {
        std::vector<std::string> out;
        for (const auto& [key, fn] : builders()) out.push_back(key);
        return out;
    }();
    return k;
}

Element get(const std::string& key) {
    auto it = builders().find(key);
    if (it == builders().end()) throw std::invalid_argument("catalog: unknown key '" + key + "'");
    return it->second();
}

std::string dump() {
    std::string out;
    for (const auto& [key, fn] : builders()) out += key + "\t" + fn().str() + "\n";
    return out;
}

}  // namespace socoulomb::catalog
