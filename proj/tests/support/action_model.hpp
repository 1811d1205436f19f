#pragma once

// Independent oracle for the operator algebra: elements act on explicit
// two-component functions spanned by r^t x^c.  Only the defining relations are
// used here — p_i acts as -i hbar d_i, sigma_k as a literal 2x2 Pauli matrix —
// so agreement with Element multiplication checks the normal-ordering engine
// against first principles rather than against itself.

#include "socoulomb/element.hpp"

#include <array>
#include <map>
#include <utility>

namespace socoulomb::oracle {

struct FnKey {
    int t = 0;                      // power of r
    std::array<int, 3> c{0, 0, 0};  // powers of x_i
    friend auto operator<=>(const FnKey&, const FnKey&) = default;
};

using FnPart = std::map<FnKey, ScalarPoly>;

// Two-component wave function over the coordinate ring of the given dimension.
struct SpinorFn {
    int dim = 3;
    std::array<FnPart, 2> comp;
    friend bool operator==(const SpinorFn&, const SpinorFn&) = default;
};

// Insert with the same coordinate-ring identity the kernel uses:
// x_dim^2 = r^2 - x_1^2 - ... - x_{dim-1}^2 (the definition of r).
inline void fn_add(FnPart& f, int dim, FnKey k, const ScalarPoly& v) {
    if (v.is_zero()) return;
    if (k.c[dim - 1] >= 2) {
        FnKey base = k;
        base.c[dim - 1] -= 2;
        FnKey rr = base;
        rr.t += 2;
        fn_add(f, dim, rr, v);
        for (int i = 0; i + 1 < dim; ++i) {
            FnKey xi = base;
            xi.c[i] += 2;
            fn_add(f, dim, xi, -v);
        }
        return;
    }
    auto [it, inserted] = f.emplace(k, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) f.erase(it);
    }
}

inline FnPart apply_x(int dim, const FnPart& f, int i) {
    FnPart out;
    for (const auto& [k, v] : f) {
        FnKey k2 = k;
        ++k2.c[i];
        fn_add(out, dim, k2, v);
    }
    return out;
}

inline FnPart apply_r_pow(int dim, const FnPart& f, int s) {
    FnPart out;
    for (const auto& [k, v] : f) {
        FnKey k2 = k;
        k2.t += s;
        fn_add(out, dim, k2, v);
    }
    return out;
}

// p_i f = -i hbar d_i f with d_i(r^t x^c) = t x_i r^(t-2) x^c + c_i r^t x^(c-e_i).
inline FnPart apply_p(int dim, const FnPart& f, int i) {
    ScalarPoly mih = ScalarPoly(-GRational::i()) * ScalarPoly::sym(Sym::hbar);
    FnPart out;
    for (const auto& [k, v] : f) {
        if (k.t != 0) {
            FnKey k2 = k;
            k2.t -= 2;
            ++k2.c[i];
            fn_add(out, dim, k2, v * mih * ScalarPoly(k.t));
        }
        if (k.c[i] != 0) {
            FnKey k2 = k;
            --k2.c[i];
            fn_add(out, dim, k2, v * mih * ScalarPoly(k.c[i]));
        }
    }
    return out;
}

inline SpinorFn apply_sigma(const SpinorFn& f, int k) {
    SpinorFn out;
    out.dim = f.dim;
    ScalarPoly i = ScalarPoly::i();
    switch (k) {
        case 0:
            out.comp = f.comp;
            break;
        case 1:  // [[0,1],[1,0]]
            out.comp = {f.comp[1], f.comp[0]};
            break;
        case 2:  // [[0,-i],[i,0]]
            for (const auto& [key, v] : f.comp[1]) fn_add(out.comp[0], f.dim, key, -i * v);
            for (const auto& [key, v] : f.comp[0]) fn_add(out.comp[1], f.dim, key, i * v);
            break;
        default:  // [[1,0],[0,-1]]
            out.comp[0] = f.comp[0];
            for (const auto& [key, v] : f.comp[1]) fn_add(out.comp[1], f.dim, key, -v);
    }
    return out;
}

inline SpinorFn apply_element(const Element& e, const SpinorFn& f) {
    SpinorFn acc;
    acc.dim = f.dim;
    for (const auto& [m, coeff] : e.terms()) {
        SpinorFn cur = apply_sigma(f, m.s);
        // factors act right to left: sigma, then the p block, then x^a, then r^s
        for (int i = 2; i >= 0; --i)
            for (int rep = 0; rep < m.p[i]; ++rep)
                for (auto& part : cur.comp) part = apply_p(f.dim, part, i);
        for (int i = 0; i < 3; ++i)
            for (int rep = 0; rep < m.x[i]; ++rep)
                for (auto& part : cur.comp) part = apply_x(f.dim, part, i);
        for (auto& part : cur.comp) part = apply_r_pow(f.dim, part, m.rp);
        for (int side = 0; side < 2; ++side)
            for (const auto& [key, v] : cur.comp[side]) fn_add(acc.comp[side], f.dim, key, v * coeff);
    }
    return acc;
}

}  // namespace socoulomb::oracle
