#include "socoulomb/closure.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace socoulomb {

namespace {

using Snapshot = std::map<Mono, GRational>;

Snapshot eval_element(const Element& e, const std::array<Rational, kNumSyms>& v) {
    Snapshot out;
    for (const auto& [mono, c] : e.terms()) {
        GRational g = c.eval(v);
        if (!g.is_zero()) out.emplace(mono, g);
    }
    return out;
}

// Solve A c = rhs over Q(i) by Gaussian elimination.  Free unknowns are set to
// zero and inconsistent rows are ignored; the caller certifies symbolically.
std::vector<GRational> solve_sample(const Snapshot& target_snap,
                                    const std::vector<Snapshot>& basis_snaps) {
    std::vector<Mono> rows;
    {
        std::map<Mono, int> seen;
        auto note = [&](const Snapshot& s) {
            for (const auto& [mono, g] : s) seen.emplace(mono, 0);
        };
        note(target_snap);
        for (const auto& s : basis_snaps) note(s);
        for (const auto& [mono, unused] : seen) rows.push_back(mono);
    }
    const std::size_t nr = rows.size(), nc = basis_snaps.size();
    std::vector<std::vector<GRational>> a(nr, std::vector<GRational>(nc + 1));
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t k = 0; k < nc; ++k) {
            auto it = basis_snaps[k].find(rows[i]);
            if (it != basis_snaps[k].end()) a[i][k] = it->second;
        }
        auto it = target_snap.find(rows[i]);
        if (it != target_snap.end()) a[i][nc] = it->second;
    }
    std::vector<std::size_t> pivot_row(nc, nr);  // nr = no pivot for this column
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t sel = nr;
        for (std::size_t i = row; i < nr; ++i) {
            if (!a[i][col].is_zero()) {
                sel = i;
                break;
            }
        }
        if (sel == nr) continue;
        std::swap(a[row], a[sel]);
        GRational inv = GRational(Rational(1)) / a[row][col];
        for (std::size_t j = col; j <= nc; ++j) a[row][j] = a[row][j] * inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            GRational f = a[i][col];
            for (std::size_t j = col; j <= nc; ++j) a[i][j] = a[i][j] - f * a[row][j];
        }
        pivot_row[col] = row++;
    }
    std::vector<GRational> c(nc);
    for (std::size_t col = 0; col < nc; ++col) {
        if (pivot_row[col] < nr) c[col] = a[pivot_row[col]][nc];
    }
    return c;
}

// Newton interpolation along one symbol axis; values become polynomials in it.
std::vector<ScalarPoly> interp_axis(Sym s, const std::vector<Rational>& nodes,
                                    const std::vector<std::vector<ScalarPoly>>& slices) {
    const std::size_t n = nodes.size();
    if (slices.size() != n) throw std::logic_error("closure: slice/node mismatch");
    const std::size_t width = slices[0].size();
    std::vector<ScalarPoly> out(width);
    for (std::size_t w = 0; w < width; ++w) {
        std::vector<ScalarPoly> dd(n);
        for (std::size_t j = 0; j < n; ++j) dd[j] = slices[j][w];
        for (std::size_t lvl = 1; lvl < n; ++lvl) {
            for (std::size_t j = n - 1; j >= lvl; --j) {
                dd[j] = (dd[j] - dd[j - 1]) / GRational(nodes[j] - nodes[j - lvl]);
            }
        }
        ScalarPoly poly = dd[n - 1];
        for (std::size_t j = n - 1; j-- > 0;) {
            poly = poly * (ScalarPoly::sym(s) - ScalarPoly(GRational(nodes[j]))) + dd[j];
        }
        out[w] = poly;
    }
    return out;
}

}  // namespace

ClosureFit solve_closure(const Element& target, const std::vector<Element>& basis) {
    for (const auto& b : basis) {
        if (b.dim() != target.dim())
            throw std::invalid_argument("solve_closure: basis dimension mismatch");
    }
    ClosureFit fit;
    fit.leftover = target;
    if (basis.empty()) {
        fit.ok = target.is_zero();
        return fit;
    }
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::array<std::vector<Rational>, kNumSyms> nodes;
        for (int s = 0; s < kNumSyms; ++s) {
            int d = target.degree(static_cast<Sym>(s)) + 2 * attempt;
            for (int j = 0; j <= d; ++j) {
                nodes[s].push_back(attempt == 0 ? Rational(j + 1)
                                                : Rational(BigInt(2 * j + 1), BigInt(2)));
            }
        }
        // tensor grid of samples, innermost axis last
        std::array<std::size_t, kNumSyms> extent;
        std::size_t total = 1;
        for (int s = 0; s < kNumSyms; ++s) {
            extent[s] = nodes[s].size();
            total *= extent[s];
        }
        std::vector<std::vector<ScalarPoly>> samples(total);
        for (std::size_t flat = 0; flat < total; ++flat) {
            std::array<Rational, kNumSyms> v;
            std::size_t rest = flat;
            for (int s = kNumSyms - 1; s >= 0; --s) {
                v[s] = nodes[s][rest % extent[s]];
                rest /= extent[s];
            }
            std::vector<Snapshot> basis_snaps;
            basis_snaps.reserve(basis.size());
            for (const auto& b : basis) basis_snaps.push_back(eval_element(b, v));
            std::vector<GRational> c = solve_sample(eval_element(target, v), basis_snaps);
            samples[flat].reserve(c.size());
            for (const auto& g : c) samples[flat].emplace_back(g);
        }
        // fold one axis at a time, starting from the innermost
        for (int s = kNumSyms - 1; s >= 0; --s) {
            const std::size_t span = extent[s];
            std::vector<std::vector<ScalarPoly>> folded(samples.size() / span);
            for (std::size_t g = 0; g < folded.size(); ++g) {
                std::vector<std::vector<ScalarPoly>> slices(span);
                for (std::size_t j = 0; j < span; ++j) slices[j] = samples[g * span + j];
                folded[g] = interp_axis(static_cast<Sym>(s), nodes[s], slices);
            }
            samples = std::move(folded);
        }
        fit.coeffs = samples[0];
        Element residual = target;
        for (std::size_t k = 0; k < basis.size(); ++k) residual -= fit.coeffs[k] * basis[k];
        fit.leftover = residual;
        if (residual.is_zero()) {
            fit.ok = true;
            return fit;
        }
    }
    fit.ok = false;
    return fit;
}

}  // namespace socoulomb
