#include <CLI11.hpp>
#include <json.hpp>

#include "socoulomb/catalog.hpp"
#include "socoulomb/report.hpp"
#include "socoulomb/spectral.hpp"
#include "socoulomb/verifier.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace socoulomb;
namespace cat = socoulomb::catalog;
using ordered_json = nlohmann::ordered_json;

namespace {

// numeric parameters accept a decimal literal or an exact "p/q" rational
double parse_num(const std::string& opt, const std::string& s) {
    try {
        size_t used = 0;
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            double v = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        }
        long long p = std::stoll(s.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument(s);
        std::string den = s.substr(slash + 1);
        long long q = std::stoll(den, &used);
        if (used != den.size() || q <= 0) throw std::invalid_argument(s);
        return static_cast<double>(p) / static_cast<double>(q);
    } catch (const std::exception&) {
        throw CLI::ValidationError(opt, "expected a number or p/q rational, got '" + s + "'");
    }
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12e", v);
    return buf;
}

std::string num_short(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// --out paths resolve against SOCOULOMB_OUT_DIR unless absolute
std::string resolve_out(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    const char* dir = std::getenv("SOCOULOMB_OUT_DIR");
    if (dir == nullptr || *dir == '\0') return path;
    std::string d = dir;
    if (d.back() != '/') d += '/';
    return d + path;
}

int emit(const std::string& text, const std::string& out) {
    std::string path = resolve_out(out);
    if (path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open output file: " << path << "\n";
        return 2;
    }
    f << text;
    return f.good() ? 0 : 2;
}

struct Params {
    std::string hbar = "1";
    std::string alpha = "1";
    std::string gamma = "0";

    SpectralParams resolve() const {
        SpectralParams sp;
        sp.hbar = parse_num("--hbar", hbar);
        sp.alpha = parse_num("--alpha", alpha);
        sp.gamma = parse_num("--gamma", gamma);
        if (sp.hbar <= 0) throw CLI::ValidationError("--hbar", "must be positive");
        if (sp.alpha <= 0) throw CLI::ValidationError("--alpha", "must be positive");
        return sp;
    }
};

void add_params(CLI::App* sub, Params& p) {
    sub->add_option("--hbar", p.hbar, "Planck constant (number or p/q)")->capture_default_str();
    sub->add_option("--alpha", p.alpha, "Coulomb strength (number or p/q)")
        ->capture_default_str();
    sub->add_option("--gamma", p.gamma, "spin-orbit coupling (number or p/q)")
        ->capture_default_str();
}

const char* branch_name(Branch b) { return b == Branch::plus ? "plus" : "minus"; }

// ---------------------------------------------------------------- verify

int cmd_verify(const std::vector<std::string>& suites, bool all, const std::string& format,
               const std::string& out, bool timing) {
    std::vector<std::string> names = suite_names();
    std::vector<std::string> selected = (all || suites.empty()) ? names : suites;
    for (const std::string& s : selected) {
        if (std::find(names.begin(), names.end(), s) == names.end()) {
            std::cerr << "unknown suite: " << s << "\nknown suites:";
            for (const std::string& n : names) std::cerr << " " << n;
            std::cerr << "\n";
            return 2;
        }
    }
    std::vector<SuiteReport> reports;
    reports.reserve(selected.size());
    bool ok = true;
    for (const std::string& s : selected) {
        reports.push_back(run_suite(s));
        ok = ok && reports.back().pass;
    }
    std::string text = format == "json"  ? report_json(reports, timing)
                       : format == "csv" ? report_csv(reports, timing)
                                         : report_text(reports, timing);
    int rc = emit(text, out);
    return rc != 0 ? rc : (ok ? 0 : 1);
}

// ---------------------------------------------------------------- spectrum

struct StateRow {
    Branch b;
    int l;
    int two_j;
    int n;
    bool allowed;
    bool have_fd;
    double e_closed = 0, e_fd = 0, rel = 0;
};

int cmd_spectrum(const Params& pars, int lmax, int nmax, double rmax_override, int points,
                 double threshold, const std::string& format, const std::string& out) {
    SpectralParams sp = pars.resolve();
    std::vector<StateRow> rows;
    for (Branch b : {Branch::plus, Branch::minus}) {
        for (int l = (b == Branch::plus ? 0 : 1); l <= lmax; ++l) {
            double j = b == Branch::plus ? l + 0.5 : l - 0.5;
            for (int n = 0; n <= nmax; ++n) {
                StateRow row;
                row.b = b;
                row.l = l;
                row.two_j = 2 * l + (b == Branch::plus ? 1 : -1);
                row.n = n;
                row.allowed = branch_allowed(b, j, sp.gamma);
                row.have_fd = false;
                if (row.allowed) {
                    row.e_closed = closed_form_energy(b, n, j, sp);
                    double lam = lambda_param(b, j, sp.gamma);
                    if (lam > -1.0) {
                        double span = n + j + std::abs(sp.gamma) + 0.5;
                        double rmax = rmax_override > 0
                                          ? rmax_override
                                          : 60.0 * sp.hbar * sp.hbar * span * span / sp.alpha;
                        row.e_fd = fd_eigenvalue_rich(lam, n, sp, rmax, points);
                        row.rel = std::abs(row.e_fd - row.e_closed) / std::abs(row.e_closed);
                        row.have_fd = true;
                    }
                }
                rows.push_back(row);
            }
        }
    }
    bool domain_violation = false, over_threshold = false;
    for (const StateRow& r : rows) {
        if (!r.allowed) domain_violation = true;
        if (r.have_fd && r.rel > threshold) over_threshold = true;
    }

    std::string text;
    if (format == "csv") {
        text = "branch,l,2j,n,E_closed,E_fd,rel_error\n";
        for (const StateRow& r : rows) {
            text += std::string(branch_name(r.b)) + "," + std::to_string(r.l) + "," +
                    std::to_string(r.two_j) + "," + std::to_string(r.n) + ",";
            if (r.allowed) text += num(r.e_closed);
            text += ",";
            if (r.have_fd) text += num(r.e_fd);
            text += ",";
            if (r.have_fd) text += num_short(r.rel);
            text += "\n";
        }
    } else if (format == "json") {
        ordered_json doc;
        doc["params"] = {{"hbar", sp.hbar}, {"alpha", sp.alpha}, {"gamma", sp.gamma}};
        doc["grid"] = {{"points", points},
                       {"rmax", rmax_override > 0 ? ordered_json(rmax_override) : ordered_json("auto")},
                       {"extrapolated", true}};
        doc["states"] = ordered_json::array();
        for (const StateRow& r : rows) {
            ordered_json s;
            s["branch"] = branch_name(r.b);
            s["l"] = r.l;
            s["two_j"] = r.two_j;
            s["n"] = r.n;
            if (!r.allowed) {
                s["status"] = "domain-violation";
            } else {
                s["energy_closed"] = r.e_closed;
                if (r.have_fd) {
                    s["energy_fd"] = r.e_fd;
                    s["rel_error"] = r.rel;
                    s["ok"] = r.rel <= threshold;
                } else {
                    s["status"] = "fd-unsupported";
                }
            }
            doc["states"].push_back(s);
        }
        doc["pass"] = !domain_violation && !over_threshold;
        text = doc.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "bound spectrum  hbar=" << sp.hbar << " alpha=" << sp.alpha
           << " gamma=" << sp.gamma << "\n";
        os << "branch   l  2j   n        E_closed              E_fd         rel_error\n";
        for (const StateRow& r : rows) {
            char line[160];
            if (!r.allowed) {
                std::snprintf(line, sizeof(line), "%-6s %3d %3d %3d   %s\n", branch_name(r.b),
                              r.l, r.two_j, r.n, "outside normalization domain");
            } else if (!r.have_fd) {
                std::snprintf(line, sizeof(line), "%-6s %3d %3d %3d  %s   %s\n",
                              branch_name(r.b), r.l, r.two_j, r.n, num(r.e_closed).c_str(),
                              "no finite-difference scheme (lambda <= -1)");
            } else {
                std::snprintf(line, sizeof(line), "%-6s %3d %3d %3d  %s  %s  %s%s\n",
                              branch_name(r.b), r.l, r.two_j, r.n, num(r.e_closed).c_str(),
                              num(r.e_fd).c_str(), num_short(r.rel).c_str(),
                              r.rel <= threshold ? "" : "  OVER");
            }
            os << line;
        }
        if (domain_violation) os << "domain violations present\n";
        text = os.str();
    }
    int rc = emit(text, out);
    if (rc != 0) return rc;
    if (domain_violation) {
        for (const StateRow& r : rows) {
            if (!r.allowed) {
                std::cerr << "domain violation: branch " << branch_name(r.b) << " l=" << r.l
                          << " 2j=" << r.two_j << " n=" << r.n
                          << " fails the bound-state normalization condition\n";
            }
        }
        return 1;
    }
    return over_threshold ? 1 : 0;
}

// ---------------------------------------------------------------- wavefunction

int cmd_wavefunction(const Params& pars, const std::string& branch_str, const std::string& j_str,
                     int n, double rmin, double rmax_override, int samples,
                     const std::string& format, const std::string& out) {
    SpectralParams sp = pars.resolve();
    Branch b = branch_str == "minus" ? Branch::minus : Branch::plus;
    double j = parse_num("--j", j_str);
    double two_j = 2.0 * j;
    long long tj = std::llround(two_j);
    if (std::abs(two_j - tj) > 1e-9 || tj <= 0 || tj % 2 == 0)
        throw CLI::ValidationError("--j", "j must be a positive half-odd-integer like 1/2, 3/2");
    if (!branch_allowed(b, j, sp.gamma)) {
        std::cerr << "state (" << branch_name(b) << ", j=" << j_str << ", n=" << n
                  << ") fails the bound-state normalization condition\n";
        return 1;
    }
    double span = n + j + std::abs(sp.gamma) + 0.5;
    double rmax =
        rmax_override > 0 ? rmax_override : 60.0 * sp.hbar * sp.hbar * span * span / sp.alpha;
    std::vector<std::pair<double, double>> table;
    table.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        double r = rmin + (rmax - rmin) * i / (samples - 1);
        table.emplace_back(r, radial_eigenfunction(b, n, j, sp, r));
    }

    std::string text;
    if (format == "csv") {
        text = "r,rho\n";
        for (const auto& [r, v] : table) text += num(r) + "," + num(v) + "\n";
    } else if (format == "json") {
        ordered_json doc;
        doc["params"] = {{"hbar", sp.hbar}, {"alpha", sp.alpha}, {"gamma", sp.gamma}};
        doc["state"] = {{"branch", branch_name(b)},
                        {"two_j", tj},
                        {"n", n},
                        {"l", l_of(b, j)},
                        {"lambda", lambda_param(b, j, sp.gamma)},
                        {"energy", closed_form_energy(b, n, j, sp)}};
        doc["samples"] = ordered_json::array();
        for (const auto& [r, v] : table) doc["samples"].push_back({{"r", r}, {"rho", v}});
        text = doc.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "radial eigenfunction  branch=" << branch_name(b) << " 2j=" << tj << " n=" << n
           << " lambda=" << lambda_param(b, j, sp.gamma) << "\n";
        for (const auto& [r, v] : table) os << num(r) << "  " << num(v) << "\n";
        text = os.str();
    }
    return emit(text, out);
}

// ---------------------------------------------------------------- degeneracy

int cmd_degeneracy(const Params& pars, int max_level, const std::string& format,
                   const std::string& out) {
    SpectralParams sp = pars.resolve();
    std::string text;
    if (format == "csv") {
        text = "level,branch,l,2j,n,energy,weight\n";
        for (int level = 1; level <= max_level; ++level) {
            for (const DegeneracyRow& r : degeneracy_table(level, sp)) {
                text += std::to_string(level) + "," + branch_name(r.branch) + "," +
                        std::to_string(r.l) + "," + std::to_string(2 * r.l +
                        (r.branch == Branch::plus ? 1 : -1)) + "," + std::to_string(r.n) + "," +
                        num(r.energy) + "," + std::to_string(r.weight) + "\n";
            }
        }
    } else if (format == "json") {
        ordered_json doc;
        doc["params"] = {{"hbar", sp.hbar}, {"alpha", sp.alpha}, {"gamma", sp.gamma}};
        doc["levels"] = ordered_json::array();
        for (int level = 1; level <= max_level; ++level) {
            ordered_json lv;
            lv["level"] = level;
            lv["states"] = ordered_json::array();
            int total = 0;
            for (const DegeneracyRow& r : degeneracy_table(level, sp)) {
                total += r.weight;
                lv["states"].push_back({{"branch", branch_name(r.branch)},
                                        {"l", r.l},
                                        {"two_j", 2 * r.l + (r.branch == Branch::plus ? 1 : -1)},
                                        {"n", r.n},
                                        {"energy", r.energy},
                                        {"weight", r.weight}});
            }
            lv["total"] = total;
            doc["levels"].push_back(lv);
        }
        text = doc.dump(2) + "\n";
    } else {
        std::ostringstream os;
        for (int level = 1; level <= max_level; ++level) {
            auto rows = degeneracy_table(level, sp);
            int total = 0;
            for (const DegeneracyRow& r : rows) total += r.weight;
            os << "level " << level << "  states " << rows.size() << "  multiplicity " << total
               << "\n";
            for (const DegeneracyRow& r : rows) {
                char line[128];
                std::snprintf(line, sizeof(line), "  %-6s l=%d 2j=%d n=%d  E=%s  weight %d\n",
                              branch_name(r.branch), r.l,
                              2 * r.l + (r.branch == Branch::plus ? 1 : -1), r.n,
                              num(r.energy).c_str(), r.weight);
                os << line;
            }
        }
        text = os.str();
    }
    return emit(text, out);
}

// ---------------------------------------------------------------- catalog-dump

int cmd_catalog_dump(const std::string& format, const std::string& out) {
    std::string text;
    if (format == "json") {
        ordered_json doc;
        doc["catalog"] = ordered_json::array();
        std::istringstream in(cat::dump());
        std::string line;
        while (std::getline(in, line)) {
            auto tab = line.find('\t');
            doc["catalog"].push_back(
                {{"key", line.substr(0, tab)}, {"element", line.substr(tab + 1)}});
        }
        text = doc.dump(2) + "\n";
    } else if (format == "csv") {
        text = "key,element\n";
        std::istringstream in(cat::dump());
        std::string line;
        while (std::getline(in, line)) {
            auto tab = line.find('\t');
            text += line.substr(0, tab) + "," + csv_field(line.substr(tab + 1)) + "\n";
        }
    } else {
        text = cat::dump();
    }
    return emit(text, out);
}

// ---------------------------------------------------------------- compare

int cmd_compare(const Params& pars, bool grid_study, const std::string& format,
                const std::string& out) {
    SpectralParams sp = pars.resolve();
    std::ostringstream os;
    ordered_json doc;

    if (grid_study) {
        // plain second-order scheme: error should fall ~4x per halving
        const double j = 0.5;
        double lam = lambda_param(Branch::plus, j, sp.gamma);
        double exact = closed_form_energy(Branch::plus, 0, j, sp);
        double nu = branch_nu(Branch::plus, 0, j, sp.gamma);
        double rmax = 36.0 * sp.hbar * sp.hbar * nu / sp.alpha;
        os << "grid study  plus l=0 n=0  gamma=" << sp.gamma << "\n";
        os << "points      error          ratio\n";
        doc["grid_study"] = ordered_json::array();
        double prev = 0;
        for (int points : {2500, 5000, 10000}) {
            double e = fd_eigenvalue(lam, 0, sp, rmax, points);
            double err = std::abs(e - exact);
            char line[96];
            if (prev > 0)
                std::snprintf(line, sizeof(line), "%6d  %s  %5.2f\n", points,
                              num_short(err).c_str(), prev / err);
            else
                std::snprintf(line, sizeof(line), "%6d  %s      -\n", points,
                              num_short(err).c_str());
            os << line;
            doc["grid_study"].push_back({{"points", points},
                                         {"error", err},
                                         {"ratio", prev > 0 ? prev / err : 0.0}});
            prev = err;
        }
    } else {
        os << "integral-of-motion constructions\n";
        doc["constructions"] = ordered_json::array();
        Element h = cat::h3();
        Element sl = cat::sigma_dot_l();
        ScalarPoly hb = ScalarPoly::sym(Sym::hbar);
        ScalarPoly half(Rational(BigInt(1), BigInt(2)));
        for (int j = 1; j <= 3; ++j) {
            Element x = cat::x_op(j);
            Element a = cat::runge(j);
            Element ladder_vs_closed = half * (sl * a + a * sl) + hb * a - x;
            int d_runge = (cat::x_runge(j) - x).term_count();
            int d_expl = (cat::x_explicit(j) - x).term_count();
            int c_x = commutator(x, h).term_count();
            int c_runge = commutator(cat::x_runge(j), h).term_count();
            int c_expl = commutator(cat::x_explicit(j), h).term_count();
            os << "X_" << j << ": ladder vs {sigma.L,A}/2 + hbar A: "
               << (ladder_vs_closed.is_zero() ? "identical" : "DIFFER") << "; [X,H] residual "
               << c_x << " terms\n";
            os << "     printed 3 hbar/2 variant differs by " << d_runge
               << " terms, [.,H] residual " << c_runge << " terms\n";
            os << "     printed explicit form differs by " << d_expl << " terms, [.,H] residual "
               << c_expl << " terms\n";
            doc["constructions"].push_back({{"j", j},
                                            {"ladder_vs_closed_exact", ladder_vs_closed.is_zero()},
                                            {"commutator_terms", c_x},
                                            {"runge_variant_diff_terms", d_runge},
                                            {"runge_variant_commutator_terms", c_runge},
                                            {"explicit_diff_terms", d_expl},
                                            {"explicit_commutator_terms", c_expl}});
        }
        os << "finite-difference vs closed form\n";
        doc["spectrum"] = ordered_json::array();
        struct Probe {
            Branch b;
            int l, n;
        };
        for (const Probe& p : {Probe{Branch::plus, 0, 0}, Probe{Branch::minus, 1, 0}}) {
            double j = p.b == Branch::plus ? p.l + 0.5 : p.l - 0.5;
            if (!branch_allowed(p.b, j, sp.gamma)) continue;
            double lam = lambda_param(p.b, j, sp.gamma);
            if (lam <= -1.0) continue;
            double exact = closed_form_energy(p.b, p.n, j, sp);
            double span = p.n + j + std::abs(sp.gamma) + 0.5;
            double rmax = 60.0 * sp.hbar * sp.hbar * span * span / sp.alpha;
            double fd = fd_eigenvalue_rich(lam, p.n, sp, rmax, 20000);
            double rel = std::abs(fd - exact) / std::abs(exact);
            os << "  " << branch_name(p.b) << " l=" << p.l << " n=" << p.n << "  rel_error "
               << num_short(rel) << "\n";
            doc["spectrum"].push_back({{"branch", branch_name(p.b)},
                                       {"l", p.l},
                                       {"n", p.n},
                                       {"rel_error", rel}});
        }
    }
    std::string text = format == "json" ? doc.dump(2) + "\n" : os.str();
    return emit(text, out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier and spectral lab for a superintegrable spin-orbit Coulomb model"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "flat key=value config file (subcommand options as e.g. spectrum.lmax); "
                   "command-line flags win");
    app.allow_config_extras(CLI::config_extras_mode::error);

    std::string format = "text", out;
    bool no_timing = false;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", out,
                   "output file (relative paths resolve against SOCOULOMB_OUT_DIR)");
    app.add_flag("--no-timing", no_timing, "zero all timing fields for reproducible reports");

    int rc = 0;

    auto* verify = app.add_subcommand("verify", "run symbolic verification suites");
    verify->fallthrough();
    std::vector<std::string> suites;
    bool all = false;
    verify->add_option("--suite", suites, "suite name (repeatable)");
    verify->add_flag("--all", all, "run every registered suite");
    verify->callback([&] { rc = cmd_verify(suites, all, format, out, !no_timing); });

    auto* spectrum = app.add_subcommand("spectrum", "finite-difference vs closed-form spectrum");
    spectrum->fallthrough();
    Params sp_pars;
    add_params(spectrum, sp_pars);
    int lmax = 1, nmax = 2, sp_points = 20000;
    double sp_rmax = 0, threshold = 5e-6;
    spectrum->add_option("--lmax", lmax, "largest orbital quantum number")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    spectrum->add_option("--nmax", nmax, "largest radial quantum number")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    spectrum->add_option("--rmax", sp_rmax, "override the automatic box radius");
    spectrum->add_option("--points", sp_points, "grid points (doubled for extrapolation)")
        ->capture_default_str();
    spectrum->add_option("--threshold", threshold, "relative-error tolerance")
        ->capture_default_str();
    spectrum->callback([&] {
        rc = cmd_spectrum(sp_pars, lmax, nmax, sp_rmax, sp_points, threshold, format, out);
    });

    auto* wave = app.add_subcommand("wavefunction", "tabulate a radial eigenfunction");
    wave->fallthrough();
    Params wf_pars;
    add_params(wave, wf_pars);
    std::string wf_branch = "plus", wf_j = "1/2";
    int wf_n = 0, wf_samples = 200;
    double wf_rmin = 0, wf_rmax = 0;
    wave->add_option("--branch", wf_branch, "spinor branch")
        ->check(CLI::IsMember({"plus", "minus"}))
        ->capture_default_str();
    wave->add_option("--j", wf_j, "total angular momentum (half-odd, e.g. 3/2)")
        ->capture_default_str();
    wave->add_option("--n", wf_n, "radial quantum number")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    wave->add_option("--rmin", wf_rmin, "first sample radius")->capture_default_str();
    wave->add_option("--rmax", wf_rmax, "last sample radius (default: automatic box)");
    wave->add_option("--samples", wf_samples, "number of radial samples")
        ->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    wave->callback([&] {
        rc = cmd_wavefunction(wf_pars, wf_branch, wf_j, wf_n, wf_rmin, wf_rmax, wf_samples,
                              format, out);
    });

    auto* degen = app.add_subcommand("degeneracy", "shell multiplicities of the bound spectrum");
    degen->fallthrough();
    Params dg_pars;
    add_params(degen, dg_pars);
    int max_level = 3;
    degen->add_option("--max-level", max_level, "largest shell to enumerate")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    degen->callback([&] { rc = cmd_degeneracy(dg_pars, max_level, format, out); });

    auto* dump = app.add_subcommand("catalog-dump", "print every catalog operator");
    dump->fallthrough();
    dump->callback([&] { rc = cmd_catalog_dump(format, out); });

    auto* compare = app.add_subcommand("compare", "diagnostic construction and grid comparisons");
    compare->fallthrough();
    Params cmp_pars;
    add_params(compare, cmp_pars);
    bool grid_study = false;
    compare->add_flag("--grid-study", grid_study, "convergence table at three resolutions");
    compare->callback([&] { rc = cmd_compare(cmp_pars, grid_study, format, out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
