#include "socoulomb/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace socoulomb {

namespace {

std::string fmt_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", ms);
    return buf;
}

// CSV field quoting for ids and notes that might carry commas
std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string report_text(const std::vector<SuiteReport>& reports, bool timing) {
    std::ostringstream out;
    bool all = true;
    for (const auto& rep : reports) {
        out << "suite " << rep.suite << "\n";
        for (const auto& rel : rep.relations) {
            const char* tag = rel.info ? "info" : (rel.pass ? "pass" : "FAIL");
            out << "  " << tag << "  " << rel.id;
            if (!rel.pass) out << "  [residual " << rel.residual_terms << " terms]";
            if (!rel.note.empty()) out << "  -- " << rel.note;
            if (timing) out << "  (" << fmt_ms(rel.millis) << " ms)";
            out << "\n";
        }
        out << "  " << (rep.pass ? "PASS" : "FAIL") << "  " << rep.relations.size()
            << " relations";
        if (timing) out << " in " << fmt_ms(rep.millis) << " ms";
        out << "\n";
        all = all && rep.pass;
    }
    if (reports.size() > 1) out << (all ? "ALL SUITES PASS" : "SUITE FAILURES") << "\n";
    return out.str();
}

std::string report_json(const std::vector<SuiteReport>& reports, bool timing) {
    nlohmann::ordered_json suites = nlohmann::ordered_json::array();
    bool all = true;
    for (const auto& rep : reports) {
        nlohmann::ordered_json rels = nlohmann::ordered_json::array();
        for (const auto& rel : rep.relations) {
            nlohmann::ordered_json row = {{"id", rel.id},
                                          {"pass", rel.pass},
                                          {"residual_terms", rel.residual_terms},
                                          {"millis", timing ? rel.millis : 0.0}};
            if (rel.info) row["info"] = true;
            if (!rel.note.empty()) row["note"] = rel.note;
            rels.push_back(std::move(row));
        }
        suites.push_back({{"suite", rep.suite},
                          {"relations", std::move(rels)},
                          {"pass", rep.pass},
                          {"millis", timing ? rep.millis : 0.0}});
        all = all && rep.pass;
    }
    nlohmann::ordered_json doc =
        reports.size() == 1 ? std::move(suites[0])
                            : nlohmann::ordered_json{{"suites", std::move(suites)}, {"pass", all}};
    return doc.dump(2) + "\n";
}

std::string report_csv(const std::vector<SuiteReport>& reports, bool timing) {
    std::ostringstream out;
    out << "suite,relation,status,residual_terms,millis,note\n";
    for (const auto& rep : reports) {
        for (const auto& rel : rep.relations) {
            const char* tag = rel.info ? "info" : (rel.pass ? "pass" : "fail");
            out << rep.suite << "," << csv_quote(rel.id) << "," << tag << ","
                << rel.residual_terms << "," << fmt_ms(timing ? rel.millis : 0.0) << ","
                << csv_quote(rel.note) << "\n";
        }
    }
    return out.str();
}

}  // namespace socoulomb
