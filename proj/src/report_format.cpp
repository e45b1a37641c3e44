#include "endsym/report_format.hpp"

#include <algorithm>
#include <sstream>

namespace endsym {

namespace {

using nlohmann::json;

json pattern_json(const std::vector<PatternEntry>& pattern) {
    json out = json::array();
    for (const auto& e : pattern) out.push_back(e ? integer_json(*e) : json("p"));
    return out;
}

json coarse_json(const CoarseType& t) { return {{"c", integer_json(t.c)}, {"core", pattern_json(t.core)}}; }

json pair_json(const std::pair<Integer, Integer>& p) {
    return {{"alpha", integer_json(p.first)}, {"beta", integer_json(p.second)}};
}

std::string exceptions_cell(const std::vector<std::pair<Integer, Integer>>& pairs, const char* separator) {
    std::string out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i) out += separator;
        out += pairs[i].first.str() + "/" + pairs[i].second.str();
    }
    return out;
}

}  // namespace

json integer_json(const Integer& v) {
    std::int64_t small = 0;
    if (fits_int64(v, small)) return small;
    return v.str();
}

json sequence_json(const QuotientSequence& q) {
    json out = json::array();
    for (const auto& e : q) out.push_back(integer_json(e));
    return out;
}

json to_json(const VerificationReport& report) {
    json out;
    out["kind"] = report.kind;
    if (report.spec) out["spec"] = {{"n", integer_json(report.spec->n)}, {"s", report.spec->s_value()}};
    if (report.mode) out["mode"] = std::string(to_string(*report.mode));
    out["alpha_range"] = {integer_json(report.alpha_min), integer_json(report.alpha_max)};

    json excluded = json::array();
    for (const auto& e : report.excluded) {
        json certs = json::array();
        for (const auto& c : e.certificates) {
            json cert = {{"condition", std::string(to_string(c.condition))}};
            cert["witness"] = c.witness ? integer_json(*c.witness) : json(nullptr);
            certs.push_back(std::move(cert));
        }
        excluded.push_back({{"modulus", integer_json(e.modulus)}, {"necessary", e.necessary}, {"certificates", certs}});
    }
    out["excluded"] = std::move(excluded);
    out["checked"] = report.checked;
    out["matches"] = report.matches;

    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"check", v.check},
                              {"alpha", integer_json(v.alpha)},
                              {"beta", integer_json(v.beta)},
                              {"expansion", sequence_json(v.expansion)},
                              {"detail", v.detail}});
    out["violations"] = std::move(violations);

    json coarse = json::array();
    for (const auto& c : report.coarse_counterexamples)
        coarse.push_back({{"alpha", integer_json(c.alpha)},
                          {"beta", integer_json(c.beta)},
                          {"expansion", sequence_json(c.expansion)},
                          {"type", coarse_json(c.type)},
                          {"is_root", c.is_root}});
    out["coarse_counterexamples"] = std::move(coarse);
    return out;
}

json to_json(const TypeCatalog& catalog) {
    json types = json::array();
    for (const auto& t : catalog.finite_types)
        types.push_back({{"c", integer_json(t.c)},
                         {"core", sequence_json(t.core)},
                         {"sigma", std::string(to_string(t.sigma))}});
    json families = json::array();
    for (const auto& f : catalog.parametric_families)
        families.push_back(
            {{"c", integer_json(f.c)}, {"core", pattern_json(f.pattern)}, {"sigma", std::string(to_string(f.sigma))}});
    return {{"target", integer_json(catalog.target)}, {"finite_types", types}, {"parametric_families", families}};
}

json to_json(const TableDocument& table) {
    json rows = json::array();
    for (const auto& row : table.rows) {
        json types = json::array();
        for (const auto& t : row.types) types.push_back(coarse_json(t));
        json exceptions = json::array();
        for (const auto& p : row.exceptions) exceptions.push_back(pair_json(p));
        rows.push_back({{"value", integer_json(row.value)},
                        {"parity", std::string(to_string(row.parity))},
                        {"types", types},
                        {"exceptions", exceptions}});
    }
    return {{"rows", rows}};
}

std::string table_csv(const TableDocument& table) {
    std::ostringstream out;
    out << "value,parity,marginal,core,exceptions\n";
    for (const auto& row : table.rows) {
        const std::string exceptions = exceptions_cell(row.exceptions, ";");
        if (row.types.empty()) {
            out << row.value << ',' << to_string(row.parity) << ",,," << exceptions << '\n';
            continue;
        }
        for (std::size_t i = 0; i < row.types.size(); ++i) {
            out << row.value << ',' << to_string(row.parity) << ',' << row.types[i].c << ','
                << pattern_to_string(row.types[i].core, '.') << ',' << (i == 0 ? exceptions : "") << '\n';
        }
    }
    return out.str();
}

std::string table_text(const TableDocument& table) {
    std::ostringstream out;
    constexpr int w1 = 12, w2 = 10, w3 = 12;
    auto pad = [](std::string s, int w) {
        if (static_cast<int>(s.size()) < w) s.append(static_cast<std::size_t>(w) - s.size(), ' ');
        return s;
    };
    out << pad("(value,len)", w1) << pad("marginal", w2) << pad("core", w3) << "exceptional (alpha,beta)\n";
    for (const auto& row : table.rows) {
        std::string exceptions;
        for (std::size_t i = 0; i < row.exceptions.size(); ++i) {
            if (i) exceptions += ' ';
            exceptions += "(" + row.exceptions[i].first.str() + "," + row.exceptions[i].second.str() + ")";
        }
        if (exceptions.empty()) exceptions = "None";
        const std::string label = "(" + row.value.str() + ", " + std::string(to_string(row.parity)) + ")";
        const std::size_t lines = std::max<std::size_t>(row.types.size(), 1);
        for (std::size_t i = 0; i < lines; ++i) {
            std::string c = i < row.types.size() ? row.types[i].c.str() : "";
            std::string core = i < row.types.size() ? pattern_to_string(row.types[i].core) : "";
            out << pad(i == 0 ? label : "", w1) << pad(c, w2) << pad(core, w3) << (i == 0 ? exceptions : "") << '\n';
        }
    }
    // Continuation lines end in padding.
    std::string text = out.str();
    std::string trimmed;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
        line.erase(line.find_last_not_of(' ') + 1);
        trimmed += line + '\n';
    }
    return trimmed;
}

std::string report_text(const VerificationReport& report) {
    std::ostringstream out;
    out << report.kind;
    if (report.spec) out << " n=" << report.spec->n << " s=" << report.spec->s_value();
    if (report.mode) out << " mode=" << to_string(*report.mode);
    out << " alpha=" << report.alpha_min << ".." << report.alpha_max << '\n';
    if (!report.excluded.empty()) {
        out << "excluded:";
        for (const auto& e : report.excluded) out << ' ' << e.modulus << (e.necessary ? "*" : "");
        out << "  (* = needed)\n";
    }
    out << "checked: " << report.checked << "\nmatches: " << report.matches << "\nviolations: "
        << report.violations.size() << '\n';
    for (const auto& v : report.violations)
        out << "  " << v.check << " (" << v.alpha << ", " << v.beta << ") [" << to_string(v.expansion) << "] "
            << v.detail << '\n';
    if (report.mode == Mode::coarse) {
        out << "coarse counterexamples: " << report.coarse_counterexamples.size() << '\n';
        for (const auto& c : report.coarse_counterexamples)
            out << "  (" << c.alpha << ", " << c.beta << ") [" << to_string(c.expansion) << "] " << to_string(c.type)
                << (c.is_root ? " root, type not listed" : " listed type, not a root") << '\n';
    }
    return out.str();
}

}  // namespace endsym
