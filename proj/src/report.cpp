#include "dwork/report.hpp"

#include <algorithm>
#include <sstream>

namespace dwork {

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "md") return Format::md;
    invalid_input("format", "expected json, csv or md");
}

Json to_json(const RunConfig& c) {
    Json j;
    j["command"] = c.command;
    if (c.n) j["n"] = c.n;
    if (c.q) j["q"] = c.q;
    if (c.psi) j["psi"] = c.psi;
    if (c.command == "count") {
        j["r_min"] = c.r_min;
        j["r_max"] = c.r_max;
    }
    if (!c.orbit.empty()) j["orbit"] = c.orbit;
    if (!c.twist.empty()) j["twist"] = c.twist;
    if (!c.sigma.empty()) j["sigma"] = c.sigma;
    if (c.command == "zeta") j["mode"] = c.mode;
    if (!c.suite.empty()) j["suite"] = c.suite;
    j["format"] = c.format;
    j["jobs"] = c.jobs;
    j["cost_cap"] = c.cost_cap;
    if (!c.output.empty()) j["output"] = c.output;
    return j;
}

Json big_json(const BigInt& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

Json rational_json(const Rational& x) {
    if (is_integer(x)) return big_json(numerator(x));
    return to_string(x);
}

namespace {

std::vector<std::string> row_cells(const PredictRow& r) {
    return {class_string(r.rep), std::to_string(r.m), std::to_string(r.deg_Q), std::to_string(r.exponent), r.D_label,
            omega_set_label(r.d)};
}

const std::vector<std::string> kPredictHeader{"class", "m_a", "deg_Q", "exponent", "D_a", "omega_set"};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + csv_field(cells[i]);
    return s + "\n";
}

}  // namespace

std::string md_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> w(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s = "|";
        for (std::size_t i = 0; i < cells.size(); ++i) s += " " + cells[i] + std::string(w[i] - cells[i].size(), ' ') + " |";
        return s + "\n";
    };
    std::string out = line(header) + "|";
    for (auto x : w) out += std::string(x + 2, '-') + "|";
    out += "\n";
    for (const auto& r : rows) out += line(r);
    return out;
}

Json to_json(const PredictReport& r) {
    Json j;
    j["n"] = r.n;
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        auto c = row_cells(row);
        Json x;
        for (std::size_t i = 0; i < kPredictHeader.size(); ++i) x[kPredictHeader[i]] = c[i];
        x["class"] = row.rep;
        x["m_a"] = row.m;
        x["deg_Q"] = row.deg_Q;
        x["exponent"] = row.exponent;
        rows.push_back(x);
    }
    j["rows"] = rows;
    j["excluded"] = r.excluded;
    j["total_dim"] = r.total_dim;
    j["expected_dim"] = r.expected_dim;
    return j;
}

std::string predict_csv(const PredictReport& r) {
    std::string s = csv_line(kPredictHeader);
    for (const auto& row : r.rows) s += csv_line(row_cells(row));
    return s;
}

std::string predict_md(const PredictReport& r) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : r.rows) rows.push_back(row_cells(row));
    std::string s = "n = " + std::to_string(r.n) + "\n\n" + md_table(kPredictHeader, rows);
    for (const auto& e : r.excluded) s += "\nexcluded (m_a = 0): " + class_string(e) + "\n";
    s += "\ntotal dimension: " + std::to_string(r.total_dim) + " (expected " + std::to_string(r.expected_dim) + ")\n";
    return s;
}

Json to_json(const FactorReport& f) {
    Json j;
    j["class"] = f.rep;
    j["kind"] = f.kind;
    if (f.kind == "omega") j["omega"] = f.omega;
    j["polynomial"] = to_string(f.base);
    Json coeffs = Json::array();
    for (const auto& c : f.base.c) coeffs.push_back(big_json(c));
    j["coefficients"] = coeffs;
    j["exponent"] = f.exponent;
    j["degree"] = f.base.degree();
    Json sums = Json::array();
    for (const auto& s : f.raw_sums) sums.push_back(rational_json(s));
    j["raw_power_sums"] = sums;
    if (f.split) {
        auto quad = [](const std::vector<QuadNumber>& v) {
            Json a = Json::array();
            for (const auto& x : v) a.push_back(Json::array({rational_json(x.u), rational_json(x.v)}));
            return a;
        };
        j["split"] = {{"m", f.split->m}, {"first", quad(f.split->first)}, {"second", quad(f.split->second)}};
    }
    return j;
}

Json certificate_json(const FactorReport& f) {
    Json j;
    j["class"] = f.rep;
    j["kind"] = f.kind;
    if (f.kind == "omega") j["omega"] = f.omega;
    j["integrality"] = f.cert.integrality;
    j["degree_match"] = f.cert.degree_match;
    j["functional_equation"] = f.cert.functional;
    j["sign"] = f.cert.sign;
    j["weil"] = f.cert.weil;
    j["consistency"] = f.cert.consistency;
    if (f.cert.quadratic_split) j["quadratic_split"] = *f.cert.quadratic_split;
    j["pass"] = f.cert.pass();
    return j;
}

Json to_json(const ZetaReport& r) {
    Json j;
    j["instance"] = {{"n", r.inst.n}, {"q", r.inst.q}, {"psi", r.inst.psi}};
    j["predictions"] = to_json(r.predictions)["rows"];
    Json factors = Json::array(), certs = Json::array();
    for (const auto& f : r.factors) {
        factors.push_back(to_json(f));
        certs.push_back(certificate_json(f));
    }
    j["factors"] = factors;
    j["certificates"] = certs;
    Json rows = Json::array();
    for (const auto& c : r.consistency)
        rows.push_back({{"r", c.r}, {"direct", big_json(c.direct)}, {"assembled", big_json(c.assembled)}, {"pass", c.pass}});
    j["consistency"] = {{"rows", rows}, {"pass", r.pass()}};
    return j;
}

namespace {

std::vector<std::string> factor_cells(const FactorReport& f) {
    return {class_string(f.rep), f.kind, f.kind == "omega" ? std::to_string(f.omega) : "", to_string(f.base),
            std::to_string(f.exponent), f.cert.pass() ? "pass" : "FAIL"};
}

const std::vector<std::string> kFactorHeader{"class", "kind", "omega", "polynomial", "exponent", "certificate"};

}  // namespace

std::string zeta_csv(const ZetaReport& r) {
    std::string s = csv_line(kFactorHeader);
    for (const auto& f : r.factors) s += csv_line(factor_cells(f));
    for (const auto& c : r.consistency)
        s += csv_line({"consistency", "r=" + std::to_string(c.r), "", c.direct.str() + " = " + c.assembled.str(), "",
                       c.pass ? "pass" : "FAIL"});
    return s;
}

std::string zeta_md(const ZetaReport& r) {
    std::ostringstream os;
    os << "n = " << r.inst.n << ", q = " << r.inst.q << ", psi = " << r.inst.psi << "\n\n";
    os << predict_md(r.predictions);
    if (r.extracted) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& f : r.factors) rows.push_back(factor_cells(f));
        os << "\n" << md_table(kFactorHeader, rows);
    }
    if (!r.consistency.empty()) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& c : r.consistency)
            rows.push_back({std::to_string(c.r), c.direct.str(), c.assembled.str(), c.pass ? "pass" : "FAIL"});
        os << "\n" << md_table({"r", "direct", "assembled", "status"}, rows);
    }
    return os.str();
}

Json to_json(const std::vector<NamedCheck>& checks) {
    Json a = Json::array();
    for (const auto& c : checks) {
        Json j{{"name", c.name}, {"pass", c.pass}};
        if (!c.pass) j["witness"] = c.witness;
        a.push_back(j);
    }
    return a;
}

}  // namespace dwork
