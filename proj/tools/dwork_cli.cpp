#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dwork/acceptance.hpp"
#include "dwork/chars.hpp"
#include "dwork/counting.hpp"
#include "dwork/report.hpp"
#include "dwork/zeta.hpp"

using namespace dwork;

namespace {

struct Output {
    std::string text;
    int code = 0;
};

std::vector<int> parse_int_list(const std::string& s, const std::string& param) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            v.push_back(std::stoi(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            invalid_input(param, "expected comma separated integers");
        }
    }
    return v;
}

// Wraps a payload with the config; csv and md carry it as a leading comment.
std::string render(const RunConfig& cfg, Format fmt, Json payload, const std::string& csv, const std::string& md) {
    Json conf = to_json(cfg);
    switch (fmt) {
        case Format::json: {
            Json out;
            out["config"] = conf;
            for (auto& [k, v] : payload.items()) out[k] = v;
            return out.dump(2) + "\n";
        }
        case Format::csv:
            return "# config: " + conf.dump() + "\n" + csv;
        case Format::md:
            return "<!-- config: " + conf.dump() + " -->\n\n" + md;
    }
    return {};
}

std::string checks_md(const std::vector<NamedCheck>& checks) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : checks) rows.push_back({c.name, c.pass ? "pass" : "FAIL", c.pass ? "" : c.witness});
    return md_table({"check", "status", "witness"}, rows);
}

std::string checks_csv(const std::vector<NamedCheck>& checks) {
    std::string s = "check,status,witness\n";
    for (const auto& c : checks) s += "\"" + c.name + "\"," + (c.pass ? "pass" : "FAIL") + ",\"" + (c.pass ? "" : c.witness) + "\"\n";
    return s;
}

Output run_predict(const RunConfig& cfg, Format fmt) {
    if (cfg.n < 3 || cfg.n > 9) invalid_input("n", "must lie in 3..9");
    auto R = predict_report(cfg.n);
    return {render(cfg, fmt, Json{{"prediction", to_json(R)}}, predict_csv(R), predict_md(R)), 0};
}

Output run_verify(const RunConfig& cfg, Format fmt) {
    auto checks = verify_rep_checks(cfg.n);
    bool ok = std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.pass; });
    return {render(cfg, fmt, Json{{"checks", to_json(checks)}, {"pass", ok}}, checks_csv(checks), checks_md(checks)), ok ? 0 : 2};
}

Output run_count(const RunConfig& cfg, Format fmt) {
    auto inst = make_instance(cfg.n, cfg.q, cfg.psi);
    if (cfg.r_min < 1 || cfg.r_max < cfg.r_min) invalid_input("r", "need 1 <= r <= r_max");
    const bool twisted = !cfg.twist.empty() || !cfg.sigma.empty();
    GroupElement g = group_identity(cfg.n);
    if (twisted) {
        std::vector<int> t = cfg.twist.empty() ? std::vector<int>(cfg.n, 0) : cfg.twist;
        if (static_cast<int>(t.size()) != cfg.n) invalid_input("twist", "needs n entries");
        Perm s = cfg.sigma.empty() ? identity_perm(cfg.n) : parse_cycles(cfg.n, cfg.sigma);
        g = make_element(cfg.n, t, s);
    }
    Json rows = Json::array();
    std::vector<std::vector<std::string>> table;
    for (int r = cfg.r_min; r <= cfg.r_max; ++r) {
        Json row{{"r", r}};
        BigInt value = twisted ? fixed_count_general(inst, g, r) : count_points(inst, r);
        row[twisted ? "fixed_points" : "points"] = big_json(value);
        BigInt tr = twisted_trace(inst, g, r);
        row["trace"] = big_json(tr);
        rows.push_back(row);
        table.push_back({std::to_string(r), value.str(), tr.str()});
    }
    const std::string label = twisted ? "fixed_points" : "points";
    std::string csv = "r," + label + ",trace\n";
    for (const auto& t : table) csv += t[0] + "," + t[1] + "," + t[2] + "\n";
    Json payload{{"instance", {{"n", inst.n}, {"q", inst.q}, {"psi", inst.psi}}}, {"counts", rows}};
    if (twisted) payload["element"] = {{"twist", g.t}, {"sigma", format_cycles(g.sigma)}};
    return {render(cfg, fmt, payload, csv, md_table({"r", label, "trace"}, table)), 0};
}

Output run_zeta(const RunConfig& cfg, Format fmt) {
    ZetaMode mode;
    if (cfg.mode == "predict") mode = ZetaMode::predict;
    else if (cfg.mode == "extract") mode = ZetaMode::extract;
    else if (cfg.mode == "check") mode = ZetaMode::check;
    else invalid_input("mode", "expected predict, extract or check");
    auto inst = make_instance(cfg.n, cfg.q, cfg.psi);
    std::optional<std::vector<int>> orbit;
    if (!cfg.orbit.empty()) {
        if (static_cast<int>(cfg.orbit.size()) != cfg.n) invalid_input("orbit", "needs n entries");
        orbit = cfg.orbit;
    }
    auto R = zeta_report(inst, mode, orbit);
    int code = mode == ZetaMode::predict || R.pass() ? 0 : 2;
    return {render(cfg, fmt, to_json(R), zeta_csv(R), zeta_md(R)), code};
}

Output run_check(const RunConfig& cfg, Format fmt) {
    if (cfg.suite != "acceptance") invalid_input("suite", "only the acceptance suite exists");
    auto results = run_acceptance([](const CriterionResult& r) {
        std::fprintf(stderr, "%s [%2d] %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str());
    });
    Json rows = Json::array();
    std::vector<std::vector<std::string>> table;
    bool ok = true;
    for (const auto& r : results) {
        ok = ok && r.pass;
        rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        table.push_back({std::to_string(r.id), r.name, r.pass ? "pass" : "FAIL", r.detail});
    }
    std::string csv = "id,name,status,detail\n";
    for (const auto& t : table) csv += t[0] + ",\"" + t[1] + "\"," + t[2] + ",\"" + t[3] + "\"\n";
    return {render(cfg, fmt, Json{{"criteria", rows}, {"pass", ok}}, csv, md_table({"id", "criterion", "status", "detail"}, table)),
            ok ? 0 : 2};
}

void emit_error(const std::string& kind, const std::string& param, const std::string& msg) {
    Json e{{"error", {{"kind", kind}, {"parameter", param}, {"message", msg}}}};
    std::cout << e.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zeta factorization of Dwork hypersurfaces: predictions and finite-field verification"};
    app.set_config("--config", "", "TOML or INI file; options go in a section named after the subcommand, flags override it");
    app.require_subcommand(1);
    RunConfig cfg;
    std::string twist, orbit, suite = "acceptance";
    double cap = 0;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
        sub->add_option("--jobs", cfg.jobs, "worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
        sub->add_option("--output", cfg.output, "write the report to this file");
        sub->add_option("--cost-cap", cap, "operation budget, overrides DWORK_COST_CAP")->check(CLI::PositiveNumber);
    };
    auto instance = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "number of variables");
        sub->add_option("--q", cfg.q, "prime with q = 1 mod n");
        sub->add_option("--psi", cfg.psi, "parameter, psi^n != 1");
    };

    auto* predict = app.add_subcommand("predict", "predicted factorization table");
    predict->add_option("--n", cfg.n, "number of variables");
    common(predict);

    auto* verify = app.add_subcommand("verify-rep", "representation-theoretic self checks");
    verify->add_option("--n", cfg.n, "number of variables");
    common(verify);

    auto* count = app.add_subcommand("count", "point counts and twisted fixed-point counts");
    instance(count);
    count->add_option("--r", cfg.r_min, "extension degree");
    count->add_option("--r-max", cfg.r_max, "last extension degree of a range");
    count->add_option("--twist", twist, "exponents t1,...,tn of the diagonal part");
    count->add_option("--sigma", cfg.sigma, "permutation in cycle notation, e.g. (1 3)(2 4)");
    common(count);

    auto* zeta = app.add_subcommand("zeta", "extract and certify zeta factors");
    instance(zeta);
    zeta->add_option("--orbit", orbit, "restrict to the orbit of a1,...,an");
    zeta->add_option("--mode", cfg.mode, "predict, extract or check")->check(CLI::IsMember({"predict", "extract", "check"}));
    common(zeta);

    auto* check = app.add_subcommand("check", "run a verification suite");
    check->add_option("--suite", suite, "suite name");
    common(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("invalid_input", "", e.what());
        return 4;
    }

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        if (cfg.command == "check") cfg.suite = suite;
        if (cfg.command != "check" && cfg.n == 0) invalid_input("n", "--n is required");
        if (cfg.command == "count" || cfg.command == "zeta") {
            if (cfg.q == 0) invalid_input("q", "--q is required");
            if (cfg.psi == 0) invalid_input("psi", "--psi is required and must be nonzero");
        }
        if (cfg.command == "count" && cfg.r_max < cfg.r_min) cfg.r_max = cfg.r_min;
        if (!twist.empty()) cfg.twist = parse_int_list(twist, "twist");
        if (!orbit.empty()) cfg.orbit = parse_int_list(orbit, "orbit");
        if (cap > 0) set_cost_cap(cap);
        cfg.cost_cap = cost_cap();
        set_jobs(cfg.jobs);
        Format fmt = parse_format(cfg.format);

        Output out;
        if (cfg.command == "predict") out = run_predict(cfg, fmt);
        else if (cfg.command == "verify-rep") out = run_verify(cfg, fmt);
        else if (cfg.command == "count") out = run_count(cfg, fmt);
        else if (cfg.command == "zeta") out = run_zeta(cfg, fmt);
        else out = run_check(cfg, fmt);

        if (cfg.output.empty()) {
            std::cout << out.text;
        } else {
            std::ofstream f(cfg.output);
            if (!f) invalid_input("output", "cannot open " + cfg.output);
            f << out.text;
        }
        return out.code;
    } catch (const Error& e) {
        emit_error(e.kind_name(), e.parameter(), e.what());
        return e.exit_code();
    } catch (const std::exception& e) {
        emit_error("internal", "", e.what());
        return 1;
    }
}
