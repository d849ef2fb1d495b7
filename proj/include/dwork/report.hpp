#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dwork/chars.hpp"
#include "dwork/reptheory.hpp"
#include "dwork/zeta.hpp"

namespace dwork {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, md };
Format parse_format(const std::string& s);

struct RunConfig {
    std::string command;
    int n = 0;
    std::int64_t q = 0;
    std::int64_t psi = 0;
    int r_min = 1;
    int r_max = 1;
    std::vector<int> orbit;
    std::vector<int> twist;
    std::string sigma;
    std::string mode = "check";
    std::string format = "json";
    std::string suite;
    int jobs = 0;
    double cost_cap = 0;
    std::string output;
};
Json to_json(const RunConfig& c);

// Integers that fit in 64 bits are numbers, larger ones strings.
Json big_json(const BigInt& x);
Json rational_json(const Rational& x);

Json to_json(const PredictReport& r);
std::string predict_csv(const PredictReport& r);
std::string predict_md(const PredictReport& r);

Json to_json(const FactorReport& f);
Json certificate_json(const FactorReport& f);
Json to_json(const ZetaReport& r);
std::string zeta_csv(const ZetaReport& r);
std::string zeta_md(const ZetaReport& r);

Json to_json(const std::vector<NamedCheck>& checks);

// Aligned markdown table.
std::string md_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

}  // namespace dwork
