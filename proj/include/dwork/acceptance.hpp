#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dwork/reptheory.hpp"

namespace dwork {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

constexpr int kCriteria = 13;
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result = {});

// Representation-theoretic self checks for one n, as named pass/fail items.
std::vector<NamedCheck> verify_rep_checks(int n);

}  // namespace dwork
