#pragma once

#include "cyclocode/code.hpp"
#include "cyclocode/theorem.hpp"
#include "cyclocode/verification.hpp"

#include <string>
#include <vector>

namespace cyclocode {

ordered_json to_json(const WeightDistribution& wd);
ordered_json to_json(const ValueDistribution& vd);
ordered_json to_json(const VerificationRecord& record);
ordered_json to_json(const std::vector<ConditionCheck>& checks);

/// {p, t, q, k, delta}
ordered_json params_json(const ConditionsReport& report);
/// {n, a, lambda, epsilon}, null members when undefined; null when absent.
ordered_json derived_json(const ConditionsReport& report);

/// "weight,frequency" header plus one row per weight.
std::string weights_csv(const WeightDistribution& wd);

/// Two-column aligned table under a title line.
std::string weights_table(const std::string& title, const WeightDistribution& wd);
std::string values_table(const std::string& title, const ValueDistribution& vd);

std::string checks_text(const std::string& title, const std::vector<ConditionCheck>& checks);
std::string record_text(const VerificationRecord& record);

}  // namespace cyclocode
