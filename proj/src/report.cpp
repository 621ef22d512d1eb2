#include "cyclocode/report.hpp"

#include <algorithm>
#include <sstream>

namespace cyclocode {

namespace {

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

template <class Rows>
std::string two_column(const std::string& title, const std::string& left, const std::string& right,
                       const Rows& rows) {
    std::size_t width = left.size();
    for (const auto& [a, b] : rows) width = std::max(width, a.size());
    std::ostringstream os;
    os << title << '\n';
    os << "  " << pad(left, width) << "  " << right << '\n';
    for (const auto& [a, b] : rows) os << "  " << pad(a, width) << "  " << b << '\n';
    return os.str();
}

}  // namespace

ordered_json to_json(const WeightDistribution& wd) {
    ordered_json out = ordered_json::array();
    for (const auto& e : wd.entries()) out.push_back({{"weight", e.weight}, {"frequency", e.frequency}});
    return out;
}

ordered_json to_json(const ValueDistribution& vd) {
    ordered_json out = ordered_json::array();
    for (const auto& e : vd.entries()) out.push_back({{"value", e.value}, {"frequency", e.frequency}});
    return out;
}

ordered_json to_json(const VerificationRecord& record) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : record.checks) {
        checks.push_back({{"check_name", c.check_name},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"pass", c.pass}});
    }
    return {{"name", record.name}, {"pass", record.passed()}, {"checks", checks}};
}

ordered_json to_json(const std::vector<ConditionCheck>& checks) {
    ordered_json out = ordered_json::array();
    for (const auto& c : checks) out.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    return out;
}

ordered_json params_json(const ConditionsReport& report) {
    return {{"p", report.p}, {"t", report.t}, {"q", report.q}, {"k", report.k}, {"delta", report.delta}};
}

ordered_json derived_json(const ConditionsReport& report) {
    if (!report.derived) return nullptr;
    const auto& d = *report.derived;
    ordered_json out{{"n", d.n}, {"a", d.a}, {"lambda", nullptr}, {"epsilon", nullptr}};
    if (d.lambda) out["lambda"] = *d.lambda;
    if (d.epsilon) out["epsilon"] = *d.epsilon;
    return out;
}

std::string weights_csv(const WeightDistribution& wd) {
    std::string out = "weight,frequency\n";
    for (const auto& e : wd.entries()) {
        out += std::to_string(e.weight) + "," + std::to_string(e.frequency) + "\n";
    }
    return out;
}

std::string weights_table(const std::string& title, const WeightDistribution& wd) {
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& e : wd.entries()) rows.emplace_back(std::to_string(e.weight), std::to_string(e.frequency));
    return two_column(title, "Weight", "Frequency", rows);
}

std::string values_table(const std::string& title, const ValueDistribution& vd) {
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& e : vd.entries()) rows.emplace_back(std::to_string(e.value), std::to_string(e.frequency));
    return two_column(title, "Value", "Frequency", rows);
}

std::string checks_text(const std::string& title, const std::vector<ConditionCheck>& checks) {
    std::ostringstream os;
    os << title << '\n';
    for (const auto& c : checks) {
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
        if (!c.witness.empty()) os << "  (" << c.witness << ")";
        os << '\n';
    }
    return os.str();
}

std::string record_text(const VerificationRecord& record) {
    std::ostringstream os;
    os << (record.passed() ? "[pass] " : "[FAIL] ") << record.name << '\n';
    for (const auto& c : record.checks) {
        if (c.pass) {
            os << "    ok  " << c.check_name << " = " << c.actual.dump() << '\n';
        } else {
            os << "    BAD " << c.check_name << ": expected " << c.expected.dump() << ", got "
               << c.actual.dump() << '\n';
        }
    }
    return os.str();
}

}  // namespace cyclocode
