#pragma once

#include "json.hpp"

#include <string>
#include <vector>

namespace cyclocode {

using ordered_json = nlohmann::ordered_json;

struct VerificationCheck {
    std::string check_name;
    ordered_json expected;
    ordered_json actual;
    bool pass = false;
};

/// Named list of expected/actual comparisons.
struct VerificationRecord {
    std::string name;
    std::vector<VerificationCheck> checks;

    explicit VerificationRecord(std::string record_name) : name(std::move(record_name)) {}

    template <class E, class A>
    bool expect_eq(std::string check_name, const E& expected, const A& actual) {
        ordered_json e = expected;
        ordered_json a = actual;
        const bool ok = (e == a);
        checks.push_back({std::move(check_name), std::move(e), std::move(a), ok});
        return ok;
    }

    void expect_true(std::string check_name, bool condition, ordered_json witness = nullptr) {
        checks.push_back({std::move(check_name), true,
                          witness.is_null() ? ordered_json(condition) : std::move(witness),
                          condition});
    }

    bool passed() const noexcept {
        for (const auto& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }
};

}  // namespace cyclocode
