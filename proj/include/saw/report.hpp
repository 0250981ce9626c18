#pragma once

// Machine-readable verdicts for identity checks: pass/fail plus the first
// mismatching multi-index when two truncated series disagree.

#include <chrono>
#include <string>
#include <vector>
#include <nlohmann/json.hpp>
#include "saw/pseries.hpp"

namespace saw {

struct VerdictReport {
    std::string identity;
    nlohmann::json params = nlohmann::json::object();
    bool pass = true;
    std::vector<int> mismatch_index;
    std::string lhs, rhs;
    long long wall_time_ms = 0;

    nlohmann::json to_json() const {
        nlohmann::json j{{"identity", identity},
                         {"params", params},
                         {"verdict", pass ? "pass" : "fail"},
                         {"wall_time_ms", wall_time_ms}};
        if (!pass) {
            j["mismatch"] = {{"index", mismatch_index}, {"lhs", lhs}, {"rhs", rhs}};
        }
        return j;
    }
};

inline VerdictReport compare_series(const std::string& identity, nlohmann::json params,
                                    const PSeries<Scalar>& a, const PSeries<Scalar>& b) {
    VerdictReport rep;
    rep.identity = identity;
    rep.params = std::move(params);
    std::vector<int> where;
    if (PSeries<Scalar>::first_mismatch(a, b, where)) {
        rep.pass = false;
        rep.mismatch_index = where;
        rep.lhs = a.coeff(where).str();
        rep.rhs = b.coeff(where).str();
    }
    return rep;
}

struct WallTimer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        auto d = std::chrono::steady_clock::now() - start;
        return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
    }
};

} // namespace saw
