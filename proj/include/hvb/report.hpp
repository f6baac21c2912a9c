#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "hvb/exactla.hpp"

namespace hvb {

// One named family of exact checks: instance counts plus the first failing witness.
struct CheckResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    nlohmann::json witness;

    bool ok() const { return failed == 0; }
};

class Report {
public:
    void record(const std::string& name, bool ok, const std::function<nlohmann::json()>& witness = {});
    void merge(const Report& other, const std::string& prefix = "");
    // The checks whose names satisfy keep, in order.
    Report only(const std::function<bool(const std::string&)>& keep) const;

    bool ok() const;
    bool ok(const std::string& name) const;
    const CheckResult* find(const std::string& name) const;
    const std::vector<CheckResult>& checks() const { return checks_; }

    nlohmann::json to_json() const;
    std::string table() const;

private:
    CheckResult& slot(const std::string& name);

    std::vector<CheckResult> checks_;
    std::unordered_map<std::string, std::size_t> index_;
};

nlohmann::json to_json(const Q& q);
nlohmann::json to_json(const Vec& v);
nlohmann::json to_json(const Mat& m);
Q q_from_json(const nlohmann::json& j);
Mat mat_from_json(const nlohmann::json& j, int rows, int cols);

}  // namespace hvb
