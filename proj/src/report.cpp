#include "hvb/report.hpp"

#include <iomanip>
#include <sstream>

namespace hvb {

CheckResult& Report::slot(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return checks_[it->second];
    index_.emplace(name, checks_.size());
    checks_.push_back({name, 0, 0, nullptr});
    return checks_.back();
}

void Report::record(const std::string& name, bool ok, const std::function<nlohmann::json()>& witness) {
    CheckResult& c = slot(name);
    if (ok) {
        ++c.passed;
        return;
    }
    if (c.failed++ == 0 && witness) c.witness = witness();
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (const auto& o : other.checks_) {
        CheckResult& c = slot(prefix + o.name);
        if (c.failed == 0 && o.failed > 0) c.witness = o.witness;
        c.passed += o.passed;
        c.failed += o.failed;
    }
}

Report Report::only(const std::function<bool(const std::string&)>& keep) const {
    Report out;
    for (const auto& c : checks_)
        if (keep(c.name)) {
            out.index_[c.name] = out.checks_.size();
            out.checks_.push_back(c);
        }
    return out;
}

bool Report::ok() const {
    for (const auto& c : checks_)
        if (!c.ok()) return false;
    return true;
}

bool Report::ok(const std::string& name) const {
    const CheckResult* c = find(name);
    return c && c->ok();
}

const CheckResult* Report::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &checks_[it->second];
}

nlohmann::json Report::to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : checks_) {
        nlohmann::json j = {{"name", c.name}, {"pass", c.ok()}, {"passed", c.passed}, {"failed", c.failed}};
        if (!c.ok()) j["witness"] = c.witness;
        out.push_back(std::move(j));
    }
    return out;
}

std::string Report::table() const {
    std::size_t w = 10;
    for (const auto& c : checks_) w = std::max(w, c.name.size());
    std::ostringstream os;
    for (const auto& c : checks_) {
        os << (c.ok() ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(w)) << c.name << "  " << c.passed << "/"
           << c.passed + c.failed;
        if (!c.ok() && !c.witness.is_null()) os << "  witness " << c.witness.dump();
        os << "\n";
    }
    return os.str();
}

nlohmann::json to_json(const Q& q) { return to_string(q); }

nlohmann::json to_json(const Vec& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

nlohmann::json to_json(const Mat& m) {
    nlohmann::json a = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
    return a;
}

Q q_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Q(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

Mat mat_from_json(const nlohmann::json& j, int rows, int cols) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw std::invalid_argument("matrix: expected " + std::to_string(rows) + " rows");
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
            throw std::invalid_argument("matrix row " + std::to_string(i) + ": expected " + std::to_string(cols) + " entries");
        for (int c = 0; c < cols; ++c) m(i, c) = q_from_json(j[i][c]);
    }
    return m;
}

}  // namespace hvb
