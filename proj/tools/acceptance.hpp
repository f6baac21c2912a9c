#pragma once

// The acceptance sweep, shared by the acceptance test binary and `hvb examples all`.

#include <functional>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "hvb/report.hpp"
#include "hvb/ruth.hpp"

namespace hvb::acceptance {

using Ops = std::vector<std::vector<std::vector<Mat>>>;

// A representation produced by gauge_twist from a strict one.
struct Fixture {
    std::string base;
    Ruth strict;
    Ops ops;
    Ruth r;
};

inline constexpr unsigned kDefaultSeed = 20240611;
// Fifty fixtures cycling through unit(2), pair(2), pair(3), Z/2 and orders 0, 1, 2.
// Deterministic for a given seed.
std::vector<Fixture> fixtures(unsigned seed = kDefaultSeed);

struct Outcome {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;  // one line: counts, or the first failure
    Report report;
    double seconds = 0;
};

// Criteria that are expected to stay red; see the README.
bool known_red(int id);

// Runs the selected criteria (all when empty) in order; each outcome is handed
// to on_done as soon as it is decided.
std::vector<Outcome> run(const std::vector<int>& which = {}, const std::function<void(const Outcome&)>& on_done = {});

std::string format_line(const Outcome& o);

}  // namespace hvb::acceptance
