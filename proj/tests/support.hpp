#pragma once

#include "hvb/random.hpp"

namespace hvb::testing {
using namespace hvb::gen;
}  // namespace hvb::testing
