#pragma once

// Case-specific checks at the orbit representatives. Internal to the library.

#include <cstdint>
#include <vector>

#include "ulrich/engine.hpp"

namespace ulrich {

std::vector<Check> severi_suite(int a, int trials, std::uint64_t seed);
std::vector<Check> heptic_suite(int trials, std::uint64_t seed);
std::vector<Check> sl6_suite(int trials, std::uint64_t seed);
std::vector<Check> spin_suite(int trials, std::uint64_t seed);

}  // namespace ulrich
