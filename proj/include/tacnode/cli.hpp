#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tacnode/combinatorics.hpp"

namespace tacnode::cli {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kBadInput = 2;
inline constexpr int kNumerical = 3;
inline constexpr int kAmbiguous = 4;

// "3:2,2:1" -> d_3 = 2, d_2 = 1. Empty string or "-" is the empty count vector.
Counts parse_counts(const std::string& text);

// Commands: splits, factorize, solve, classify, locus, k3, verify.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Distance between two doubles in units in the last place.
long ulp_distance(double a, double b);

}  // namespace tacnode::cli
