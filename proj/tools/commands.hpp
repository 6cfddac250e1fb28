#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "report.hpp"

namespace sqcli {

struct Config {
    std::string command;
    std::uint64_t q = 2;
    std::uint64_t m = 2;
    std::string gamma = "1/2";
    std::uint64_t x = 10'000'000;
    double theta = 0.0;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    std::string family = "gauss";  // expsum only
    bool all_q = false;            // constants: table over q = 2..13 when --q is absent
};

// Thrown for configurations the flags parser cannot catch on its own (exit 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline const std::vector<std::string> kFamilies = {
    "geometric", "min", "gauss", "gauss-incomplete", "weyl", "gcd", "second-derivative", "divisor", "vdc", "bilinear"};

Report run(const Config& cfg);

}  // namespace sqcli
