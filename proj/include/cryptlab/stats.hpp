#pragma once

#include <array>
#include <cstdint>
#include <span>

// Lightweight keystream health tests: monobit, 2-bit serial, and per-word
// bit-lane frequencies (the lsb and msb lanes included).  Stand-ins for the
// full external batteries; every statistic is gated at a 4-sigma equivalent.

namespace cryptlab {

struct StatTestSelection {
    bool monobit = true;
    bool serial = true;
    bool lanes = true;
};

struct StatReport {
    std::size_t bytes = 0;
    double monobit_z = 0;
    double serial_chi2 = 0;                // 3 degrees of freedom
    std::array<double, 32> lane_z{};       // little-endian word bit lanes
    bool monobit_pass = true;
    bool serial_pass = true;
    bool lanes_pass = true;
    StatTestSelection ran;

    bool pass() const { return monobit_pass && serial_pass && lanes_pass; }
};

inline constexpr double kZLimit = 4.0;
// chi^2 (3 dof) quantile at the two-sided 4-sigma tail probability 6.334e-5.
inline constexpr double kSerialChi2Limit = 22.0613;

inline constexpr std::size_t kMinStatBytes = 100000;

// Throws if the stream is shorter than kMinStatBytes.
StatReport stat_tests(std::span<const std::uint8_t> stream,
                      const StatTestSelection& which = {});

}  // namespace cryptlab
