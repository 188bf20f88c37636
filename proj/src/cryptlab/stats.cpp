#include "cryptlab/stats.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mv3/words.hpp"

namespace cryptlab {

StatReport stat_tests(std::span<const std::uint8_t> stream, const StatTestSelection& which) {
    if (stream.size() < kMinStatBytes)
        throw std::invalid_argument("cryptlab: need at least " + std::to_string(kMinStatBytes) +
                                    " bytes for the statistical tests, got " +
                                    std::to_string(stream.size()));
    StatReport report;
    report.bytes = stream.size();
    report.ran = which;

    if (which.monobit) {
        std::uint64_t ones = 0;
        for (std::uint8_t b : stream) ones += static_cast<unsigned>(std::popcount(b));
        const double n = 8.0 * static_cast<double>(stream.size());
        report.monobit_z = (2.0 * static_cast<double>(ones) - n) / std::sqrt(n);
        report.monobit_pass = std::abs(report.monobit_z) <= kZLimit;
    }

    if (which.serial) {
        // Non-overlapping consecutive bit pairs, lsb first within each byte.
        std::uint64_t counts[4] = {0, 0, 0, 0};
        for (std::uint8_t b : stream) {
            counts[b & 3]++;
            counts[(b >> 2) & 3]++;
            counts[(b >> 4) & 3]++;
            counts[(b >> 6) & 3]++;
        }
        const double total = 4.0 * static_cast<double>(stream.size());
        const double expected = total / 4.0;
        double chi2 = 0;
        for (std::uint64_t c : counts) {
            const double d = static_cast<double>(c) - expected;
            chi2 += d * d / expected;
        }
        report.serial_chi2 = chi2;
        report.serial_pass = chi2 <= kSerialChi2Limit;
    }

    if (which.lanes) {
        const std::size_t words = stream.size() / 4;
        std::uint64_t lane_ones[32] = {};
        for (std::size_t i = 0; i < words; i++) {
            mv3::Word w = mv3::load_le(stream.data() + 4 * i);
            while (w) {
                lane_ones[std::countr_zero(w)]++;
                w &= w - 1;
            }
        }
        const double n = static_cast<double>(words);
        report.lanes_pass = true;
        for (std::size_t bit = 0; bit < 32; bit++) {
            report.lane_z[bit] =
                (2.0 * static_cast<double>(lane_ones[bit]) - n) / std::sqrt(n);
            if (std::abs(report.lane_z[bit]) > kZLimit) report.lanes_pass = false;
        }
    }

    return report;
}

}  // namespace cryptlab
