#include "cryptlab/sequencing.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cryptlab {

namespace {

// Dense GF(2) vector over positions [0, bits).
class BitVec {
public:
    explicit BitVec(std::size_t bits) : words_((bits + 63) / 64, 0) {}

    void flip(std::size_t pos) { words_[pos >> 6] ^= 1ull << (pos & 63); }
    bool test(std::size_t pos) const { return (words_[pos >> 6] >> (pos & 63)) & 1; }

    void operator^=(const BitVec& o) {
        for (std::size_t i = 0; i < words_.size(); i++) words_[i] ^= o.words_[i];
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    // Ones strictly below `bound`.
    std::size_t popcount_below(std::size_t bound) const {
        std::size_t c = 0;
        const std::size_t full = std::min(bound >> 6, words_.size());
        for (std::size_t i = 0; i < full; i++)
            c += static_cast<std::size_t>(std::popcount(words_[i]));
        if (full < words_.size() && (bound & 63))
            c += static_cast<std::size_t>(
                std::popcount(words_[full] & ((1ull << (bound & 63)) - 1)));
        return c;
    }

    std::size_t size_words() const { return words_.size(); }
    std::uint64_t word(std::size_t i) const { return words_[i]; }

private:
    std::vector<std::uint64_t> words_;
};

// Per-candidate prefix-parity vector: position t is set iff an odd number of
// support points of y_j are <= t.  A y with odd support weight has an
// implicit all-ones tail beyond the modeled range, tracked by `odd`.
struct PrefixVec {
    BitVec bits;
    bool odd;
};

PrefixVec prefix_of_support(const std::vector<std::uint32_t>& support, std::size_t bits) {
    BitVec point(bits);
    bool odd = false;
    for (std::uint32_t p : support) {
        point.flip(p);
        odd = !odd;
    }
    // Prefix-XOR scan.
    BitVec pre(bits);
    bool carry = false;
    for (std::size_t t = 0; t < bits; t++) {
        if (point.test(t)) carry = !carry;
        if (carry) pre.flip(t);
    }
    return PrefixVec{std::move(pre), odd};
}

// Support positions of y_j (parity-reduced) for indices j >= max offset.
std::vector<std::uint32_t> support_of(const SequencingScheme& scheme, std::uint32_t j) {
    std::vector<std::uint32_t> pos;
    for (std::uint32_t o : scheme.taps_for(j)) pos.push_back(j - o);
    std::sort(pos.begin(), pos.end());
    std::vector<std::uint32_t> reduced;
    for (std::size_t i = 0; i < pos.size();) {
        std::size_t run = 1;
        while (i + run < pos.size() && pos[i + run] == pos[i]) run++;
        if (run & 1) reduced.push_back(pos[i]);
        i += run;
    }
    return reduced;
}

struct SearchContext {
    const SequencingScheme* scheme;
    std::size_t max_b;
    std::size_t first_j, end_j;  // candidate y-index range
    std::size_t bits;            // modeled position range [0, bits)
    std::vector<PrefixVec> prefix;  // indexed by j - first_j

    std::size_t best_a = std::numeric_limits<std::size_t>::max();
    std::vector<std::uint32_t> best_combo;

    std::vector<std::uint32_t> combo;

    void dfs(const BitVec& acc, bool acc_odd, std::size_t last_idx) {
        if (!acc_odd && !combo.empty()) {
            std::size_t a = acc.popcount();
            if (a < best_a) {
                best_a = a;
                best_combo = combo;
            }
        }
        if (combo.size() == max_b) return;
        const std::uint32_t window = scheme->window;
        for (std::size_t idx = last_idx + 1; idx < end_j - first_j; idx++) {
            // Positions below the new candidate's earliest support point are
            // frozen for this and every later candidate.
            const std::size_t j = first_j + idx;
            const std::size_t frozen_bound = j > window ? j - window : 0;
            if (acc.popcount_below(frozen_bound) >= best_a) break;
            BitVec next = acc;
            next ^= prefix[idx].bits;
            combo.push_back(static_cast<std::uint32_t>(j));
            dfs(next, acc_odd != prefix[idx].odd, idx);
            combo.pop_back();
        }
    }
};

}  // namespace

std::uint32_t SequencingScheme::max_offset() const {
    std::uint32_t m = 0;
    for (const auto& row : taps)
        for (std::uint32_t o : row) m = std::max(m, o);
    return m;
}

SequencingScheme SequencingScheme::mv3_family() {
    SequencingScheme s;
    s.period = 32;
    s.window = 64;
    s.taps.resize(32);
    for (std::size_t i = 0; i < 32; i++) {
        const std::uint32_t t = static_cast<std::uint32_t>(i % 16);
        s.taps[i] = {(5 * t) % 16, 16 + (3 * t) % 16, 0};
    }
    return s;
}

SequencingScheme SequencingScheme::mv3_buffer_rule() {
    SequencingScheme s;
    s.period = 32;
    s.window = 96;
    s.taps.resize(32);
    for (std::uint32_t i = 0; i < 32; i++) {
        const std::uint32_t from_b = 32 + i - (7 * i + 18) % 32;  // one block back
        const std::uint32_t from_a = 64 + i - (9 * i + 5) % 32;   // two blocks back
        s.taps[i] = {from_b, from_a, 0};
    }
    return s;
}

SequencingScheme SequencingScheme::from_text(std::istream& in, std::uint32_t window) {
    SequencingScheme s;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::vector<std::uint32_t> offsets;
        long long v;
        while (row >> v) {
            if (v < 0) throw std::invalid_argument("cryptlab: negative offset in scheme");
            offsets.push_back(static_cast<std::uint32_t>(v));
        }
        if (!row.eof()) throw std::invalid_argument("cryptlab: malformed scheme line: " + line);
        if (offsets.empty()) throw std::invalid_argument("cryptlab: empty scheme line");
        s.taps.push_back(std::move(offsets));
    }
    if (s.taps.empty()) throw std::invalid_argument("cryptlab: empty scheme");
    s.period = s.taps.size();
    s.window = window ? window : std::max<std::uint32_t>(64, s.max_offset());
    return s;
}

void SequencingScheme::validate(bool relax_window) const {
    if (period == 0 || taps.size() != period)
        throw std::invalid_argument("cryptlab: scheme needs one tap row per residue");
    for (std::size_t i = 0; i < period; i++) {
        if (taps[i].empty())
            throw std::invalid_argument("cryptlab: residue " + std::to_string(i) +
                                        " has no taps");
        if (std::find(taps[i].begin(), taps[i].end(), 0u) == taps[i].end())
            throw std::invalid_argument(
                "cryptlab: residue " + std::to_string(i) +
                " omits offset 0; the newest term must always be included");
        for (std::uint32_t o : taps[i])
            if (o > window)
                throw std::invalid_argument("cryptlab: offset exceeds the window constant");
    }
    if (!relax_window && (window < 64 || window > 256))
        throw std::invalid_argument("cryptlab: window constant must lie in [64, 256]");
}

SearchResult min_pair_weight(const SequencingScheme& scheme, std::size_t max_b,
                             std::size_t horizon, bool relax_window) {
    scheme.validate(relax_window);
    if (max_b == 0) throw std::invalid_argument("cryptlab: max_b must be positive");
    const std::size_t min_horizon = 4 * scheme.period + scheme.window;
    if (horizon == 0) horizon = min_horizon;
    if (horizon < min_horizon)
        throw std::invalid_argument("cryptlab: horizon must cover several periods (>= 4P + C)");

    SearchContext ctx;
    ctx.scheme = &scheme;
    ctx.max_b = max_b;
    ctx.first_j = scheme.window;  // keep every x position non-negative
    ctx.end_j = scheme.window + horizon;
    ctx.bits = ctx.end_j;
    ctx.prefix.reserve(horizon);
    for (std::size_t j = ctx.first_j; j < ctx.end_j; j++)
        ctx.prefix.push_back(
            prefix_of_support(support_of(scheme, static_cast<std::uint32_t>(j)), ctx.bits));

    // Combinations are translation-invariant (periodic taps), so the smallest
    // index may be pinned to the first period.
    BitVec zero(ctx.bits);
    for (std::size_t idx = 0; idx < scheme.period && idx < horizon; idx++) {
        BitVec acc = zero;
        acc ^= ctx.prefix[idx].bits;
        ctx.combo.assign(1, static_cast<std::uint32_t>(ctx.first_j + idx));
        ctx.dfs(acc, ctx.prefix[idx].odd, idx);
    }

    if (ctx.best_a == std::numeric_limits<std::size_t>::max())
        throw std::runtime_error("cryptlab: no feasible relation within the search bounds");

    SearchResult result;
    result.a_min = ctx.best_a;
    result.max_b = max_b;
    result.horizon = horizon;
    result.witness.y_indices = ctx.best_combo;

    // Pair indices = positions where the combined prefix parity is odd.
    BitVec acc(ctx.bits);
    for (std::uint32_t j : ctx.best_combo)
        acc ^= ctx.prefix[j - ctx.first_j].bits;
    for (std::size_t t = 0; t < ctx.bits; t++)
        if (acc.test(t)) result.witness.pair_indices.push_back(static_cast<std::uint32_t>(t));
    return result;
}

bool verify_witness(const SequencingScheme& scheme, const RelationWitness& witness) {
    // Exact parity bookkeeping over integer positions; no tolerance anywhere.
    std::vector<std::uint32_t> points;
    for (std::uint32_t j : witness.y_indices)
        for (std::uint32_t p : support_of(scheme, j)) points.push_back(p);
    for (std::uint32_t t : witness.pair_indices) {
        points.push_back(t);
        points.push_back(t + 1);
    }
    std::sort(points.begin(), points.end());
    for (std::size_t i = 0; i + 1 < points.size(); i += 2)
        if (points[i] != points[i + 1]) return false;
    return points.size() % 2 == 0;
}

std::size_t min_pair_decomposition(std::span<const std::uint32_t> positions) {
    std::vector<std::uint32_t> sorted(positions.begin(), positions.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("cryptlab: positions must be distinct");
    if (sorted.size() % 2)
        throw std::invalid_argument("cryptlab: odd-cardinality sets have no pair decomposition");
    std::size_t total = 0;
    for (std::size_t i = 0; i + 1 < sorted.size(); i += 2)
        total += sorted[i + 1] - sorted[i];
    return total;
}

}  // namespace cryptlab
