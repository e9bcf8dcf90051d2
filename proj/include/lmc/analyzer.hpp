#pragma once

// Structural analysis of explicit codes: distance spectrum, per-coordinate
// symbol frequencies, symbol-uniformity, shortening, and the battery of
// necessary conditions a length-maximal code must satisfy.

#include "lmc/bigint.hpp"
#include "lmc/code.hpp"
#include "lmc/params.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace lmc {

struct DistanceSpectrum {
    std::map<std::int64_t, BigInt> counts;  // distance -> number of unordered pairs
    std::int64_t min_distance = 0;

    bool equidistant() const { return counts.size() == 1; }
};

// Requires M >= 2.
DistanceSpectrum distance_spectrum(const Code& c);

struct ColumnProfile {
    // freq[i][a] = number of words with symbol a at coordinate i
    std::vector<std::vector<std::int64_t>> freq;
    // agreement[i] = sum_a C(freq[i][a], 2)
    std::vector<BigInt> agreement;
};

ColumnProfile column_profile(const Code& c);

struct UniformityResult {
    bool uniform = false;
    std::vector<std::int64_t> offending;  // coordinates violating uniformity (0-based)
};

UniformityResult is_symbol_uniform(const Code& c);

// Keep words with symbol a at coordinate i (0-based), delete that
// coordinate. Throws std::invalid_argument on an empty result.
Code shorten(const Code& c, std::int64_t i, std::uint8_t a);

struct DefectShortening {
    std::int64_t coordinate = 0;  // 0-based
    std::uint8_t symbol = 0;
    Code child;
};

// Shorten at a coordinate where a lexicographically-least minimum-distance
// pair agrees; the child keeps d' = d. Throws std::invalid_argument when
// every minimum-distance pair is at distance n ("no agreeing coordinate").
DefectShortening defect_preserving_shorten(const Code& c);

// Per-coordinate symbol bijections sending the lexicographically least
// word to all-zero. Output words are sorted; spectrum is unchanged.
Code normalize_zero(const Code& c);

struct StructureReport {
    CodeParams params;
    bool symbol_uniform = false;
    bool equidistant = false;
    bool length_maximal = false;
    // raw arithmetic conditions
    bool spectrum_ok = false;       // distances within {d} u {n-k+3, ..., n}
    bool divisibility_ok = false;   // (s+2) | q(q+1)
    bool defect_small = false;      // s <= q-1
    bool gcd_refinement = false;    // (s+2) | (q+1) whenever gcd(s+2, q) = 1
    // the divisibility/defect conditions are theorems only for k >= 3
    bool divisibility_applies = false;
    // k = 2 codes attaining the bound: symbol-uniform and equidistant with
    // agreement exactly s+1
    std::optional<bool> k2_equality;
    // conjunction of every necessary condition applicable to this code
    bool necessary_conditions_ok = false;
};

// Requires M >= 2.
StructureReport structure_report(const Code& c);

}  // namespace lmc
