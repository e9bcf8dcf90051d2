#pragma once

// Exhaustive, isomorph-reduced search for (n, M, d)_q codes. Words are
// appended in ascending lexicographic order; partial codes that are not the
// least representatives of their equivalence orbit are rejected, and a
// greedy-coloring clique bound prunes branches that cannot reach the target
// size. exhausted_none certifies that the fully reduced tree was traversed.

#include "lmc/bigint.hpp"
#include "lmc/code.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lmc {

struct SearchConfig {
    std::int64_t q = 2;
    std::int64_t n = 1;
    std::int64_t M_target = 1;
    std::int64_t d_min = 1;

    bool assume_zero_word = true;
    // Theorem-derived pruning, legal only when (n, M_target, d_min) are
    // exactly length-maximal parameters (n = (s+1)(q+1)+k-2, M = q^k).
    bool assume_symbol_uniform = false;
    bool restrict_spectrum = false;

    std::uint64_t node_budget = 100'000'000;
    std::int64_t time_budget_ms = 300'000;
    int workers = 1;
    bool override_space_guard = false;  // default guard: q^n <= 2^24
};

enum class SearchStatus { found, exhausted_none, budget_exceeded };

const char* search_status_name(SearchStatus s);

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t pruned_bound = 0;      // coloring / capacity bound
    std::uint64_t pruned_canonical = 0;  // non-minimal partial codes
    std::uint64_t pruned_uniform = 0;    // column-frequency cap
    std::uint64_t pruned_spectrum = 0;   // disallowed pairwise distance
    std::int64_t wall_ms = 0;

    SearchStats& operator+=(const SearchStats& o);
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::exhausted_none;
    std::optional<Code> witness;
    SearchStats stats;
};

// Throws std::invalid_argument on parameter/flag violations and on the
// search-space guard (q^n > 2^24 without override).
SearchOutcome search(const SearchConfig& cfg);

struct OracleResult {
    BigInt max_size;  // exact A_q(n, d)
    Code witness;
    SearchStats stats;
};

// Exact A_q(n, d) by incremental deepening over search(); guarded at
// q^n <= 2^20. Throws std::runtime_error if a budget is exhausted before
// the answer is certified.
OracleResult max_size_oracle(std::int64_t q, std::int64_t n, std::int64_t d);

enum class ClaimStatus { verified, skipped, inconsistent };

struct NonexistenceResult {
    SearchConfig config;
    std::string claim;
    ClaimStatus status = ClaimStatus::skipped;
    SearchStats stats;
};

// Curated desk-scale non-existence claims re-proved by exhaustive search.
// A found witness for any claim is reported as `inconsistent` (fatal).
std::vector<NonexistenceResult> verify_nonexistence_battery();

}  // namespace lmc
