#pragma once

// Closed-form bounds for (n, M, d)_q codes, evaluated exactly over the
// integers/rationals, each with its applicability condition and a stable
// citation tag. Length bounds are stated in terms of the Singleton defect
// s = n - ceil(kappa) + 1 - d; rational-valued bounds are floored since n
// is an integer.

#include "lmc/bigint.hpp"
#include "lmc/params.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lmc {

// --- elementary bounds ----------------------------------------------------

// Griesmer function g_q(k, d) = sum_{i=0}^{k-1} ceil(d / q^i).
BigInt griesmer(std::int64_t q, std::int64_t k, std::int64_t d);

// q-ary Plotkin bound: dq > n(q-1) gives floor(dq / (dq - n(q-1)));
// dq = n(q-1) gives 2(q-1)n; otherwise inapplicable.
std::optional<BigInt> plotkin_qary_max_size(std::int64_t q, std::int64_t n, std::int64_t d);

// Binary Plotkin bound, tightest applicable of the four parity cases.
std::optional<BigInt> plotkin_binary_max_size(std::int64_t n, std::int64_t d);

// Volume of the q-ary Hamming ball of radius t in length n.
BigInt ball_volume(std::int64_t q, std::int64_t n, std::int64_t t);

// Sphere-packing bound: floor(q^n / V(n, floor((d-1)/2))).
BigInt hamming_max_size(std::int64_t q, std::int64_t n, std::int64_t d);

// Singleton bound rearranged as a size bound: M <= q^(n-d+1).
BigInt singleton_max_size(std::int64_t q, std::int64_t n, std::int64_t d);

// --- maximal-arc-type length bounds (integer dimension, M = q^k) ----------

// n <= (s+1)(q+1) + k - 2, for k >= 2.
BigInt max_length_main(std::int64_t q, std::int64_t k, std::int64_t s);

// Singleton-type inequality equivalent to the length bounds.
// Integer dimension:      ceil(d(q+1)/q) <= n - k + 2
// Non-integer dimension: floor(d(q+1)/q) <= n - k + 1
bool improved_singleton_feasible(std::int64_t q, std::int64_t n, std::int64_t k,
                                 std::int64_t d, bool integer_dim);

// Binary family n <= 3s - 2t + k - 1 over integer t >= 0 with s >= 3t + 2;
// reports the tightest member (t maximal). Falls back to the main bound
// when s < 2. Requires k >= 3.
BigInt max_length_binary_refined(std::int64_t k, std::int64_t s);

// All family members (t = 0 .. t_max) for report transparency.
std::vector<std::pair<std::int64_t, BigInt>> binary_refined_family(std::int64_t k,
                                                                   std::int64_t s);

// Dimension-3 banded bounds; tightest of the three bands containing s,
// inapplicable for s < q-1.
std::optional<BigInt> max_length_dim3_band(std::int64_t q, std::int64_t s);

// Stratified bound n <= (s+2-alpha)(q+1) + alpha + k - 3 with
// alpha = floor(s/q) >= 1, k >= 3.
std::optional<BigInt> max_length_stratified(std::int64_t q, std::int64_t k, std::int64_t s);

// Large-defect bound n <= s(q+1) + k - 1 for s >= 2q, k >= 3.
std::optional<BigInt> max_length_large_defect(std::int64_t q, std::int64_t k, std::int64_t s);

// --- non-integer dimension (q^k < M < q^(k+1)) -----------------------------

// Strict form (s+2)(q+1) + k - 3 when floor(kappa) >= 3; the conservative
// (s+2)(q+1) + k - 2 on the kappa in (2,3) edge.
BigInt max_length_noninteger(std::int64_t q, std::int64_t k, std::int64_t s);

// n <= (s+1)(q+1) + k - 1 for s >= 2q - 1.
std::optional<BigInt> max_length_noninteger_large_defect(std::int64_t q, std::int64_t k,
                                                         std::int64_t s);

// n <= (s+3-beta)(q+1) + beta + k - 3 with beta = floor((s+1)/q) >= 2,
// s >= 2q - 1, k >= 3.
std::optional<BigInt> max_length_noninteger_stratified(std::int64_t q, std::int64_t k,
                                                       std::int64_t s);

// --- generalized Plotkin machinery -----------------------------------------

// L(M) = q*C(b,2) + r*b for M = qb + r is the convexity floor on the
// per-coordinate agreement count.
struct GeneralPlotkin {
    BigInt L;           // L(M)
    Rational ratio;     // C(M,2) / L(M), exact
    Rational ceiling;   // the applicable closed-form cap on the ratio
};

// Requires M > q.
GeneralPlotkin plotkin_general(std::int64_t q, const BigInt& M);

// Feasibility n * L(M) <= (n - d) * C(M,2), exact. Requires M > q.
bool plotkin_general_feasible(std::int64_t q, std::int64_t n, const BigInt& M, std::int64_t d);

// Length bound via the agreement ratio:
// n <= (s + ceil(kappa) - k + 1) (q + (q-1)/(floor(M/q^(k-1)) - 1)) + k - 2,
// floored. Requires q^k <= M < q^(k+1) with k >= 2; equals the main bound
// when M = q^k.
BigInt general_s_bound(std::int64_t q, const BigInt& M, std::int64_t s);

// Additive specialization: alphabet Q = q^h, fractional dimension k/h.
// n <= (s+2)(q^h + (q^h - 1)/(q^(k mod h) - 1)) + floor(k/h) - 2, floored.
// Requires h >= 2 and h not dividing k.
BigInt additive_code_bound(std::int64_t q, std::int64_t h, std::int64_t k_add, std::int64_t s);

// --- Griesmer guarantee classifier ------------------------------------------

// First matching condition under which an (n, M, d)_q code is known to
// respect the Griesmer bound (g_q(k, d) for integer dimension, g_q(k+1, d)
// otherwise); nullopt when no catalogued condition applies.
std::optional<std::string> griesmer_guaranteed(std::int64_t q, const BigInt& M, std::int64_t n,
                                               std::int64_t d);

// Distance-free summary for a (q, k, s) cell with M = q^k: either the
// guarantee holds for every d, or up to the reported distance threshold.
struct GriesmerGuaranteeSummary {
    bool always = false;
    std::optional<BigInt> d_max;
    std::string citation;
};

GriesmerGuaranteeSummary griesmer_guarantee_summary(std::int64_t q, std::int64_t k,
                                                    std::int64_t s);

// --- aggregation -------------------------------------------------------------

enum class BoundKind { max_length, max_size, min_length, feasibility };

struct BoundEvaluation {
    std::string id;
    BoundKind kind;
    bool applicable = false;
    std::optional<BigInt> value;       // absent when inapplicable or rational-only
    std::optional<Rational> rational;  // set for ratio-style evaluations
    std::optional<bool> satisfied;     // for feasibility kind
    std::string citation;
};

struct BoundReport {
    CodeParams params;
    std::vector<BoundEvaluation> evaluations;
    std::optional<BigInt> best_max_length;
    std::optional<std::string> griesmer_guaranteed_by;
    bool feasible = false;
};

BoundReport bound_report(std::int64_t q, std::int64_t n, const BigInt& M, std::int64_t d);

const char* bound_kind_name(BoundKind k);

// Long-form description for each bound id (the --cite text).
std::string bound_description(const std::string& id);

}  // namespace lmc
