#pragma once

// Exact code-parameter arithmetic: dimension, Singleton defect, and the
// rational-dimension decomposition shared by every bound.
//
// For an (n, M, d)_q code the dimension is kappa = log_q M. We never
// compute kappa itself; everything downstream needs only
//   k          = floor(kappa), the integer with q^k <= M < q^(k+1)
//   kappa_ceil = k when M = q^k, else k+1
//   s          = n - kappa_ceil + 1 - d   (Singleton defect)
// all of which are derived by integer exponentiation and comparison only.

#include "lmc/bigint.hpp"

#include <cstdint>
#include <optional>

namespace lmc {

struct CodeParams {
    std::int64_t q = 0;
    std::int64_t n = 0;
    BigInt M;
    std::int64_t d = 0;

    std::int64_t k = 0;           // floor(kappa)
    std::int64_t kappa_ceil = 0;  // ceil(kappa)
    std::int64_t s = 0;           // may be negative; see singleton_feasible
    bool integer_dimension = false;

    // s >= 0; bundles violating the Singleton bound are flagged, not dropped.
    bool singleton_feasible = false;
};

// Decomposition of a rational non-integer dimension: q = r^b, M = r^a with
// gcd(a, b) = 1 and b >= 2. Absent for exact powers of q (is_integer) and
// for sizes M that are not powers of any root of q (unstructured).
struct RationalDimension {
    bool is_integer = false;
    std::int64_t k = 0;  // floor(kappa)

    bool structured = false;  // meaningful only when !is_integer
    std::int64_t r = 0;
    std::int64_t b = 0;
    std::int64_t a = 0;
};

// Throws std::domain_error on out-of-range input (q < 2, n < 1, M < 1,
// d outside [1, n]) and on M > q^31 (desk-scale guard).
CodeParams derive_params(std::int64_t q, std::int64_t n, const BigInt& M, std::int64_t d);

// Requires q >= 2, M >= 2.
RationalDimension rational_dimension(std::int64_t q, const BigInt& M);

// floor(log_q M): the k with q^k <= M < q^(k+1). Requires q >= 2, M >= 1.
std::int64_t dimension_floor(std::int64_t q, const BigInt& M);

}  // namespace lmc
