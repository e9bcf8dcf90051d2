#pragma once

// Exact integer/rational arithmetic used throughout. All bound and
// parameter computations are float-free; GMP provides the backing
// arbitrary-precision types.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lmc {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt ipow(BigInt base, unsigned exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigInt ipow(std::int64_t base, unsigned exp) { return ipow(BigInt(base), exp); }

// ceil(a/b) for b > 0
inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// floor(a/b) for b > 0
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline BigInt rational_floor(const Rational& r) {
    return floor_div(r.get_num(), r.get_den());
}

inline BigInt rational_ceil(const Rational& r) {
    return ceil_div(r.get_num(), r.get_den());
}

// C(n, 2) without intermediate overflow concerns
inline BigInt choose2(const BigInt& n) { return n * (n - 1) / 2; }

inline BigInt binomial(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline std::int64_t to_i64(const BigInt& v) {
    if (!v.fits_slong_p())
        throw std::overflow_error("value does not fit in 64 bits: " + v.get_str());
    return static_cast<std::int64_t>(v.get_si());
}

}  // namespace lmc
