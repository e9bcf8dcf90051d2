#include "lmc/params.hpp"

#include <stdexcept>

namespace lmc {

namespace {

constexpr unsigned kMaxExponent = 31;  // reject M > q^31

// Integer b-th root if exact: the r >= 2 with r^b == q.
std::optional<std::int64_t> exact_root(std::int64_t q, unsigned b) {
    BigInt root;
    int exactness = mpz_root(root.get_mpz_t(), BigInt(q).get_mpz_t(), b);
    if (exactness == 0) return std::nullopt;
    std::int64_t r = to_i64(root);
    return r >= 2 ? std::optional<std::int64_t>(r) : std::nullopt;
}

// The exponent a with r^a == M, if one exists.
std::optional<std::int64_t> exact_log(std::int64_t r, const BigInt& M) {
    BigInt p = 1;
    for (std::int64_t a = 0; a <= 8 * kMaxExponent; ++a) {
        if (p == M) return a;
        if (p > M) break;
        p *= r;
    }
    return std::nullopt;
}

}  // namespace

std::int64_t dimension_floor(std::int64_t q, const BigInt& M) {
    std::int64_t k = 0;
    BigInt p = q;
    while (p <= M) {
        ++k;
        p *= q;
    }
    return k;
}

CodeParams derive_params(std::int64_t q, std::int64_t n, const BigInt& M, std::int64_t d) {
    if (q < 2) throw std::domain_error("alphabet size q must be >= 2");
    if (n < 1) throw std::domain_error("length n must be >= 1");
    if (M < 1) throw std::domain_error("code size M must be >= 1");
    if (d < 1 || d > n) throw std::domain_error("distance d must satisfy 1 <= d <= n");
    if (M > ipow(q, kMaxExponent))
        throw std::domain_error("code size M exceeds q^31; out of supported range");

    CodeParams p;
    p.q = q;
    p.n = n;
    p.M = M;
    p.d = d;
    p.k = dimension_floor(q, M);
    p.integer_dimension = (ipow(q, static_cast<unsigned>(p.k)) == M);
    p.kappa_ceil = p.integer_dimension ? p.k : p.k + 1;
    p.s = n - p.kappa_ceil + 1 - d;
    p.singleton_feasible = p.s >= 0;
    return p;
}

RationalDimension rational_dimension(std::int64_t q, const BigInt& M) {
    if (q < 2) throw std::domain_error("alphabet size q must be >= 2");
    if (M < 2) throw std::domain_error("code size M must be >= 2");

    RationalDimension rd;
    rd.k = dimension_floor(q, M);
    if (ipow(q, static_cast<unsigned>(rd.k)) == M) {
        rd.is_integer = true;
        return rd;
    }

    // Smallest root r of q (largest exponent b with r^b = q); every other
    // root of q is a power of it, so M is a power of some root of q iff it
    // is a power of r.
    std::int64_t root = q;
    std::int64_t root_exp = 1;
    for (unsigned b = 2; (std::int64_t(1) << b) <= q; ++b) {
        if (auto r = exact_root(q, b)) {
            root = *r;
            root_exp = b;
            break;  // smallest r == largest b
        }
    }
    if (root_exp == 1) return rd;  // q has no proper root: kappa irrational

    auto a_raw = exact_log(root, M);
    if (!a_raw) return rd;  // unstructured

    // Reduce kappa = a/b to lowest terms; the root scales accordingly.
    std::int64_t g = std::gcd(*a_raw, root_exp);
    std::int64_t b = root_exp / g;
    if (b < 2) return rd;  // would be integer dimension; handled above
    rd.structured = true;
    rd.r = to_i64(ipow(root, static_cast<unsigned>(g)));
    rd.b = b;
    rd.a = *a_raw / g;
    return rd;
}

}  // namespace lmc
