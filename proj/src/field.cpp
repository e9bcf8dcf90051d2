#include "lmc/field.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace lmc {

namespace {

struct PrimePower {
    std::int64_t q, p;
    int e;
    // irreducible polynomial coefficients (ascending, degree e), over F_p
    std::array<std::uint8_t, 5> poly;
};

// x^2+x+1 (F4), x^3+x+1 (F8), x^2+1 (F9), x^4+x+1 (F16)
constexpr PrimePower kSupported[] = {
    {2, 2, 1, {0, 1, 0, 0, 0}},  {3, 3, 1, {0, 1, 0, 0, 0}},  {4, 2, 2, {1, 1, 1, 0, 0}},
    {5, 5, 1, {0, 1, 0, 0, 0}},  {7, 7, 1, {0, 1, 0, 0, 0}},  {8, 2, 3, {1, 1, 0, 1, 0}},
    {9, 3, 2, {1, 0, 1, 0, 0}},  {11, 11, 1, {0, 1, 0, 0, 0}}, {13, 13, 1, {0, 1, 0, 0, 0}},
    {16, 2, 4, {1, 1, 0, 0, 1}},
};

const PrimePower* lookup(std::int64_t q) {
    for (const auto& pp : kSupported)
        if (pp.q == q) return &pp;
    return nullptr;
}

using Poly = std::vector<std::uint8_t>;  // coefficients over F_p, ascending, size e

Poly poly_add(const Poly& a, const Poly& b, std::int64_t p) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = static_cast<std::uint8_t>((a[i] + b[i]) % p);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b, const PrimePower& pp) {
    std::vector<int> prod(2 * pp.e, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<int>((prod[i + j] + a[i] * b[j]) % pp.p);
    // reduce modulo the irreducible polynomial (monic of degree e)
    for (int d = 2 * pp.e - 1; d >= pp.e; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < pp.e; ++i) {
            int t = prod[d - pp.e + i] - c * pp.poly[i];
            prod[d - pp.e + i] = static_cast<int>(((t % pp.p) + pp.p) % pp.p);
        }
    }
    Poly r(static_cast<std::size_t>(pp.e));
    for (int i = 0; i < pp.e; ++i) r[i] = static_cast<std::uint8_t>(prod[i]);
    return r;
}

}  // namespace

bool FiniteField::supported(std::int64_t order) { return lookup(order) != nullptr; }

FiniteField::FiniteField(std::int64_t order) : q_(order) {
    const PrimePower* pp = lookup(order);
    if (!pp)
        throw std::domain_error("unsupported field order " + std::to_string(order) +
                                " (supported: 2,3,4,5,7,8,9,11,13,16)");

    // enumerate all field elements as polynomials
    std::vector<Poly> elems;
    std::size_t count = static_cast<std::size_t>(q_);
    for (std::size_t v = 0; v < count; ++v) {
        Poly e(static_cast<std::size_t>(pp->e));
        std::size_t x = v;
        for (int i = 0; i < pp->e; ++i) {
            e[i] = static_cast<std::uint8_t>(x % pp->p);
            x /= pp->p;
        }
        elems.push_back(std::move(e));
    }
    const Poly zero = elems[0];
    const Poly one = elems[1];

    // find a primitive element (smallest in the polynomial enumeration)
    auto elem_index = [&](const Poly& e) -> std::size_t {
        return static_cast<std::size_t>(std::find(elems.begin(), elems.end(), e) - elems.begin());
    };
    std::size_t gen = 0;
    for (std::size_t cand = 1; cand < count; ++cand) {
        Poly acc = one;
        std::int64_t ord = 0;
        do {
            acc = poly_mul(acc, elems[cand], *pp);
            ++ord;
        } while (acc != one && ord <= q_);
        if (ord == q_ - 1) {
            gen = cand;
            break;
        }
    }
    if (gen == 0) throw std::logic_error("no primitive element found");

    // symbol s -> polynomial: 0 -> 0, 1 -> 1 = g^0, 1+j -> g^j
    std::vector<Poly> sym_poly(count);
    sym_poly[0] = zero;
    Poly acc = one;
    for (std::size_t s = 1; s < count; ++s) {
        sym_poly[s] = acc;
        acc = poly_mul(acc, elems[gen], *pp);
    }
    std::vector<std::uint8_t> poly_sym(count);
    for (std::size_t s = 0; s < count; ++s) poly_sym[elem_index(sym_poly[s])] =
        static_cast<std::uint8_t>(s);

    add_.resize(count * count);
    mul_.resize(count * count);
    neg_.resize(count);
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) {
            add_[a * count + b] = poly_sym[elem_index(poly_add(sym_poly[a], sym_poly[b], pp->p))];
            mul_[a * count + b] = poly_sym[elem_index(poly_mul(sym_poly[a], sym_poly[b], *pp))];
        }
    }
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b)
            if (add_[a * count + b] == 0) neg_[a] = static_cast<std::uint8_t>(b);
    }
    verify_axioms();
}

std::uint8_t FiniteField::inv(std::uint8_t a) const {
    if (a == 0) throw std::domain_error("field inverse of zero");
    for (std::int64_t b = 1; b < q_; ++b)
        if (mul(a, static_cast<std::uint8_t>(b)) == 1) return static_cast<std::uint8_t>(b);
    throw std::logic_error("field element without inverse");
}

void FiniteField::verify_axioms() const {
    auto u8 = [](std::int64_t v) { return static_cast<std::uint8_t>(v); };
    for (std::int64_t a = 0; a < q_; ++a) {
        if (add(u8(a), 0) != a || mul(u8(a), 1) != a || mul(u8(a), 0) != 0)
            throw std::logic_error("field identity axiom failed");
        if (add(u8(a), neg(u8(a))) != 0) throw std::logic_error("field negation failed");
        if (a != 0 && mul(u8(a), inv(u8(a))) != 1) throw std::logic_error("field inverse failed");
    }
    for (std::int64_t a = 0; a < q_; ++a)
        for (std::int64_t b = 0; b < q_; ++b) {
            if (add(u8(a), u8(b)) != add(u8(b), u8(a)) || mul(u8(a), u8(b)) != mul(u8(b), u8(a)))
                throw std::logic_error("field commutativity failed");
            for (std::int64_t c = 0; c < q_; ++c) {
                if (mul(u8(a), add(u8(b), u8(c))) != add(mul(u8(a), u8(b)), mul(u8(a), u8(c))))
                    throw std::logic_error("field distributivity failed");
                if (mul(mul(u8(a), u8(b)), u8(c)) != mul(u8(a), mul(u8(b), u8(c))) ||
                    add(add(u8(a), u8(b)), u8(c)) != add(u8(a), add(u8(b), u8(c))))
                    throw std::logic_error("field associativity failed");
            }
        }
}

}  // namespace lmc
