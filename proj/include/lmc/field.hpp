#pragma once

// Small finite fields via lookup tables, for the prime-power constructions.
// Supported orders: {2, 3, 4, 5, 7, 8, 9, 11, 13, 16} with fixed irreducible
// polynomials. Elements map to symbols by the enumeration 0, 1 = g^0,
// then g, g^2, ... for a fixed primitive element g, so emitted codes are
// deterministic.

#include <cstdint>
#include <vector>

namespace lmc {

class FiniteField {
  public:
    // Throws std::domain_error for unsupported orders.
    explicit FiniteField(std::int64_t order);

    std::int64_t order() const { return q_; }
    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[idx(a, b)]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[idx(a, b)]; }
    std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add(a, neg(b)); }
    std::uint8_t inv(std::uint8_t a) const;  // throws on a = 0

    static bool supported(std::int64_t order);

  private:
    std::size_t idx(std::uint8_t a, std::uint8_t b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + b;
    }
    void verify_axioms() const;

    std::int64_t q_;
    std::vector<std::uint8_t> add_, mul_, neg_;
};

}  // namespace lmc
