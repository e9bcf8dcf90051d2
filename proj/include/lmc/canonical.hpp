#pragma once

// Canonical representatives under code equivalence: coordinate permutations
// composed with independent per-coordinate symbol bijections. The canonical
// form of a code is the equivalent code whose sorted word list is
// lexicographically least; two codes are equivalent iff their canonical
// forms coincide.

#include "lmc/code.hpp"

#include <cstdint>

namespace lmc {

// Exact canonical form. Cost grows with the automorphism group; intended
// for desk-scale codes (M up to a few hundred, short lengths).
Code canonical_form(const Code& c);

// True iff the words of `c`, in sorted order, are already the canonical
// form. Requires c.words sorted ascending. With step_cap > 0 the test
// gives up after that many candidate evaluations and reports true; callers
// using it for isomorph rejection stay correct, merely visiting duplicate
// branches.
bool is_orbit_minimal(const Code& c, std::uint64_t step_cap = 0);

bool codes_equivalent(const Code& a, const Code& b);

}  // namespace lmc
