#pragma once

// Witness-code constructions: the two-dimensional MDS simplex code and its
// concatenated length-maximal family, generic linear codes and cosets, and
// the Nordstrom-Robinson code. Every construction verifies its own
// parameters before returning.

#include "lmc/code.hpp"
#include "lmc/field.hpp"

#include <cstdint>
#include <vector>

namespace lmc {

// Generator matrix over a supported finite field, k rows by n columns of
// symbols; rejected unless it has rank k.
struct GeneratorMatrix {
    std::int64_t q = 2;
    std::vector<Word> rows;  // each of length n
};

// The (q+1, q^2, q)_q MDS code with codewords (a, b, a + lambda*b) over all
// nonzero lambda; equidistant with pairwise agreement 1.
Code simplex_mds(std::int64_t q);

// s+1 concatenated copies of simplex_mds(q): an ((s+1)(q+1), q^2, (s+1)q)_q
// length-maximal code with pairwise agreement s+1.
Code concat_length_maximal(std::int64_t q, std::int64_t s);

// All q^k codewords of the linear code generated by G (message enumeration
// in symbol order). Guarded at q^k <= 2^20.
Code linear_code(const GeneratorMatrix& G);

// Translate every codeword by v, symbol-wise: field addition when q is a
// supported prime power, addition mod q otherwise.
Code coset(const Code& c, const Word& v);

// The (16, 256, 6)_2 Nordstrom-Robinson code as the Gray image of the
// length-8 extended cyclic code over Z4 generated by x^3 + 2x^2 + x + 3.
Code nordstrom_robinson();

}  // namespace lmc
