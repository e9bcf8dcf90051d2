#pragma once

// Explicit block codes: an ordered list of distinct length-n words over
// symbols {0, ..., q-1}, plus the text file format used by the CLI.
//
// File format:
//   header line "q n M" (three base-10 integers), then M lines of n
//   space-separated symbols in [0, q). Lines starting with '#' are
//   comments. A trailing newline is required.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lmc {

using Word = std::vector<std::uint8_t>;

struct Code {
    std::int64_t q = 2;
    std::int64_t n = 0;
    std::vector<Word> words;

    std::int64_t size() const { return static_cast<std::int64_t>(words.size()); }
};

// Validates ranges and distinctness; throws std::invalid_argument.
Code make_code(std::int64_t q, std::int64_t n, std::vector<Word> words);

std::int64_t hamming_distance(const Word& u, const Word& v);

bool lex_less(const Word& a, const Word& b);

// Parse/emit the code file format. Parse throws std::invalid_argument with
// a line-numbered message on malformed input.
Code parse_code(std::istream& in);
Code parse_code_file(const std::string& path);
void emit_code(std::ostream& out, const Code& c);
std::string emit_code_string(const Code& c);

}  // namespace lmc
