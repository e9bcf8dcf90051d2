#include "lmc/code.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lmc {

Code make_code(std::int64_t q, std::int64_t n, std::vector<Word> words) {
    if (q < 2) throw std::invalid_argument("code: alphabet size must be >= 2");
    if (n < 1) throw std::invalid_argument("code: length must be >= 1");
    if (words.empty()) throw std::invalid_argument("code: must contain at least one word");
    std::set<Word> seen;
    for (const auto& w : words) {
        if (static_cast<std::int64_t>(w.size()) != n)
            throw std::invalid_argument("code: word length mismatch");
        for (auto s : w)
            if (s >= q) throw std::invalid_argument("code: symbol out of range");
        if (!seen.insert(w).second) throw std::invalid_argument("code: duplicate word");
    }
    Code c;
    c.q = q;
    c.n = n;
    c.words = std::move(words);
    return c;
}

std::int64_t hamming_distance(const Word& u, const Word& v) {
    if (u.size() != v.size()) throw std::invalid_argument("hamming_distance: length mismatch");
    std::int64_t d = 0;
    for (std::size_t i = 0; i < u.size(); ++i) d += (u[i] != v[i]);
    return d;
}

bool lex_less(const Word& a, const Word& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Code parse_code(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool saw_final_newline = false;

    auto next_data_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            saw_final_newline = !in.eof();
            if (line.empty()) continue;
            if (line[0] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    auto fail = [&](const std::string& msg) -> void {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
    };

    std::string hdr;
    if (!next_data_line(hdr)) fail("missing header line");
    std::istringstream hs(hdr);
    std::int64_t q = 0, n = 0, M = 0;
    std::string extra;
    if (!(hs >> q >> n >> M) || (hs >> extra)) fail("header must be 'q n M'");
    if (q < 2 || q > 255) fail("alphabet size out of range [2, 255]");
    if (n < 1) fail("length must be positive");
    if (M < 1) fail("word count must be positive");

    std::vector<Word> words;
    words.reserve(static_cast<std::size_t>(M));
    for (std::int64_t i = 0; i < M; ++i) {
        std::string wl;
        if (!next_data_line(wl)) fail("expected " + std::to_string(M) + " words, got " +
                                      std::to_string(i));
        std::istringstream ws(wl);
        Word w;
        w.reserve(static_cast<std::size_t>(n));
        std::int64_t sym;
        while (ws >> sym) {
            if (sym < 0 || sym >= q) fail("symbol out of range [0, q)");
            w.push_back(static_cast<std::uint8_t>(sym));
        }
        if (!ws.eof()) fail("malformed symbol");
        if (static_cast<std::int64_t>(w.size()) != n)
            fail("word has " + std::to_string(w.size()) + " symbols, expected " +
                 std::to_string(n));
        words.push_back(std::move(w));
    }
    std::string rest;
    if (next_data_line(rest)) fail("trailing content after last word");
    if (!saw_final_newline) fail("missing trailing newline");

    try {
        return make_code(q, n, std::move(words));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("code body: ") + e.what());
    }
}

Code parse_code_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open file: " + path);
    return parse_code(f);
}

void emit_code(std::ostream& out, const Code& c) {
    out << c.q << ' ' << c.n << ' ' << c.size() << '\n';
    for (const auto& w : c.words) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out << ' ';
            out << static_cast<int>(w[i]);
        }
        out << '\n';
    }
}

std::string emit_code_string(const Code& c) {
    std::ostringstream os;
    emit_code(os, c);
    return os.str();
}

}  // namespace lmc
