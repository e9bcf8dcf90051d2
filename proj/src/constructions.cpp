#include "lmc/constructions.hpp"

#include "lmc/analyzer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace lmc {

namespace {

void verify_min_distance(const Code& c, std::int64_t expect_d, const char* what) {
    auto sp = distance_spectrum(c);
    if (sp.min_distance != expect_d)
        throw std::logic_error(std::string(what) + ": constructed code has minimum distance " +
                               std::to_string(sp.min_distance) + ", expected " +
                               std::to_string(expect_d));
}

}  // namespace

Code simplex_mds(std::int64_t q) {
    FiniteField F(q);
    std::vector<Word> words;
    words.reserve(static_cast<std::size_t>(q * q));
    for (std::int64_t a = 0; a < q; ++a) {
        for (std::int64_t b = 0; b < q; ++b) {
            Word w;
            w.reserve(static_cast<std::size_t>(q + 1));
            w.push_back(static_cast<std::uint8_t>(a));
            w.push_back(static_cast<std::uint8_t>(b));
            for (std::int64_t lam = 1; lam < q; ++lam)
                w.push_back(F.add(static_cast<std::uint8_t>(a),
                                  F.mul(static_cast<std::uint8_t>(lam),
                                        static_cast<std::uint8_t>(b))));
            words.push_back(std::move(w));
        }
    }
    Code c = make_code(q, q + 1, std::move(words));
    verify_min_distance(c, q, "simplex_mds");
    return c;
}

Code concat_length_maximal(std::int64_t q, std::int64_t s) {
    if (s < 0) throw std::domain_error("concat_length_maximal: need s >= 0");
    Code base = simplex_mds(q);
    std::vector<Word> words;
    words.reserve(base.words.size());
    for (const auto& bw : base.words) {
        Word w;
        w.reserve(bw.size() * static_cast<std::size_t>(s + 1));
        for (std::int64_t copy = 0; copy <= s; ++copy) w.insert(w.end(), bw.begin(), bw.end());
        words.push_back(std::move(w));
    }
    Code c = make_code(q, (s + 1) * (q + 1), std::move(words));
    verify_min_distance(c, (s + 1) * q, "concat_length_maximal");
    return c;
}

Code linear_code(const GeneratorMatrix& G) {
    if (G.rows.empty()) throw std::domain_error("linear_code: empty generator");
    FiniteField F(G.q);
    std::int64_t k = static_cast<std::int64_t>(G.rows.size());
    std::int64_t n = static_cast<std::int64_t>(G.rows[0].size());
    for (const auto& r : G.rows)
        if (static_cast<std::int64_t>(r.size()) != n)
            throw std::domain_error("linear_code: ragged generator matrix");

    // rank check by Gaussian elimination
    std::vector<Word> mat = G.rows;
    std::int64_t rank = 0;
    for (std::int64_t col = 0; col < n && rank < k; ++col) {
        std::int64_t pivot = -1;
        for (std::int64_t r = rank; r < k; ++r)
            if (mat[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(mat[rank], mat[pivot]);
        std::uint8_t inv = F.inv(mat[rank][col]);
        for (std::int64_t j = 0; j < n; ++j) mat[rank][j] = F.mul(mat[rank][j], inv);
        for (std::int64_t r = 0; r < k; ++r) {
            if (r == rank || mat[r][col] == 0) continue;
            std::uint8_t factor = mat[r][col];
            for (std::int64_t j = 0; j < n; ++j)
                mat[r][j] = F.sub(mat[r][j], F.mul(factor, mat[rank][j]));
        }
        ++rank;
    }
    if (rank != k) throw std::domain_error("linear_code: generator matrix is rank deficient");

    double size_log = static_cast<double>(k) * std::log2(static_cast<double>(G.q));
    if (size_log > 20.0) throw std::domain_error("linear_code: q^k exceeds 2^20 enumeration guard");

    std::vector<Word> words;
    Word msg(static_cast<std::size_t>(k), 0);
    while (true) {
        Word w(static_cast<std::size_t>(n), 0);
        for (std::int64_t i = 0; i < k; ++i) {
            if (msg[i] == 0) continue;
            for (std::int64_t j = 0; j < n; ++j)
                w[j] = F.add(w[j], F.mul(msg[i], G.rows[i][j]));
        }
        words.push_back(std::move(w));
        std::int64_t pos = k - 1;
        while (pos >= 0) {
            if (++msg[pos] < G.q) break;
            msg[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return make_code(G.q, n, std::move(words));
}

Code coset(const Code& c, const Word& v) {
    if (static_cast<std::int64_t>(v.size()) != c.n)
        throw std::invalid_argument("coset: translation word length mismatch");
    for (auto s : v)
        if (s >= c.q) throw std::invalid_argument("coset: symbol out of range");

    std::vector<Word> words;
    words.reserve(c.words.size());
    if (FiniteField::supported(c.q)) {
        FiniteField F(c.q);
        for (const auto& w : c.words) {
            Word t(w.size());
            for (std::size_t i = 0; i < w.size(); ++i) t[i] = F.add(w[i], v[i]);
            words.push_back(std::move(t));
        }
    } else {
        for (const auto& w : c.words) {
            Word t(w.size());
            for (std::size_t i = 0; i < w.size(); ++i)
                t[i] = static_cast<std::uint8_t>((w[i] + v[i]) % c.q);
            words.push_back(std::move(t));
        }
    }
    return make_code(c.q, c.n, std::move(words));
}

Code nordstrom_robinson() {
    // cyclic length-7 code over Z4 generated by g(x) = 3 + x + 2x^2 + x^3,
    // extended by an overall negative-sum check symbol
    constexpr std::array<int, 4> g = {3, 1, 2, 1};
    std::vector<Word> words;
    words.reserve(256);
    constexpr std::array<std::array<std::uint8_t, 2>, 4> gray = {
        {{0, 0}, {0, 1}, {1, 1}, {1, 0}}};
    for (int m0 = 0; m0 < 4; ++m0)
        for (int m1 = 0; m1 < 4; ++m1)
            for (int m2 = 0; m2 < 4; ++m2)
                for (int m3 = 0; m3 < 4; ++m3) {
                    std::array<int, 4> m = {m0, m1, m2, m3};
                    std::array<int, 7> c{};
                    for (int i = 0; i < 4; ++i)
                        for (int j = 0; j < 4; ++j) c[(i + j) % 7] = (c[(i + j) % 7] + m[i] * g[j]) % 4;
                    int sum = 0;
                    for (int x : c) sum += x;
                    std::array<int, 8> ext{};
                    std::copy(c.begin(), c.end(), ext.begin());
                    ext[7] = (4 - sum % 4) % 4;
                    Word w;
                    w.reserve(16);
                    for (int x : ext) {
                        w.push_back(gray[static_cast<std::size_t>(x)][0]);
                        w.push_back(gray[static_cast<std::size_t>(x)][1]);
                    }
                    words.push_back(std::move(w));
                }
    Code c = make_code(2, 16, std::move(words));
    if (c.size() != 256) throw std::logic_error("nordstrom_robinson: wrong code size");
    verify_min_distance(c, 6, "nordstrom_robinson");
    return c;
}

}  // namespace lmc
