#include "lmc/analyzer.hpp"

#include "lmc/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lmc {

DistanceSpectrum distance_spectrum(const Code& c) {
    if (c.size() < 2) throw std::invalid_argument("distance_spectrum: need at least two words");
    DistanceSpectrum sp;
    std::map<std::int64_t, std::int64_t> counts;
    for (std::size_t i = 0; i < c.words.size(); ++i)
        for (std::size_t j = i + 1; j < c.words.size(); ++j)
            ++counts[hamming_distance(c.words[i], c.words[j])];
    for (auto& [d, cnt] : counts) sp.counts[d] = cnt;
    sp.min_distance = sp.counts.begin()->first;
    return sp;
}

ColumnProfile column_profile(const Code& c) {
    ColumnProfile cp;
    cp.freq.assign(static_cast<std::size_t>(c.n),
                   std::vector<std::int64_t>(static_cast<std::size_t>(c.q), 0));
    for (const auto& w : c.words)
        for (std::int64_t i = 0; i < c.n; ++i) ++cp.freq[i][w[i]];
    cp.agreement.reserve(static_cast<std::size_t>(c.n));
    for (std::int64_t i = 0; i < c.n; ++i) {
        BigInt a = 0;
        for (auto f : cp.freq[i]) a += choose2(BigInt(f));
        cp.agreement.push_back(std::move(a));
    }
    return cp;
}

UniformityResult is_symbol_uniform(const Code& c) {
    UniformityResult r;
    if (c.size() % c.q != 0) {
        r.uniform = false;
        for (std::int64_t i = 0; i < c.n; ++i) r.offending.push_back(i);
        return r;
    }
    std::int64_t share = c.size() / c.q;
    auto cp = column_profile(c);
    for (std::int64_t i = 0; i < c.n; ++i)
        if (!std::all_of(cp.freq[i].begin(), cp.freq[i].end(),
                         [&](std::int64_t f) { return f == share; }))
            r.offending.push_back(i);
    r.uniform = r.offending.empty();
    return r;
}

Code shorten(const Code& c, std::int64_t i, std::uint8_t a) {
    if (i < 0 || i >= c.n) throw std::invalid_argument("shorten: coordinate out of range");
    if (a >= c.q) throw std::invalid_argument("shorten: symbol out of range");
    if (c.n < 2) throw std::invalid_argument("shorten: cannot shorten length-1 code");
    std::vector<Word> kept;
    for (const auto& w : c.words) {
        if (w[i] != a) continue;
        Word v;
        v.reserve(static_cast<std::size_t>(c.n) - 1);
        for (std::int64_t j = 0; j < c.n; ++j)
            if (j != i) v.push_back(w[j]);
        kept.push_back(std::move(v));
    }
    if (kept.empty()) throw std::invalid_argument("shorten: empty result");
    return make_code(c.q, c.n - 1, std::move(kept));
}

DefectShortening defect_preserving_shorten(const Code& c) {
    if (c.size() < 2)
        throw std::invalid_argument("defect_preserving_shorten: need at least two words");
    // lexicographically least minimum-distance pair (by word values)
    std::int64_t d = c.n + 1;
    const Word* x = nullptr;
    const Word* y = nullptr;
    for (std::size_t i = 0; i < c.words.size(); ++i) {
        for (std::size_t j = i + 1; j < c.words.size(); ++j) {
            const Word* u = &c.words[i];
            const Word* v = &c.words[j];
            if (lex_less(*v, *u)) std::swap(u, v);
            std::int64_t dist = hamming_distance(*u, *v);
            if (dist < d ||
                (dist == d && (lex_less(*u, *x) || (*u == *x && lex_less(*v, *y))))) {
                d = dist;
                x = u;
                y = v;
            }
        }
    }
    if (d == c.n)
        throw std::invalid_argument(
            "defect_preserving_shorten: no agreeing coordinate (all minimum-distance pairs are "
            "at distance n)");
    std::int64_t coord = -1;
    for (std::int64_t i = 0; i < c.n; ++i)
        if ((*x)[i] == (*y)[i]) {
            coord = i;
            break;
        }
    DefectShortening out{coord, (*x)[coord], shorten(c, coord, (*x)[coord])};
    return out;
}

Code normalize_zero(const Code& c) {
    const Word* least = &c.words[0];
    for (const auto& w : c.words)
        if (lex_less(w, *least)) least = &w;
    std::vector<Word> out;
    out.reserve(c.words.size());
    for (const auto& w : c.words) {
        Word v = w;
        for (std::int64_t i = 0; i < c.n; ++i) {
            // transposition 0 <-> least[i] in coordinate i
            if (v[i] == (*least)[i])
                v[i] = 0;
            else if (v[i] == 0)
                v[i] = (*least)[i];
        }
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(), lex_less);
    return make_code(c.q, c.n, std::move(out));
}

StructureReport structure_report(const Code& c) {
    if (c.size() < 2) throw std::invalid_argument("structure_report: need at least two words");
    StructureReport r;
    auto sp = distance_spectrum(c);
    r.params = derive_params(c.q, c.n, BigInt(c.size()), sp.min_distance);
    const auto& p = r.params;

    r.symbol_uniform = is_symbol_uniform(c).uniform;
    r.equidistant = sp.equidistant();

    if (p.s >= 0 && p.k >= 2) {
        BigInt lm = p.integer_dimension ? max_length_main(p.q, p.k, p.s)
                                        : BigInt(p.s + 2) * (p.q + 1) + p.k - 2;
        r.length_maximal = (BigInt(p.n) == lm);
    }

    // distances within {d} u {n-k+3, ..., n}
    r.spectrum_ok = true;
    for (const auto& [dist, cnt] : sp.counts)
        if (dist != sp.min_distance && dist < p.n - p.k + 3) r.spectrum_ok = false;

    BigInt qq1 = BigInt(p.q) * (p.q + 1);
    r.divisibility_ok = p.s >= 0 && qq1 % (p.s + 2) == 0;
    r.defect_small = p.s >= 0 && p.s <= p.q - 1;
    r.gcd_refinement =
        p.s < 0 || std::gcd(p.s + 2, p.q) != 1 || (p.q + 1) % (p.s + 2) == 0;
    r.divisibility_applies = r.length_maximal && p.integer_dimension && p.k >= 3;

    if (p.integer_dimension && p.k == 2 && r.length_maximal) {
        bool agree = sp.equidistant() && (p.n - sp.min_distance == p.s + 1);
        r.k2_equality = r.symbol_uniform && agree;
    }

    r.necessary_conditions_ok = true;
    if (r.length_maximal && p.integer_dimension && p.k >= 2) {
        r.necessary_conditions_ok = r.symbol_uniform && r.spectrum_ok;
        if (p.k >= 3)
            r.necessary_conditions_ok = r.necessary_conditions_ok && r.divisibility_ok &&
                                        r.defect_small && r.gcd_refinement;
        if (r.k2_equality) r.necessary_conditions_ok &= *r.k2_equality;
    }
    return r;
}

}  // namespace lmc
