#include "lmc/canonical.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace lmc {

// The minimum over the equivalence group of the sorted word list is found
// by choosing the rows of the image one at a time. Once rows 0..t are
// fixed, each column's symbols are relabeled by first appearance down
// those rows and the columns sorted by their relabeled contents; rows
// 0..t of the resulting matrix no longer depend on any later choice
// (appending rows refines column ties only), so candidate row orders are
// compared and pruned block by block. Choosing, for a fixed row order,
// first-appearance relabels and content-sorted columns is optimal: making
// any single column's content vector lexicographically smaller never
// raises the row-major reading after re-sorting.
namespace {

constexpr std::uint8_t kUnset = 0xFF;

struct EngineState {
    // columns listed in current sorted order; ties carry equal group ids
    std::vector<std::uint8_t> col_at;  // position -> original column
    std::vector<std::uint16_t> group;  // position -> tie-group id
    std::vector<std::uint8_t> relabel; // flattened n*q map, kUnset = unassigned
    std::vector<std::uint8_t> next_label;  // per original column
    std::vector<bool> used;            // rows consumed
};

class CanonEngine {
  public:
    CanonEngine(const Code& c, std::uint64_t step_cap)
        : code_(c),
          n_(static_cast<std::size_t>(c.n)),
          q_(static_cast<std::size_t>(c.q)),
          m_(c.words.size()),
          step_cap_(step_cap) {}

    // Minimality test against the code's own word list.
    bool run_minimality() {
        reference_ = &code_.words;
        minimality_ = true;
        found_smaller_ = false;
        EngineState st = initial_state();
        descend(st, 0);
        return !found_smaller_;
    }

    // Full canonical form (exact; step_cap ignored).
    std::vector<Word> run_canonical() {
        minimality_ = false;
        best_.assign(m_, Word(n_, 0xFF));  // larger than any real row
        EngineState st = initial_state();
        descend(st, 0);
        return best_;
    }

  private:
    EngineState initial_state() const {
        EngineState st;
        st.col_at.resize(n_);
        for (std::size_t j = 0; j < n_; ++j) st.col_at[j] = static_cast<std::uint8_t>(j);
        st.group.assign(n_, 0);
        st.relabel.assign(n_ * q_, kUnset);
        st.next_label.assign(n_, 0);
        st.used.assign(m_, false);
        return st;
    }

    // Reading row produced by appending row r, without committing.
    void preview_row(const EngineState& st, std::size_t r, Word& out) const {
        const Word& w = code_.words[r];
        out.resize(n_);
        std::size_t p = 0;
        while (p < n_) {
            std::size_t e = p + 1;
            while (e < n_ && st.group[e] == st.group[p]) ++e;
            for (std::size_t i = p; i < e; ++i) {
                std::size_t col = st.col_at[i];
                std::uint8_t lab = st.relabel[col * q_ + w[col]];
                out[i] = (lab == kUnset) ? st.next_label[col] : lab;
            }
            std::sort(out.begin() + p, out.begin() + e);
            p = e;
        }
    }

    EngineState commit_row(const EngineState& st, std::size_t r) const {
        EngineState ns = st;
        const Word& w = code_.words[r];
        ns.used[r] = true;
        for (std::size_t col = 0; col < n_; ++col) {
            std::uint8_t& lab = ns.relabel[col * q_ + w[col]];
            if (lab == kUnset) lab = ns.next_label[col]++;
        }
        // refine column order: stable sort within tie groups by the new symbol
        std::vector<std::uint8_t> sym(n_);
        for (std::size_t p = 0; p < n_; ++p) {
            std::size_t col = ns.col_at[p];
            sym[p] = ns.relabel[col * q_ + w[col]];
        }
        std::vector<std::uint8_t> new_cols(n_);
        std::vector<std::uint16_t> new_group(n_);
        std::size_t p = 0;
        std::uint16_t gid = 0;
        std::vector<std::pair<std::uint8_t, std::uint8_t>> block;  // (sym, col)
        while (p < n_) {
            std::size_t e = p + 1;
            while (e < n_ && ns.group[e] == ns.group[p]) ++e;
            block.clear();
            for (std::size_t i = p; i < e; ++i) block.emplace_back(sym[i], ns.col_at[i]);
            std::stable_sort(block.begin(), block.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            for (std::size_t i = p; i < e; ++i) {
                if (i > p && block[i - p].first != block[i - p - 1].first) ++gid;
                new_cols[i] = block[i - p].second;
                new_group[i] = gid;
            }
            ++gid;
            p = e;
        }
        ns.col_at = std::move(new_cols);
        ns.group = std::move(new_group);
        return ns;
    }

    // depth = number of rows already committed
    void descend(const EngineState& st, std::size_t depth) {
        if (found_smaller_ || steps_exhausted_) return;
        if (depth == m_) {
            if (!minimality_ && current_ < best_) best_ = current_;
            return;
        }
        // candidates ordered by the reading row they produce
        std::vector<std::pair<Word, std::size_t>> cands;
        Word row;
        for (std::size_t r = 0; r < m_; ++r) {
            if (st.used[r]) continue;
            if (step_cap_ && ++steps_ > step_cap_) {
                steps_exhausted_ = true;
                return;
            }
            preview_row(st, r, row);
            if (minimality_) {
                int cmp = compare(row, (*reference_)[depth]);
                if (cmp < 0) {
                    found_smaller_ = true;
                    return;
                }
                if (cmp > 0) continue;
                cands.emplace_back(row, r);
            } else {
                if (depth < best_.size() && compare(row, best_[depth]) > 0) continue;
                cands.emplace_back(row, r);
            }
        }
        std::sort(cands.begin(), cands.end());
        for (auto& [rw, r] : cands) {
            if (found_smaller_ || steps_exhausted_) return;
            if (!minimality_) {
                int cmp = compare(rw, best_[depth]);
                if (cmp > 0) break;  // sorted: the rest are no better
                // equal-prefix exploration continues; smaller resets deeper best
                if (cmp < 0)
                    for (std::size_t t = depth; t < m_; ++t) best_[t].assign(n_, 0xFF);
            }
            current_.resize(depth + 1);
            current_[depth] = rw;
            descend(commit_row(st, r), depth + 1);
        }
    }

    static int compare(const Word& a, const Word& b) {
        return std::memcmp(a.data(), b.data(), a.size());
    }

    const Code& code_;
    std::size_t n_, q_, m_;
    std::uint64_t step_cap_ = 0;
    std::uint64_t steps_ = 0;
    bool steps_exhausted_ = false;

    bool minimality_ = false;
    const std::vector<Word>* reference_ = nullptr;
    bool found_smaller_ = false;

    std::vector<Word> best_;
    std::vector<Word> current_;
};

}  // namespace

Code canonical_form(const Code& c) {
    CanonEngine eng(c, 0);
    auto words = eng.run_canonical();
    Code out;
    out.q = c.q;
    out.n = c.n;
    out.words = std::move(words);
    return out;
}

bool is_orbit_minimal(const Code& c, std::uint64_t step_cap) {
    for (std::size_t i = 1; i < c.words.size(); ++i)
        if (!lex_less(c.words[i - 1], c.words[i]))
            throw std::invalid_argument("is_orbit_minimal: words must be sorted and distinct");
    CanonEngine eng(c, step_cap);
    return eng.run_minimality();
}

bool codes_equivalent(const Code& a, const Code& b) {
    if (a.q != b.q || a.n != b.n || a.size() != b.size()) return false;
    return canonical_form(a).words == canonical_form(b).words;
}

}  // namespace lmc
