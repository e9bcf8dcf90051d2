#include "lmc/search.hpp"

#include "lmc/analyzer.hpp"
#include "lmc/bounds.hpp"
#include "lmc/canonical.hpp"
#include "lmc/params.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace lmc {

const char* search_status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::exhausted_none: return "exhausted_none";
        case SearchStatus::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

SearchStats& SearchStats::operator+=(const SearchStats& o) {
    nodes += o.nodes;
    pruned_bound += o.pruned_bound;
    pruned_canonical += o.pruned_canonical;
    pruned_uniform += o.pruned_uniform;
    pruned_spectrum += o.pruned_spectrum;
    wall_ms += o.wall_ms;
    return *this;
}

namespace {

constexpr std::uint64_t kCanonicalStepCap = 50'000;

// Packed words: fixed bits per symbol (1, 2, 4 or 8), one u64 per word.
struct Packing {
    int bps = 1;
    std::uint64_t fold_mask = 0;

    static Packing forAlphabet(std::int64_t q, std::int64_t n) {
        Packing p;
        if (q <= 2)
            p.bps = 1;
        else if (q <= 4)
            p.bps = 2;
        else if (q <= 16)
            p.bps = 4;
        else
            p.bps = 8;
        if (n * p.bps > 64)
            throw std::invalid_argument("search: q^n space too wide to pack (n * bits > 64)");
        std::uint64_t unit = 1;
        for (int off = p.bps; off < 64; off += p.bps) unit |= (std::uint64_t(1) << off);
        p.fold_mask = unit;
        return p;
    }

    std::uint64_t pack(const Word& w) const {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            v |= static_cast<std::uint64_t>(w[i]) << (i * static_cast<std::size_t>(bps));
        return v;
    }

    Word unpack(std::uint64_t v, std::int64_t n) const {
        Word w(static_cast<std::size_t>(n));
        std::uint64_t sym_mask = (bps == 8) ? 0xFF : ((std::uint64_t(1) << bps) - 1);
        for (std::int64_t i = 0; i < n; ++i)
            w[static_cast<std::size_t>(i)] =
                static_cast<std::uint8_t>((v >> (i * bps)) & sym_mask);
        return w;
    }

    int distance(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t t = a ^ b;
        switch (bps) {
            case 1: return std::popcount(t);
            case 2: t = (t | (t >> 1)) & fold_mask; return std::popcount(t);
            case 4: t = (t | (t >> 1) | (t >> 2) | (t >> 3)) & fold_mask; return std::popcount(t);
            default:
                t = (t | (t >> 1) | (t >> 2) | (t >> 3) | (t >> 4) | (t >> 5) | (t >> 6) |
                     (t >> 7)) &
                    fold_mask;
                return std::popcount(t);
        }
    }
};

struct Shared {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> budget_hit{false};
    std::chrono::steady_clock::time_point deadline;
    std::uint64_t node_budget = 0;
};

class Searcher {
  public:
    Searcher(const SearchConfig& cfg, const Packing& pk, Shared& sh)
        : cfg_(cfg), pk_(pk), sh_(sh) {
        colfreq_.assign(static_cast<std::size_t>(cfg.n) * static_cast<std::size_t>(cfg.q), 0);
        if (cfg_.restrict_spectrum) {
            std::int64_t k = dimension_floor(cfg_.q, BigInt(cfg_.M_target));
            allowed_.assign(static_cast<std::size_t>(cfg_.n) + 1, false);
            allowed_[static_cast<std::size_t>(cfg_.d_min)] = true;
            for (std::int64_t dd = std::max<std::int64_t>(cfg_.n - k + 3, 0); dd <= cfg_.n; ++dd)
                allowed_[static_cast<std::size_t>(dd)] = true;
        }
        uniform_cap_ = cfg_.assume_symbol_uniform ? cfg_.M_target / cfg_.q : 0;
    }

    // true when the search below this point completed (not stopped)
    bool run(std::vector<std::uint64_t>& chosen, const std::vector<std::uint64_t>& candidates) {
        return extend(chosen, candidates);
    }

    SearchStats stats;
    std::optional<std::vector<std::uint64_t>> witness;

    bool push_checked(std::vector<std::uint64_t>& chosen, std::uint64_t w, bool count_node = true) {
        // column-frequency cap under assume_symbol_uniform
        if (cfg_.assume_symbol_uniform) {
            Word uw = pk_.unpack(w, cfg_.n);
            for (std::int64_t i = 0; i < cfg_.n; ++i)
                if (colfreq_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cfg_.q) +
                             uw[static_cast<std::size_t>(i)]] +
                        1 >
                    uniform_cap_) {
                    ++stats.pruned_uniform;
                    return false;
                }
        }
        chosen.push_back(w);
        apply_freq(w, +1);
        if (count_node) {
            ++stats.nodes;
            bump_shared_nodes();
        }
        return true;
    }

    void pop(std::vector<std::uint64_t>& chosen) {
        apply_freq(chosen.back(), -1);
        chosen.pop_back();
    }

    bool canonical_ok(const std::vector<std::uint64_t>& chosen) {
        Code partial;
        partial.q = cfg_.q;
        partial.n = cfg_.n;
        partial.words.reserve(chosen.size());
        for (auto v : chosen) partial.words.push_back(pk_.unpack(v, cfg_.n));
        if (is_orbit_minimal(partial, kCanonicalStepCap)) return true;
        ++stats.pruned_canonical;
        return false;
    }

    std::vector<std::uint64_t> filter_candidates(const std::vector<std::uint64_t>& candidates,
                                                 std::uint64_t w) {
        std::vector<std::uint64_t> out;
        out.reserve(candidates.size());
        for (auto c : candidates) {
            if (c <= w) continue;
            int d = pk_.distance(c, w);
            if (d < cfg_.d_min) continue;
            if (cfg_.restrict_spectrum && !allowed_[static_cast<std::size_t>(d)]) {
                ++stats.pruned_spectrum;
                continue;
            }
            out.push_back(c);
        }
        return out;
    }

  private:
    void apply_freq(std::uint64_t w, int delta) {
        if (!cfg_.assume_symbol_uniform) return;
        Word uw = pk_.unpack(w, cfg_.n);
        for (std::int64_t i = 0; i < cfg_.n; ++i)
            colfreq_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cfg_.q) +
                     uw[static_cast<std::size_t>(i)]] += delta;
    }

    void bump_shared_nodes() {
        if (++local_nodes_ % 512 == 0) {
            auto total = sh_.nodes.fetch_add(512, std::memory_order_relaxed) + 512;
            if (total > sh_.node_budget ||
                std::chrono::steady_clock::now() > sh_.deadline) {
                sh_.budget_hit.store(true, std::memory_order_relaxed);
                sh_.stop.store(true, std::memory_order_relaxed);
            }
        }
    }

    // Upper bound on how many pairwise-compatible words remain: greedy
    // coloring of the compatibility graph restricted to the candidates
    // (each color class is pairwise-incompatible, so any valid extension
    // takes at most one word per class).
    std::size_t coloring_bound(const std::vector<std::uint64_t>& candidates) {
        classes_.clear();
        for (auto c : candidates) {
            bool placed = false;
            for (auto& cls : classes_) {
                bool independent = true;
                for (auto m : cls)
                    if (pk_.distance(c, m) >= cfg_.d_min) {
                        independent = false;
                        break;
                    }
                if (independent) {
                    cls.push_back(c);
                    placed = true;
                    break;
                }
            }
            if (!placed) classes_.push_back({c});
        }
        return classes_.size();
    }

    bool extend(std::vector<std::uint64_t>& chosen, const std::vector<std::uint64_t>& candidates) {
        if (sh_.stop.load(std::memory_order_relaxed)) return false;
        if (static_cast<std::int64_t>(chosen.size()) == cfg_.M_target) {
            if (!witness || chosen < *witness) witness = chosen;
            sh_.stop.store(true, std::memory_order_relaxed);
            return false;
        }
        std::int64_t needed = cfg_.M_target - static_cast<std::int64_t>(chosen.size());
        if (static_cast<std::int64_t>(candidates.size()) < needed) {
            ++stats.pruned_bound;
            return true;
        }
        if (static_cast<std::int64_t>(coloring_bound(candidates)) < needed) {
            ++stats.pruned_bound;
            return true;
        }
        bool complete = true;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (sh_.stop.load(std::memory_order_relaxed)) return false;
            // remaining candidates (all > current) cannot fill the quota
            if (static_cast<std::int64_t>(candidates.size() - i) < needed) break;
            std::uint64_t w = candidates[i];
            if (!push_checked(chosen, w)) continue;
            if (canonical_ok(chosen)) {
                auto child = filter_candidates(candidates, w);
                complete &= extend(chosen, child);
            }
            pop(chosen);
        }
        return complete && !sh_.stop.load(std::memory_order_relaxed);
    }

    const SearchConfig& cfg_;
    const Packing& pk_;
    Shared& sh_;
    std::vector<std::int64_t> colfreq_;
    std::vector<bool> allowed_;
    std::int64_t uniform_cap_ = 0;
    std::uint64_t local_nodes_ = 0;
    std::vector<std::vector<std::uint64_t>> classes_;
};

void validate_config(const SearchConfig& cfg) {
    if (cfg.q < 2) throw std::invalid_argument("search: q must be >= 2");
    if (cfg.q > 255) throw std::invalid_argument("search: q must be <= 255");
    if (cfg.n < 1) throw std::invalid_argument("search: n must be >= 1");
    if (cfg.M_target < 1) throw std::invalid_argument("search: M must be >= 1");
    if (cfg.d_min < 1 || cfg.d_min > cfg.n)
        throw std::invalid_argument("search: need 1 <= d <= n");
    if (cfg.workers < 1) throw std::invalid_argument("search: workers must be >= 1");

    if (!cfg.override_space_guard && ipow(cfg.q, static_cast<unsigned>(cfg.n)) > (1 << 24))
        throw std::invalid_argument("search: q^n exceeds 2^24 guard (pass the override to force)");

    if (cfg.assume_symbol_uniform || cfg.restrict_spectrum) {
        std::string why;
        std::int64_t k = dimension_floor(cfg.q, BigInt(cfg.M_target));
        bool integer_dim = (ipow(cfg.q, static_cast<unsigned>(k)) == cfg.M_target);
        if (!integer_dim || k < 2) {
            why = "M is not q^k with k >= 2";
        } else {
            std::int64_t s = cfg.n - k + 1 - cfg.d_min;
            if (s < 0 || BigInt(cfg.n) != max_length_main(cfg.q, k, s))
                why = "(n, M, d) is not length-maximal";
        }
        if (!why.empty())
            throw std::invalid_argument(
                "search: structural pruning flags are valid only for length-maximal targets: " +
                why);
        if (cfg.assume_symbol_uniform && cfg.M_target % cfg.q != 0)
            throw std::invalid_argument("search: assume_symbol_uniform requires q | M");
    }
}

Code witness_to_code(const SearchConfig& cfg, const Packing& pk,
                     const std::vector<std::uint64_t>& packed) {
    std::vector<Word> words;
    words.reserve(packed.size());
    for (auto v : packed) words.push_back(pk.unpack(v, cfg.n));
    Code c = make_code(cfg.q, cfg.n, std::move(words));  // validates distinctness/ranges
    for (std::size_t i = 0; i < c.words.size(); ++i)
        for (std::size_t j = i + 1; j < c.words.size(); ++j)
            if (hamming_distance(c.words[i], c.words[j]) < cfg.d_min)
                throw std::logic_error("search: witness violates the distance constraint");
    return c;
}

std::vector<std::uint64_t> all_words_packed(const SearchConfig& cfg, const Packing& pk) {
    BigInt total = ipow(cfg.q, static_cast<unsigned>(cfg.n));
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<std::size_t>(total.get_ui()));
    Word w(static_cast<std::size_t>(cfg.n), 0);
    while (true) {
        out.push_back(pk.pack(w));
        std::int64_t pos = cfg.n - 1;
        while (pos >= 0) {
            if (++w[static_cast<std::size_t>(pos)] < cfg.q) break;
            w[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

SearchOutcome search(const SearchConfig& cfg) {
    validate_config(cfg);
    auto t0 = std::chrono::steady_clock::now();
    Packing pk = Packing::forAlphabet(cfg.q, cfg.n);

    Shared sh;
    sh.node_budget = cfg.node_budget;
    sh.deadline = t0 + std::chrono::milliseconds(cfg.time_budget_ms);

    // NOTE: packed values ordered like words since symbols pack little-endian
    // by coordinate... lexicographic word order must match packed order.
    std::vector<std::uint64_t> universe = all_words_packed(cfg, pk);

    SearchOutcome out;
    std::vector<SearchStats> worker_stats;
    std::vector<std::vector<std::uint64_t>> found;

    auto finish = [&](bool completed) {
        for (auto& s : worker_stats) out.stats += s;
        out.stats.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
        if (!found.empty()) {
            auto best = *std::min_element(found.begin(), found.end());
            out.witness = witness_to_code(cfg, pk, best);
            out.status = SearchStatus::found;
        } else if (!completed || sh.budget_hit.load()) {
            out.status = SearchStatus::budget_exceeded;
        } else {
            out.status = SearchStatus::exhausted_none;
        }
    };

    // roots: fixed zero word, or every word as a starting point
    std::vector<std::uint64_t> roots;
    if (cfg.assume_zero_word)
        roots.push_back(0);
    else
        roots = universe;

    bool completed = true;
    if (cfg.workers == 1) {
        Searcher s(cfg, pk, sh);
        worker_stats.resize(1);
        for (auto r : roots) {
            std::vector<std::uint64_t> chosen;
            if (!s.push_checked(chosen, r)) continue;
            if (s.canonical_ok(chosen)) {
                auto cands = s.filter_candidates(universe, r);
                completed &= s.run(chosen, cands);
            }
            s.pop(chosen);
            if (sh.stop.load()) break;
        }
        if (s.witness) found.push_back(*s.witness);
        worker_stats[0] = s.stats;
        finish(completed && !sh.budget_hit.load());
        return out;
    }

    // multi-worker: split at depth 1 (choice of the second word)
    struct Branch {
        std::vector<std::uint64_t> chosen;
        std::vector<std::uint64_t> candidates;
    };
    std::vector<Branch> branches;
    SearchStats split_stats;
    {
        Searcher s(cfg, pk, sh);
        for (auto r : roots) {
            std::vector<std::uint64_t> chosen;
            if (!s.push_checked(chosen, r)) continue;
            if (s.canonical_ok(chosen)) {
                if (static_cast<std::int64_t>(chosen.size()) == cfg.M_target) {
                    found.push_back(chosen);
                    break;
                }
                auto cands = s.filter_candidates(universe, r);
                for (auto w : cands) {
                    if (!s.push_checked(chosen, w)) continue;
                    if (s.canonical_ok(chosen)) {
                        if (static_cast<std::int64_t>(chosen.size()) == cfg.M_target)
                            found.push_back(chosen);
                        else
                            branches.push_back({chosen, s.filter_candidates(cands, w)});
                    }
                    s.pop(chosen);
                }
            }
            s.pop(chosen);
        }
        split_stats = s.stats;
    }
    if (!found.empty()) {
        worker_stats.push_back(split_stats);
        finish(true);
        return out;
    }

    std::atomic<std::size_t> next{0};
    std::mutex result_mu;
    worker_stats.resize(static_cast<std::size_t>(cfg.workers));
    std::vector<std::thread> pool;
    std::atomic<bool> all_complete{true};
    for (int t = 0; t < cfg.workers; ++t) {
        pool.emplace_back([&, t] {
            Searcher s(cfg, pk, sh);
            for (std::size_t bi = next.fetch_add(1); bi < branches.size();
                 bi = next.fetch_add(1)) {
                if (sh.stop.load()) break;
                auto chosen = branches[bi].chosen;
                // rebuild frequency state for this branch prefix
                std::vector<std::uint64_t> rebuilt;
                bool ok = true;
                for (auto w : chosen) ok &= s.push_checked(rebuilt, w, /*count_node=*/false);
                if (!ok) continue;
                if (!s.run(rebuilt, branches[bi].candidates)) all_complete = false;
                while (!rebuilt.empty()) s.pop(rebuilt);
            }
            std::lock_guard<std::mutex> lk(result_mu);
            if (s.witness) found.push_back(*s.witness);
            worker_stats[static_cast<std::size_t>(t)] = s.stats;
        });
    }
    for (auto& th : pool) th.join();
    worker_stats.push_back(split_stats);
    finish(all_complete.load() || !found.empty());
    return out;
}

OracleResult max_size_oracle(std::int64_t q, std::int64_t n, std::int64_t d) {
    if (q < 2 || n < 1 || d < 1 || d > n)
        throw std::invalid_argument("max_size_oracle: need q >= 2, 1 <= d <= n");
    if (ipow(q, static_cast<unsigned>(n)) > (1 << 20))
        throw std::invalid_argument("max_size_oracle: q^n exceeds 2^20 guard");

    OracleResult res;
    if (d == 1) {
        // any set of distinct words has minimum distance >= 1
        res.max_size = ipow(q, static_cast<unsigned>(n));
        Code whole;
        whole.q = q;
        whole.n = n;
        Word w(static_cast<std::size_t>(n), 0);
        while (true) {
            whole.words.push_back(w);
            std::int64_t pos = n - 1;
            while (pos >= 0) {
                if (++w[static_cast<std::size_t>(pos)] < q) break;
                w[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
        res.witness = std::move(whole);
        return res;
    }

    Code best;
    best.q = q;
    best.n = n;
    best.words.push_back(Word(static_cast<std::size_t>(n), 0));
    std::int64_t M = 2;
    while (true) {
        SearchConfig cfg;
        cfg.q = q;
        cfg.n = n;
        cfg.M_target = M;
        cfg.d_min = d;
        SearchOutcome oc = search(cfg);
        res.stats += oc.stats;
        if (oc.status == SearchStatus::budget_exceeded)
            throw std::runtime_error("max_size_oracle: search budget exhausted at M = " +
                                     std::to_string(M));
        if (oc.status == SearchStatus::exhausted_none) break;
        best = *oc.witness;
        ++M;
    }
    res.max_size = M - 1;
    res.witness = std::move(best);
    return res;
}

std::vector<NonexistenceResult> verify_nonexistence_battery() {
    struct Claim {
        std::int64_t q, n, M, d;
        std::string text;
        std::uint64_t nodes;
        std::int64_t ms;
    };
    const Claim claims[] = {
        {2, 4, 4, 3, "no (4,4,3)_2: MDS-defect bound gives n <= 3 at s=0", 100'000'000, 60'000},
        {3, 5, 9, 4, "no (5,9,4)_3: MDS-defect bound gives n <= 4 at s=0", 100'000'000, 60'000},
        {2, 5, 8, 3, "no (5,8,3)_2: length bound gives n <= 4 at s=0, k=3", 100'000'000, 60'000},
        {2, 7, 8, 5, "no (7,8,5)_2: length bound gives n <= 4 at s=0, k=3", 100'000'000, 60'000},
        {2, 8, 32, 3, "no (8,32,3)_2: sphere packing caps M at 28", 50'000'000, 120'000},
        {3, 6, 27, 4, "no (6,27,4)_3: length bound gives n <= 5 at s=0, k=3", 50'000'000,
         120'000},
    };
    std::vector<NonexistenceResult> out;
    for (const auto& cl : claims) {
        NonexistenceResult r;
        r.config.q = cl.q;
        r.config.n = cl.n;
        r.config.M_target = cl.M;
        r.config.d_min = cl.d;
        r.config.node_budget = cl.nodes;
        r.config.time_budget_ms = cl.ms;
        r.claim = cl.text;
        SearchOutcome oc = search(r.config);
        r.stats = oc.stats;
        switch (oc.status) {
            case SearchStatus::exhausted_none: r.status = ClaimStatus::verified; break;
            case SearchStatus::budget_exceeded: r.status = ClaimStatus::skipped; break;
            case SearchStatus::found: r.status = ClaimStatus::inconsistent; break;
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace lmc
