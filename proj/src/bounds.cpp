#include "lmc/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace lmc {

BigInt griesmer(std::int64_t q, std::int64_t k, std::int64_t d) {
    if (q < 2 || k < 1 || d < 1) throw std::domain_error("griesmer: need q >= 2, k >= 1, d >= 1");
    BigInt sum = 0;
    BigInt p = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        sum += ceil_div(BigInt(d), p);
        p *= q;
    }
    return sum;
}

std::optional<BigInt> plotkin_qary_max_size(std::int64_t q, std::int64_t n, std::int64_t d) {
    BigInt dq = BigInt(d) * q;
    BigInt excess = dq - BigInt(n) * (q - 1);
    if (excess > 0) return floor_div(dq, excess);
    if (excess == 0) return BigInt(2) * (q - 1) * n;
    return std::nullopt;
}

std::optional<BigInt> plotkin_binary_max_size(std::int64_t n, std::int64_t d) {
    std::optional<BigInt> best;
    auto take = [&](BigInt v) {
        if (!best || v < *best) best = std::move(v);
    };
    if (d % 2 == 0) {
        if (2 * d > n) take(BigInt(2) * floor_div(BigInt(d), BigInt(2 * d - n)));
        if (n == 2 * d) take(BigInt(4) * d);
    } else {
        if (2 * d + 1 > n) take(BigInt(2) * floor_div(BigInt(d + 1), BigInt(2 * d + 1 - n)));
        if (n == 2 * d + 1) take(BigInt(4) * d + 4);
    }
    return best;
}

BigInt ball_volume(std::int64_t q, std::int64_t n, std::int64_t t) {
    if (t < 0 || t > n) throw std::domain_error("ball_volume: need 0 <= t <= n");
    BigInt v = 0;
    for (std::int64_t i = 0; i <= t; ++i)
        v += binomial(static_cast<unsigned>(n), static_cast<unsigned>(i)) *
             ipow(q - 1, static_cast<unsigned>(i));
    return v;
}

BigInt hamming_max_size(std::int64_t q, std::int64_t n, std::int64_t d) {
    std::int64_t t = (d - 1) / 2;
    return floor_div(ipow(q, static_cast<unsigned>(n)), ball_volume(q, n, t));
}

BigInt singleton_max_size(std::int64_t q, std::int64_t n, std::int64_t d) {
    return ipow(q, static_cast<unsigned>(n - d + 1));
}

BigInt max_length_main(std::int64_t q, std::int64_t k, std::int64_t s) {
    if (k < 2) throw std::domain_error("max_length_main: need k >= 2");
    if (s < 0) throw std::domain_error("max_length_main: need s >= 0");
    return BigInt(s + 1) * (q + 1) + k - 2;
}

bool improved_singleton_feasible(std::int64_t q, std::int64_t n, std::int64_t k,
                                 std::int64_t d, bool integer_dim) {
    if (k < 2) throw std::domain_error("improved_singleton_feasible: need k >= 2");
    BigInt lhs = BigInt(d) * (q + 1);
    if (integer_dim) return ceil_div(lhs, BigInt(q)) <= n - k + 2;
    return floor_div(lhs, BigInt(q)) <= n - k + 1;
}

std::vector<std::pair<std::int64_t, BigInt>> binary_refined_family(std::int64_t k,
                                                                   std::int64_t s) {
    std::vector<std::pair<std::int64_t, BigInt>> out;
    if (k < 3 || s < 2) return out;
    for (std::int64_t t = 0; 3 * t + 2 <= s; ++t)
        out.emplace_back(t, BigInt(3 * s - 2 * t + k - 1));
    return out;
}

BigInt max_length_binary_refined(std::int64_t k, std::int64_t s) {
    if (k < 3) throw std::domain_error("max_length_binary_refined: need k >= 3");
    if (s < 2) return max_length_main(2, k, s);
    std::int64_t t_max = (s - 2) / 3;
    return BigInt(3 * s - 2 * t_max + k - 1);
}

std::optional<BigInt> max_length_dim3_band(std::int64_t q, std::int64_t s) {
    std::optional<BigInt> best;
    auto take = [&](BigInt v) {
        if (!best || v < *best) best = std::move(v);
    };
    if (s >= q - 1 && s <= 2 * q - 1) {
        std::int64_t t = s - (q - 1);
        take(BigInt(s + 1) * (q + 1) + 1 - t);
    }
    if (s >= 2 * q && s <= 3 * q) {
        std::int64_t t = s - 2 * q;
        take(BigInt(s) * (q + 1) + 2 - t);
    }
    std::int64_t alpha = s / q;
    if (alpha >= 2 && alpha <= q - 2) take(BigInt(s + 2 - alpha) * (q + 1) + alpha);
    return best;
}

std::optional<BigInt> max_length_stratified(std::int64_t q, std::int64_t k, std::int64_t s) {
    if (k < 3) return std::nullopt;
    std::int64_t alpha = s / q;
    if (alpha < 1) return std::nullopt;
    return BigInt(s + 2 - alpha) * (q + 1) + alpha + k - 3;
}

std::optional<BigInt> max_length_large_defect(std::int64_t q, std::int64_t k, std::int64_t s) {
    if (k < 3 || s < 2 * q) return std::nullopt;
    return BigInt(s) * (q + 1) + k - 1;
}

BigInt max_length_noninteger(std::int64_t q, std::int64_t k, std::int64_t s) {
    if (k < 2) throw std::domain_error("max_length_noninteger: need k >= 2");
    // Strict form only established for floor(kappa) >= 3; the conservative
    // value is kept on the kappa in (2,3) edge.
    if (k >= 3) return BigInt(s + 2) * (q + 1) + k - 3;
    return BigInt(s + 2) * (q + 1) + k - 2;
}

std::optional<BigInt> max_length_noninteger_large_defect(std::int64_t q, std::int64_t k,
                                                         std::int64_t s) {
    if (k < 3 || s < 2 * q - 1) return std::nullopt;
    return BigInt(s + 1) * (q + 1) + k - 1;
}

std::optional<BigInt> max_length_noninteger_stratified(std::int64_t q, std::int64_t k,
                                                       std::int64_t s) {
    if (k < 3 || s < 2 * q - 1) return std::nullopt;
    std::int64_t beta = (s + 1) / q;
    if (beta < 2) return std::nullopt;
    return BigInt(s + 3 - beta) * (q + 1) + beta + k - 3;
}

GeneralPlotkin plotkin_general(std::int64_t q, const BigInt& M) {
    if (M <= q) throw std::domain_error("plotkin_general: need M > q");
    BigInt b = floor_div(M, BigInt(q));
    BigInt r = M - b * q;
    GeneralPlotkin gp;
    gp.L = BigInt(q) * choose2(b) + r * b;
    gp.ratio = Rational(choose2(M)) / Rational(gp.L);
    gp.ratio.canonicalize();
    if (b == 1) {
        gp.ceiling = Rational(BigInt(q) * (q + 1), 2);
    } else {
        gp.ceiling = Rational(q) + Rational(BigInt(q - 1), b - 1);
    }
    gp.ceiling.canonicalize();
    return gp;
}

bool plotkin_general_feasible(std::int64_t q, std::int64_t n, const BigInt& M, std::int64_t d) {
    if (M <= q) throw std::domain_error("plotkin_general_feasible: need M > q");
    BigInt b = floor_div(M, BigInt(q));
    BigInt r = M - b * q;
    BigInt L = BigInt(q) * choose2(b) + r * b;
    return BigInt(n) * L <= BigInt(n - d) * choose2(M);
}

BigInt general_s_bound(std::int64_t q, const BigInt& M, std::int64_t s) {
    std::int64_t k = dimension_floor(q, M);
    if (k < 2) throw std::domain_error("general_s_bound: need M >= q^2");
    bool integer_dim = (ipow(q, static_cast<unsigned>(k)) == M);
    std::int64_t kce = integer_dim ? k : k + 1;
    BigInt floor_pw = floor_div(M, ipow(q, static_cast<unsigned>(k - 1)));  // floor(q^(kappa-k+1))
    Rational factor = Rational(q) + Rational(BigInt(q - 1), floor_pw - 1);
    factor.canonicalize();
    Rational bound = Rational(s + kce - k + 1) * factor + (k - 2);
    bound.canonicalize();
    return rational_floor(bound);
}

BigInt additive_code_bound(std::int64_t q, std::int64_t h, std::int64_t k_add, std::int64_t s) {
    if (q < 2 || h < 2) throw std::domain_error("additive_code_bound: need q >= 2, h >= 2");
    if (k_add % h == 0)
        throw std::domain_error(
            "additive_code_bound: h divides k (integer dimension; use the main bound over q^h)");
    BigInt Q = ipow(q, static_cast<unsigned>(h));
    BigInt denom = ipow(q, static_cast<unsigned>(k_add % h)) - 1;
    Rational factor = Rational(Q) + Rational(Q - 1, denom);
    factor.canonicalize();
    Rational bound = Rational(s + 2) * factor + (k_add / h - 2);
    bound.canonicalize();
    return rational_floor(bound);
}

std::optional<std::string> griesmer_guaranteed(std::int64_t q, const BigInt& M, std::int64_t n,
                                               std::int64_t d) {
    std::int64_t k = dimension_floor(q, M);
    bool integer_dim = (ipow(q, static_cast<unsigned>(k)) == M);
    std::int64_t kce = integer_dim ? k : k + 1;
    std::int64_t s = n - kce + 1 - d;
    if (s < 0) return std::nullopt;

    BigInt q2 = BigInt(q) * q;
    if (integer_dim && k >= 2) {
        if (k == 2) return "k=2";
        if (d <= q2) return "d <= q^2";
        if (s <= q - 1) return "s <= q-1";
        // s >= beta*q and d <= beta*q^2 for some 1 <= beta <= q
        {
            BigInt beta = ceil_div(BigInt(d), q2);
            if (beta < 1) beta = 1;
            if (beta <= q && BigInt(s) >= beta * q)
                return "s >= " + beta.get_str() + "q, d <= " + beta.get_str() + "q^2";
        }
        // d < q^(r+1) and s >= q(q^r - 1)/(q - 1) for some r >= 1
        {
            std::int64_t r = 1;
            BigInt qr1 = q2;  // q^(r+1)
            while (qr1 <= d) {
                ++r;
                qr1 *= q;
            }
            BigInt need = BigInt(q) * (ipow(q, static_cast<unsigned>(r)) - 1) / (q - 1);
            if (BigInt(s) >= need)
                return "d < q^" + std::to_string(r + 1) + ", s >= q(q^" + std::to_string(r) +
                       "-1)/(q-1)";
        }
        if (q == 2 && k >= 3 && d <= 8) return "binary, d <= 8";
        if (q == 2 && k >= 3) {
            std::int64_t t = (d + 1) / 2 - 1;  // smallest t with d <= 2(t+1)
            if (t >= 0 && s >= 3 * t + 2)
                return "binary, s >= 3t+2 and d <= 2(t+1) at t=" + std::to_string(t);
        }
        return std::nullopt;
    }
    if (!integer_dim && k >= 3 && s >= 2 * q - 1 && d <= 2 * q2)
        return "non-integer dimension, s >= 2q-1 and d <= 2q^2";
    return std::nullopt;
}

GriesmerGuaranteeSummary griesmer_guarantee_summary(std::int64_t q, std::int64_t k,
                                                    std::int64_t s) {
    if (k < 2 || s < 0) throw std::domain_error("griesmer_guarantee_summary: need k >= 2, s >= 0");
    GriesmerGuaranteeSummary g;
    if (k == 2) {
        g.always = true;
        g.citation = "k=2";
        return g;
    }
    if (s <= q - 1) {
        g.always = true;
        g.citation = "s <= q-1";
        return g;
    }
    auto take = [&](BigInt t, std::string cite) {
        if (!g.d_max || t > *g.d_max) {
            g.d_max = std::move(t);
            g.citation = std::move(cite);
        }
    };
    BigInt q2 = BigInt(q) * q;
    take(q2, "d <= q^2");
    std::int64_t beta = std::min<std::int64_t>(q, s / q);
    if (beta >= 1)
        take(BigInt(beta) * q2, "s >= " + std::to_string(beta) + "q, d <= " +
                                    std::to_string(beta) + "q^2");
    // largest r with s >= q(q^r - 1)/(q - 1)
    {
        std::int64_t r = 0;
        while (BigInt(q) * (ipow(q, static_cast<unsigned>(r + 1)) - 1) / (q - 1) <= s) ++r;
        if (r >= 1)
            take(ipow(q, static_cast<unsigned>(r + 1)) - 1,
                 "d < q^" + std::to_string(r + 1) + ", s >= q(q^" + std::to_string(r) +
                     "-1)/(q-1)");
    }
    if (q == 2) {
        take(BigInt(8), "binary, d <= 8");
        std::int64_t t = (s - 2) / 3;
        if (t >= 0) take(BigInt(2) * (t + 1), "binary, s >= 3t+2 and d <= 2(t+1) at t=" +
                                                  std::to_string(t));
    }
    return g;
}

const char* bound_kind_name(BoundKind k) {
    switch (k) {
        case BoundKind::max_length: return "max_length";
        case BoundKind::max_size: return "max_size";
        case BoundKind::min_length: return "min_length";
        case BoundKind::feasibility: return "feasibility";
    }
    return "?";
}

namespace {

BoundEvaluation eval_inapplicable(std::string id, BoundKind kind, std::string citation) {
    BoundEvaluation e;
    e.id = std::move(id);
    e.kind = kind;
    e.applicable = false;
    e.citation = std::move(citation);
    return e;
}

BoundEvaluation eval_value(std::string id, BoundKind kind, BigInt value, std::string citation) {
    BoundEvaluation e;
    e.id = std::move(id);
    e.kind = kind;
    e.applicable = true;
    e.value = std::move(value);
    e.citation = std::move(citation);
    return e;
}

BoundEvaluation eval_feas(std::string id, bool ok, std::string citation) {
    BoundEvaluation e;
    e.id = std::move(id);
    e.kind = BoundKind::feasibility;
    e.applicable = true;
    e.satisfied = ok;
    e.citation = std::move(citation);
    return e;
}

}  // namespace

BoundReport bound_report(std::int64_t q, std::int64_t n, const BigInt& M, std::int64_t d) {
    BoundReport rep;
    rep.params = derive_params(q, n, M, d);
    const CodeParams& p = rep.params;
    auto& ev = rep.evaluations;

    ev.push_back(eval_feas("singleton", p.singleton_feasible, "Singleton bound"));
    ev.push_back(eval_value("singleton_size", BoundKind::max_size, singleton_max_size(q, n, d),
                            "Singleton bound (size form)"));

    const bool dim_ok = p.k >= 2 && p.s >= 0;

    // length bounds, integer dimension
    if (p.integer_dimension && dim_ok) {
        ev.push_back(eval_value("main_arc", BoundKind::max_length, max_length_main(q, p.k, p.s),
                                "maximal-arc-type bound"));
        if (q == 2 && p.k >= 3) {
            for (auto& [t, v] : binary_refined_family(p.k, p.s))
                ev.push_back(eval_value("binary_refined[t=" + std::to_string(t) + "]",
                                        BoundKind::max_length, v, "binary refined length family"));
        }
        if (p.k == 3) {
            if (auto v = max_length_dim3_band(q, p.s))
                ev.push_back(eval_value("dim3_band", BoundKind::max_length, *v,
                                        "dimension-3 band bound"));
            else
                ev.push_back(
                    eval_inapplicable("dim3_band", BoundKind::max_length, "dimension-3 band bound"));
        }
        if (auto v = max_length_stratified(q, p.k, p.s))
            ev.push_back(
                eval_value("stratified", BoundKind::max_length, *v, "stratified length bound"));
        if (auto v = max_length_large_defect(q, p.k, p.s))
            ev.push_back(
                eval_value("large_defect", BoundKind::max_length, *v, "large-defect length bound"));
    }

    // length bounds, non-integer dimension
    if (!p.integer_dimension && dim_ok) {
        ev.push_back(eval_value("noninteger_main", BoundKind::max_length,
                                max_length_noninteger(q, p.k, p.s),
                                p.k >= 3 ? "non-integer length bound (strict form)"
                                         : "non-integer length bound"));
        if (auto v = max_length_noninteger_large_defect(q, p.k, p.s))
            ev.push_back(eval_value("noninteger_large_defect", BoundKind::max_length, *v,
                                    "non-integer large-defect bound"));
        if (auto v = max_length_noninteger_stratified(q, p.k, p.s))
            ev.push_back(eval_value("noninteger_stratified", BoundKind::max_length, *v,
                                    "non-integer stratified bound"));
    }

    if (dim_ok) {
        ev.push_back(eval_value("general_s", BoundKind::max_length, general_s_bound(q, M, p.s),
                                "agreement-ratio length bound"));
        ev.push_back(eval_feas("improved_singleton",
                               improved_singleton_feasible(q, n, p.k, d, p.integer_dimension),
                               p.integer_dimension
                                   ? "improved Singleton inequality"
                                   : "improved Singleton inequality (non-integer dimension)"));
    }

    // size bounds
    if (auto v = plotkin_qary_max_size(q, n, d))
        ev.push_back(eval_value("plotkin_qary", BoundKind::max_size, *v, "q-ary Plotkin bound"));
    else
        ev.push_back(eval_inapplicable("plotkin_qary", BoundKind::max_size, "q-ary Plotkin bound"));
    if (q == 2) {
        if (auto v = plotkin_binary_max_size(n, d))
            ev.push_back(
                eval_value("plotkin_binary", BoundKind::max_size, *v, "binary Plotkin bound"));
        else
            ev.push_back(
                eval_inapplicable("plotkin_binary", BoundKind::max_size, "binary Plotkin bound"));
    }
    ev.push_back(
        eval_value("hamming", BoundKind::max_size, hamming_max_size(q, n, d), "Hamming bound"));

    if (M > q)
        ev.push_back(eval_feas("plotkin_general", plotkin_general_feasible(q, n, M, d),
                               "generalized Plotkin feasibility"));

    // conditional Griesmer check
    rep.griesmer_guaranteed_by = griesmer_guaranteed(q, M, n, d);
    if (rep.griesmer_guaranteed_by) {
        ev.push_back(eval_value("griesmer", BoundKind::min_length,
                                griesmer(q, p.kappa_ceil, d),
                                "Griesmer bound [" + *rep.griesmer_guaranteed_by + "]"));
    } else {
        ev.push_back(eval_inapplicable("griesmer", BoundKind::min_length,
                                       "Griesmer bound (not guaranteed for these parameters)"));
    }

    bool ok = p.singleton_feasible;
    for (const auto& e : ev) {
        if (!e.applicable) continue;
        switch (e.kind) {
            case BoundKind::max_length:
                if (!rep.best_max_length || *e.value < *rep.best_max_length)
                    rep.best_max_length = e.value;
                if (BigInt(n) > *e.value) ok = false;
                break;
            case BoundKind::max_size:
                if (M > *e.value) ok = false;
                break;
            case BoundKind::min_length:
                if (BigInt(n) < *e.value) ok = false;
                break;
            case BoundKind::feasibility:
                if (!*e.satisfied) ok = false;
                break;
        }
    }
    rep.feasible = ok;
    return rep;
}

std::string bound_description(const std::string& id) {
    if (id == "singleton") return "d <= n - ceil(kappa) + 1; defect s must be non-negative";
    if (id == "singleton_size") return "M <= q^(n-d+1), the Singleton bound solved for the size";
    if (id == "main_arc")
        return "n <= (s+1)(q+1) + k - 2 for integer dimension k >= 2, via double counting of "
               "coordinate agreements; equality forces symbol-uniform equidistant structure";
    if (id.rfind("binary_refined", 0) == 0)
        return "n <= 3s - 2t + k - 1 for binary codes with k >= 3 and s >= 3t + 2; family over "
               "integer t >= 0, tightest member reported";
    if (id == "dim3_band")
        return "banded dimension-3 bounds: s = q-1+t gives n <= (s+1)(q+1)+1-t; s = 2q+t gives "
               "n <= s(q+1)+2-t; alpha*q <= s < (alpha+1)q gives n <= (s+2-alpha)(q+1)+alpha";
    if (id == "stratified")
        return "n <= (s+2-alpha)(q+1) + alpha + k - 3 with alpha = floor(s/q) >= 1, k >= 3";
    if (id == "large_defect") return "n <= s(q+1) + k - 1 when s >= 2q, k >= 3";
    if (id == "noninteger_main")
        return "n <= (s+2)(q+1) + k - 2 for q^k < M < q^(k+1); strict -3 form when k >= 3 "
               "because the bound is never attained there";
    if (id == "noninteger_large_defect") return "n <= (s+1)(q+1) + k - 1 when s >= 2q-1";
    if (id == "noninteger_stratified")
        return "n <= (s+3-beta)(q+1) + beta + k - 3 with beta = floor((s+1)/q) >= 2";
    if (id == "general_s")
        return "n <= (s + ceil(kappa) - k + 1)(q + (q-1)/(floor(M/q^(k-1)) - 1)) + k - 2, from "
               "the generalized Plotkin agreement ratio after k-2 shortenings";
    if (id == "improved_singleton")
        return "ceil(d(q+1)/q) <= n - k + 2 (integer dimension) or floor(d(q+1)/q) <= n - k + 1 "
               "(non-integer); algebraically equivalent to the length bounds";
    if (id == "plotkin_qary")
        return "M <= floor(dq/(dq - n(q-1))) when dq > n(q-1); M <= 2(q-1)n at equality";
    if (id == "plotkin_binary")
        return "parity-refined binary Plotkin bound, tightest of the four classical cases";
    if (id == "hamming") return "M <= q^n / V(n, t) with t = floor((d-1)/2), sphere packing";
    if (id == "plotkin_general")
        return "n * L(M) <= (n-d) * C(M,2) where L(M) = q*C(b,2) + rb, M = qb + r, the convexity "
               "floor on per-coordinate agreements";
    if (id == "griesmer")
        return "n >= sum_{i<k} ceil(d/q^i); valid for nonlinear codes only under the catalogued "
               "conditions reported alongside";
    return "";
}

}  // namespace lmc
