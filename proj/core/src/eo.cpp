#include "cpcount/eo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace cpcount {

EODecomposition::EODecomposition(std::vector<Summand> m, std::vector<Summand> j, Prime p)
    : main(std::move(m)), junk(std::move(j)), prime(std::move(p)) {
    for (const auto& s : main)
        if (s.length < 1 || s.length >= prime.value())
            throw InvalidInput("main summand length must lie in [1, p-1]");
    for (const auto& s : junk)
        if (s.length != prime.value())
            throw InvalidInput("junk summand length must equal p");
    std::sort(main.begin(), main.end());
    std::sort(junk.begin(), junk.end());
}

namespace eo {
namespace {

// Multiset difference a - b; throws if b is not contained in a.
std::vector<Summand> multiset_subtract(const std::vector<Summand>& a,
                                       const std::vector<Summand>& b,
                                       const char* context) {
    std::map<Summand, Int> count;
    for (const auto& s : a) ++count[s];
    for (const auto& s : b) {
        auto it = count.find(s);
        if (it == count.end() || it->second == 0) {
            std::ostringstream msg;
            msg << context << ": summand (" << s.half_shift << ", " << s.length
                << ") missing from the comodule decomposition";
            throw InternalContradiction(msg.str());
        }
        --it->second;
    }
    std::vector<Summand> out;
    for (const auto& [s, c] : count)
        for (Int i = 0; i < c; ++i) out.push_back(s);
    return out;
}

}  // namespace

Int corank_window(const Prime& p) { return 2 * p.value() * p.value() - p.value() - 2; }

SplittingContext splitting_context(const Int& r, const Int& n, const Prime& p) {
    if (r < 0 || r > n) throw InvalidInput("splitting_context requires 0 <= r <= n");
    const Int& q = p.value();
    SplittingContext ctx{r, n, p, {}};
    for (Int i = 0; i <= q - 2; ++i) {
        Int j = r + i;
        Int nj = arith::floor_same_residue(n, j, p);
        Int cells = (nj - j) / (q - 1) + 1;  // may be <= 0: empty Adams summand
        Int rj = arith::mod_val(j, q);
        Int l = std::min(Int(rj + 1), cells);
        bool in_top = j + rj * (q - 1) < nj;
        Int nj_mod = arith::mod_val(nj, q);
        Int top_len = q - nj_mod;
        Int top_shift = nj - (top_len - 1) * (q - 1);
        ctx.per_index.push_back({i, l, in_top, top_shift, top_len});
    }
    return ctx;
}

EODecomposition closed_form_splitting(const Int& r, const Int& n, const Prime& p) {
    const Int& q = p.value();
    SplittingContext ctx = splitting_context(r, n, p);

    std::vector<Summand> main;
    std::vector<Summand> junk_closed;
    auto emit = [&](const Int& shift, const Int& len) {
        if (len <= 0) return;  // the convention X_i = 0 for i <= 0
        if (len == q)
            junk_closed.push_back(Summand{shift, len});
        else
            main.push_back(Summand{shift, len});
    };
    for (const auto& pi : ctx.per_index) {
        emit(r + pi.i, pi.l_index);
        if (pi.in_top_set) emit(pi.top_half_shift, pi.top_length);
    }

    Decomposition oracle = comod::decompose(comod::stunted_cohomology(r, n, p));
    std::vector<Summand> named = main;
    named.insert(named.end(), junk_closed.begin(), junk_closed.end());
    std::vector<Summand> junk =
        multiset_subtract(oracle.summands, named, "closed_form_splitting");
    for (const auto& s : junk) {
        if (s.length != q) {
            std::ostringstream msg;
            msg << "closed_form_splitting: complementary summand (" << s.half_shift << ", "
                << s.length << ") has length != p at (r=" << r << ", n=" << n << ", p=" << q
                << ")";
            throw InternalContradiction(msg.str());
        }
    }
    junk.insert(junk.end(), junk_closed.begin(), junk_closed.end());
    return EODecomposition(std::move(main), std::move(junk), p);
}

Summand dual_summand(const Summand& s, const Prime& p) {
    return Summand{-s.half_shift - (s.length - 1) * (p.value() - 1), s.length};
}

EODecomposition tensor_rule(const Int& l, const Int& l2, const Prime& p) {
    const Int& q = p.value();
    if (l < 1 || l > l2 || l2 > q)
        throw InvalidInput("tensor_rule requires 1 <= l <= l2 <= p");

    using Key = std::tuple<Int, Int, Int>;
    static std::map<Key, EODecomposition> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(Key{l, l2, q});
        if (it != cache.end()) return it->second;
    }

    Int t = (l + l2 <= q) ? l : q - l2;
    std::vector<Summand> main;
    for (Int j = 1; j <= t; ++j) {
        Int len = l2 - l + 2 * j - 1;
        if (len == q) continue;
        main.push_back(Summand{(l - j) * (q - 1), len});
    }

    Decomposition oracle =
        comod::decompose(comod::tensor(comod::indecomposable(l, p), comod::indecomposable(l2, p)));
    std::vector<Summand> junk = multiset_subtract(oracle.summands, main, "tensor_rule");
    for (const auto& s : junk) {
        if (s.length != q) {
            std::ostringstream msg;
            msg << "tensor_rule: leftover summand of length " << s.length
                << " for W_" << l << " (x) W_" << l2 << " at p=" << q;
            throw InternalContradiction(msg.str());
        }
    }
    EODecomposition result(std::move(main), std::move(junk), p);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(Key{l, l2, q}, result);
    return result;
}

ShiftedXlResult eo_neg1_shifted_xl(const Int& s, const Int& l, const Prime& p) {
    const Int& q = p.value();
    if (l < 1 || l > q) throw InvalidInput("shifted X_l length must lie in [1, p]");
    Int lower = -corank_window(p);
    if (s <= lower)
        throw WindowError("EO_{-1} Sigma^{2s} X_l needs s > -(2p^2-p-2) = " + lower.str() +
                          ", got s = " + s.str());
    Int upper = corank_window(p) - (q - 1) * (l - 1);
    if (s >= upper) {
        // Above the window everything in sight is too connective to contribute.
        return ShiftedXlResult{FinitePGroup::trivial(p), Justification::connectivity};
    }
    if (l != q && s == -l * (q - 1))
        return ShiftedXlResult{FinitePGroup::cyclic(p, 1), Justification::window_formula};
    return ShiftedXlResult{FinitePGroup::trivial(p), Justification::window_formula};
}

namespace {

// Shared pair expansion: EO_{-1} of Sigma^{2 shift} X_{la} (x) X_{lb}.
FinitePGroup pair_contribution(const Int& shift, const Int& la, const Int& lb,
                               const Prime& p, bool include_junk_pieces) {
    Int a = std::min(la, lb), b = std::max(la, lb);
    EODecomposition pieces = tensor_rule(a, b, p);
    FinitePGroup total = FinitePGroup::trivial(p);
    for (const auto& piece : pieces.main)
        total += eo_neg1_shifted_xl(shift + piece.half_shift, piece.length, p).group;
    if (include_junk_pieces)
        for (const auto& piece : pieces.junk)
            total += eo_neg1_shifted_xl(shift + piece.half_shift, piece.length, p).group;
    return total;
}

}  // namespace

FinitePGroup eo_neg1_cp_tensor_dcp(const Int& r, const Int& n, const Prime& p,
                                   bool verify_skipped) {
    const Int& q = p.value();
    if (r < 0 || r > n) throw InvalidInput("eo_neg1_cp_tensor_dcp requires 0 <= r <= n");
    if (n - r >= corank_window(p))
        throw WindowError("corank " + Int(n - r).str() + " outside the validity window c < " +
                          corank_window(p).str() + " for p = " + q.str());

    EODecomposition split = closed_form_splitting(r, n, p);
    std::vector<Summand> duals;
    duals.reserve(split.main.size());
    for (const auto& s : split.main) duals.push_back(dual_summand(s, p));

    FinitePGroup total = FinitePGroup::trivial(p);
    for (const auto& a : split.main) {
        for (const auto& b : duals) {
            Int shift = a.half_shift + b.half_shift;
            if (arith::mod_val(shift, q - 1) != 0) {
                // Cross-Adams pair; vanishes since every tensor piece keeps
                // the shift away from a multiple of p-1.
                if (verify_skipped && !pair_contribution(shift, a.length, b.length, p, true)
                                           .is_trivial())
                    throw InternalContradiction("skipped cross-Adams pair contributed");
                continue;
            }
            total += pair_contribution(shift, a.length, b.length, p, false);
        }
    }
    if (verify_skipped) {
        // Junk pairs: any factor of length p kills the contribution.
        auto check_junk_pair = [&](const Summand& a, const Summand& b) {
            if (!pair_contribution(a.half_shift + b.half_shift, a.length, b.length, p, true)
                     .is_trivial())
                throw InternalContradiction("junk pair contributed");
        };
        for (const auto& a : split.junk) {
            for (const auto& b : split.main) check_junk_pair(a, dual_summand(b, p));
            for (const auto& b : split.junk) check_junk_pair(a, dual_summand(b, p));
        }
        for (const auto& a : split.main)
            for (const auto& b : split.junk) check_junk_pair(a, dual_summand(b, p));
    }
    return total;
}

FinitePGroup eo_neg1_shifted_cp(const Int& r, const Int& n, const Prime& p) {
    if (n <= r) throw InvalidInput("eo_neg1_shifted_cp requires r < n");
    if (n - r >= corank_window(p))
        throw WindowError("corank " + Int(n - r).str() + " outside the validity window c < " +
                          corank_window(p).str() + " for p = " + p.value().str());
    EODecomposition split = closed_form_splitting(r, n, p);
    FinitePGroup total = FinitePGroup::trivial(p);
    for (const auto& s : split.main)
        total += eo_neg1_shifted_xl(s.half_shift - n, s.length, p).group;
    for (const auto& s : split.junk)
        total += eo_neg1_shifted_xl(s.half_shift - n, s.length, p).group;
    return total;
}

bool verify_periodicity(const Int& r, const Int& n, const Prime& p, const Int& steps) {
    if (steps < 1) throw InvalidInput("periodicity check needs at least one step");
    FinitePGroup base = eo_neg1_cp_tensor_dcp(r, n, p);
    for (Int k = 1; k <= steps; ++k) {
        if (eo_neg1_cp_tensor_dcp(r + k * p.value(), n + k * p.value(), p) != base) return false;
    }
    return true;
}

}  // namespace eo
}  // namespace cpcount
