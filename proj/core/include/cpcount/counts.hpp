#ifndef CPCOUNT_COUNTS_HPP
#define CPCOUNT_COUNTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cpcount/detection.hpp"
#include "cpcount/groups.hpp"

namespace cpcount {

// Answer to a bundle-count query for stably trivial rank-r bundles on CP^n:
// the p-adic valuation of the count, exactly or as a divisibility bound.
struct CountResult {
    enum class Kind { exact, lower_bound, unknown };

    Kind kind = Kind::unknown;
    bool metastable = false;
    std::optional<Int> valuation;            // exact: the valuation;
                                             // lower_bound: p^valuation divides the count
    std::optional<FinitePGroup> group;       // the mapping group, when known
    std::optional<Int> eo_lower_bound;       // EO-detected valuation, when in window
    std::vector<std::string> citations;
    std::vector<DetectionInstance> evidence; // nontrivial-family hits, if any
    std::string note;

    static const char* kind_name(Kind k);
};

namespace counts {

// Exact p-valuation of the number of stably trivial rank-r bundles on
// CP^{r+c} for c <= 2p-3, odd p: zero below corank p-1, and one exactly when
// some k in [r, r+c-(p-1)] is divisible by p. Both the residue-list rule and
// this existence rule are evaluated and compared.
Int phi_valuation_small_corank(const Int& r, const Int& c, const Prime& p);

// The 9-periodic corank-4 table at p=3: Z/9 for r = 0,1 mod 9, Z/3 else.
FinitePGroup corank4_p3_group(const Int& r);

// Number of Adams indices i in [0, p-2] passing the contribution conditions
// for EO_{-1}(CP^n_r (x) D CP^n_r); p^{j_closed} is the detected order.
Int j_closed(const Int& n, const Int& r, const Prime& p);

// Closed form of j_closed on the corank-(p-1)^2 family, as a function of
// r mod p alone.
Int bigcount_j(const Int& r_mod_p, const Prime& p);

// Closed form for EO_{-1} Sigma^{-2n} CP^n_r; cross-checked against the
// splitting-derived route on every call.
FinitePGroup eo_top_cell_closed(const Int& r, const Int& n, const Prime& p);

// p-primary component of pi_{2n+2k-3} U(n): Z/p^N with
// N = min{ floor((k-1)/(p-1)), v_p(n+k) }.
FinitePGroup matsunaga_order(const Int& n, const Int& k, const Prime& p);

// Unified dispatch per corank; never throws on degenerate geometry, folding
// it into an unknown result.
CountResult count_bundles(const Int& r, const Int& n, const Prime& p);

}  // namespace counts
}  // namespace cpcount

#endif
