#ifndef CPCOUNT_EO_HPP
#define CPCOUNT_EO_HPP

#include <optional>
#include <vector>

#include "cpcount/comodule.hpp"
#include "cpcount/groups.hpp"

namespace cpcount {

// EO-module decomposition: main summands of length < p and "junk" of length
// exactly p (which never contributes to the degree -1 computations).
struct EODecomposition {
    std::vector<Summand> main;
    std::vector<Summand> junk;
    Prime prime;

    EODecomposition(std::vector<Summand> m, std::vector<Summand> j, Prime p);
};

// Per-Adams-summand bookkeeping for the splitting of CP^n_r.
struct SplittingContext {
    struct PerIndex {
        Int i;
        Int l_index;         // length of the bottom chain; <= 0 means empty
        bool in_top_set;     // whether a truncated top block exists
        Int top_half_shift;  // meaningful when in_top_set
        Int top_length;      // p - [n_{r+i}]_p, meaningful when in_top_set
    };
    Int r;
    Int n;
    Prime prime;
    std::vector<PerIndex> per_index;  // i = 0 .. p-2
};

namespace eo {

// Window bound 2p^2 - p - 2 shared by the degree -1 statements.
Int corank_window(const Prime& p);

SplittingContext splitting_context(const Int& r, const Int& n, const Prime& p);

// Closed-form splitting of EO (x) CP^n_r, cross-checked summand-by-summand
// against the brute-force Jordan decomposition of the cohomology comodule.
// Disagreement throws InternalContradiction.
EODecomposition closed_form_splitting(const Int& r, const Int& n, const Prime& p);

// Spanier-Whitehead duality on one summand: (s, l) -> (-s - (l-1)(p-1), l).
Summand dual_summand(const Summand& s, const Prime& p);

// EO-module tensor X_l (x) X_l2 for 1 <= l <= l2 <= p: main summands
// (half-shift (l-j)(p-1), length l2-l+2j-1) for j = 1..t with
// t = l if l+l2 <= p, else p-l2; junk half-shifts come from the brute-force
// decomposition of W_l (x) W_l2, never from a guessed formula.
EODecomposition tensor_rule(const Int& l, const Int& l2, const Prime& p);

enum class Justification { window_formula, connectivity };

struct ShiftedXlResult {
    FinitePGroup group;
    Justification justification;
};

// EO_{-1} Sigma^{2s} X_l: Z/p when l != p and s = -l(p-1), zero otherwise.
// Valid for -(2p^2-p-2) < s < 2p^2-p-2-(p-1)(l-1); above that window the
// zero answer is justified by connectivity, below it the query is rejected.
ShiftedXlResult eo_neg1_shifted_xl(const Int& s, const Int& l, const Prime& p);

// EO_{-1}(CP^n_r (x) D CP^n_r), derived: split both factors, enumerate
// summand pairs (skipping cross-Adams pairs, which vanish, and length-p
// junk), expand each pair through tensor_rule and sum the Z/p hits.
// verify_skipped additionally evaluates every skipped pair and checks it
// contributes nothing.
FinitePGroup eo_neg1_cp_tensor_dcp(const Int& r, const Int& n, const Prime& p,
                                   bool verify_skipped = false);

// EO_{-1} Sigma^{-2n} CP^n_r via the splitting.
FinitePGroup eo_neg1_shifted_cp(const Int& r, const Int& n, const Prime& p);

// James-type periodicity: the derived groups agree along (r+kp, n+kp).
bool verify_periodicity(const Int& r, const Int& n, const Prime& p, const Int& steps);

}  // namespace eo
}  // namespace cpcount

#endif
