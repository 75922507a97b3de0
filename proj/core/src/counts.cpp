#include "cpcount/counts.hpp"

#include <algorithm>

#include "cpcount/eo.hpp"

namespace cpcount {

const char* CountResult::kind_name(Kind k) {
    switch (k) {
        case Kind::exact: return "exact";
        case Kind::lower_bound: return "lower_bound";
        case Kind::unknown: return "unknown";
    }
    return "unknown";
}

namespace counts {
namespace {

const char* kSmallCorankCite = "small-corank-periodicity";
const char* kCorank4Cite = "corank4-table-p3";
const char* kEoBoundCite = "eo-hurewicz-lower-bound";
const char* kMetastableCite = "metastable-identification";

}  // namespace

Int phi_valuation_small_corank(const Int& r, const Int& c, const Prime& p) {
    if (!p.is_odd()) throw InvalidInput("small-corank exact counts need an odd prime");
    if (c < 0 || c > 2 * p.value() - 3)
        throw InvalidInput("small-corank counts cover 0 <= c <= 2p-3, got c = " + c.str());
    if (c > r) throw InvalidInput("small-corank counts need c <= r (metastable range)");
    const Int& q = p.value();
    if (c < q - 1) return 0;

    // Residue-list form: r = 0, -1, ..., p-1-c mod p.
    bool residue_hit = false;
    for (Int a = q - 1 - c; a <= 0; ++a)
        if (arith::mod_val(r, q) == arith::mod_val(a, q)) residue_hit = true;

    // Existence form: some k in [r, r+c-(p-1)] divisible by p.
    bool exists_hit = false;
    for (Int k = r; k <= r + c - (q - 1); ++k)
        if (k % q == 0) exists_hit = true;

    if (residue_hit != exists_hit)
        throw InternalContradiction("the two small-corank formulations disagree");
    return residue_hit ? 1 : 0;
}

FinitePGroup corank4_p3_group(const Int& r) {
    if (r < 4) throw InvalidInput("corank-4 table needs r >= 4 (metastable range)");
    Prime p3(3);
    Int rm = arith::mod_val(r, 9);
    return FinitePGroup::cyclic(p3, (rm == 0 || rm == 1) ? 2 : 1);
}

Int j_closed(const Int& n, const Int& r, const Prime& p) {
    if (r < 0 || r > n) throw InvalidInput("j_closed requires 0 <= r <= n");
    if (n - r >= eo::corank_window(p))
        throw WindowError("corank " + Int(n - r).str() + " outside validity window c < " +
                          eo::corank_window(p).str());
    const Int& q = p.value();
    Int count = 0;
    for (Int i = 0; i <= q - 2; ++i) {
        Int j = r + i;
        Int nj = arith::floor_same_residue(n, j, p);
        Int rj = arith::mod_val(j, q);
        Int njp = arith::mod_val(nj, q);
        // i contributes when (bottom chain) (x) D(top block) has a tensor
        // piece whose alpha_1 class sits in degree -1:
        bool a = j + rj * (q - 1) < nj;  // a truncated top block exists
        bool b = njp != 0;               // and is shorter than p
        bool cc = rj < njp;              // combined lengths stay within p
        bool d = nj - j + (q - 1) * (njp - rj) == q * (q - 1);  // degree match
        if (a && b && cc && d) ++count;
    }
    return count;
}

Int bigcount_j(const Int& r_mod_p, const Prime& p) {
    const Int& q = p.value();
    Int r = arith::mod_val(r_mod_p, q);
    if (q == 2) return r == 0 ? 1 : 0;
    if (r == 0 || r == q - 2 || r == q - 1) return q - 2;
    return q - 3;
}

FinitePGroup eo_top_cell_closed(const Int& r, const Int& n, const Prime& p) {
    if (n <= r) throw InvalidInput("top-cell form requires 0 < n-r");
    if (n - r >= eo::corank_window(p))
        throw WindowError("corank " + Int(n - r).str() + " outside validity window c < " +
                          eo::corank_window(p).str());
    const Int& q = p.value();
    const Int c = n - r;
    Int m = c / (q - 1);
    Int i = arith::mod_val(c, q - 1);
    bool hit = m >= 1 && m <= q - 1 && arith::mod_val(r + i, q) == m - 1;
    FinitePGroup closed = hit ? FinitePGroup::cyclic(p, 1) : FinitePGroup::trivial(p);

    FinitePGroup derived = eo::eo_neg1_shifted_cp(r, n, p);
    if (closed != derived)
        throw InternalContradiction("top-cell closed form disagrees with the splitting route at (r=" +
                                    r.str() + ", n=" + n.str() + ", p=" + q.str() + ")");
    return closed;
}

FinitePGroup matsunaga_order(const Int& n, const Int& k, const Prime& p) {
    if (!p.is_odd()) throw InvalidInput("Matsunaga hypothesis failed: p must be odd");
    if (n < 2) throw InvalidInput("Matsunaga hypothesis failed: n >= 2");
    if (k < 0 || k > p.value() * (p.value() - 1))
        throw InvalidInput("Matsunaga hypothesis failed: 0 <= k <= p(p-1)");
    if (n <= k) throw InvalidInput("Matsunaga hypothesis failed: n > k");
    if ((n + k) % p.value() != 0)
        throw InvalidInput("Matsunaga hypothesis failed: n+k = 0 mod p");
    Int bracket = arith::floor_div(k - 1, p.value() - 1);
    Int v = arith::p_valuation(n + k, p);
    return FinitePGroup::cyclic(p, std::min(bracket, v));
}

CountResult count_bundles(const Int& r, const Int& n, const Prime& p) {
    CountResult res;
    const Int& q = p.value();
    res.metastable = arith::is_metastable(r, n);
    if (!res.metastable || r < 1) {
        res.kind = CountResult::Kind::unknown;
        res.note = "outside the metastable range n/2 <= r < n";
        return res;
    }
    const Int c = n - r;
    res.citations.push_back(kMetastableCite);
    if (c < eo::corank_window(p)) res.eo_lower_bound = j_closed(n, r, p);

    if (p.is_odd() && c <= 2 * q - 3) {
        Int val = phi_valuation_small_corank(r, c, p);
        res.kind = CountResult::Kind::exact;
        res.valuation = val;
        res.group = FinitePGroup::cyclic(p, val);
        res.citations.push_back(kSmallCorankCite);
        return res;
    }
    if (q == 3 && c == 4) {
        FinitePGroup g = corank4_p3_group(r);
        res.kind = CountResult::Kind::exact;
        res.valuation = g.order_exponent();
        res.group = g;
        res.citations.push_back(kCorank4Cite);
        return res;
    }
    if (c < eo::corank_window(p)) {
        res.kind = CountResult::Kind::lower_bound;
        res.valuation = res.eo_lower_bound;
        res.citations.push_back(kEoBoundCite);
        return res;
    }
    res.kind = CountResult::Kind::unknown;
    res.note = "corank " + c.str() + " beyond the EO detection window";
    res.evidence = detect::find_projective_hits(p, r, n);
    for (const auto& inst : res.evidence) res.citations.push_back(inst.citation);
    return res;
}

}  // namespace counts
}  // namespace cpcount
