#include "cpcount/comodule.hpp"

#include <algorithm>
#include <set>

namespace cpcount {

namespace {

// Smallest nonnegative representative, assuming d > 0.
Int reduce(const Int& k, const Int& d) {
    Int v = k % d;
    if (v < 0) v += d;
    return v;
}

Int mod_inverse(const Int& a, const Int& p) {
    // Extended Euclid; a is nonzero mod p, p prime.
    Int old_r = reduce(a, p), r = p;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    return reduce(old_s, p);
}

// Rank of a list of sparse vectors over F_p. Vectors are maps index -> coeff.
std::size_t sparse_rank(std::vector<std::map<std::size_t, Int>> vecs, const Int& p) {
    std::size_t rank = 0;
    // pivot index -> reduced row
    std::map<std::size_t, std::map<std::size_t, Int>> rows;
    for (auto& v : vecs) {
        while (!v.empty()) {
            auto lead = v.begin()->first;
            auto it = rows.find(lead);
            if (it == rows.end()) break;
            // eliminate lead using the stored row (whose lead coeff is 1)
            Int c = v.begin()->second;
            for (const auto& [idx, coeff] : it->second) {
                Int nv = reduce(v[idx] - c * coeff, p);
                if (nv == 0)
                    v.erase(idx);
                else
                    v[idx] = nv;
            }
        }
        if (v.empty()) continue;
        Int inv = mod_inverse(v.begin()->second, p);
        for (auto& [idx, coeff] : v) coeff = reduce(coeff * inv, p);
        rows.emplace(v.begin()->first, v);
        ++rank;
    }
    return rank;
}

}  // namespace

Decomposition::Decomposition(std::vector<Summand> s, Prime p)
    : summands(std::move(s)), prime(std::move(p)) {
    for (const auto& x : summands) {
        if (x.length < 1 || x.length > prime.value())
            throw InvalidInput("summand length " + x.length.str() + " outside [1, p]");
    }
    std::sort(summands.begin(), summands.end());
}

Int Decomposition::dimension() const {
    Int d = 0;
    for (const auto& s : summands) d += s.length;
    return d;
}

GradedComodule::GradedComodule(Prime p, std::vector<BasisElement> basis,
                               std::map<std::size_t, Terms> action)
    : prime_(std::move(p)), basis_(std::move(basis)) {
    const Int& q = prime_.value();
    const Int delta = 2 * (q - 1);
    for (auto& [src, terms] : action) {
        if (src >= basis_.size()) throw InvalidInput("action source index out of range");
        std::map<std::size_t, Int> combined;
        for (auto& [coeff, tgt] : terms) {
            if (tgt >= basis_.size()) throw InvalidInput("action target index out of range");
            if (basis_[tgt].degree != basis_[src].degree + delta)
                throw InvalidInput("P^1 must raise degree by exactly 2(p-1)");
            combined[tgt] = reduce(combined[tgt] + coeff, q);
        }
        Terms cleaned;
        for (auto& [tgt, coeff] : combined)
            if (coeff != 0) cleaned.emplace_back(coeff, tgt);
        if (!cleaned.empty()) action_.emplace(src, std::move(cleaned));
    }

    // Nilpotency (P^1)^p = 0: only degrees with room for p steps below the
    // top can violate it.
    if (!basis_.empty()) {
        Int max_deg = basis_[0].degree;
        for (const auto& b : basis_) max_deg = std::max(max_deg, b.degree);
        std::set<Int> checked;
        for (const auto& b : basis_) {
            if (b.degree + q * delta > max_deg + delta) continue;
            if (!checked.insert(b.degree).second) continue;
            if (iterated_rank(b.degree, q) != 0)
                throw InvalidInput("(P^1)^p is nonzero: not a valid comodule");
        }
    }
}

std::map<Int, std::size_t> GradedComodule::degree_profile() const {
    std::map<Int, std::size_t> prof;
    for (const auto& b : basis_) ++prof[b.degree];
    return prof;
}

std::size_t GradedComodule::iterated_rank(const Int& degree, const Int& j) const {
    std::vector<std::map<std::size_t, Int>> vecs;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].degree == degree) vecs.push_back({{i, Int(1)}});
    if (vecs.empty()) return 0;
    if (j == 0) return vecs.size();

    const Int& q = prime_.value();
    // Degree strictly increases per step, so everything dies within
    // dimension() applications regardless of how large j is.
    Int steps = j;
    if (steps > Int(dimension()) + 1) steps = Int(dimension()) + 1;
    for (Int s = 0; s < steps; ++s) {
        bool any = false;
        for (auto& v : vecs) {
            std::map<std::size_t, Int> next;
            for (const auto& [idx, coeff] : v) {
                auto it = action_.find(idx);
                if (it == action_.end()) continue;
                for (const auto& [c, tgt] : it->second)
                    next[tgt] = reduce(next[tgt] + coeff * c, q);
            }
            for (auto it = next.begin(); it != next.end();)
                it = (it->second == 0) ? next.erase(it) : std::next(it);
            v = std::move(next);
            any = any || !v.empty();
        }
        if (!any) return 0;
    }
    return sparse_rank(std::move(vecs), q);
}

namespace comod {

Residue p1_iterated_coeff(const Int& k, const Int& j, const Prime& p) {
    if (j < 0) throw InvalidInput("iteration count must be nonnegative");
    const Int& q = p.value();
    // Factors k + (p-1)l are congruent to k - l mod p, so the product
    // vanishes as soon as j exceeds [k]_p.
    if (j > arith::mod_val(k, q)) return Residue{0, q};
    Int prod = 1;
    for (Int l = 0; l < j; ++l) prod = reduce(prod * (k - l), q);
    return Residue{prod, q};
}

GradedComodule stunted_cohomology(const Int& r, const Int& n, const Prime& p) {
    if (r < 0 || r > n) throw InvalidInput("stunted_cohomology requires 0 <= r <= n");
    std::size_t dim = arith::checked_size(n - r + 1, "stunted projective basis");
    std::vector<GradedComodule::BasisElement> basis;
    basis.reserve(dim);
    for (Int i = r; i <= n; ++i) basis.push_back({"x" + i.str(), 2 * i});
    std::map<std::size_t, GradedComodule::Terms> action;
    const Int& q = p.value();
    for (Int i = r; i + (q - 1) <= n; ++i) {
        Int coeff = arith::mod_val(i, q);
        if (coeff == 0) continue;
        auto src = static_cast<std::size_t>(i - r);
        auto tgt = static_cast<std::size_t>(i + (q - 1) - r);
        action[src] = {{coeff, tgt}};
    }
    return GradedComodule(p, std::move(basis), std::move(action));
}

GradedComodule indecomposable(const Int& l, const Prime& p, const Int& half_shift) {
    if (l < 1 || l > p.value())
        throw InvalidInput("indecomposable length must lie in [1, p], got " + l.str());
    std::size_t len = arith::checked_size(l, "indecomposable");
    std::vector<GradedComodule::BasisElement> basis;
    std::map<std::size_t, GradedComodule::Terms> action;
    for (std::size_t k = 0; k < len; ++k) {
        basis.push_back({"w" + std::to_string(k), 2 * half_shift + 2 * Int(k) * (p.value() - 1)});
        if (k + 1 < len) action[k] = {{Int(1), k + 1}};
    }
    return GradedComodule(p, std::move(basis), std::move(action));
}

GradedComodule adams_summand(const GradedComodule& c, const Residue& i) {
    const Int& q = c.prime().value();
    if (i.modulus != q - 1)
        throw InvalidInput("Adams summand index must be a residue mod p-1");
    std::vector<GradedComodule::BasisElement> basis;
    std::map<std::size_t, std::size_t> reindex;
    for (std::size_t k = 0; k < c.basis().size(); ++k) {
        const auto& b = c.basis()[k];
        if (b.degree % 2 != 0)
            throw InvalidInput("Adams summand extraction needs even degrees");
        if (arith::mod_val(b.degree / 2 - i.value, q - 1) != 0) continue;
        reindex[k] = basis.size();
        basis.push_back(b);
    }
    std::map<std::size_t, GradedComodule::Terms> action;
    for (const auto& [src, terms] : c.action()) {
        auto it = reindex.find(src);
        if (it == reindex.end()) continue;
        GradedComodule::Terms restricted;
        for (const auto& [coeff, tgt] : terms) restricted.emplace_back(coeff, reindex.at(tgt));
        action[it->second] = std::move(restricted);
    }
    return GradedComodule(c.prime(), std::move(basis), std::move(action));
}

Decomposition decompose(const GradedComodule& c) {
    const Int& q = c.prime().value();
    const Int delta = 2 * (q - 1);
    auto profile = c.degree_profile();
    if (profile.empty()) return Decomposition({}, c.prime());
    const Int max_deg = profile.rbegin()->first;

    // ranks[d][j] = rank (P^1)^j restricted to degree d.
    std::map<Int, std::vector<std::size_t>> ranks;
    for (const auto& [d, count] : profile) {
        if (d % 2 != 0) throw InvalidInput("decompose requires even degrees");
        Int span_len = (max_deg - d) / delta + 1;
        Int lmax = std::min(Int(q), span_len);
        std::vector<std::size_t> row;
        for (Int j = 0; j <= lmax; ++j)
            row.push_back(c.iterated_rank(d, j));
        (void)count;
        ranks.emplace(d, std::move(row));
    }
    auto rank_at = [&](const Int& d, const Int& j) -> std::size_t {
        auto it = ranks.find(d);
        if (it == ranks.end()) return 0;
        if (j < 0 || j >= Int(it->second.size())) return 0;
        return it->second[static_cast<std::size_t>(j)];
    };

    // Chains of length >= j starting in degree d:
    //   rank((P^1)^{j-1}|_{V_d}) - rank((P^1)^j|_{V_{d-delta}}).
    std::vector<Summand> out;
    Int total = 0;
    for (const auto& [d, row] : ranks) {
        Int lmax = Int(row.size()) - 1;
        auto c_ge = [&](const Int& l) -> Int {
            if (l > lmax) return 0;
            return Int(rank_at(d, l - 1)) - Int(rank_at(d - delta, l));
        };
        for (Int l = 1; l <= lmax; ++l) {
            Int count = c_ge(l) - c_ge(l + 1);
            if (count < 0)
                throw InternalContradiction("negative chain count in Jordan decomposition");
            for (Int t = 0; t < count; ++t) out.push_back(Summand{d / 2, l});
            total += count * l;
        }
    }
    if (total != Int(c.dimension()))
        throw InternalContradiction("Jordan decomposition does not preserve dimension");
    return Decomposition(std::move(out), c.prime());
}

GradedComodule tensor(const GradedComodule& a, const GradedComodule& b) {
    if (a.prime() != b.prime()) throw InvalidInput("tensor factors must share their prime");
    std::size_t nb = b.basis().size();
    arith::checked_size(Int(a.basis().size()) * Int(nb), "tensor product basis");
    std::vector<GradedComodule::BasisElement> basis;
    basis.reserve(a.basis().size() * nb);
    for (const auto& x : a.basis())
        for (const auto& y : b.basis())
            basis.push_back({x.label + "⊗" + y.label, x.degree + y.degree});
    std::map<std::size_t, GradedComodule::Terms> action;
    for (std::size_t i = 0; i < a.basis().size(); ++i) {
        auto ia = a.action().find(i);
        for (std::size_t j = 0; j < nb; ++j) {
            GradedComodule::Terms terms;
            if (ia != a.action().end())
                for (const auto& [coeff, tgt] : ia->second)
                    terms.emplace_back(coeff, tgt * nb + j);
            auto jb = b.action().find(j);
            if (jb != b.action().end())
                for (const auto& [coeff, tgt] : jb->second)
                    terms.emplace_back(coeff, i * nb + tgt);
            if (!terms.empty()) action[i * nb + j] = std::move(terms);
        }
    }
    return GradedComodule(a.prime(), std::move(basis), std::move(action));
}

GradedComodule dualize(const GradedComodule& c) {
    std::vector<GradedComodule::BasisElement> basis;
    basis.reserve(c.basis().size());
    for (const auto& b : c.basis()) basis.push_back({"D" + b.label, -b.degree});
    std::map<std::size_t, GradedComodule::Terms> action;
    for (const auto& [src, terms] : c.action())
        for (const auto& [coeff, tgt] : terms) action[tgt].emplace_back(coeff, src);
    return GradedComodule(c.prime(), std::move(basis), std::move(action));
}

std::size_t decomposition_rank(const Decomposition& d, const Int& degree, const Int& j) {
    const Int step = 2 * (d.prime.value() - 1);
    std::size_t rank = 0;
    for (const auto& s : d.summands) {
        Int offset = degree - 2 * s.half_shift;
        if (offset < 0 || offset % step != 0) continue;
        Int m = offset / step;
        if (m <= s.length - 1 - j) ++rank;
    }
    return rank;
}

}  // namespace comod
}  // namespace cpcount
