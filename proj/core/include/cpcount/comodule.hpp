#ifndef CPCOUNT_COMODULE_HPP
#define CPCOUNT_COMODULE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cpcount/arith.hpp"

namespace cpcount {

// One indecomposable summand Sigma^{2s} W_l: l generators in degrees
// 2s, 2s+2(p-1), ..., 2s+2(l-1)(p-1) with P^1 an isomorphism between
// consecutive ones.
struct Summand {
    Int half_shift;
    Int length;  // in [1, p]

    friend bool operator==(const Summand& a, const Summand& b) {
        return a.half_shift == b.half_shift && a.length == b.length;
    }
    friend bool operator<(const Summand& a, const Summand& b) {
        if (a.half_shift != b.half_shift) return a.half_shift < b.half_shift;
        return a.length < b.length;
    }
};

// Multiset of summands in canonical order (by half_shift, then length).
struct Decomposition {
    std::vector<Summand> summands;
    Prime prime;

    Decomposition(std::vector<Summand> s, Prime p);
    Int dimension() const;

    friend bool operator==(const Decomposition& a, const Decomposition& b) {
        return a.prime == b.prime && a.summands == b.summands;
    }
};

// A finite graded F_p-vector space with a degree-raising P^1 action,
// i.e. a finite graded module over F_p[P^1]/(P^1)^p. The action stores, per
// basis element, the linear combination P^1 maps it to; every term raises
// degree by exactly 2(p-1) and has coefficient in {1,...,p-1}.
class GradedComodule {
  public:
    struct BasisElement {
        std::string label;
        Int degree;
    };
    using Terms = std::vector<std::pair<Int, std::size_t>>;  // (coeff, target index)

    GradedComodule(Prime p, std::vector<BasisElement> basis,
                   std::map<std::size_t, Terms> action);

    const Prime& prime() const { return prime_; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    const std::map<std::size_t, Terms>& action() const { return action_; }
    std::size_t dimension() const { return basis_.size(); }

    // Multiset of basis degrees, as degree -> count.
    std::map<Int, std::size_t> degree_profile() const;

    // Rank of (P^1)^j restricted to the graded piece of the given degree,
    // computed by exact Gaussian elimination over F_p.
    std::size_t iterated_rank(const Int& degree, const Int& j) const;

  private:
    Prime prime_;
    std::vector<BasisElement> basis_;
    std::map<std::size_t, Terms> action_;
};

namespace comod {

// Coefficient of (P^1)^j on the degree-2k generator of CP^infinity:
// prod_{l=0}^{j-1} (k + (p-1)l) mod p. Empty product is 1.
Residue p1_iterated_coeff(const Int& k, const Int& j, const Prime& p);

// Mod-p cohomology of the stunted projective spectrum CP^n_r: basis
// x_r, ..., x_n with deg x_i = 2i and P^1(x_i) = [i]_p x_{i+p-1}.
GradedComodule stunted_cohomology(const Int& r, const Int& n, const Prime& p);

// Sigma^{2s} W_l.
GradedComodule indecomposable(const Int& l, const Prime& p, const Int& half_shift = 0);

// Restriction to basis elements with degree/2 congruent to i mod (p-1).
// Rejects odd degrees (the congruence is taken on degree/2).
GradedComodule adams_summand(const GradedComodule& c, const Residue& i);

// Decomposition into shifted W_l via the degree-graded Jordan structure of
// the nilpotent P^1, computed from exact F_p ranks.
Decomposition decompose(const GradedComodule& c);

// Tensor product over F_p with the Leibniz rule P^1(x(x)y) = P^1x(x)y + x(x)P^1y.
GradedComodule tensor(const GradedComodule& a, const GradedComodule& b);

// Linear dual: degrees negate, action transposes, chains reverse.
GradedComodule dualize(const GradedComodule& c);

// Rank of (P^1)^j out of each degree, recomputed from a decomposition's
// chain combinatorics; the rank-fidelity check compares this with
// GradedComodule::iterated_rank.
std::size_t decomposition_rank(const Decomposition& d, const Int& degree, const Int& j);

}  // namespace comod
}  // namespace cpcount

#endif
