#ifndef CPCOUNT_ARITH_HPP
#define CPCOUNT_ARITH_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "cpcount/errors.hpp"

namespace cpcount {

// All mathematical integers in this library are exact and unbounded.
using Int = boost::multiprecision::cpp_int;

// A verified prime, the ambient prime of every computation. p = 2 is allowed;
// modules whose theorems need an odd prime check that themselves.
class Prime {
  public:
    explicit Prime(Int p);
    const Int& value() const { return p_; }
    bool is_odd() const { return p_ != 2; }

    friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Prime& a, const Prime& b) { return a.p_ != b.p_; }

  private:
    Int p_;
};

// Canonical representative of k mod d, kept with its modulus.
struct Residue {
    Int value;    // in [0, d)
    Int modulus;  // d >= 1
};

namespace arith {

bool is_prime(const Int& n);

// Remainder of k mod d in {0, ..., d-1}.
Residue mod_rep(const Int& k, const Int& d);

// Shorthand for mod_rep(k, d).value.
Int mod_val(const Int& k, const Int& d);

// Floor division (quotient rounded toward minus infinity).
Int floor_div(const Int& a, const Int& b);

// Largest integer <= n congruent to j mod (p-1): n - [n-j]_{p-1}.
Int floor_same_residue(const Int& n, const Int& j, const Prime& p);

// Largest e with p^e | n. Rejects n = 0.
Int p_valuation(const Int& n, const Prime& p);

// Lower bound floor((k-1)/(p-1)) for the p-valuation of the Atiyah-Todd
// number M_k. Only the bound is computed, never M_k itself.
Int atiyah_todd_valuation_bound(const Int& k, const Prime& p);

// True iff n/2 <= r < n, as exact integer comparisons 2r >= n and r < n.
bool is_metastable(const Int& r, const Int& n);

// Guarded conversion for container sizing.
std::size_t checked_size(const Int& n, const std::string& what);

}  // namespace arith
}  // namespace cpcount

#endif
