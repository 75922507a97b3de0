#include "cpcount/arith.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

namespace cpcount {

Prime::Prime(Int p) : p_(std::move(p)) {
    if (p_ < 2) throw InvalidInput("prime must be >= 2, got " + p_.str());
    if (!arith::is_prime(p_)) throw InvalidInput(p_.str() + " is not prime");
}

namespace arith {

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    if (n < 37 * 37) return true;
    // 25 Miller-Rabin rounds: error probability below 2^-50.
    return boost::multiprecision::miller_rabin_test(n, 25);
}

Residue mod_rep(const Int& k, const Int& d) {
    if (d < 1) throw InvalidInput("modulus must be positive, got " + d.str());
    Int v = k % d;
    if (v < 0) v += d;
    return Residue{v, d};
}

Int mod_val(const Int& k, const Int& d) { return mod_rep(k, d).value; }

Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw InvalidInput("division by zero");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int floor_same_residue(const Int& n, const Int& j, const Prime& p) {
    return n - mod_val(n - j, p.value() - 1);
}

Int p_valuation(const Int& n, const Prime& p) {
    if (n == 0) throw InvalidInput("p-adic valuation of 0 is infinite");
    Int m = n < 0 ? Int(-n) : n;
    Int e = 0;
    while (m % p.value() == 0) {
        m /= p.value();
        ++e;
    }
    return e;
}

Int atiyah_todd_valuation_bound(const Int& k, const Prime& p) {
    if (k < 1) throw InvalidInput("Atiyah-Todd index k must be >= 1, got " + k.str());
    return (k - 1) / (p.value() - 1);
}

bool is_metastable(const Int& r, const Int& n) { return 2 * r >= n && r < n; }

std::size_t checked_size(const Int& n, const std::string& what) {
    static const Int kCap = 4000000;
    if (n < 0 || n > kCap)
        throw InvalidInput(what + " of size " + n.str() + " exceeds the supported range");
    return static_cast<std::size_t>(n);
}

}  // namespace arith
}  // namespace cpcount
