#ifndef CPCOUNT_GROUPS_HPP
#define CPCOUNT_GROUPS_HPP

#include <string>
#include <vector>

#include "cpcount/arith.hpp"

namespace cpcount {

// A finite abelian p-group as a multiset of exponents {k_i}, meaning
// (+) Z/p^{k_i}. The empty multiset is the trivial group.
class FinitePGroup {
  public:
    explicit FinitePGroup(Prime p, std::vector<Int> exponents = {});

    static FinitePGroup trivial(const Prime& p) { return FinitePGroup(p); }
    static FinitePGroup cyclic(const Prime& p, const Int& exponent);

    const Prime& prime() const { return prime_; }
    const std::vector<Int>& exponents() const { return exponents_; }
    bool is_trivial() const { return exponents_.empty(); }
    Int order_exponent() const;       // sum of exponents; |G| = p^this
    std::string order_string() const; // "1" or "p^e"
    std::string describe() const;     // "0", "Z/9", "Z/3 + Z/3", ...

    FinitePGroup& operator+=(const FinitePGroup& other);

    friend bool operator==(const FinitePGroup& a, const FinitePGroup& b) {
        return a.prime_ == b.prime_ && a.exponents_ == b.exponents_;
    }
    friend bool operator!=(const FinitePGroup& a, const FinitePGroup& b) { return !(a == b); }

  private:
    Prime prime_;
    std::vector<Int> exponents_;  // sorted ascending, each >= 1
};

}  // namespace cpcount

#endif
