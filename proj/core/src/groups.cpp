#include "cpcount/groups.hpp"

#include <algorithm>

namespace cpcount {

FinitePGroup::FinitePGroup(Prime p, std::vector<Int> exponents)
    : prime_(std::move(p)), exponents_(std::move(exponents)) {
    for (const auto& e : exponents_)
        if (e < 1) throw InvalidInput("group exponents must be >= 1");
    std::sort(exponents_.begin(), exponents_.end());
}

FinitePGroup FinitePGroup::cyclic(const Prime& p, const Int& exponent) {
    if (exponent <= 0) return trivial(p);
    return FinitePGroup(p, {exponent});
}

Int FinitePGroup::order_exponent() const {
    Int e = 0;
    for (const auto& k : exponents_) e += k;
    return e;
}

std::string FinitePGroup::order_string() const {
    if (exponents_.empty()) return "1";
    return prime_.value().str() + "^" + order_exponent().str();
}

std::string FinitePGroup::describe() const {
    if (exponents_.empty()) return "0";
    std::string out;
    for (auto it = exponents_.rbegin(); it != exponents_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        Int q = 1;
        for (Int i = 0; i < *it; ++i) q *= prime_.value();
        out += "Z/" + q.str();
    }
    return out;
}

FinitePGroup& FinitePGroup::operator+=(const FinitePGroup& other) {
    if (prime_ != other.prime_) throw InvalidInput("direct sum across different primes");
    exponents_.insert(exponents_.end(), other.exponents_.begin(), other.exponents_.end());
    std::sort(exponents_.begin(), exponents_.end());
    return *this;
}

}  // namespace cpcount
