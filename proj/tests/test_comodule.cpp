#include "doctest.h"

#include <random>

#include "cpcount/comodule.hpp"

using namespace cpcount;
using namespace cpcount::comod;

namespace {

Decomposition decomp(const GradedComodule& c) { return decompose(c); }

std::vector<Summand> S(std::initializer_list<Summand> init) { return std::vector<Summand>(init); }

// Rank fidelity: the reassembled decomposition carries the same iterated
// P^1 ranks in every degree; this classifies the module, so it certifies
// the isomorphism.
void check_rank_fidelity(const GradedComodule& c) {
    Decomposition d = decompose(c);
    const Int q = c.prime().value();
    for (const auto& [deg, count] : c.degree_profile()) {
        (void)count;
        for (Int j = 0; j <= q; ++j)
            CHECK(c.iterated_rank(deg, j) == decomposition_rank(d, deg, j));
    }
}

}  // namespace

TEST_CASE("p1_iterated_coeff") {
    CHECK(p1_iterated_coeff(9, 1, Prime(3)).value == 0);
    CHECK(p1_iterated_coeff(11, 1, Prime(3)).value == 2);
    CHECK(p1_iterated_coeff(42, 0, Prime(5)).value == 1);
    CHECK(p1_iterated_coeff(7, 3, Prime(5)).value == (7 * 6 * 5) % 5);
    CHECK(p1_iterated_coeff(7, 2, Prime(5)).value == (7 * 6) % 5);
    CHECK_THROWS_AS(p1_iterated_coeff(7, -1, Prime(5)), InvalidInput);
}

TEST_CASE("stunted_cohomology structure") {
    GradedComodule c = stunted_cohomology(9, 13, Prime(3));
    REQUIRE(c.dimension() == 5);
    for (std::size_t k = 0; k < 5; ++k) CHECK(c.basis()[k].degree == 18 + 2 * Int(k));
    REQUIRE(c.action().size() == 2);
    // x10 -> (1, x12), x11 -> (2, x13)
    CHECK(c.action().at(1) == GradedComodule::Terms{{1, 3}});
    CHECK(c.action().at(2) == GradedComodule::Terms{{2, 4}});

    GradedComodule single = stunted_cohomology(5, 5, Prime(3));
    CHECK(single.dimension() == 1);
    CHECK(single.action().empty());

    GradedComodule bottom = stunted_cohomology(0, 4, Prime(5));
    CHECK(bottom.dimension() == 5);
    CHECK(bottom.action().empty());

    CHECK_THROWS_AS(stunted_cohomology(3, 2, Prime(3)), InvalidInput);
    CHECK_THROWS_AS(stunted_cohomology(-1, 2, Prime(3)), InvalidInput);
}

TEST_CASE("adams_summand filters by degree class") {
    Prime p3(3);
    GradedComodule c = stunted_cohomology(9, 13, p3);
    GradedComodule odd = adams_summand(c, Residue{1, 2});
    REQUIRE(odd.dimension() == 3);  // x9, x11, x13
    CHECK(odd.basis()[0].degree == 18);
    CHECK(odd.action().size() == 1);
    CHECK(odd.action().at(1) == GradedComodule::Terms{{2, 2}});

    GradedComodule even = adams_summand(c, Residue{0, 2});
    REQUIRE(even.dimension() == 2);  // x10, x12
    CHECK(even.action().at(0) == GradedComodule::Terms{{1, 1}});

    CHECK_THROWS_AS(adams_summand(c, Residue{0, 5}), InvalidInput);

    // Partition: summing the Adams pieces recovers the whole decomposition.
    std::vector<Summand> merged;
    for (Int i = 0; i <= 1; ++i) {
        auto piece = decompose(adams_summand(c, Residue{i, 2}));
        merged.insert(merged.end(), piece.summands.begin(), piece.summands.end());
    }
    CHECK(Decomposition(merged, p3) == decompose(c));
}

TEST_CASE("decompose on stunted spaces") {
    CHECK(decomp(stunted_cohomology(9, 13, Prime(3))).summands ==
          S({{9, 1}, {10, 2}, {11, 2}}));
    CHECK(decomp(stunted_cohomology(10, 14, Prime(3))).summands ==
          S({{10, 2}, {11, 2}, {14, 1}}));
    CHECK(decomp(GradedComodule(Prime(3), {}, {})).summands.empty());
    CHECK(decomp(indecomposable(4, Prime(5), 7)).summands == S({{7, 4}}));
}

TEST_CASE("tensor products") {
    Prime p3(3);
    GradedComodule w2 = indecomposable(2, p3);
    GradedComodule t = tensor(w2, w2);
    CHECK(t.dimension() == 4);
    CHECK(decompose(t).summands == S({{0, 3}, {2, 1}}));

    for (Int l = 1; l <= 3; ++l) {
        GradedComodule u = tensor(indecomposable(1, p3), indecomposable(l, p3));
        CHECK(decompose(u).summands == S({{0, l}}));
    }

    GradedComodule a = stunted_cohomology(2, 6, p3);
    GradedComodule b = stunted_cohomology(1, 4, p3);
    CHECK(tensor(a, b).dimension() == a.dimension() * b.dimension());
    CHECK(decompose(tensor(a, b)) == decompose(tensor(b, a)));

    CHECK_THROWS_AS(tensor(w2, indecomposable(2, Prime(5))), InvalidInput);
}

TEST_CASE("modular Clebsch-Gordan against the classical pattern") {
    // For l + l2 <= p the decomposition is the classical one:
    // lengths l2-l+1, l2-l+3, ..., l2+l-1 at half-shifts (l-j)(p-1).
    for (int pi : {5, 7}) {
        Prime p(pi);
        for (Int l = 1; 2 * l <= pi; ++l) {
            for (Int l2 = l; l + l2 <= pi; ++l2) {
                std::vector<Summand> want;
                for (Int j = 1; j <= l; ++j)
                    want.push_back({(l - j) * (pi - 1), l2 - l + 2 * j - 1});
                CHECK(decompose(tensor(indecomposable(l, p), indecomposable(l2, p))) ==
                      Decomposition(want, p));
            }
        }
    }
}

TEST_CASE("dualize") {
    Prime p3(3);
    CHECK(decomp(dualize(indecomposable(2, p3, 5))).summands == S({{-7, 2}}));
    CHECK(decomp(dualize(indecomposable(1, p3, 4))).summands == S({{-4, 1}}));
    CHECK(decomp(dualize(stunted_cohomology(9, 13, p3))).summands ==
          S({{-13, 2}, {-12, 2}, {-9, 1}}));

    GradedComodule c = stunted_cohomology(3, 11, Prime(5));
    CHECK(decompose(dualize(dualize(c))) == decompose(c));
}

TEST_CASE("rank fidelity across a random grid") {
    std::mt19937 rng(2024);
    for (int pi : {2, 3, 5}) {
        Prime p(pi);
        std::uniform_int_distribution<long long> rd(0, 12), cd(0, 14);
        for (int it = 0; it < 25; ++it) {
            Int r = rd(rng);
            GradedComodule c = stunted_cohomology(r, r + cd(rng), p);
            check_rank_fidelity(c);
            check_rank_fidelity(dualize(c));
        }
        check_rank_fidelity(tensor(stunted_cohomology(2, 2 + 2 * pi, p),
                                   dualize(stunted_cohomology(2, 2 + pi, p))));
    }
}

TEST_CASE("summand lengths never exceed p") {
    for (int pi : {2, 3, 5}) {
        Prime p(pi);
        for (Int r = 0; r <= 8; ++r) {
            auto d = decompose(stunted_cohomology(r, r + 10, p));
            for (const auto& s : d.summands) {
                CHECK(s.length >= 1);
                CHECK(s.length <= pi);
            }
        }
    }
}

TEST_CASE("comodule validation") {
    Prime p2(2);
    using BE = GradedComodule::BasisElement;
    // A 3-chain at p=2 has (P^1)^2 != 0.
    CHECK_THROWS_AS(GradedComodule(p2, {BE{"a", 0}, BE{"b", 2}, BE{"c", 4}},
                                   {{0, {{1, 1}}}, {1, {{1, 2}}}}),
                    InvalidInput);
    // Wrong degree gap.
    CHECK_THROWS_AS(GradedComodule(Prime(3), {BE{"a", 0}, BE{"b", 2}}, {{0, {{1, 1}}}}),
                    InvalidInput);
    // Coefficients are normalized mod p and zero terms dropped.
    GradedComodule ok(Prime(3), {BE{"a", 0}, BE{"b", 4}}, {{0, {{6, 1}}}});
    CHECK(ok.action().empty());
    // Odd degrees refuse Adams-summand extraction.
    GradedComodule odd(Prime(3), {BE{"a", 1}}, {});
    CHECK_THROWS_AS(adams_summand(odd, Residue{0, 2}), InvalidInput);
}
