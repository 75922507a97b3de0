#include "doctest.h"

#include "cpcount/eo.hpp"

using namespace cpcount;
using namespace cpcount::eo;

namespace {
std::vector<Summand> S(std::initializer_list<Summand> init) { return std::vector<Summand>(init); }
}

TEST_CASE("splitting_context bookkeeping") {
    Prime p3(3);
    SplittingContext ctx = splitting_context(9, 13, p3);
    REQUIRE(ctx.per_index.size() == 2);
    CHECK(ctx.per_index[0].l_index == 1);
    CHECK(ctx.per_index[0].in_top_set);
    CHECK(ctx.per_index[0].top_half_shift == 11);
    CHECK(ctx.per_index[0].top_length == 2);
    CHECK(ctx.per_index[1].l_index == 2);
    CHECK_FALSE(ctx.per_index[1].in_top_set);

    SplittingContext c2 = splitting_context(10, 14, p3);
    CHECK(c2.per_index[0].l_index == 2);
    CHECK(c2.per_index[0].in_top_set);
    CHECK(c2.per_index[0].top_half_shift == 14);
    CHECK(c2.per_index[0].top_length == 1);
    CHECK(c2.per_index[1].l_index == 2);
    CHECK_FALSE(c2.per_index[1].in_top_set);

    SplittingContext single = splitting_context(7, 7, Prime(5));
    CHECK(single.per_index[0].l_index == 1);
    CHECK_FALSE(single.per_index[0].in_top_set);
    for (std::size_t i = 1; i < single.per_index.size(); ++i)
        CHECK(single.per_index[i].l_index <= 0);  // empty Adams summands
}

TEST_CASE("closed_form_splitting") {
    Prime p3(3);
    EODecomposition a = closed_form_splitting(9, 13, p3);
    CHECK(a.main == S({{9, 1}, {10, 2}, {11, 2}}));
    CHECK(a.junk.empty());

    EODecomposition b = closed_form_splitting(10, 14, p3);
    CHECK(b.main == S({{10, 2}, {11, 2}, {14, 1}}));
    CHECK(b.junk.empty());

    EODecomposition c = closed_form_splitting(6, 6, p3);
    CHECK(c.main == S({{6, 1}}));
    CHECK(c.junk.empty());

    // Length-p chains land in junk.
    EODecomposition d = closed_form_splitting(2, 6, p3);
    CHECK(d.main == S({{3, 1}, {5, 1}}));
    CHECK(d.junk == S({{2, 3}}));

    EODecomposition e = closed_form_splitting(1, 3, Prime(2));
    CHECK(e.main == S({{3, 1}}));
    CHECK(e.junk == S({{1, 2}}));
}

TEST_CASE("dual_summand") {
    Prime p3(3);
    CHECK(dual_summand(Summand{11, 2}, p3) == Summand{-13, 2});
    CHECK(dual_summand(Summand{4, 1}, p3) == Summand{-4, 1});
    for (Int s = -5; s <= 5; ++s)
        for (Int l = 1; l <= 3; ++l)
            CHECK(dual_summand(dual_summand(Summand{s, l}, p3), p3) == Summand{s, l});
}

TEST_CASE("tensor_rule") {
    Prime p3(3);
    EODecomposition a = tensor_rule(1, 2, p3);
    CHECK(a.main == S({{0, 2}}));
    CHECK(a.junk.empty());

    EODecomposition b = tensor_rule(2, 2, p3);
    CHECK(b.main == S({{2, 1}}));
    CHECK(b.junk == S({{0, 3}}));

    for (int pi : {2, 3, 5, 7}) {
        EODecomposition u = tensor_rule(1, 1, Prime(pi));
        CHECK(u.main == S({{0, 1}}));
        CHECK(u.junk.empty());
    }

    // X_1 is the unit: X_1 (x) X_l = X_l for l < p, junk for l = p.
    for (int pi : {3, 5, 7}) {
        for (Int l = 1; l < pi; ++l) CHECK(tensor_rule(1, l, Prime(pi)).main == S({{0, l}}));
        EODecomposition top = tensor_rule(1, pi, Prime(pi));
        CHECK(top.main.empty());
        CHECK(top.junk == S({{0, pi}}));
    }

    // Total dimension l * l2 across the full range.
    for (int pi : {2, 3, 5, 7}) {
        for (Int l = 1; l <= pi; ++l) {
            for (Int l2 = l; l2 <= pi; ++l2) {
                EODecomposition t = tensor_rule(l, l2, Prime(pi));
                Int dim = 0;
                for (const auto& s : t.main) dim += s.length;
                for (const auto& s : t.junk) dim += s.length;
                CHECK(dim == l * l2);
            }
        }
    }

    CHECK_THROWS_AS(tensor_rule(0, 2, p3), InvalidInput);
    CHECK_THROWS_AS(tensor_rule(2, 1, p3), InvalidInput);
    CHECK_THROWS_AS(tensor_rule(2, 4, p3), InvalidInput);
}

TEST_CASE("eo_neg1_shifted_xl") {
    Prime p3(3);
    auto hit = eo_neg1_shifted_xl(-4, 2, p3);
    CHECK(hit.group == FinitePGroup::cyclic(p3, 1));
    CHECK(hit.justification == Justification::window_formula);

    CHECK(eo_neg1_shifted_xl(-6, 3, p3).group.is_trivial());  // l = p never fires
    CHECK(eo_neg1_shifted_xl(0, 1, Prime(5)).group.is_trivial());
    CHECK(eo_neg1_shifted_xl(-3, 2, p3).group.is_trivial());

    // Window: -(2p^2-p-2) = -13 at p=3 is rejected, above the upper bound is
    // justified by connectivity.
    CHECK_THROWS_AS(eo_neg1_shifted_xl(-13, 1, p3), WindowError);
    CHECK(eo_neg1_shifted_xl(-12, 1, p3).group.is_trivial());
    auto conn = eo_neg1_shifted_xl(13, 1, p3);
    CHECK(conn.group.is_trivial());
    CHECK(conn.justification == Justification::connectivity);

    CHECK_THROWS_AS(eo_neg1_shifted_xl(0, 0, p3), InvalidInput);
    CHECK_THROWS_AS(eo_neg1_shifted_xl(0, 4, p3), InvalidInput);
}

TEST_CASE("eo_neg1_cp_tensor_dcp") {
    Prime p3(3);
    CHECK(eo_neg1_cp_tensor_dcp(9, 13, p3) == FinitePGroup::cyclic(p3, 1));
    CHECK(eo_neg1_cp_tensor_dcp(18, 22, p3) == FinitePGroup::cyclic(p3, 1));

    // Contributions forced by the degree-correct tensor suspensions.
    CHECK(eo_neg1_cp_tensor_dcp(1, 5, p3) == FinitePGroup::cyclic(p3, 1));
    CHECK(eo_neg1_cp_tensor_dcp(2, 6, p3) == FinitePGroup::cyclic(p3, 1));

    // Below corank p-1 everything splits as spheres.
    for (int pi : {3, 5, 7}) {
        Prime p(pi);
        for (Int c = 0; c < pi - 1; ++c)
            CHECK(eo_neg1_cp_tensor_dcp(10, 10 + c, p).is_trivial());
    }

    // Debug mode re-evaluates the skipped pairs.
    CHECK(eo_neg1_cp_tensor_dcp(9, 13, p3, true) == FinitePGroup::cyclic(p3, 1));
    CHECK(eo_neg1_cp_tensor_dcp(2, 6, p3, true) == FinitePGroup::cyclic(p3, 1));
    CHECK(eo_neg1_cp_tensor_dcp(3, 12, Prime(5), true) == FinitePGroup::cyclic(Prime(5), 1));

    CHECK_THROWS_AS(eo_neg1_cp_tensor_dcp(0, 13, p3), WindowError);
    CHECK_THROWS_AS(eo_neg1_cp_tensor_dcp(5, 4, p3), InvalidInput);
}

TEST_CASE("eo_neg1_shifted_cp") {
    Prime p3(3);
    CHECK(eo_neg1_shifted_cp(10, 14, p3) == FinitePGroup::cyclic(p3, 1));
    CHECK(eo_neg1_shifted_cp(9, 13, p3).is_trivial());
    CHECK(eo_neg1_shifted_cp(9, 14, p3) == FinitePGroup::cyclic(p3, 1));
    CHECK(eo_neg1_shifted_cp(9, 16, p3).is_trivial());
    CHECK(eo_neg1_shifted_cp(4, 9, Prime(5)) == FinitePGroup::cyclic(Prime(5), 1));
    CHECK(eo_neg1_shifted_cp(0, 5, Prime(5)).is_trivial());

    CHECK_THROWS_AS(eo_neg1_shifted_cp(9, 9, p3), InvalidInput);
    CHECK_THROWS_AS(eo_neg1_shifted_cp(0, 13, p3), WindowError);
}

TEST_CASE("verify_periodicity") {
    Prime p3(3);
    CHECK(verify_periodicity(9, 13, p3, 3));
    CHECK(verify_periodicity(10, 14, p3, 2));
    CHECK(verify_periodicity(7, 7, p3, 4));
    CHECK_THROWS_AS(verify_periodicity(9, 13, p3, 0), InvalidInput);
}

TEST_CASE("splitting agrees with the comodule oracle over the full window") {
    for (int pi : {2, 3, 5, 7}) {
        Prime p(pi);
        for (Int r = 0; r <= 3 * pi; ++r) {
            for (Int n = r; n <= r + 2 * pi * pi - pi - 3; ++n) {
                EODecomposition split = closed_form_splitting(r, n, p);
                std::vector<Summand> all = split.main;
                all.insert(all.end(), split.junk.begin(), split.junk.end());
                CHECK(Decomposition(all, p) ==
                      comod::decompose(comod::stunted_cohomology(r, n, p)));
            }
        }
    }
}

TEST_CASE("skipped engine pairs really vanish (debug mode grid)") {
    Prime p3(3);
    for (Int r = 0; r <= 6; ++r)
        for (Int c = 0; c <= 12; ++c)
            CHECK(eo_neg1_cp_tensor_dcp(r, r + c, p3, true) ==
                  eo_neg1_cp_tensor_dcp(r, r + c, p3, false));
}

TEST_CASE("engine agrees with the whole-tensor Jordan route") {
    // Third route: Jordan-decompose H(CP^n_r) (x) H(D CP^n_r) in one piece
    // and sum EO_{-1} over its summands directly. Shares nothing with the
    // splitting, the tensor rule, or the pair enumeration.
    auto whole_tensor_route = [](const Int& r, const Int& n, const Prime& p) {
        GradedComodule cp = comod::stunted_cohomology(r, n, p);
        Decomposition d = comod::decompose(comod::tensor(cp, comod::dualize(cp)));
        FinitePGroup total = FinitePGroup::trivial(p);
        for (const auto& s : d.summands)
            total += eo_neg1_shifted_xl(s.half_shift, s.length, p).group;
        return total;
    };
    for (int pi : {2, 3, 5}) {
        Prime p(pi);
        Int cmax = std::min(corank_window(p) - 1, Int(20));
        Int rmax = pi == 5 ? 4 : 6;
        for (Int r = 0; r <= rmax; ++r)
            for (Int c = 0; c <= cmax; ++c)
                CHECK(whole_tensor_route(r, r + c, p) == eo_neg1_cp_tensor_dcp(r, r + c, p));
    }
}
