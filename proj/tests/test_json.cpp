#include "doctest.h"

#include "cpcount/json_io.hpp"

using namespace cpcount;
using namespace cpcount::jsonio;

namespace {

bool same_result(const CountResult& a, const CountResult& b) {
    return a.kind == b.kind && a.metastable == b.metastable && a.valuation == b.valuation &&
           a.group == b.group && a.eo_lower_bound == b.eo_lower_bound &&
           a.citations == b.citations && a.note == b.note && a.evidence == b.evidence;
}

}  // namespace

TEST_CASE("count JSON round-trips and is deterministic") {
    Prime p3(3);
    for (auto [r, n] : std::initializer_list<std::pair<int, int>>{
             {9, 13}, {9, 14}, {18, 24}, {9, 9}, {21, 40}}) {
        CountResult res = counts::count_bundles(r, n, p3);
        QueryEcho q{"count", {{"prime", 3}, {"rank", r}, {"dim", n}}};
        std::string one = emit_count(q, res);
        std::string two = emit_count(q, res);
        CHECK(one == two);
        CountResult back = parse_count(one, p3);
        CHECK(same_result(res, back));
    }
}

TEST_CASE("group serialization format") {
    Prime p3(3);
    QueryEcho q{"eo-group", {{"prime", 3}}};
    std::string nontrivial = emit_group(q, FinitePGroup::cyclic(p3, 1), {});
    CHECK(nontrivial.find("\"group\":[1]") != std::string::npos);
    CHECK(nontrivial.find("\"order\":\"3^1\"") != std::string::npos);

    std::string trivial = emit_group(q, FinitePGroup::trivial(p3), {});
    CHECK(trivial.find("\"group\":[]") != std::string::npos);
    CHECK(trivial.find("\"order\":\"1\"") != std::string::npos);

    CHECK(FinitePGroup(p3, {1, 2}).order_string() == "3^3");
    CHECK(FinitePGroup(p3, {2}).describe() == "Z/9");
    CHECK(FinitePGroup(p3, {1, 1}).describe() == "Z/3 + Z/3");
}

TEST_CASE("decomposition serialization keeps canonical order") {
    Prime p3(3);
    EODecomposition d({{11, 2}, {9, 1}, {10, 2}}, {}, p3);
    QueryEcho q{"split", {{"prime", 3}, {"rank", 9}, {"dim", 13}}};
    std::string out = emit_decomposition(q, d);
    CHECK(out.find("[[9,1],[10,2],[11,2]]") != std::string::npos);
}

TEST_CASE("integers beyond 2^53-1 become decimal strings") {
    Prime p3(3);
    Int big("9007199254740993");  // 2^53 + 1
    CountResult res = counts::count_bundles(big, big + 4, p3);
    QueryEcho q{"count", {{"prime", 3}, {"rank", big}, {"dim", big + 4}}};
    std::string out = emit_count(q, res);
    CHECK(out.find("\"rank\":\"9007199254740993\"") != std::string::npos);
    CHECK(out.find("\"dim\":\"9007199254740997\"") != std::string::npos);
    // Small values stay numeric.
    CHECK(out.find("\"prime\":3") != std::string::npos);
    CountResult back = parse_count(out, p3);
    CHECK(back.kind == res.kind);
    CHECK(back.valuation == res.valuation);
}

TEST_CASE("table CSV shape") {
    Prime p3(3);
    std::vector<TableRow> rows;
    for (Int r = 9; r <= 11; ++r)
        rows.push_back(TableRow{r, r + 4, 4, counts::count_bundles(r, r + 4, p3)});
    std::string csv = emit_table_csv(rows);
    CHECK(csv.rfind("rank,dim,corank,metastable,kind,valuation,group,citation\n", 0) == 0);
    CHECK(csv.find("9,13,4,1,exact,2,3^2,corank4-table-p3") != std::string::npos);
    CHECK(csv.find("11,15,4,1,exact,1,3^1,corank4-table-p3") != std::string::npos);
}
