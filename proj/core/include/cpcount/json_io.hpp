#ifndef CPCOUNT_JSON_IO_HPP
#define CPCOUNT_JSON_IO_HPP

#include <map>
#include <string>
#include <vector>

#include "cpcount/counts.hpp"
#include "cpcount/eo.hpp"

namespace cpcount {

// Echo of the query being answered; serialized under the "query" key.
struct QueryEcho {
    std::string command;
    std::map<std::string, Int> params;
};

struct TableRow {
    Int rank;
    Int dim;
    Int corank;
    CountResult result;
};

namespace jsonio {

// All emitters produce deterministic output: keys sorted, compact layout,
// one trailing newline. Integers beyond 2^53-1 in magnitude are serialized
// as decimal strings.
std::string emit_count(const QueryEcho& q, const CountResult& r);
std::string emit_decomposition(const QueryEcho& q, const EODecomposition& d);
std::string emit_group(const QueryEcho& q, const FinitePGroup& g,
                       const std::vector<std::string>& citations);
std::string emit_instances(const QueryEcho& q, const std::vector<DetectionInstance>& list);
std::string emit_table_json(const QueryEcho& q, const std::vector<TableRow>& rows);
std::string emit_table_csv(const std::vector<TableRow>& rows);

std::string describe_count_text(const CountResult& r);
std::string describe_instance_text(const DetectionInstance& inst);

// Inverse of emit_count's "result"/"citations" payload; used by the
// round-trip checks.
CountResult parse_count(const std::string& json_text, const Prime& p);

}  // namespace jsonio
}  // namespace cpcount

#endif
