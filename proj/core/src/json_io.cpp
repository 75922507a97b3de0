#include "cpcount/json_io.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace cpcount {
namespace jsonio {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const Int kJsonSafe = (Int(1) << 53) - 1;

json int_json(const Int& v) {
    if (v >= -kJsonSafe && v <= kJsonSafe) return json(v.convert_to<long long>());
    return json(v.str());
}

Int int_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<long long>());
    throw InvalidInput("expected an integer or decimal string in JSON payload");
}

json query_json(const QueryEcho& q) {
    json out;
    out["command"] = q.command;
    for (const auto& [k, v] : q.params) out[k] = int_json(v);
    return out;
}

json group_fields(const FinitePGroup& g) {
    json exps = json::array();
    for (const auto& e : g.exponents()) exps.push_back(int_json(e));
    json out;
    out["group"] = exps;
    out["order"] = g.order_string();
    return out;
}

json summands_json(const std::vector<Summand>& list) {
    json out = json::array();
    for (const auto& s : list) out.push_back(json::array({int_json(s.half_shift), int_json(s.length)}));
    return out;
}

json instance_json(const DetectionInstance& inst) {
    json out;
    out["prime"] = int_json(inst.prime.value());
    out["rank"] = int_json(inst.rank);
    out["torsion_exponent"] = int_json(inst.torsion_exponent);
    out["source"] = inst.source_label;
    out["citation"] = inst.citation;
    if (inst.target == DetectionInstance::Target::projective) {
        out["target"] = "projective";
        out["ambient_dim"] = int_json(inst.ambient_dim);
    } else {
        out["target"] = "unitary";
        out["homotopy_degree"] = int_json(inst.homotopy_degree);
        out["group_rank"] = int_json(inst.group_rank);
    }
    return out;
}

json count_result_json(const CountResult& r) {
    json out;
    out["kind"] = CountResult::kind_name(r.kind);
    out["metastable"] = r.metastable;
    if (r.valuation) out["valuation"] = int_json(*r.valuation);
    if (r.group) {
        json g = group_fields(*r.group);
        out["group"] = g["group"];
        out["order"] = g["order"];
    }
    if (r.eo_lower_bound) out["eo_lower_bound"] = int_json(*r.eo_lower_bound);
    if (!r.note.empty()) out["note"] = r.note;
    if (!r.evidence.empty()) {
        json ev = json::array();
        for (const auto& inst : r.evidence) ev.push_back(instance_json(inst));
        out["evidence"] = ev;
    }
    return out;
}

std::string finish(json root) { return root.dump() + "\n"; }

}  // namespace

std::string emit_count(const QueryEcho& q, const CountResult& r) {
    json root;
    root["query"] = query_json(q);
    root["result"] = count_result_json(r);
    root["citations"] = r.citations;
    return finish(root);
}

std::string emit_decomposition(const QueryEcho& q, const EODecomposition& d) {
    json root;
    root["query"] = query_json(q);
    json res;
    res["decomposition"]["main"] = summands_json(d.main);
    res["decomposition"]["junk"] = summands_json(d.junk);
    root["result"] = res;
    root["citations"] = json::array();
    return finish(root);
}

std::string emit_group(const QueryEcho& q, const FinitePGroup& g,
                       const std::vector<std::string>& citations) {
    json root;
    root["query"] = query_json(q);
    root["result"] = group_fields(g);
    root["citations"] = citations;
    return finish(root);
}

std::string emit_instances(const QueryEcho& q, const std::vector<DetectionInstance>& list) {
    json root;
    root["query"] = query_json(q);
    json arr = json::array();
    for (const auto& inst : list) arr.push_back(instance_json(inst));
    root["result"]["instances"] = arr;
    json cites = json::array();
    for (const auto& inst : list) cites.push_back(inst.citation);
    root["citations"] = cites;
    return finish(root);
}

std::string emit_table_json(const QueryEcho& q, const std::vector<TableRow>& rows) {
    json root;
    root["query"] = query_json(q);
    json arr = json::array();
    for (const auto& row : rows) {
        json rj = count_result_json(row.result);
        rj["rank"] = int_json(row.rank);
        rj["dim"] = int_json(row.dim);
        rj["corank"] = int_json(row.corank);
        arr.push_back(rj);
    }
    root["result"]["rows"] = arr;
    root["citations"] = json::array();
    return finish(root);
}

std::string emit_table_csv(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "rank,dim,corank,metastable,kind,valuation,group,citation\n";
    for (const auto& row : rows) {
        out << row.rank << ',' << row.dim << ',' << row.corank << ','
            << (row.result.metastable ? 1 : 0) << ',' << CountResult::kind_name(row.result.kind)
            << ',';
        if (row.result.valuation) out << *row.result.valuation;
        out << ',';
        out << (row.result.group ? row.result.group->order_string() : std::string("-")) << ',';
        out << (row.result.citations.empty() ? std::string("-") : row.result.citations.back());
        out << '\n';
    }
    return out.str();
}

std::string describe_count_text(const CountResult& r) {
    std::ostringstream out;
    out << "kind: " << CountResult::kind_name(r.kind) << '\n';
    out << "metastable: " << (r.metastable ? "yes" : "no") << '\n';
    if (r.valuation) out << "valuation: " << *r.valuation << '\n';
    if (r.group) out << "group: " << r.group->describe() << '\n';
    if (r.eo_lower_bound) out << "eo_lower_bound: " << *r.eo_lower_bound << '\n';
    if (!r.note.empty()) out << "note: " << r.note << '\n';
    for (const auto& inst : r.evidence) out << "evidence: " << describe_instance_text(inst);
    if (!r.citations.empty()) {
        out << "citations:";
        for (const auto& c : r.citations) out << ' ' << c;
        out << '\n';
    }
    return out.str();
}

std::string describe_instance_text(const DetectionInstance& inst) {
    std::ostringstream out;
    if (inst.target == DetectionInstance::Target::projective) {
        out << inst.prime.value() << "-torsion rank " << inst.rank << " bundle on CP^"
            << inst.ambient_dim << " from " << inst.source_label << " [" << inst.citation
            << "]\n";
    } else {
        out << inst.prime.value() << "-torsion in pi_" << inst.homotopy_degree << " BU("
            << inst.group_rank << ") from " << inst.source_label << " [" << inst.citation
            << "]\n";
    }
    return out.str();
}

CountResult parse_count(const std::string& json_text, const Prime& p) {
    json root = json::parse(json_text);
    const json& res = root.at("result");
    CountResult out;
    std::string kind = res.at("kind").get<std::string>();
    if (kind == "exact")
        out.kind = CountResult::Kind::exact;
    else if (kind == "lower_bound")
        out.kind = CountResult::Kind::lower_bound;
    else if (kind == "unknown")
        out.kind = CountResult::Kind::unknown;
    else
        throw InvalidInput("unrecognized result kind: " + kind);
    out.metastable = res.at("metastable").get<bool>();
    if (res.contains("valuation")) out.valuation = int_from_json(res.at("valuation"));
    if (res.contains("group")) {
        std::vector<Int> exps;
        for (const auto& e : res.at("group")) exps.push_back(int_from_json(e));
        out.group = FinitePGroup(p, std::move(exps));
    }
    if (res.contains("eo_lower_bound"))
        out.eo_lower_bound = int_from_json(res.at("eo_lower_bound"));
    if (res.contains("note")) out.note = res.at("note").get<std::string>();
    if (res.contains("evidence")) {
        for (const auto& e : res.at("evidence")) {
            DetectionInstance inst{Prime(int_from_json(e.at("prime"))),
                                   int_from_json(e.at("rank")),
                                   DetectionInstance::Target::projective,
                                   0,
                                   0,
                                   0,
                                   int_from_json(e.at("torsion_exponent")),
                                   e.at("source").get<std::string>(),
                                   e.at("citation").get<std::string>()};
            if (e.at("target").get<std::string>() == "projective") {
                inst.ambient_dim = int_from_json(e.at("ambient_dim"));
            } else {
                inst.target = DetectionInstance::Target::unitary;
                inst.homotopy_degree = int_from_json(e.at("homotopy_degree"));
                inst.group_rank = int_from_json(e.at("group_rank"));
            }
            out.evidence.push_back(std::move(inst));
        }
    }
    if (root.contains("citations"))
        for (const auto& c : root.at("citations")) out.citations.push_back(c.get<std::string>());
    return out;
}

}  // namespace jsonio
}  // namespace cpcount
