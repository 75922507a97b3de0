#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "cpcount/counts.hpp"
#include "cpcount/eo.hpp"
#include "cpcount/json_io.hpp"
#include "cpcount/selftest.hpp"

namespace {

using namespace cpcount;

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kWindow = 3;
constexpr int kContradiction = 4;
constexpr long long kRowCap = 1000000;

Int parse_int(const std::string& s, const std::string& what) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw InvalidInput(what + " must be an integer, got '" + s + "'");
    }
}

struct Output {
    std::optional<std::string> path;
    void write(const std::string& data) const {
        if (!path) {
            std::cout << data;
            return;
        }
        std::ofstream f(*path, std::ios::binary);
        if (!f) throw InvalidInput("cannot open output file " + *path);
        f << data;
    }
};

std::string summands_text(const std::vector<Summand>& list) {
    std::string out;
    for (const auto& s : list) {
        if (!out.empty()) out += " ";
        out += "(" + s.half_shift.str() + "," + s.length.str() + ")";
    }
    return out.empty() ? "-" : out;
}

std::vector<TableRow> make_table(const Prime& p, const Int& corank, const Int& from,
                                 const Int& to) {
    if (to < from) throw InvalidInput("empty rank range");
    if (to - from + 1 > kRowCap) throw InvalidInput("rank range exceeds the 10^6 row cap");
    std::vector<TableRow> rows;
    for (Int r = from; r <= to; ++r) {
        TableRow row{r, r + corank, corank, counts::count_bundles(r, r + corank, p)};
        rows.push_back(std::move(row));
    }
    return rows;
}

int dispatch(const std::string& cmd, const std::string& prime_s, const std::string& rank_s,
             const std::string& dim_s, const std::string& l_s, const std::string& l2_s,
             const std::string& object, const std::string& family, const std::string& t_s,
             const std::string& i_s, const std::string& j_s, bool unitary,
             const std::string& corank_s, const std::string& from_s, const std::string& to_s,
             const std::string& format, const Output& out) {
    if (format != "text" && format != "json" && format != "csv")
        throw InvalidInput("format must be text, json or csv");

    if (cmd == "selftest") {
        bool ok = selftest::run_and_report(std::cout);
        return ok ? kOk : kContradiction;
    }

    if (cmd == "count") {
        Prime p(parse_int(prime_s, "--prime"));
        Int r = parse_int(rank_s, "--rank"), n = parse_int(dim_s, "--dim");
        CountResult res = counts::count_bundles(r, n, p);
        QueryEcho q{"count", {{"prime", p.value()}, {"rank", r}, {"dim", n}}};
        if (format == "json")
            out.write(jsonio::emit_count(q, res));
        else if (format == "csv")
            out.write(jsonio::emit_table_csv({TableRow{r, n, n - r, res}}));
        else
            out.write(jsonio::describe_count_text(res));
        return kOk;
    }

    if (cmd == "split" || cmd == "tensor") {
        Prime p(parse_int(prime_s, "--prime"));
        EODecomposition d = [&] {
            if (cmd == "split") {
                Int r = parse_int(rank_s, "--rank"), n = parse_int(dim_s, "--dim");
                return eo::closed_form_splitting(r, n, p);
            }
            Int l = parse_int(l_s, "--l"), l2 = parse_int(l2_s, "--l2");
            return eo::tensor_rule(l, l2, p);
        }();
        QueryEcho q{cmd, {{"prime", p.value()}}};
        if (cmd == "split") {
            q.params.emplace("rank", parse_int(rank_s, "--rank"));
            q.params.emplace("dim", parse_int(dim_s, "--dim"));
        } else {
            q.params.emplace("l", parse_int(l_s, "--l"));
            q.params.emplace("l2", parse_int(l2_s, "--l2"));
        }
        if (format == "json")
            out.write(jsonio::emit_decomposition(q, d));
        else if (format == "csv")
            throw InvalidInput("csv output is available for count and table only");
        else
            out.write("main: " + summands_text(d.main) + "\njunk: " + summands_text(d.junk) +
                      "\n");
        return kOk;
    }

    if (cmd == "eo-group") {
        Prime p(parse_int(prime_s, "--prime"));
        Int r = parse_int(rank_s, "--rank"), n = parse_int(dim_s, "--dim");
        FinitePGroup g = FinitePGroup::trivial(p);
        std::vector<std::string> cites;
        if (object == "tensor-dual") {
            g = eo::eo_neg1_cp_tensor_dcp(r, n, p);
            cites = {"eo-hurewicz-lower-bound"};
        } else if (object == "top-cell") {
            g = eo::eo_neg1_shifted_cp(r, n, p);
            cites = {"eo-top-cell"};
        } else {
            throw InvalidInput("--object must be tensor-dual or top-cell");
        }
        QueryEcho q{"eo-group", {{"prime", p.value()}, {"rank", r}, {"dim", n}}};
        if (format == "json")
            out.write(jsonio::emit_group(q, g, cites));
        else if (format == "csv")
            throw InvalidInput("csv output is available for count and table only");
        else
            out.write(g.describe() + " (order " + g.order_string() + ")\n");
        return kOk;
    }

    if (cmd == "detect") {
        DetectionInstance inst = [&] {
            if (family == "ko") {
                Int t = parse_int(t_s, "--t"), i = parse_int(i_s, "--i");
                return unitary ? detect::unitary_ko(t, i) : detect::ko_family(t, i);
            }
            if (family == "tmf-w" || family == "tmf-wk") {
                Int t = parse_int(t_s, "--t"), i = parse_int(i_s, "--i");
                auto variant = family == "tmf-w" ? detect::Tmf2Variant::w
                                                 : detect::Tmf2Variant::w_kappa4;
                return unitary ? detect::unitary_tmf2(t, i, variant)
                               : detect::tmf2_families(t, i, variant);
            }
            if (family == "eo2") {
                Int t = parse_int(t_s, "--t"), l = parse_int(l_s, "--l");
                return unitary ? detect::unitary_eo2(t, l) : detect::eo2_family(t, l);
            }
            if (family == "eop") {
                Prime p(parse_int(prime_s, "--prime"));
                Int l = parse_int(l_s, "--l");
                if (unitary) return detect::unitary_eop(p, parse_int(j_s, "--j"), l);
                return detect::eop_family(p, l);
            }
            throw InvalidInput("--family must be ko, tmf-w, tmf-wk, eo2 or eop");
        }();
        QueryEcho q{"detect", {{"prime", inst.prime.value()}, {"rank", inst.rank}}};
        if (format == "json")
            out.write(jsonio::emit_instances(q, {inst}));
        else if (format == "csv")
            throw InvalidInput("csv output is available for count and table only");
        else
            out.write(jsonio::describe_instance_text(inst));
        return kOk;
    }

    if (cmd == "table") {
        Prime p(parse_int(prime_s, "--prime"));
        Int c = parse_int(corank_s, "--corank");
        if (c < 0) throw InvalidInput("--corank must be nonnegative");
        Int from = from_s.empty() ? c : parse_int(from_s, "--rank-from");
        Int to = to_s.empty() ? from + 8 : parse_int(to_s, "--rank-to");
        auto rows = make_table(p, c, from, to);
        QueryEcho q{"table",
                    {{"prime", p.value()}, {"corank", c}, {"rank_from", from}, {"rank_to", to}}};
        if (format == "json")
            out.write(jsonio::emit_table_json(q, rows));
        else
            out.write(jsonio::emit_table_csv(rows));
        return kOk;
    }

    throw InvalidInput("unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-primary counts of stably trivial bundles on complex projective spaces"};
    app.require_subcommand(1);

    std::string prime_s, rank_s, dim_s, l_s, l2_s, corank_s, from_s, to_s;
    std::string t_s, i_s, j_s, family, object = "tensor-dual";
    std::string format = "text";
    bool unitary = false;
    Output out;
    std::string out_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format,-f", format, "text, json or csv");
        sub->add_option("--output,-o", out_path, "write the data stream to a file");
    };

    auto* count = app.add_subcommand("count", "count stably trivial rank-r bundles on CP^n");
    count->add_option("--prime,-p", prime_s)->required();
    count->add_option("--rank,-r", rank_s)->required();
    count->add_option("--dim,-n", dim_s)->required();
    add_common(count);

    auto* split = app.add_subcommand("split", "EO-module splitting of CP^n_r");
    split->add_option("--prime,-p", prime_s)->required();
    split->add_option("--rank,-r", rank_s)->required();
    split->add_option("--dim,-n", dim_s)->required();
    add_common(split);

    auto* tensor = app.add_subcommand("tensor", "EO-module tensor X_l (x) X_l2");
    tensor->add_option("--prime,-p", prime_s)->required();
    tensor->add_option("--l", l_s)->required();
    tensor->add_option("--l2", l2_s)->required();
    add_common(tensor);

    auto* eog = app.add_subcommand("eo-group", "EO_{-1} of the tensor-dual or top-cell object");
    eog->add_option("--prime,-p", prime_s)->required();
    eog->add_option("--rank,-r", rank_s)->required();
    eog->add_option("--dim,-n", dim_s)->required();
    eog->add_option("--object", object, "tensor-dual (default) or top-cell");
    add_common(eog);

    auto* detect_cmd = app.add_subcommand("detect", "guaranteed-nontrivial torsion families");
    detect_cmd->add_option("--family", family, "ko, tmf-w, tmf-wk, eo2 or eop")->required();
    detect_cmd->add_option("--prime,-p", prime_s, "prime (eop family only)");
    detect_cmd->add_option("--t", t_s);
    detect_cmd->add_option("--i", i_s);
    detect_cmd->add_option("--l", l_s);
    detect_cmd->add_option("--j", j_s, "eop unitary index");
    detect_cmd->add_flag("--unitary", unitary, "emit the unitary-group instance");
    add_common(detect_cmd);

    auto* table = app.add_subcommand("table", "bundle-count table at fixed corank");
    table->add_option("--prime,-p", prime_s)->required();
    table->add_option("--corank,-c", corank_s)->required();
    table->add_option("--rank-from", from_s);
    table->add_option("--rank-to", to_s);
    add_common(table);

    app.add_subcommand("selftest", "run the oracle-agreement grids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    if (!out_path.empty()) out.path = out_path;
    std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "table" && format == "text") format = "csv";

    try {
        return dispatch(cmd, prime_s, rank_s, dim_s, l_s, l2_s, object, family, t_s, i_s, j_s,
                        unitary, corank_s, from_s, to_s, format, out);
    } catch (const InternalContradiction& e) {
        std::cerr << "internal contradiction: " << e.what() << "\n";
        return kContradiction;
    } catch (const WindowError& e) {
        std::cerr << "out of validity window: " << e.what() << "\n";
        return kWindow;
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
}
