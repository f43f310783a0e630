/**
 * @file demazure.cpp
 * @brief Command-line front end: character queries, tensor decompositions,
 *        flag solving, Pieri/Macdonald queries, verification sweeps.
 *
 * Exit codes: 0 ok, 1 verification failure, 2 parse/bad bounds,
 * 3 no Demazure flag, 4 formula precondition violated.
 */
#include <CLI11.hpp>

#include "demazure/closedforms.hpp"
#include "demazure/cvmod.hpp"
#include "demazure/json_io.hpp"
#include "demazure/macdonald.hpp"
#include "demazure/qalg.hpp"
#include "demazure/verify.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace demazure;

namespace {

struct Output {
    std::string format = "json";  // json | table | csv
    std::string path;             // empty = stdout

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << '\n';
        } else {
            std::ofstream out(path);
            out << text;
            if (!text.empty() && text.back() != '\n') out << '\n';
        }
    }
};

std::string render_character(const GradedCharacter& c, const std::string& format) {
    if (format == "json") return character_to_json(c).dump(2);
    std::ostringstream out;
    if (format == "csv") {
        out << "weight,dimension\n";
        for (auto it = c.weights().rbegin(); it != c.weights().rend(); ++it)
            out << it->first << ",\"" << it->second.to_text() << "\"\n";
    } else {
        size_t wcol = 6;
        for (const auto& [w, p] : c.weights())
            wcol = std::max(wcol, std::to_string(w).size());
        out << "weight" << std::string(wcol - 6 + 2, ' ') << "dimension\n";
        for (auto it = c.weights().rbegin(); it != c.weights().rend(); ++it) {
            std::string ws = std::to_string(it->first);
            out << ws << std::string(wcol - ws.size() + 2, ' ') << it->second.to_text() << "\n";
        }
    }
    return out.str();
}

std::string render_parts(const std::map<int, QPoly>& parts, const std::string& format,
                         const std::string& label) {
    if (format == "csv") {
        std::ostringstream out;
        out << label << ",multiplicity\n";
        for (auto it = parts.rbegin(); it != parts.rend(); ++it)
            out << it->first << ",\"" << it->second.to_text() << "\"\n";
        return out.str();
    }
    std::ostringstream out;
    out << label << "  multiplicity\n";
    for (auto it = parts.rbegin(); it != parts.rend(); ++it)
        out << it->first << "  " << it->second.to_text() << "\n";
    return out.str();
}

long parse_long(const std::string& s) {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("not an integer: " + s);
    return v;
}

/// Character spec "kind:params", e.g. "weyl:3", "cv:2,1", "demazure:2,5".
GradedCharacter character_from_spec(const std::string& spec) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "weyl") return weyl_char(static_cast<int>(parse_long(rest)));
    if (kind == "irr") return irr_char(static_cast<int>(parse_long(rest)));
    if (kind == "cv") return cv_char(Partition::from_text(rest));
    auto comma = rest.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument(kind + " spec needs two parameters: " + spec);
    long a = parse_long(rest.substr(0, comma));
    long b = parse_long(rest.substr(comma + 1));
    if (kind == "demazure") return cv_char(demazure_partition(a, b));
    if (kind == "truncated") return cv_char(truncated_weyl_partition(a, b));
    if (kind == "hook") return cv_char(hook_partition(a, b));
    throw std::invalid_argument("unknown character kind: " + kind);
}

/// Shared --decompose handling: "" (none), "irr", or "flag=<level>".
std::string render_decomposition(const GradedCharacter& c, const std::string& mode,
                                 const std::string& format) {
    if (mode == "irr") {
        IrreducibleDecomposition d = decompose_irreducible(c);
        if (format == "json") return irreducible_to_json(d).dump(2);
        return render_parts(d.parts, format, "V(k)");
    }
    if (mode.rfind("flag=", 0) == 0) {
        int level = static_cast<int>(parse_long(mode.substr(5)));
        FlagDecomposition d = demazure_flag_decompose(c, level);
        if (format == "json") return flag_to_json(d).dump(2);
        return render_parts(d.parts, format, "D(" + std::to_string(level) + ",s)");
    }
    throw std::invalid_argument("unknown decomposition mode: " + mode);
}

int cmd_char(const std::vector<std::string>& args, long level, long weight,
             const std::string& decompose, bool dim, const Output& out) {
    if (args.empty()) throw std::invalid_argument("char: missing kind");
    const std::string& kind = args[0];
    GradedCharacter c;
    if (kind == "weyl" || kind == "irr") {
        if (args.size() != 2) throw std::invalid_argument("char " + kind + ": needs one number");
        c = kind == "weyl" ? weyl_char(static_cast<int>(parse_long(args[1])))
                           : irr_char(static_cast<int>(parse_long(args[1])));
    } else if (kind == "cv") {
        if (args.size() != 2) throw std::invalid_argument("char cv: needs a partition");
        c = cv_char(Partition::from_text(args[1]));
    } else if (kind == "demazure") {
        long l = level, w = weight;
        if (args.size() == 3) {
            l = parse_long(args[1]);
            w = parse_long(args[2]);
        } else if (l < 0 || w < 0) {
            throw std::invalid_argument("char demazure: needs --level and --weight");
        }
        c = cv_char(demazure_partition(l, w));
    } else if (kind == "truncated" || kind == "hook") {
        if (args.size() != 3) throw std::invalid_argument("char " + kind + ": needs two numbers");
        long a = parse_long(args[1]), b = parse_long(args[2]);
        c = cv_char(kind == "truncated" ? truncated_weyl_partition(a, b) : hook_partition(a, b));
    } else {
        throw std::invalid_argument("unknown char kind: " + kind);
    }
    std::string text = render_character(c, out.format);
    if (dim) {
        QPoly g = graded_dimension(c);
        if (out.format == "json") {
            nlohmann::json j = character_to_json(c);
            j["graded_dimension"] = qpoly_to_json(g);
            j["dimension"] = g.eval_one().get_str();
            text = j.dump(2);
        } else {
            text += "graded dimension: " + g.to_text() + "\ndimension: " +
                    g.eval_one().get_str() + "\n";
        }
    }
    if (!decompose.empty()) text += "\n" + render_decomposition(c, decompose, out.format);
    out.emit(text);
    return 0;
}

int cmd_tensor(const std::string& left, const std::string& right, const std::string& route,
               const std::string& decompose, const Output& out) {
    GradedCharacter c;
    if (route == "direct" || route.empty()) {
        c = tensor(character_from_spec(left), character_from_spec(right));
    } else {
        // formula routes apply to weyl (x) weyl only
        auto weyl_param = [](const std::string& spec) {
            if (spec.rfind("weyl:", 0) != 0)
                throw std::invalid_argument("route requires weyl:<m> specs, got " + spec);
            return parse_long(spec.substr(5));
        };
        long n = weyl_param(left), m = weyl_param(right);
        if (n < m) std::swap(n, m);
        c = route == "pieri" ? tensor_weyl_weyl_pieri_form(n, m)
            : route == "truncated"
                ? tensor_weyl_weyl_truncated_form(n, m)
                : throw std::invalid_argument("unknown route: " + route);
    }
    std::string text = render_character(c, out.format);
    if (!decompose.empty()) text += "\n" + render_decomposition(c, decompose, out.format);
    out.emit(text);
    return 0;
}

int cmd_flag(const std::string& partition, long level, const Output& out) {
    FlagDecomposition d =
        demazure_flag_decompose(cv_char(Partition::from_text(partition)), static_cast<int>(level));
    if (out.format == "json")
        out.emit(flag_to_json(d).dump(2));
    else
        out.emit(render_parts(d.parts, out.format, "D(" + std::to_string(level) + ",s)"));
    return 0;
}

int cmd_basis(const std::string& partition, const Output& out) {
    Partition xi = Partition::from_text(partition);
    auto tuples = enumerate_basis(xi);
    if (out.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& t : tuples) arr.push_back(t);
        out.emit(nlohmann::json{{"partition", xi.to_text()},
                                {"cardinality", tuples.size()},
                                {"tuples", arr}}
                     .dump(2));
    } else {
        std::ostringstream os;
        for (const auto& t : tuples) {
            for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
            os << "\n";
        }
        os << "cardinality: " << tuples.size() << "\n";
        out.emit(os.str());
    }
    return 0;
}

int cmd_dim(const std::string& partition, const Output& out) {
    Partition xi = Partition::from_text(partition);
    QPoly g = graded_dimension(cv_char(xi));
    if (out.format == "json")
        out.emit(nlohmann::json{{"partition", xi.to_text()},
                                {"graded_dimension", qpoly_to_json(g)},
                                {"dimension", g.eval_one().get_str()}}
                     .dump(2));
    else
        out.emit("graded dimension: " + g.to_text() + "\ndimension: " + g.eval_one().get_str());
    return 0;
}

int cmd_pieri(long n, long m, const Output& out) {
    auto phi = pieri_expand(n, m);
    if (out.format == "json") {
        nlohmann::json obj = nlohmann::json::object();
        for (const auto& [lam, c] : phi)
            obj[std::to_string(lam.first) + "," + std::to_string(lam.second)] = c.to_text();
        out.emit(obj.dump(2));
    } else {
        std::ostringstream os;
        for (const auto& [lam, c] : phi)
            os << "(" << lam.first << "," << lam.second << ")  " << c.to_text() << "\n";
        out.emit(os.str());
    }
    return 0;
}

int cmd_macdonald(long l1, long l2, const Output& out) {
    SymPoly2 p = macdonald_p(l1, l2);
    if (out.format == "json") {
        nlohmann::json obj = nlohmann::json::object();
        for (const auto& [k, c] : p.terms())
            obj[std::to_string(k.first) + "," + std::to_string(k.second)] = c.to_text();
        out.emit(nlohmann::json{{"terms", obj},
                                {"character", character_to_json(sympoly_to_character(p))}}
                     .dump(2));
    } else {
        std::ostringstream os;
        for (const auto& [k, c] : p.terms())
            os << "x1^" << k.first << " x2^" << k.second << "  " << c.to_text() << "\n";
        out.emit(os.str());
    }
    return 0;
}

int cmd_verify(const std::string& suite, int jobs, const Output& out) {
    std::vector<SweepReport> reports;
    if (suite == "all") {
        for (const auto& name : verify_suite_names())
            reports.push_back(run_named_suite(name, jobs));
    } else {
        reports.push_back(run_named_suite(suite, jobs));
    }
    nlohmann::json j = nlohmann::json::array();
    bool failed = false;
    for (const auto& r : reports) {
        j.push_back(sweep_report_to_json(r));
        if (!r.ok() && !r.advisory) failed = true;
    }
    out.emit(reports.size() == 1 ? j[0].dump(2) : j.dump(2));
    return failed ? 1 : 0;
}

int cmd_sweep(const std::string& target, long m, long n, long level, const Output& out) {
    const bool csv = out.format == "csv";
    std::ostringstream os;
    nlohmann::json rows = nlohmann::json::array();
    auto emit_row = [&](std::initializer_list<long> params, const QPoly& p) {
        if (out.format == "json") {
            nlohmann::json row = nlohmann::json::array();
            for (long v : params) row.push_back(v);
            row.push_back(qpoly_to_json(p));
            rows.push_back(row);
        } else {
            bool first = true;
            for (long v : params) {
                os << (first ? "" : csv ? "," : "  ") << v;
                first = false;
            }
            os << (csv ? ",\"" : "  ") << p.to_text() << (csv ? "\"\n" : "\n");
        }
    };
    if (target == "graded-mul") {
        if (m < 1 || n < 1) throw std::invalid_argument("sweep graded-mul: needs --m, --n >= 1");
        IrreducibleDecomposition d = weyl_tensor_irr_multiplicities(m, n);
        for (auto it = d.parts.rbegin(); it != d.parts.rend(); ++it)
            emit_row({m, n, it->first}, it->second);
    } else if (target == "level2-flag") {
        if (n < m || m < 0) throw std::invalid_argument("sweep level2-flag: needs n >= m >= 0");
        FlagDecomposition d = weyl_tensor_level2_multiplicities(n, m);
        for (auto it = d.parts.rbegin(); it != d.parts.rend(); ++it)
            emit_row({m, n, (m + n - it->first) / 2}, it->second);
    } else if (target == "weyl-flag") {
        if (m < 0 || level < 1)
            throw std::invalid_argument("sweep weyl-flag: needs --m >= 0 and --level >= 1");
        FlagDecomposition d =
            demazure_flag_decompose(weyl_char(static_cast<int>(m)), static_cast<int>(level));
        for (auto it = d.parts.rbegin(); it != d.parts.rend(); ++it)
            emit_row({m, level, it->first}, it->second);
    } else {
        throw std::invalid_argument("unknown sweep target: " + target);
    }
    out.emit(out.format == "json" ? rows.dump(2) : os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact graded characters, dimensions and Demazure-flag "
                 "multiplicities for sl2[t] modules"};
    app.require_subcommand(1);

    Output out;
    int jobs = 1;
    app.add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"json", "table", "csv"}))
        ->capture_default_str();
    app.add_option("--jobs", jobs, "Worker threads for sweeps")->capture_default_str();
    app.add_option("--output", out.path, "Write output to a file instead of stdout");

    // char
    auto* sc_char = app.add_subcommand("char", "Print a graded character");
    std::vector<std::string> char_args;
    long opt_level = -1, opt_weight = -1;
    std::string decompose;
    bool want_dim = false;
    sc_char->add_option("args", char_args, "kind and parameters, e.g. `weyl 2` or `cv 2,1`")
        ->expected(-1);
    sc_char->add_option("--level", opt_level, "Demazure level");
    sc_char->add_option("--weight", opt_weight, "Demazure highest weight");
    sc_char->add_option("--decompose", decompose, "irr or flag=<level>");
    sc_char->add_flag("--dim", want_dim, "Also print the graded dimension");

    // tensor
    auto* sc_tensor = app.add_subcommand("tensor", "Tensor product of two characters");
    std::string left, right, route = "direct", tensor_decompose;
    sc_tensor->add_option("left", left, "left factor, e.g. weyl:2")->required();
    sc_tensor->add_option("right", right, "right factor, e.g. irr:1")->required();
    sc_tensor->add_option("--route", route, "direct, pieri or truncated");
    sc_tensor->add_option("--decompose", tensor_decompose, "irr or flag=<level>");

    // flag
    auto* sc_flag = app.add_subcommand("flag", "Demazure flag of a CV character");
    std::string flag_partition;
    long flag_level = 1;
    sc_flag->add_option("partition", flag_partition, "partition, e.g. 2,2,1")->required();
    sc_flag->add_option("--level", flag_level, "flag level")->required();

    // basis
    auto* sc_basis = app.add_subcommand("basis", "Monomial basis tuples of a CV module");
    std::string basis_partition;
    sc_basis->add_option("partition", basis_partition)->required();

    // dim
    auto* sc_dim = app.add_subcommand("dim", "Dimension of a CV module");
    std::string dim_partition;
    sc_dim->add_option("partition", dim_partition)->required();

    // pieri
    auto* sc_pieri = app.add_subcommand("pieri", "Pieri coefficients of P_n g_m");
    long pieri_n = 0, pieri_m = 0;
    sc_pieri->add_option("n", pieri_n)->required();
    sc_pieri->add_option("m", pieri_m)->required();

    // macdonald
    auto* sc_mac = app.add_subcommand("macdonald", "Specialized Macdonald polynomial P_lambda");
    long mac_l1 = 0, mac_l2 = 0;
    sc_mac->add_option("l1", mac_l1)->required();
    sc_mac->add_option("l2", mac_l2)->required();

    // verify
    auto* sc_verify = app.add_subcommand("verify", "Run an invariant sweep");
    std::string suite;
    sc_verify->add_option("suite", suite, "suite name or `all`")->required();

    // sweep
    auto* sc_sweep = app.add_subcommand("sweep", "Tabulate multiplicity polynomials");
    std::string target;
    long sweep_m = -1, sweep_n = -1, sweep_level = -1;
    sc_sweep->add_option("target", target, "graded-mul, level2-flag or weyl-flag")->required();
    sc_sweep->add_option("--m", sweep_m);
    sc_sweep->add_option("--n", sweep_n);
    sc_sweep->add_option("--level", sweep_level);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (sc_char->parsed())
            return cmd_char(char_args, opt_level, opt_weight, decompose, want_dim, out);
        if (sc_tensor->parsed()) return cmd_tensor(left, right, route, tensor_decompose, out);
        if (sc_flag->parsed()) return cmd_flag(flag_partition, flag_level, out);
        if (sc_basis->parsed()) return cmd_basis(basis_partition, out);
        if (sc_dim->parsed()) return cmd_dim(dim_partition, out);
        if (sc_pieri->parsed()) return cmd_pieri(pieri_n, pieri_m, out);
        if (sc_mac->parsed()) return cmd_macdonald(mac_l1, mac_l2, out);
        if (sc_verify->parsed()) return cmd_verify(suite, jobs, out);
        if (sc_sweep->parsed()) return cmd_sweep(target, sweep_m, sweep_n, sweep_level, out);
    } catch (const NoFlag& e) {
        std::cerr << nlohmann::json{{"error", "NoFlag"}, {"reason", e.what()}}.dump() << "\n";
        return 3;
    } catch (const OrderViolation& e) {
        std::cerr << nlohmann::json{{"error", "OrderViolation"}, {"reason", e.what()}}.dump()
                  << "\n";
        return 4;
    } catch (const ShapeNotHook& e) {
        std::cerr << nlohmann::json{{"error", "ShapeNotHook"}, {"reason", e.what()}}.dump()
                  << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << nlohmann::json{{"error", "parse"}, {"reason", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << nlohmann::json{{"error", "precondition"}, {"reason", e.what()}}.dump()
                  << "\n";
        return 4;
    }
    return 0;
}
