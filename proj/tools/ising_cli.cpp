#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ising/closed_forms.hpp"
#include "ising/cwdp.hpp"
#include "ising/enumerate.hpp"
#include "ising/gadgets.hpp"
#include "ising/io.hpp"
#include "ising/pipelines.hpp"
#include "ising/verify.hpp"

namespace {

using ising::Graph;
using ising::Poly;
using ising::Rat;
using json = nlohmann::ordered_json;

std::vector<Rat> parse_point(const std::string& text, size_t lo, size_t hi) {
    std::vector<Rat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(ising::parse_rat(item));
    if (out.size() < lo || out.size() > hi)
        throw ising::UsageError("--point needs " + std::to_string(lo) +
                                (hi > lo ? ".." + std::to_string(hi) : "") + " coordinates");
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

std::vector<std::string> labeled_var_names(int k) {
    std::vector<std::string> names;
    for (int i = 1; i <= k; ++i) names.push_back("y" + std::to_string(i));
    for (char c : {'x', 'z'})
        for (int i = 1; i <= k; ++i)
            for (int j = i; j <= k; ++j)
                names.push_back(std::string(1, c) + std::to_string(i) + "_" + std::to_string(j));
    return names;
}

json rat_list_json(const std::vector<Rat>& rs) {
    json out = json::array();
    for (const auto& r : rs) out.push_back(ising::to_string(r));
    return out;
}

json report_json(const ising::InterpolationReport& report, const ising::EvalOracle& oracle) {
    json cert;
    cert["families"] = report.families;
    cert["nodes"] = rat_list_json(report.nodes);
    cert["prefactors"] = rat_list_json(report.prefactors);
    cert["query_sizes"] = report.query_sizes;
    cert["oracle_calls"] = oracle.call_count();
    cert["max_query_vertices"] = oracle.max_queried_vertices();
    return cert;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact bivariate and trivariate Ising partition-function polynomials"};
    app.require_subcommand(1);

    // ------------------------------------------------------------- compute
    auto* compute = app.add_subcommand("compute", "polynomial or point value of a graph");
    std::string compute_graph;
    bool bivariate = false, exclude_b = false;
    std::string eval_point;
    std::vector<std::string> constrain;
    int cap = ising::kSymbolicCap;
    compute->add_option("graph", compute_graph, "graph JSON file")->required();
    compute->add_flag("--bivariate", bivariate, "collapse x and z into t");
    compute->add_option("--eval", eval_point, "evaluate at x,y,z instead of expanding");
    compute
        ->add_option("--constrain", constrain,
                     "two comma lists: vertices forced into S, vertices kept out "
                     "(use \"\" for an empty list)")
        ->expected(2);
    compute->add_flag("--exclude-b", exclude_b, "leave forced vertices out of the y-exponent");
    compute->add_option("--cap", cap, "enumeration cap override");

    // -------------------------------------------------------------- gadget
    auto* gadget = app.add_subcommand("gadget", "emit a gadget construction as graph JSON");
    std::string gadget_name, gadget_graph, gadget_set;
    int gadget_h = 0, gadget_l = 1, gadget_q = 1, gadget_n = 1;
    gadget->add_option("name", gadget_name,
                       "one of: L, phi, otimes, pendant, S, S-of, STh, R, path, star, complete, cycle")
        ->required();
    gadget->add_option("--graph", gadget_graph, "input graph JSON file");
    gadget->add_option("--set", gadget_set, "comma list for H");
    gadget->add_option("--height", gadget_h, "ladder height");
    gadget->add_option("--l", gadget_l, "thickening parameter");
    gadget->add_option("--q", gadget_q, "pendant-star parameter");
    gadget->add_option("--n", gadget_n, "vertex/leaf count for basic constructors");

    // ---------------------------------------------------------------- cwdp
    auto* cwdp = app.add_subcommand("cwdp", "clique-width dynamic program over a k-expression");
    std::string kexpr_file;
    bool project = false;
    cwdp->add_option("--kexpr", kexpr_file, "file holding one k-expression")->required();
    cwdp->add_flag("--project", project, "project the labeled table to (x, y, z)");

    // -------------------------------------------------------------- verify
    auto* verify = app.add_subcommand("verify", "run an identity suite");
    std::string suite_id;
    verify->add_option("id", suite_id, "suite id, 'all', or 'list'")->required();

    // -------------------------------------------------------------- reduce
    auto* reduce = app.add_subcommand("reduce", "interpolation reductions and special cases");
    std::string reduce_point, reduce_graph, pipeline;
    int m0 = 0, delta_param = 0, qprime = 4, budget = 22;
    reduce->add_option("--point", reduce_point, "gamma,delta or gamma,delta,epsilon")->required();
    reduce->add_option("--graph", reduce_graph, "graph JSON file");
    reduce->add_option("--pipeline", pipeline, "one of: y, t, grid, special, maxcut, hfamily")
        ->required();
    reduce->add_option("--m0", m0, "family base offset (even)");
    reduce->add_option("--delta-param", delta_param, "family gap parameter (even)");
    reduce->add_option("--qprime", qprime, "family size parameter");
    reduce->add_option("--budget", budget, "max oracle query size in vertices");

    // -------------------------------------------------------------- maxcut
    auto* maxcut = app.add_subcommand("maxcut", "maximum cut size and count");
    std::string maxcut_graph;
    maxcut->add_option("graph", maxcut_graph, "graph JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    if (compute->parsed()) {
        const Graph g = ising::graph_from_json_file(compute_graph);
        if (!eval_point.empty()) {
            const auto pt = parse_point(eval_point, 3, 3);
            const Rat v = ising::z_eval_point(g, pt[0], pt[1], pt[2],
                                              std::max(cap, ising::kNumericCap));
            json out;
            out["value"] = ising::to_string(v);
            std::cout << out.dump() << "\n";
            return 0;
        }
        Poly p(0);
        std::vector<std::string> vars;
        const auto conv = exclude_b ? ising::YConvention::ExcludeConstrained
                                    : ising::YConvention::IncludeConstrained;
        if (!constrain.empty()) {
            const auto B = ising::VertexSet::of(g.vertex_count(), parse_int_list(constrain[0]));
            const auto C = ising::VertexSet::of(g.vertex_count(), parse_int_list(constrain[1]));
            p = ising::z_constrained(g, B, C, conv, cap);
            vars = {"t", "y"};
        } else if (bivariate) {
            p = ising::z_bivariate(g, cap);
            vars = {"t", "y"};
        } else {
            p = ising::z_trivariate(g, cap);
            vars = {"x", "y", "z"};
        }
        std::cout << ising::poly_to_json(p, vars) << "\n";
        return 0;
    }

    if (gadget->parsed()) {
        auto need_graph = [&] {
            if (gadget_graph.empty())
                throw ising::UsageError("gadget '" + gadget_name + "' needs --graph");
            return ising::graph_from_json_file(gadget_graph);
        };
        const auto H = parse_int_list(gadget_set);
        Graph out = Graph::empty(0);
        if (gadget_name == "L") out = ising::build_L(gadget_h).graph;
        else if (gadget_name == "phi") out = ising::build_Phi(H).graph;
        else if (gadget_name == "otimes") out = ising::build_otimes(need_graph(), H);
        else if (gadget_name == "pendant") out = ising::build_pendant(need_graph());
        else if (gadget_name == "S") out = ising::build_S_H(H).graph;
        else if (gadget_name == "S-of") out = ising::build_S_H_of(need_graph(), H);
        else if (gadget_name == "STh") out = ising::build_STh(need_graph(), gadget_l).graph;
        else if (gadget_name == "R") out = ising::build_R(need_graph(), gadget_l, gadget_q);
        else if (gadget_name == "path") out = Graph::path(gadget_n);
        else if (gadget_name == "star") out = Graph::star(gadget_n);
        else if (gadget_name == "complete") out = Graph::complete(gadget_n);
        else if (gadget_name == "cycle") out = Graph::cycle(gadget_n);
        else throw ising::UsageError("unknown gadget: " + gadget_name);
        std::cout << ising::graph_to_json(out) << "\n";
        return 0;
    }

    if (cwdp->parsed()) {
        std::ifstream in(kexpr_file);
        if (!in) throw ising::UsageError("cannot open " + kexpr_file);
        std::ostringstream buf;
        buf << in.rdbuf();
        const ising::KExprPtr e = ising::parse_kexpr(buf.str());
        const ising::CoeffTable table = ising::dp_z_labeled(*e);
        if (project) {
            std::cout << ising::poly_to_json(ising::project_trivariate(table), {"x", "y", "z"})
                      << "\n";
        } else {
            std::cout << ising::poly_to_json(table.to_poly(), labeled_var_names(table.k)) << "\n";
        }
        return 0;
    }

    if (verify->parsed()) {
        if (suite_id == "list") {
            json out = ising::verify::suite_ids();
            std::cout << out.dump() << "\n";
            return 0;
        }
        std::vector<ising::verify::CheckResult> results;
        if (suite_id == "all")
            results = ising::verify::run_all();
        else
            results.push_back(ising::verify::run_suite(suite_id));
        json out = json::array();
        bool all_pass = true;
        for (const auto& r : results) {
            json item;
            item["id"] = r.id;
            item["pass"] = r.pass;
            item["detail"] = r.detail;
            out.push_back(item);
            all_pass = all_pass && r.pass;
            std::cerr << (r.pass ? "pass " : "FAIL ") << r.id << ": " << r.detail << "\n";
        }
        std::cout << out.dump() << "\n";
        return all_pass ? 0 : 1;
    }

    if (reduce->parsed()) {
        json out;
        out["pipeline"] = pipeline;
        const size_t coords_lo = pipeline == "grid" ? 3 : (pipeline == "hfamily" ? 1 : 2);
        const size_t coords_hi = pipeline == "grid" || pipeline == "hfamily" ? 3 : 2;
        const auto pt = parse_point(reduce_point, coords_lo, coords_hi);
        out["point"] = rat_list_json(pt);

        if (pipeline == "hfamily") {
            const ising::HFamily family = ising::build_h_family(
                qprime, m0 > 0 ? m0 : 2, delta_param > 0 ? delta_param : 2);
            const auto cert = ising::certify_h_family(family);
            const auto rc = ising::ReductionConstants::at_gamma(pt[0]);
            std::set<Rat> nodes;
            bool distinct = true;
            json node_list = json::array();
            for (const auto& H : family.sets) {
                const Rat node = ising::f_t_H(rc, H);
                node_list.push_back(ising::to_string(node));
                if (!nodes.insert(node).second) distinct = false;
            }
            out["sets"] = family.sets;
            out["sigma"] = family.sigma;
            out["certificate"] = {{"distinct_sets", cert.distinct_sets},
                                  {"equal_cardinality", cert.equal_cardinality},
                                  {"equal_sigma", cert.equal_sigma},
                                  {"elements_even", cert.elements_even},
                                  {"elements_in_range", cert.elements_in_range},
                                  {"gap_ok", cert.gap_ok},
                                  {"sigma_bounded", cert.sigma_bounded},
                                  {"t_nodes_distinct", distinct}};
            out["t_nodes"] = node_list;
            std::cout << out.dump() << "\n";
            return cert.all() && distinct ? 0 : 1;
        }

        const Graph g = ising::graph_from_json_file(reduce_graph);
        if (pipeline == "special") {
            out["value"] = ising::to_string(ising::special_case_eval(g, pt[0], pt[1]));
            std::cout << out.dump() << "\n";
            return 0;
        }
        if (pipeline == "maxcut") {
            const auto [mc, count] = ising::max_cut_count(g);
            out["maxcut"] = mc;
            out["count"] = count.get_si();
            std::cout << out.dump() << "\n";
            return 0;
        }

        // Candidate pool from the digit-indexed family when requested.
        std::vector<std::vector<int>> pool;
        if (m0 > 0 && delta_param > 0)
            pool = ising::build_h_family(qprime, m0, delta_param).sets;

        if (pipeline == "y") {
            const ising::EvalOracle oracle = ising::EvalOracle::brute_force(pt[0], pt[1]);
            std::vector<std::vector<int>> families =
                pool.empty() ? ising::select_y_families(pt[0], pt[1], g, budget,
                                                        g.vertex_count() + 1)
                             : pool;
            ising::InterpolationReport report;
            const Poly p = ising::interpolate_y(oracle, pt[0], pt[1], g, families, &report);
            out["polynomial"] = json::parse(ising::poly_to_json(p, {"y"}));
            out["certificate"] = report_json(report, oracle);
            std::cout << out.dump() << "\n";
            return 0;
        }
        if (pipeline == "t") {
            const Rat &gamma = pt[0], &delta = pt[1];
            const bool pendant = delta == -1;
            std::vector<std::vector<int>> families =
                pool.empty() ? ising::select_t_families(gamma, g, budget, pendant,
                                                        g.edge_count() + 1)
                             : pool;
            // Values of Z(g (x) H; gamma, 1): direct at delta = 1, through the
            // pendant identity at delta = -1, otherwise from a (gamma, 1)
            // brute-force oracle.
            const ising::EvalOracle oracle =
                pendant ? ising::EvalOracle::brute_force(gamma, Rat(-1))
                        : ising::EvalOracle::brute_force(gamma, Rat(1));
            std::vector<Rat> values;
            for (const auto& H : families) {
                const Graph big = ising::build_otimes(g, H);
                values.push_back(pendant ? ising::minus_one_transform(oracle, gamma, big)
                                         : oracle(big));
            }
            ising::InterpolationReport report;
            const Poly p = ising::interpolate_t(values, families, gamma, g, &report);
            out["values_oracle"] = pendant ? "pendant transform of (gamma,-1) brute force"
                                           : "(gamma,1) brute force";
            out["polynomial"] = json::parse(ising::poly_to_json(p, {"t"}));
            out["certificate"] = report_json(report, oracle);
            std::cout << out.dump() << "\n";
            return 0;
        }
        if (pipeline == "grid") {
            // Desk scale: thickened graphs dwarf any enumerable size, so the
            // oracle is the closed-form right-hand side over the graph's own
            // bivariate polynomial.
            const Poly zg = ising::z_bivariate(g, cap);
            const auto d = g.regular_degree();
            if (!d) throw ising::UsageError("grid pipeline needs a regular graph");
            const int n = g.vertex_count(), m = g.edge_count();
            const ising::EvalOracle oracle([&](const Graph& r) -> Rat {
                for (int l = 1; l <= 64; ++l)
                    for (int q = 1; q <= 64; ++q) {
                        const long nn = static_cast<long>(n) * (1 + 2L * q * (1 + 4L * l)) +
                                        4L * l * m;
                        const long mm = 8L * l * m + 16L * l * q * n;
                        if (nn == r.vertex_count() && mm == r.edge_count()) {
                            const auto rc = ising::f_R_constants(pt[0], pt[1], pt[2], l, q,
                                                                 *d, n, m);
                            // Cut-form reading of the thickening identity.
                            const std::vector<Rat> at{1 / rc.f_t, rc.f_y};
                            return rc.f_p * ising::rat_pow(rc.f_t, m) * zg.eval(at);
                        }
                    }
                throw ising::UsageError("closed-form oracle: unrecognized query graph");
            });
            ising::GridReport report;
            const Poly p = ising::grid_interpolate_trivariate(oracle, pt[0], pt[1], pt[2], g,
                                                              1, 24, 1, n + 1, &report);
            out["oracle"] = "closed-form (synthetic)";
            out["polynomial"] = json::parse(ising::poly_to_json(p, {"t", "y"}));
            json cert;
            cert["ls"] = report.ls;
            cert["qs"] = report.qs;
            cert["t_nodes"] = rat_list_json(report.t_nodes);
            cert["oracle_calls"] = report.oracle_calls;
            cert["max_query_vertices"] = report.max_query_vertices;
            out["certificate"] = cert;
            std::cout << out.dump() << "\n";
            return 0;
        }
        throw ising::UsageError("unknown pipeline: " + pipeline);
    }

    if (maxcut->parsed()) {
        const Graph g = ising::graph_from_json_file(maxcut_graph);
        const auto [mc, count] = ising::max_cut_count(g);
        json out;
        out["maxcut"] = mc;
        out["count"] = count.get_si();
        std::cout << out.dump() << "\n";
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ising::ConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
