// Command-line front end: construct / check / bounds / reduce / search /
// verify over the .lhg and JSON hypergraph formats.
//
// Exit codes: 0 success, 1 domain failure (validation error, violated
// expectation, falsified check), 2 usage error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lhg/io.hpp"
#include "lhg/reports.hpp"

using namespace lhg;

namespace {

std::vector<Configuration> parse_config_list(const std::vector<std::string>& names) {
    std::vector<Configuration> out;
    for (const auto& name : names) {
        std::string token;
        std::istringstream ss(name);
        while (std::getline(ss, token, ','))
            if (!token.empty()) out.push_back(configuration_from_label(token));
    }
    return out;
}

void apply_env_cap(SearchOptions& opts) {
    if (const char* cap = std::getenv("LHG_SEARCH_CAP")) {
        int v = std::atoi(cap);
        if (v > 0) {
            opts.cap_k2 = v;
            opts.cap_k3 = v;
            opts.cap_other = v;
        }
    }
}

void emit(const nlohmann::ordered_json& j, const std::string& format) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        for (auto it = j.begin(); it != j.end(); ++it) std::cout << it.key() << ": " << it.value().dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for fan-free linear hypergraphs: constructions, bounds, reductions and exhaustive search"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    // ---- construct ----------------------------------------------------
    auto* construct = app.add_subcommand("construct", "build a known design and write it out");
    construct->require_subcommand(1);
    int m = 0, k = 3, s = 0, t = 0, vertex = 0;
    std::string out_path, in_path, graph_name = "wagner";

    auto* c_td = construct->add_subcommand("td", "transversal design with k groups of size m");
    c_td->add_option("--m", m, "group size")->required();
    c_td->add_option("--k", k, "number of groups")->required();
    c_td->add_option("-o,--out", out_path, "output file")->required();

    auto* c_tr = construct->add_subcommand("truncate", "remove one vertex from a transversal design");
    c_tr->add_option("-i,--in", in_path, "input design")->required();
    c_tr->add_option("--vertex", vertex, "vertex to remove (default: last)");
    c_tr->add_option("-o,--out", out_path, "output file")->required();

    auto* c_sf = construct->add_subcommand("std-fact", "design from the cyclic factorization of K_{s,s} (s odd)");
    c_sf->add_option("--s", s, "side")->required();
    c_sf->add_option("-o,--out", out_path, "output file")->required();

    auto* c_bf = construct->add_subcommand("bin-fact", "design from the xor factorization of K_{2^t,2^t}");
    c_bf->add_option("--t", t, "exponent")->required();
    c_bf->add_option("-o,--out", out_path, "output file")->required();

    auto* c_ex = construct->add_subcommand("extend", "extension of a built-in edge-colored graph");
    c_ex->add_option("--graph", graph_name, "wagner or c52")->check(CLI::IsMember({"wagner", "c52"}));
    c_ex->add_option("-o,--out", out_path, "output file")->required();

    auto* c_wg = construct->add_subcommand("wagner", "the eight-cycle with long diagonals, with its matchings");
    c_wg->add_option("-o,--out", out_path, "output file")->required();
    auto* c_c52 = construct->add_subcommand("c52", "the five-cycle blow-up, with its matchings");
    c_c52->add_option("-o,--out", out_path, "output file")->required();
    auto* c_ag = construct->add_subcommand("ag23", "the nine-point affine plane triple system");
    c_ag->add_option("-o,--out", out_path, "output file")->required();

    // ---- check ---------------------------------------------------------
    auto* check = app.add_subcommand("check", "search for a configuration inside a system");
    std::string check_file, config_name;
    bool expect_free = false, expect_found = false;
    check->add_option("file", check_file, "input system")->required();
    check->add_option("--config", config_name, "configuration name")->required();
    check->add_flag("--expect-free", expect_free, "fail (exit 1) if the configuration is present");
    check->add_flag("--expect-found", expect_found, "fail (exit 1) if the configuration is absent");

    // ---- bounds --------------------------------------------------------
    auto* bounds_cmd = app.add_subcommand("bounds", "degree-based edge-count estimates at a max-degree vertex");
    std::string bounds_file;
    int bounds_vertex = 0;
    bounds_cmd->add_option("file", bounds_file, "input system")->required();
    bounds_cmd->add_option("--vertex", bounds_vertex, "vertex to evaluate at (default: least max-degree vertex)");

    // ---- reduce --------------------------------------------------------
    auto* reduce = app.add_subcommand("reduce", "linearize or extract a three-partite subsystem");
    std::string reduce_file, reduce_mode, reduce_out;
    bool declare_pc14 = false;
    reduce->add_option("file", reduce_file, "input triple system")->required();
    reduce->add_option("--mode", reduce_mode, "linearize|tripartite")
        ->required()
        ->check(CLI::IsMember({"linearize", "tripartite"}));
    reduce->add_option("-o,--out", reduce_out, "write the reduced system here");
    reduce->add_flag("--declare-pc14-free", declare_pc14,
                     "assert that the input has no Pasch and no C14; the tripartite output is then "
                     "checked to be fan3/pasch/c14-free");

    // ---- search --------------------------------------------------------
    auto* search_cmd = app.add_subcommand("search", "exact optimum over linear systems avoiding configurations");
    int sn = 0, sk = 3, workers = 0;
    std::vector<std::string> forbid;
    std::string out_dir;
    bool i_have_time = false;
    search_cmd->add_option("--n", sn, "vertex count")->required();
    search_cmd->add_option("--k", sk, "uniformity");
    search_cmd->add_option("--forbid", forbid, "forbidden configurations (repeat or comma-separate; empty = plain packing)");
    search_cmd->add_option("--out-dir", out_dir, "write extremal witnesses as .lhg files here");
    search_cmd->add_option("--workers", workers, "worker threads (0 = auto)");
    search_cmd->add_flag("--i-have-time", i_have_time, "lift the vertex caps");

    // ---- verify --------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "re-prove a statement at desk scale");
    verify->require_subcommand(1);
    int vn = 0, vk = 3, vm = 0;
    bool v_time = false;
    auto* v1 = verify->add_subcommand("thm1", "fan-free optimum n^2/k^2 with design witnesses");
    v1->add_option("--n", vn)->required();
    v1->add_option("--k", vk)->required();
    v1->add_flag("--i-have-time", v_time);
    auto* v2 = verify->add_subcommand("thm2", "fan-free optimum m^2+m at n = k(m+1)-1");
    v2->add_option("--n", vn)->required();
    v2->add_option("--k", vk)->required();
    v2->add_flag("--i-have-time", v_time);
    auto* v3 = verify->add_subcommand("thm3", "classification of extremal triple systems at n = 3m+2");
    v3->add_option("--m", vm)->required();
    v3->add_flag("--i-have-time", v_time);
    auto* v4 = verify->add_subcommand("f74-classify", "four triples on seven points always carry a forbidden pattern");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed()) {
            LinearHypergraph result = [&]() -> LinearHypergraph {
                if (c_td->parsed()) return transversal_design(m, k);
                if (c_tr->parsed()) {
                    auto h = validate(io::read_system_file(in_path));
                    return truncate(h, vertex > 0 ? vertex : h.n());
                }
                if (c_sf->parsed()) return design_from_factorization(standard_factorization(s));
                if (c_bf->parsed()) return design_from_factorization(binary_factorization(t));
                if (c_ex->parsed()) return extend_colored_graph(graph_name == "wagner" ? wagner_graph() : c52_graph());
                if (c_ag->parsed()) return ag23();
                // wagner / c52 as 2-uniform graphs, matchings recorded as comments
                ColoredGraph g = c_wg->parsed() ? wagner_graph() : c52_graph();
                return g.to_hypergraph();
            }();
            std::vector<std::string> comments;
            if (c_wg->parsed() || c_c52->parsed()) {
                ColoredGraph g = c_wg->parsed() ? wagner_graph() : c52_graph();
                for (std::size_t i = 0; i < g.matchings.size(); ++i) {
                    std::string line = "matching " + std::to_string(i + 1) + ":";
                    for (int idx : g.matchings[i])
                        line += " " + std::to_string(g.edges[idx].first) + "-" + std::to_string(g.edges[idx].second);
                    comments.push_back(line);
                }
            }
            io::write_system_file(out_path, result.n(), result.k(), result.edges(), comments);
            std::cout << "wrote " << out_path << " (n=" << result.n() << ", k=" << result.k()
                      << ", edges=" << result.edge_count() << ")\n";
            return 0;
        }

        if (check->parsed()) {
            auto sys = io::read_system_file(check_file);
            auto c = configuration_from_label(config_name);
            bool linear = true;
            try {
                validate(sys);
            } catch (const Error&) {
                linear = false;
            }
            auto em = find_embedding(sys.n, sys.k, sys.edges, c);
            nlohmann::ordered_json j;
            j["file"] = check_file;
            j["linear"] = linear;
            j["config"] = c.label;
            j["found"] = em.has_value();
            if (em) {
                j["vertex_map"] = em->vertex_map;
                EdgeList image;
                for (int idx : em->edge_map) image.push_back(sys.edges[idx]);
                j["edge_image"] = image;
            }
            emit(j, format);
            if (expect_free && em) return 1;
            if (expect_found && !em) return 1;
            return 0;
        }

        if (bounds_cmd->parsed()) {
            auto h = validate(io::read_system_file(bounds_file));
            Vertex v = bounds_vertex > 0 ? bounds_vertex : h.max_degree().second;
            emit(to_json(proof_bounds(h, v)), format);
            return 0;
        }

        if (reduce->parsed()) {
            auto sys = io::read_system_file(reduce_file);
            ReductionReport rep = reduce_mode == "linearize" ? linearize(sys.n, sys.edges)
                                                             : tripartite_subsystem(sys.n, sys.edges, declare_pc14);
            emit(to_json(rep), format);
            if (!reduce_out.empty()) io::write_system_file(reduce_out, sys.n, 3, rep.output);
            return 0;
        }

        if (search_cmd->parsed()) {
            SearchOptions opts;
            apply_env_cap(opts);
            opts.workers = workers;
            opts.ignore_caps = i_have_time;
            auto rep = max_free(sn, sk, parse_config_list(forbid), opts);
            emit(to_json(rep), format);
            if (!out_dir.empty()) {
                for (std::size_t i = 0; i < rep.witnesses.size(); ++i)
                    io::write_system_file(out_dir + "/witness_" + std::to_string(i + 1) + ".lhg", sn, sk,
                                          rep.witnesses[i]);
            }
            return 0;
        }

        if (verify->parsed()) {
            SearchOptions opts;
            apply_env_cap(opts);
            opts.ignore_caps = v_time;
            TheoremCheck chk;
            if (v1->parsed()) chk = verify_thm1(vn, vk, opts);
            if (v2->parsed()) chk = verify_thm2(vn, vk, opts);
            if (v3->parsed()) chk = verify_thm3(vm, opts);
            if (v4->parsed()) chk = verify_f74_classification();
            emit(to_json(chk), format);
            return chk.pass ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
