#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "lhg/hypergraph.hpp"

namespace lhg {

/// An unvalidated system as read from disk. Linearity is not implied; pass
/// through LinearHypergraph::validate() when a linear host is required.
struct RawSystem {
    int n = 0;
    int k = 0;
    EdgeList edges;
};

namespace io {

/// ".lhg" text format: first line "n k", then one edge per line as ascending
/// space-separated vertex indices, lines in lexicographic order. '#' starts a
/// comment; blank lines are ignored. Reading is lenient about edge order.
inline RawSystem read_lhg(std::istream& in) {
    RawSystem sys;
    std::string line;
    bool have_header = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (!have_header) {
            if (!(ls >> sys.n >> sys.k)) {
                std::string tok;
                std::istringstream probe(line);
                if (!(probe >> tok)) continue;  // comment or blank before header
                throw Error(Errc::bad_format, "line " + std::to_string(lineno) + ": expected header \"n k\"");
            }
            std::string extra;
            if (ls >> extra) throw Error(Errc::bad_format, "line " + std::to_string(lineno) + ": trailing tokens after header");
            have_header = true;
            continue;
        }
        Edge e;
        int v;
        while (ls >> v) e.push_back(v);
        if (!ls.eof())
            throw Error(Errc::bad_format, "line " + std::to_string(lineno) + ": malformed vertex index");
        if (!e.empty()) sys.edges.push_back(std::move(e));
    }
    if (!have_header) throw Error(Errc::bad_format, "missing \"n k\" header line");
    return sys;
}

inline void write_lhg(std::ostream& out, int n, int k, const EdgeList& edges,
                      const std::vector<std::string>& comments = {}) {
    for (const auto& c : comments) out << "# " << c << '\n';
    out << n << ' ' << k << '\n';
    EdgeList sorted = edges;
    sort_edge_list(sorted);
    for (const Edge& e : sorted) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out << ' ';
            out << e[i];
        }
        out << '\n';
    }
}

inline nlohmann::ordered_json system_to_json(int n, int k, const EdgeList& edges) {
    EdgeList sorted = edges;
    sort_edge_list(sorted);
    nlohmann::ordered_json j;
    j["n"] = n;
    j["k"] = k;
    j["edges"] = sorted;
    return j;
}

inline RawSystem read_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::bad_format, std::string("invalid JSON: ") + e.what());
    }
    RawSystem sys;
    try {
        sys.n = j.at("n").get<int>();
        sys.k = j.at("k").get<int>();
        sys.edges = j.at("edges").get<EdgeList>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::bad_format, std::string("expected {n, k, edges}: ") + e.what());
    }
    return sys;
}

inline bool has_suffix(const std::string& s, const std::string& suf) {
    return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

/// Reads a system from a path, dispatching on the ".json" / ".lhg" suffix
/// (anything that is not .json is parsed as the text format).
inline RawSystem read_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::bad_format, "cannot open " + path);
    return has_suffix(path, ".json") ? read_json(in) : read_lhg(in);
}

inline void write_system_file(const std::string& path, int n, int k, const EdgeList& edges,
                              const std::vector<std::string>& comments = {}) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::bad_format, "cannot write " + path);
    if (has_suffix(path, ".json"))
        out << system_to_json(n, k, edges).dump(2) << '\n';
    else
        write_lhg(out, n, k, edges, comments);
}

}  // namespace io

inline LinearHypergraph validate(const RawSystem& sys) {
    return LinearHypergraph::validate(sys.edges, sys.n, sys.k);
}

}  // namespace lhg
