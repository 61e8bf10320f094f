#pragma once

#include <nlohmann/json.hpp>

#include "lhg/bounds.hpp"
#include "lhg/reductions.hpp"
#include "lhg/search.hpp"
#include "lhg/theorems.hpp"

namespace lhg {

inline nlohmann::ordered_json to_json(const Rational& r) {
    nlohmann::ordered_json j;
    j["num"] = r.numerator();
    j["den"] = r.denominator();
    j["text"] = std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
    return j;
}

inline nlohmann::ordered_json to_json(const BoundReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["delta"] = r.delta;
    j["at_vertex"] = r.at_vertex;
    j["edge_count"] = r.edge_count;
    j["bound_b1"] = r.bound_b1;
    j["bound_b2"] = to_json(r.bound_b2);
    j["theorem_bound"] = r.theorem_bound;
    j["theorem_source"] = r.theorem_source;
    j["claimed_tight"] = r.claimed_tight;
    j["every_edge_meets_outside_ball"] = r.every_edge_meets_outside_ball;
    return j;
}

inline nlohmann::ordered_json to_json(const SearchReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["forbidden"] = r.forbidden;
    j["max_edges"] = r.max_edges;
    j["witness_count"] = r.witnesses.size();
    j["witnesses"] = r.witnesses;
    j["witnesses_truncated"] = r.witnesses_truncated;
    j["nodes_explored"] = r.nodes_explored;
    j["wall_seconds"] = r.wall_seconds;
    return j;
}

inline nlohmann::ordered_json to_json(const ReductionReport& r) {
    nlohmann::ordered_json j;
    j["mode"] = r.mode == ReductionMode::linearize ? "linearize" : "tripartite";
    j["n"] = r.n;
    j["input_edges"] = r.input_edges;
    j["removed_edges"] = r.removed_edges;
    if (r.mode == ReductionMode::linearize) {
        j["w_copies_removed"] = r.w_copies_removed;
        j["fallback_removals"] = r.fallback_removals;
        j["removal_budget"] = to_json(r.threshold);
    } else {
        j["retention_rate"] = to_json(r.threshold);
        j["guarantee"] = r.guarantee;
    }
    j["within_threshold"] = r.within_threshold;
    j["output_edges"] = r.output.size();
    j["output"] = r.output;
    if (r.partition) j["partition"] = *r.partition;
    return j;
}

inline nlohmann::ordered_json to_json(const TheoremCheck& c) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["pass"] = c.pass;
    j["details"] = c.details;
    if (c.report.n > 0) j["search"] = to_json(c.report);
    return j;
}

}  // namespace lhg
