#pragma once

#include <optional>
#include <string>

#include "nesto/building.hpp"
#include "nesto/graph.hpp"
#include "nesto/poly.hpp"
#include "nesto/preposet.hpp"

namespace nesto {

// graph files: {"n": 4, "edges": [[1,2],[2,3]]}
Graph graph_from_json(const std::string& text);
std::string graph_to_json(const Graph& g);

// building files: {"n": 3, "members": [[1],[2],[1,2]]}
BuildingSet building_from_json(const std::string& text);
std::string building_to_json(const BuildingSet& b);

// poset files: {"n": 4, "relations": [[1,2],[3,4]]} meaning 1<2, 3<4
Preposet poset_from_json(const std::string& text);

// report for one building set
struct ComputeResult {
    int n = 0;
    IntPoly f, h;
    std::optional<IntPoly> gamma;  // absent when h is not palindromic
    Int num_vertices;
    bool connected = false;
    bool chordal = false;
    bool flag = false;
    bool gamma_has_permutation_model = false;  // peak enumeration applies
};

ComputeResult compute_result(const BuildingSet& b, std::size_t cap);

std::string result_to_json(const ComputeResult& r);
std::string result_to_csv(const ComputeResult& r);
std::string result_to_pretty(const ComputeResult& r);

// re-read a serialized report (regression fixtures round-trip)
ComputeResult result_from_json(const std::string& text);

}  // namespace nesto
