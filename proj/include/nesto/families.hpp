#pragma once

#include <string>
#include <variant>
#include <vector>

#include "nesto/building.hpp"
#include "nesto/graph.hpp"
#include "nesto/poly.hpp"

namespace nesto {

// legs of lengths a_i attached to a central node; labels run along each leg
// in order and the centre gets the largest label
Graph spider_graph(const std::vector<int>& a);

// disjoint chains of lengths a_i with a complete graph joining their first
// vertices
Graph hedgehog_graph(const std::vector<int>& a);

// interval building of the left-comb plane binary tree with n leaves:
// singletons plus the prefix intervals [1,j]
BuildingSet binary_tree_cube_building(int n);

// singletons {i} together with the suffix intervals [i,n]
BuildingSet stanley_pitman_building(int n);

using FamilyObject = std::variant<Graph, BuildingSet>;

// named families addressable from the command line; params as documented:
//   path:n  cycle:n  complete:n   -- the obvious graphs
//   star:m                        -- m leaves, centre labelled m+1
//   daisy:n,k                     -- k single-node legs and one long leg
//   kite:n,k                      -- hedgehog with one long chain off K_k
//   dynkinD:n                     -- daisy with k = 2
//   affineD:n                     -- two 3-stars joined by a path, n vertices
//   binaryTreeCube:n              -- interval building, n leaves
//   stanleyPitman:n               -- suffix-interval building
FamilyObject named_family(const std::string& name, const std::vector<int>& params);

struct ZonotopeFaces {
    bool simple = false;
    Mask offending = 0;  // node set of a non-complete 2-connected piece
    IntPoly f, h, gamma;
};

// face polynomials of the edge zonotope of g; products over the 2-connected
// pieces when each induces a complete graph, NotSimple otherwise
ZonotopeFaces zonotope_face_polys(const Graph& g);

struct TreeSurveyRow {
    std::string code;  // canonical nested-parentheses form
    std::vector<int> degree_sequence;
    long wiener = 0;
    IntPoly gamma;
};

struct TreeSurvey {
    int n = 0;
    std::vector<TreeSurveyRow> rows;  // sorted by code
    bool path_unique_min = false;     // path gamma strictly below all others
    bool star_unique_max = false;     // star gamma strictly above all others
    bool has_incomparable_pair = false;
    std::vector<std::pair<int, int>> incomparable_pairs;  // row index pairs
};

// every unlabelled tree on n nodes with degree sequence, distance sum, and
// the gamma vector of its graph-associahedron, plus componentwise
// comparability statistics
TreeSurvey tree_gamma_survey(int n);

std::string tree_survey_csv(const TreeSurvey& s);

}  // namespace nesto
