#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "chromsym/numeric.hpp"
#include "chromsym/partition.hpp"
#include "chromsym/symfunc.hpp"

namespace chromsym {

/// A finite simple graph on labeled vertices 1..n, n >= 1. Edges are stored
/// normalized (u < v), sorted, duplicate-free.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges);

    static Graph complete(int n);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

    bool adjacent(int u, int v) const;

    /// G2 relabeled by offset n, edge lists concatenated.
    Graph disjoint_union(const Graph& other) const;

    /// "K3" for complete graphs, otherwise "G(4; 1-2, 2-3)".
    std::string to_string() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
};

/// Component orders of the spanning subgraph (V, S), sorted into a
/// partition of n. Every element of S must be an edge of G.
Partition components_partition(const Graph& g, const std::vector<std::pair<int, int>>& subset);

struct ChromaticCaps {
    int edge_cap = 24;    // edge-subset formula costs 2^|E|
    int vertex_cap = 12;  // stable-partition formula costs ~Bell(n)
};

/// X_G by the signed edge-subset sum over p_{lambda(S)}.
/// Throws ResourceError when |E| exceeds the cap.
SymFunc chromatic_sym_edges(const Graph& g, int edge_cap = ChromaticCaps{}.edge_cap);

/// X_G by the stable-partition sum over m_{mu(pi)} with multiplicity
/// factorials, converted internally to p. Throws ResourceError when n
/// exceeds the cap.
SymFunc chromatic_sym_stable(const Graph& g, int vertex_cap = ChromaticCaps{}.vertex_cap);

/// Edge-subset route when it fits the edge cap, else the stable-partition
/// route; ResourceError when both caps are exceeded.
SymFunc chromatic_sym(const Graph& g, const ChromaticCaps& caps = {});

/// Proper colourings with palette {1..k}, brute force over k^n maps.
Integer count_proper_colourings(const Graph& g, int k);

/// {"n": 4, "edges": [[1,2],[2,3]]}.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace chromsym
