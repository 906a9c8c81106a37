#include "chromsym/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chromsym {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }

    Partition component_partition() {
        std::vector<int> sizes(parent.size(), 0);
        for (int v = 0; v < static_cast<int>(parent.size()); ++v) ++sizes[static_cast<size_t>(find(v))];
        std::vector<int> parts;
        for (int s : sizes)
            if (s > 0) parts.push_back(s);
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        return Partition(std::move(parts));
    }
};

}  // namespace

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw std::domain_error("graph requires at least one vertex");
    for (auto& [u, v] : edges_) {
        if (u == v) throw std::domain_error("graph: loops are not allowed");
        if (u < 1 || v < 1 || u > n_ || v > n_)
            throw std::domain_error("graph: edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::domain_error("graph: repeated edge");
}

Graph Graph::complete(int n) {
    if (n < 1) throw std::domain_error("complete graph requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

bool Graph::adjacent(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

Graph Graph::disjoint_union(const Graph& other) const {
    std::vector<std::pair<int, int>> edges = edges_;
    for (auto [u, v] : other.edges_) edges.emplace_back(u + n_, v + n_);
    return Graph(n_ + other.n_, std::move(edges));
}

std::string Graph::to_string() const {
    if (*this == Graph::complete(n_)) return "K" + std::to_string(n_);
    std::ostringstream os;
    os << "G(" << n_ << ";";
    for (size_t i = 0; i < edges_.size(); ++i)
        os << (i ? ", " : " ") << edges_[i].first << "-" << edges_[i].second;
    os << ")";
    return os.str();
}

Partition components_partition(const Graph& g, const std::vector<std::pair<int, int>>& subset) {
    UnionFind uf(g.vertex_count());
    for (auto [u, v] : subset) {
        if (!g.adjacent(u, v))
            throw std::domain_error("components_partition: subset contains a non-edge");
        uf.unite(u - 1, v - 1);
    }
    return uf.component_partition();
}

SymFunc chromatic_sym_edges(const Graph& g, int edge_cap) {
    const int m = g.edge_count();
    if (m > edge_cap)
        throw ResourceError("chromatic_sym_edges: " + std::to_string(m) +
                            " edges exceeds the edge cap " + std::to_string(edge_cap));
    SymFunc f;
    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
        UnionFind uf(g.vertex_count());
        int popcount = 0;
        for (int i = 0; i < m; ++i) {
            if (mask & (1ULL << i)) {
                uf.unite(g.edges()[static_cast<size_t>(i)].first - 1,
                         g.edges()[static_cast<size_t>(i)].second - 1);
                ++popcount;
            }
        }
        f.add_term(uf.component_partition(), popcount % 2 == 0 ? 1 : -1);
    }
    return f;
}

SymFunc chromatic_sym_stable(const Graph& g, int vertex_cap) {
    const int n = g.vertex_count();
    if (n > vertex_cap)
        throw ResourceError("chromatic_sym_stable: " + std::to_string(n) +
                            " vertices exceeds the vertex cap " + std::to_string(vertex_cap));

    // Accumulate m-coefficients over all stable set partitions, then convert.
    std::map<Partition, Rational> m_coeffs;
    std::vector<std::vector<int>> blocks;
    auto record = [&]() {
        std::vector<int> sizes;
        for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
        std::sort(sizes.begin(), sizes.end(), std::greater<int>());
        Partition mu(std::move(sizes));
        std::map<int, int> mult;
        for (int s : mu.parts()) ++mult[s];
        Rational w = 1;
        for (auto [sz, m] : mult) w *= Rational(factorial(m));
        auto [it, inserted] = m_coeffs.emplace(mu, w);
        if (!inserted) it->second += w;
    };
    auto rec = [&](auto&& self, int v) -> void {
        if (v > n) {
            record();
            return;
        }
        // Index loop: the recursion appends to `blocks`, which can reallocate.
        const size_t existing = blocks.size();
        for (size_t i = 0; i < existing; ++i) {
            const bool stable = std::none_of(blocks[i].begin(), blocks[i].end(),
                                             [&](int u) { return g.adjacent(u, v); });
            if (stable) {
                blocks[i].push_back(v);
                self(self, v + 1);
                blocks[i].pop_back();
            }
        }
        blocks.push_back({v});
        self(self, v + 1);
        blocks.pop_back();
    };
    rec(rec, 1);

    SymFunc f;
    for (const auto& [mu, c] : m_coeffs) f = f + c * from_basis(BasisName::m, mu);
    return f;
}

SymFunc chromatic_sym(const Graph& g, const ChromaticCaps& caps) {
    if (g.edge_count() <= caps.edge_cap) return chromatic_sym_edges(g, caps.edge_cap);
    return chromatic_sym_stable(g, caps.vertex_cap);
}

Integer count_proper_colourings(const Graph& g, int k) {
    if (k < 0) throw std::domain_error("count_proper_colourings: k must be nonnegative");
    const int n = g.vertex_count();
    if (k == 0) return 0;
    std::vector<int> colour(static_cast<size_t>(n), 0);
    Integer count = 0;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            ++count;
            return;
        }
        for (int c = 1; c <= k; ++c) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (colour[static_cast<size_t>(u)] == c && g.adjacent(u + 1, v + 1)) ok = false;
            if (ok) {
                colour[static_cast<size_t>(v)] = c;
                self(self, v + 1);
            }
        }
        colour[static_cast<size_t>(v)] = 0;
    };
    rec(rec, 0);
    return count;
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& j) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Graph(j.at("n").get<int>(), std::move(edges));
}

}  // namespace chromsym
