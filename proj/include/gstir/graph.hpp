#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gstir {

inline constexpr std::size_t kMaxOrder = 128;

using VertexSet = std::bitset<kMaxOrder>;

// Finite simple undirected graph on vertices 0..order-1. Adjacency is kept as
// one neighbor bitset per vertex so that "does v touch any member of S" is a
// single intersection. Immutable once built by one of the constructors below.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t order, std::string name = {});

    std::size_t order() const noexcept { return neighbors_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    std::size_t degree(std::size_t v) const { return neighbors_.at(v).count(); }
    bool adjacent(std::size_t u, std::size_t v) const { return neighbors_.at(u).test(v); }
    const VertexSet& neighbors(std::size_t v) const { return neighbors_.at(v); }
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    const std::string& name() const noexcept { return name_; }
    const std::string& label(std::size_t v) const { return labels_.at(v); }

    // Vertex v of the result is vertex perm[v] of this graph.
    Graph permuted(std::span<const std::size_t> perm) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.neighbors_ == b.neighbors_; }

private:
    friend class GraphBuilder;

    std::vector<VertexSet> neighbors_;
    std::vector<std::string> labels_;
    std::string name_;
    std::size_t edge_count_ = 0;
};

// Mutable staging area used by the constructors; produces an immutable Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t order, std::string name = {});

    void add_edge(std::size_t u, std::size_t v);
    void set_label(std::size_t v, std::string label);
    Graph build() &&;

private:
    Graph g_;
};

// Canonical constructions. Vertex ordering is part of the contract:
//   path/cycle     0..n-1 along the path
//   star           center 0, leaves 1..n-1
//   multipartite   blocks listed consecutively, labeled "block<i>"
//   K_{n,n} - M    u_1..u_n then v_1..v_n; u_i and v_i are the removed pairs
//   mycielskian    originals, then copies in the same order, apex last
Graph edgeless(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t n);
Graph complete_multipartite(std::span<const std::size_t> sizes);
Graph bipartite_minus_matching(std::size_t n);
Graph mycielskian(const Graph& g);
Graph complement(const Graph& g);

// parents[i] is the parent of vertex i, or nullopt for the single root.
Graph tree_from_parents(std::span<const std::optional<std::size_t>> parents);

}  // namespace gstir
