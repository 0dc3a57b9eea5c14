#include "gstir/graph.hpp"

#include "gstir/errors.hpp"

#include <numeric>

namespace gstir {

namespace {

void check_order(std::size_t n) {
    if (n > kMaxOrder) {
        throw InvalidSize("graph order " + std::to_string(n) + " exceeds the supported maximum " +
                          std::to_string(kMaxOrder));
    }
}

}  // namespace

Graph::Graph(std::size_t order, std::string name) : name_(std::move(name)) {
    check_order(order);
    neighbors_.resize(order);
    labels_.resize(order);
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < order(); ++u) {
        for (std::size_t v = u + 1; v < order(); ++v) {
            if (neighbors_[u].test(v)) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::permuted(std::span<const std::size_t> perm) const {
    if (perm.size() != order()) throw InvalidSize("permutation size does not match graph order");
    std::vector<std::size_t> inverse(order(), order());
    for (std::size_t v = 0; v < perm.size(); ++v) {
        if (perm[v] >= order() || inverse[perm[v]] != order()) throw InvalidSize("not a permutation");
        inverse[perm[v]] = v;
    }
    GraphBuilder b(order(), name_);
    for (auto [u, v] : edges()) b.add_edge(inverse[u], inverse[v]);
    for (std::size_t v = 0; v < order(); ++v) b.set_label(v, labels_[perm[v]]);
    return std::move(b).build();
}

GraphBuilder::GraphBuilder(std::size_t order, std::string name) : g_(order, std::move(name)) {}

void GraphBuilder::add_edge(std::size_t u, std::size_t v) {
    if (u >= g_.order() || v >= g_.order()) throw InvalidSize("edge endpoint out of range");
    if (u == v) throw InvalidSize("self-loop at vertex " + std::to_string(u));
    if (g_.neighbors_[u].test(v)) return;
    g_.neighbors_[u].set(v);
    g_.neighbors_[v].set(u);
    ++g_.edge_count_;
}

void GraphBuilder::set_label(std::size_t v, std::string label) { g_.labels_.at(v) = std::move(label); }

Graph GraphBuilder::build() && { return std::move(g_); }

Graph edgeless(std::size_t n) { return std::move(GraphBuilder(n, "E(" + std::to_string(n) + ")")).build(); }

Graph path(std::size_t n) {
    if (n < 1) throw InvalidSize("path needs at least 1 vertex");
    GraphBuilder b(n, "P(" + std::to_string(n) + ")");
    for (std::size_t i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return std::move(b).build();
}

Graph cycle(std::size_t n) {
    if (n < 3) throw InvalidSize("cycle needs at least 3 vertices");
    GraphBuilder b(n, "C(" + std::to_string(n) + ")");
    for (std::size_t i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return std::move(b).build();
}

Graph star(std::size_t n) {
    if (n < 1) throw InvalidSize("star needs at least 1 vertex");
    GraphBuilder b(n, "St(" + std::to_string(n) + ")");
    b.set_label(0, "center");
    for (std::size_t i = 1; i < n; ++i) {
        b.add_edge(0, i);
        b.set_label(i, "leaf");
    }
    return std::move(b).build();
}

Graph complete_multipartite(std::span<const std::size_t> sizes) {
    if (sizes.empty()) throw InvalidSize("multipartite graph needs at least one block");
    std::string name = "K(";
    std::size_t total = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1) throw InvalidSize("multipartite block sizes must be >= 1");
        total += sizes[i];
        name += (i ? "," : "") + std::to_string(sizes[i]);
    }
    name += ")";
    check_order(total);

    std::vector<std::size_t> block_of;
    block_of.reserve(total);
    for (std::size_t i = 0; i < sizes.size(); ++i) block_of.insert(block_of.end(), sizes[i], i);

    GraphBuilder b(total, name);
    for (std::size_t u = 0; u < total; ++u) {
        b.set_label(u, "block" + std::to_string(block_of[u]));
        for (std::size_t v = u + 1; v < total; ++v) {
            if (block_of[u] != block_of[v]) b.add_edge(u, v);
        }
    }
    return std::move(b).build();
}

Graph bipartite_minus_matching(std::size_t n) {
    if (n < 1) throw InvalidSize("K_{n,n} - M needs n >= 1");
    check_order(2 * n);
    GraphBuilder b(2 * n, "KM(" + std::to_string(n) + ")");
    for (std::size_t i = 0; i < n; ++i) {
        b.set_label(i, "u");
        b.set_label(n + i, "v");
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) b.add_edge(i, n + j);
        }
    }
    return std::move(b).build();
}

Graph mycielskian(const Graph& g) {
    const std::size_t n = g.order();
    check_order(2 * n + 1);
    GraphBuilder b(2 * n + 1, "Myc(" + g.name() + ")");
    const std::size_t apex = 2 * n;
    for (auto [u, v] : g.edges()) {
        b.add_edge(u, v);
        b.add_edge(n + u, v);
        b.add_edge(n + v, u);
    }
    for (std::size_t i = 0; i < n; ++i) {
        b.add_edge(apex, n + i);
        b.set_label(i, g.label(i));
        b.set_label(n + i, "copy");
    }
    b.set_label(apex, "apex");
    return std::move(b).build();
}

Graph complement(const Graph& g) {
    GraphBuilder b(g.order(), "Comp(" + g.name() + ")");
    for (std::size_t u = 0; u < g.order(); ++u) {
        b.set_label(u, g.label(u));
        for (std::size_t v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) b.add_edge(u, v);
        }
    }
    return std::move(b).build();
}

Graph tree_from_parents(std::span<const std::optional<std::size_t>> parents) {
    const std::size_t n = parents.size();
    if (n == 0) throw NotATree("a tree needs at least one vertex");
    if (n > kMaxOrder) throw InvalidSize("tree order exceeds the supported maximum");

    std::size_t roots = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!parents[i]) {
            ++roots;
        } else if (*parents[i] >= n) {
            throw NotATree("parent of vertex " + std::to_string(i) + " is out of range");
        } else if (*parents[i] == i) {
            throw NotATree("vertex " + std::to_string(i) + " is its own parent");
        }
    }
    if (roots != 1) throw NotATree("expected exactly one root, found " + std::to_string(roots));

    // Every vertex must reach the root by following parents; a cycle never does.
    enum class State : std::uint8_t { unseen, active, done };
    std::vector<State> state(n, State::unseen);
    for (std::size_t start = 0; start < n; ++start) {
        std::vector<std::size_t> trail;
        std::size_t v = start;
        while (state[v] == State::unseen) {
            state[v] = State::active;
            trail.push_back(v);
            if (!parents[v]) break;
            v = *parents[v];
        }
        if (state[v] == State::active && parents[v]) {
            throw NotATree("parent list contains a cycle through vertex " + std::to_string(v));
        }
        for (std::size_t t : trail) state[t] = State::done;
    }

    std::string name = "Tree(";
    for (std::size_t i = 0; i < n; ++i) {
        name += (i ? "," : "") + (parents[i] ? std::to_string(*parents[i]) : std::string("-1"));
    }
    name += ")";
    GraphBuilder b(n, name);
    for (std::size_t i = 0; i < n; ++i) {
        if (parents[i]) b.add_edge(i, *parents[i]);
        else b.set_label(i, "root");
    }
    return std::move(b).build();
}

}  // namespace gstir
