#include "doctest.h"

#include "gstir/errors.hpp"
#include "gstir/graph.hpp"
#include "gstir/graph_spec.hpp"

#include <random>

using namespace gstir;

namespace {

bool symmetric_irreflexive(const Graph& g) {
    for (std::size_t u = 0; u < g.order(); ++u) {
        if (g.adjacent(u, u)) return false;
        for (std::size_t v = 0; v < g.order(); ++v) {
            if (g.adjacent(u, v) != g.adjacent(v, u)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("basic constructors") {
    CHECK(star(3).order() == 3);
    CHECK(star(3).edge_count() == 2);
    CHECK(star(3).label(0) == "center");
    CHECK(path(1).order() == 1);
    CHECK(path(1).edge_count() == 0);
    CHECK(star(1).order() == 1);
    CHECK(edgeless(0).order() == 0);
    CHECK_THROWS_AS(cycle(2), InvalidSize);
    CHECK_THROWS_AS(path(0), InvalidSize);
    CHECK_THROWS_AS(star(0), InvalidSize);

    for (std::size_t n = 0; n <= 8; ++n) {
        CHECK(edgeless(n).edge_count() == 0);
        if (n >= 1) {
            CHECK(path(n).edge_count() == n - 1);
            CHECK(star(n).edge_count() == n - 1);
            CHECK(path(n).order() == n);
            CHECK(symmetric_irreflexive(path(n)));
        }
        if (n >= 3) {
            CHECK(cycle(n).edge_count() == n);
            CHECK(symmetric_irreflexive(cycle(n)));
        }
    }
}

TEST_CASE("complete multipartite") {
    const std::vector<std::size_t> c4{2, 2};
    CHECK(complete_multipartite(c4).edge_count() == 4);
    CHECK(complete_multipartite(c4) == cycle(4).permuted(std::vector<std::size_t>{0, 2, 1, 3}));
    const std::vector<std::size_t> k3{1, 1, 1};
    CHECK(complete_multipartite(k3).edge_count() == 3);
    const std::vector<std::size_t> k33{3, 3};
    CHECK(complete_multipartite(k33).edge_count() == 9);
    CHECK_THROWS_AS(complete_multipartite(std::vector<std::size_t>{2, 0}), InvalidSize);
    CHECK_THROWS_AS(complete_multipartite(std::vector<std::size_t>{}), InvalidSize);

    // Exhaustive over block-size tuples with entries <= 4 and up to 3 blocks.
    for (std::size_t a = 1; a <= 4; ++a) {
        for (std::size_t b = 0; b <= 4; ++b) {
            for (std::size_t c = 0; c <= (b ? 4 : 0); ++c) {
                std::vector<std::size_t> sizes{a};
                if (b) sizes.push_back(b);
                if (c) sizes.push_back(c);
                std::size_t total = 0;
                std::size_t squares = 0;
                for (auto s : sizes) {
                    total += s;
                    squares += s * s;
                }
                const Graph g = complete_multipartite(sizes);
                CHECK(g.order() == total);
                CHECK(g.edge_count() == (total * total - squares) / 2);
                CHECK(g.label(0) == "block0");
            }
        }
    }
}

TEST_CASE("K_{n,n} minus a perfect matching") {
    CHECK(bipartite_minus_matching(1).order() == 2);
    CHECK(bipartite_minus_matching(1).edge_count() == 0);
    const Graph two = bipartite_minus_matching(2);
    CHECK(two.edge_count() == 2);
    CHECK(two.adjacent(0, 3));  // u1 v2
    CHECK(two.adjacent(1, 2));  // u2 v1
    CHECK(bipartite_minus_matching(3).edge_count() == 6);
    CHECK_THROWS_AS(bipartite_minus_matching(0), InvalidSize);
    for (std::size_t n = 1; n <= 8; ++n) {
        const Graph g = bipartite_minus_matching(n);
        CHECK(g.order() == 2 * n);
        CHECK(g.edge_count() == n * n - n);
        for (std::size_t i = 0; i < n; ++i) CHECK_FALSE(g.adjacent(i, n + i));
    }
}

TEST_CASE("mycielskian") {
    const Graph c5 = mycielskian(star(2));
    CHECK(c5.order() == 5);
    CHECK(c5.edge_count() == 5);
    for (std::size_t v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    const Graph m4 = mycielskian(star(4));
    CHECK(m4.order() == 9);
    CHECK(m4.edge_count() == 13);
    CHECK(m4.label(8) == "apex");
    CHECK(m4.label(4) == "copy");
    CHECK(m4.label(0) == "center");

    const Graph m1 = mycielskian(edgeless(1));
    CHECK(m1.order() == 3);
    CHECK(m1.edge_count() == 1);
    CHECK(m1.adjacent(2, 1));

    for (std::size_t n = 1; n <= 8; ++n) {
        for (const Graph& g : {star(n), path(n), edgeless(n)}) {
            const Graph m = mycielskian(g);
            CHECK(m.order() == 2 * g.order() + 1);
            CHECK(m.edge_count() == 3 * g.edge_count() + g.order());
            CHECK(symmetric_irreflexive(m));
            for (std::size_t u = 0; u < n; ++u) {
                for (std::size_t v = 0; v < n; ++v) CHECK(m.adjacent(u, v) == g.adjacent(u, v));
            }
        }
        CHECK(mycielskian(star(n)).edge_count() == 4 * (n - 1) + 1);
    }
}

TEST_CASE("complement") {
    CHECK(complement(edgeless(3)) == complete_multipartite(std::vector<std::size_t>{1, 1, 1}));
    CHECK(complement(complement(path(5))) == path(5));
    const Graph c4c = complement(cycle(4));
    CHECK(c4c.edge_count() == 2);
    CHECK(c4c.adjacent(0, 2));
    CHECK(c4c.adjacent(1, 3));
    for (std::size_t n = 3; n <= 8; ++n) {
        CHECK(complement(complement(cycle(n))) == cycle(n));
        CHECK(complement(cycle(n)).edge_count() + n == n * (n - 1) / 2);
    }
}

TEST_CASE("tree_from_parents") {
    using P = std::vector<std::optional<std::size_t>>;
    CHECK(tree_from_parents(P{std::nullopt, 0, 0, 0}) == star(4));
    CHECK(tree_from_parents(P{std::nullopt, 0, 1, 2}) == path(4));
    CHECK_THROWS_AS(tree_from_parents(P{std::nullopt, 2, 1}), NotATree);
    CHECK_THROWS_AS(tree_from_parents(P{std::nullopt, std::nullopt}), NotATree);
    CHECK_THROWS_AS(tree_from_parents(P{0, 0}), NotATree);
    CHECK_THROWS_AS(tree_from_parents(P{std::nullopt, 5}), NotATree);
    CHECK_THROWS_AS(tree_from_parents(P{1, 0}), NotATree);
    CHECK_THROWS_AS(tree_from_parents(P{}), NotATree);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 12;
        P parents(n);
        for (std::size_t i = 1; i < n; ++i) parents[i] = rng() % i;
        const Graph t = tree_from_parents(parents);
        CHECK(t.order() == n);
        CHECK(t.edge_count() == n - 1);
    }
}

TEST_CASE("permuted relabels adjacency") {
    const Graph p = path(4);
    const std::vector<std::size_t> perm{3, 1, 0, 2};
    const Graph q = p.permuted(perm);
    for (std::size_t u = 0; u < 4; ++u) {
        for (std::size_t v = 0; v < 4; ++v) CHECK(q.adjacent(u, v) == p.adjacent(perm[u], perm[v]));
    }
    CHECK_THROWS_AS(p.permuted(std::vector<std::size_t>{0, 0, 1, 2}), InvalidSize);
}

TEST_CASE("order is bounded") {
    CHECK(edgeless(kMaxOrder).order() == kMaxOrder);
    CHECK_THROWS_AS(edgeless(kMaxOrder + 1), InvalidSize);
    CHECK_THROWS_AS(mycielskian(edgeless(64)), InvalidSize);
}

TEST_CASE("graph spec parsing") {
    CHECK(parse_graph_spec("K(3,3)") == GraphSpec{spec::Multipartite{{3, 3}}});
    CHECK(parse_graph_spec("Myc(St(4))") == make_mycielskian(GraphSpec{spec::Star{4}}));
    CHECK(parse_graph_spec("KM(3)") == GraphSpec{spec::BipartiteMinusMatching{3}});
    CHECK(parse_graph_spec("Comp(C(5))") == make_complement(GraphSpec{spec::Cycle{5}}));
    CHECK(parse_graph_spec(" E( 0 ) ") == GraphSpec{spec::Edgeless{0}});
    CHECK(parse_graph_spec("Tree(-1,0,1)") == GraphSpec{spec::Tree{{std::nullopt, 0, 1}}});

    auto offset_of = [](std::string_view text) -> std::size_t {
        try {
            parse_graph_spec(text);
        } catch (const ParseError& e) {
            return e.offset();
        }
        FAIL("expected a parse error for " << text);
        return 0;
    };
    CHECK(offset_of("K(3,)") == 4);
    CHECK(offset_of("") == 0);
    CHECK(offset_of("X(3)") == 0);
    CHECK(offset_of("K(3") == 3);
    CHECK(offset_of("P(3))") == 4);
    CHECK(offset_of("P(0)") == 2);
    CHECK(offset_of("Myc(St(2)") == 9);
    CHECK(offset_of("Tree(-2)") == 5);
    CHECK(offset_of("K(99999999999999999999999)") == 2);
}

TEST_CASE("graph spec realize") {
    CHECK(realize(parse_graph_spec("K(2,2)")).edge_count() == 4);
    CHECK(realize(parse_graph_spec("Myc(St(4))")).edge_count() == 13);
    CHECK(realize(parse_graph_spec("Comp(P(5))")).edge_count() == 6);
    CHECK(realize(parse_graph_spec("Tree(-1,0,0,0)")) == star(4));
    CHECK_THROWS_AS(realize(parse_graph_spec("C(2)")), InvalidSize);
    CHECK_THROWS_AS(realize(parse_graph_spec("Tree(-1,2,1)")), NotATree);
}

namespace {

GraphSpec random_spec(std::mt19937& rng, int depth) {
    const int pick = static_cast<int>(rng() % (depth > 0 ? 9 : 7));
    const std::size_t n = 1 + rng() % 6;
    switch (pick) {
        case 0: return GraphSpec{spec::Edgeless{rng() % 6}};
        case 1: return GraphSpec{spec::Path{n}};
        case 2: return GraphSpec{spec::Cycle{n + 2}};
        case 3: return GraphSpec{spec::Star{n}};
        case 4: {
            spec::Multipartite m;
            for (std::size_t i = 0, parts = 1 + rng() % 4; i < parts; ++i) m.sizes.push_back(1 + rng() % 5);
            return GraphSpec{m};
        }
        case 5: return GraphSpec{spec::BipartiteMinusMatching{n}};
        case 6: {
            spec::Tree t;
            t.parents.push_back(std::nullopt);
            for (std::size_t i = 1; i < n; ++i) t.parents.push_back(rng() % i);
            return GraphSpec{t};
        }
        case 7: return make_mycielskian(random_spec(rng, depth - 1));
        default: return make_complement(random_spec(rng, depth - 1));
    }
}

}  // namespace

TEST_CASE("parse inverts render") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 500; ++trial) {
        const GraphSpec s = random_spec(rng, 3);
        const std::string text = render(s);
        CAPTURE(text);
        CHECK(parse_graph_spec(text) == s);
        CHECK(render(parse_graph_spec(text)) == text);
    }
}
