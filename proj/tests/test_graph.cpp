#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "zka/graph.hpp"

using namespace zka;

namespace {

Graph triangle() { return Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}); }
Graph path3() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }

Permutation perm(std::vector<std::uint32_t> images) { return Permutation(std::move(images)); }

std::vector<std::uint32_t> sorted_degrees(const Graph& g) {
    auto d = g.degrees();
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("permutation constructor validates bijections") {
    CHECK_NOTHROW(perm({2, 0, 1}));
    CHECK_THROWS_AS(perm({0, 0, 1}), MalformedValue);
    CHECK_THROWS_AS(perm({0, 3, 1}), MalformedValue);
    CHECK(Permutation::identity(4)(2) == 2);
}

TEST_CASE("apply_permutation fixes the complete graph") {
    Graph k3 = triangle();
    CHECK(apply_permutation(k3, perm({1, 2, 0})) == k3);
    CHECK(apply_permutation(k3, perm({2, 1, 0})) == k3);
}

TEST_CASE("apply_permutation respects path symmetry") {
    Graph p = path3();
    CHECK(apply_permutation(p, perm({2, 1, 0})) == p);  // swap(0,2) is an automorphism
}

TEST_CASE("apply_permutation relabels the path edges") {
    // 0-1-2 under 0->1,1->2,2->0 becomes edges {1,2} and {2,0}
    Graph image = apply_permutation(path3(), perm({1, 2, 0}));
    CHECK(image == Graph::from_edges(3, {{1, 2}, {2, 0}}));
}

TEST_CASE("apply_permutation size mismatch") {
    CHECK_THROWS_AS(apply_permutation(path3(), Permutation::identity(4)), SizeMismatch);
}

TEST_CASE("compose basics") {
    Permutation p = perm({2, 0, 1});
    CHECK(compose(p, Permutation::identity(3)) == p);
    CHECK(compose(p, invert(p)) == Permutation::identity(3));
    // result(i) = outer(inner(i)): swap(0,1) after swap(1,2) is the 3-cycle 0->1->2->0
    CHECK(compose(perm({1, 0, 2}), perm({0, 2, 1})) == perm({1, 2, 0}));
    CHECK_THROWS_AS(compose(p, Permutation::identity(4)), SizeMismatch);
}

TEST_CASE("compose matches sequential application") {
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = Graph::random(7, 0.5, rng);
        Permutation a = random_permutation(7, rng), b = random_permutation(7, rng);
        CHECK(apply_permutation(g, compose(a, b)) == apply_permutation(apply_permutation(g, b), a));
    }
}

TEST_CASE("invert") {
    CHECK(invert(Permutation::identity(3)) == Permutation::identity(3));
    CHECK(invert(perm({2, 1, 0})) == perm({2, 1, 0}));
    CHECK(invert(perm({1, 2, 0})) == perm({2, 0, 1}));
}

TEST_CASE("random_permutation degenerate and deterministic cases") {
    Rng rng(5);
    CHECK(random_permutation(1, rng) == Permutation::identity(1));
    Rng a(123), b(123);
    CHECK(random_permutation(50, a) == random_permutation(50, b));
}

TEST_CASE("random_permutation is uniform over S_3") {
    Rng rng(2024);
    std::map<std::vector<std::uint32_t>, int> counts;
    const int samples = 6000;
    for (int i = 0; i < samples; ++i) counts[random_permutation(3, rng).images()]++;
    REQUIRE(counts.size() == 6);
    double chi2 = 0;
    const double expected = samples / 6.0;
    for (const auto& [images, observed] : counts) {
        double d = observed - expected;
        chi2 += d * d / expected;
    }
    CHECK(chi2 < 15.086);  // chi-square critical value, 5 df, significance 0.01
}

TEST_CASE("graph construction and edges") {
    Graph g(3);
    CHECK(g.edge_count() == 0);
    g.set_edge(0, 2, true);
    CHECK(g.edge(2, 0));
    g.set_edge(0, 2, false);
    CHECK(g.edge_count() == 0);
    CHECK_THROWS_AS(g.set_edge(1, 1, true), BadParameters);
    CHECK_THROWS_AS(Graph(0), BadParameters);
    CHECK_THROWS_AS(g.set_edge(0, 3, true), IndexOutOfRange);
}

TEST_CASE("degree multiset and edge count survive relabeling") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = Graph::random(9, 0.4, rng);
        Graph h = apply_permutation(g, random_permutation(9, rng));
        CHECK(g.edge_count() == h.edge_count());
        CHECK(sorted_degrees(g) == sorted_degrees(h));
    }
}

TEST_CASE("is_valid_coloring") {
    Graph k3 = triangle();
    CHECK(is_valid_coloring(k3, Coloring{3, {1, 2, 3}}));
    CHECK_FALSE(is_valid_coloring(k3, Coloring{3, {1, 1, 2}}));  // edge 0-1 monochromatic
    CHECK(is_valid_coloring(Graph(5), Coloring{1, {1, 1, 1, 1, 1}}));
    CHECK_FALSE(is_valid_coloring(Graph(2), Coloring{1, {1, 2}}));  // color out of range
    CHECK_THROWS_AS(is_valid_coloring(k3, Coloring{3, {1, 2}}), CoverageMismatch);
}

TEST_CASE("push_forward tracks the relabeling") {
    Rng rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        auto [g, col] = generate_k_colorable_graph(8, 3, rng);
        Permutation p = random_permutation(8, rng);
        // colorability is isomorphism-invariant
        CHECK(is_valid_coloring(apply_permutation(g, p), push_forward(col, p)));
    }
}

TEST_CASE("canonical_colors renames in first-seen order") {
    Coloring col{4, {3, 3, 1, 4}};
    Coloring canon = canonical_colors(col);
    CHECK(canon.colors == std::vector<std::uint16_t>{1, 1, 2, 3});
    CHECK(canon.k == 4);
    CHECK_THROWS_AS(canonical_colors(Coloring{2, {1, 3}}), MalformedValue);
}

TEST_CASE("generate_k_colorable_graph honors its contract") {
    Rng rng(59);
    SUBCASE("singleton classes") {
        auto [g, col] = generate_k_colorable_graph(3, 3, rng);
        CHECK(is_valid_coloring(g, col));
    }
    SUBCASE("n=6 k=3") {
        for (int trial = 0; trial < 20; ++trial) {
            auto [g, col] = generate_k_colorable_graph(6, 3, rng);
            CHECK(is_valid_coloring(g, col));
            CHECK(col.k == 3);
        }
    }
    SUBCASE("k=1 forces the edgeless graph") {
        auto [g, col] = generate_k_colorable_graph(5, 1, rng);
        CHECK(g.edge_count() == 0);
        CHECK(g.size() == 5);
    }
    SUBCASE("bad parameters") {
        CHECK_THROWS_AS(generate_k_colorable_graph(3, 4, rng), BadParameters);
        CHECK_THROWS_AS(generate_k_colorable_graph(3, 0, rng), BadParameters);
        CHECK_THROWS_AS(generate_k_colorable_graph({2, 0, 1}, rng), BadParameters);
    }
    SUBCASE("explicit partition controls class sizes") {
        auto [g, col] = generate_k_colorable_graph({4, 2}, rng);
        CHECK(g.size() == 6);
        CHECK(std::count(col.colors.begin(), col.colors.end(), 1) +
                  std::count(col.colors.begin(), col.colors.end(), 2) ==
              6);
        CHECK(is_valid_coloring(g, col));
    }
}

TEST_CASE("induced_subgraph") {
    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    SUBCASE("full vertex set in order is the identity") {
        CHECK(induced_subgraph(p4, {0, 1, 2, 3}) == p4);
    }
    SUBCASE("non-adjacent pair induces the edgeless graph") {
        CHECK(induced_subgraph(p4, {0, 2}) == Graph(2));
    }
    SUBCASE("triangle recovered from a host") {
        Graph host = Graph::from_edges(5, {{1, 3}, {3, 4}, {1, 4}, {0, 1}});
        CHECK(induced_subgraph(host, {1, 3, 4}) == triangle());
    }
    SUBCASE("index validation") {
        CHECK_THROWS_AS(induced_subgraph(p4, {0, 4}), IndexOutOfRange);
        CHECK_THROWS_AS(induced_subgraph(p4, {0, 0}), DuplicateIndex);
        CHECK_THROWS_AS(induced_subgraph(p4, {}), BadParameters);
    }
}

TEST_CASE("embed_into_larger") {
    Rng rng(67);
    SUBCASE("tight host is a permuted copy") {
        Graph g = path3();
        auto [host, emb] = embed_into_larger(g, 3, rng);
        CHECK(host.size() == 3);
        CHECK(induced_subgraph(host, emb) == g);
        CHECK(host.edge_count() == g.edge_count());
    }
    SUBCASE("triangle into five vertices") {
        auto [host, emb] = embed_into_larger(triangle(), 5, rng);
        REQUIRE(emb.size() == 3);
        CHECK(induced_subgraph(host, emb) == triangle());

        // an exhaustive scan over ordered triples also finds a K3 copy
        bool found = false;
        for (std::uint32_t a = 0; a < 5 && !found; ++a)
            for (std::uint32_t b = 0; b < 5 && !found; ++b)
                for (std::uint32_t c = 0; c < 5 && !found; ++c) {
                    if (a == b || b == c || a == c) continue;
                    if (induced_subgraph(host, {a, b, c}) == triangle()) found = true;
                }
        CHECK(found);
    }
    SUBCASE("round-trip identity on random graphs") {
        for (int trial = 0; trial < 30; ++trial) {
            Graph g = Graph::random(6, 0.5, rng);
            auto [host, emb] = embed_into_larger(g, 11, rng);
            CHECK(induced_subgraph(host, emb) == g);
        }
    }
    SUBCASE("host must fit") {
        CHECK_THROWS_AS(embed_into_larger(triangle(), 2, rng), TooSmall);
    }
}

TEST_CASE("graph serialization") {
    SUBCASE("fixed encoding of the triangle") {
        // 3 vertices, upper triangle bits (01),(02),(12) = 111, left-packed
        CHECK(triangle().serialize() == Bytes{0, 0, 0, 3, 0xE0});
    }
    SUBCASE("size formula") {
        CHECK(Graph::serialized_size(1) == 4);
        CHECK(Graph::serialized_size(3) == 5);
        CHECK(Graph::serialized_size(9) == 4 + 5);  // 36 bits -> 5 bytes
    }
    SUBCASE("round-trip") {
        Rng rng(71);
        for (std::uint32_t n : {1u, 2u, 5u, 16u, 33u}) {
            Graph g = Graph::random(n, 0.5, rng);
            CHECK(Graph::deserialize(g.serialize()) == g);
        }
    }
    SUBCASE("nonzero padding is rejected") {
        Bytes enc = triangle().serialize();
        enc.back() |= 0x01;  // flip a padding bit
        CHECK_THROWS_AS(Graph::deserialize(enc), MalformedValue);
    }
    SUBCASE("length must match the vertex count") {
        Bytes enc = triangle().serialize();
        enc.push_back(0);
        CHECK_THROWS_AS(Graph::deserialize(enc), MalformedValue);
        CHECK_THROWS_AS(Graph::deserialize(ByteView(enc.data(), 2)), MalformedValue);
    }
}

TEST_CASE("permutation serialization") {
    Permutation p = perm({2, 0, 1});
    CHECK(p.serialize() == Bytes{0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 1});
    CHECK(Permutation::deserialize(p.serialize()) == p);
    CHECK_THROWS_AS(Permutation::deserialize(Bytes{0, 0, 0}), MalformedValue);
    CHECK_THROWS_AS(Permutation::deserialize(Bytes{}), MalformedValue);
    // entries must still form a bijection
    CHECK_THROWS_AS(Permutation::deserialize(Bytes{0, 0, 0, 7}), MalformedValue);
}

TEST_CASE("coloring serialization") {
    Coloring col{3, {2, 1, 3}};
    Bytes enc = col.serialize();
    CHECK(enc == Bytes{0, 0, 0, 0, 0, 2, 0, 0, 0, 1, 0, 1, 0, 0, 0, 2, 0, 3});
    CHECK(Coloring::deserialize(enc, 3) == col);
    CHECK_THROWS_AS(Coloring::deserialize(Bytes{1, 2, 3}, 3), MalformedValue);
    // duplicate vertex entry
    Bytes dup = enc;
    dup[9] = 0;  // second pair now names vertex 0 again
    CHECK_THROWS_AS(Coloring::deserialize(dup, 3), MalformedValue);
}

}  // TEST_SUITE
