#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "zka/bytes.hpp"
#include "zka/errors.hpp"
#include "zka/rng.hpp"

namespace zka {

/// Ordered list of distinct vertex indices in a host graph. The order
/// carries the vertex correspondence: entry a is where source vertex a lives.
using VertexEmbedding = std::vector<std::uint32_t>;

/// Bijection on {0..n-1}.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::uint32_t> images);

    static Permutation identity(std::uint32_t n);

    std::uint32_t size() const { return static_cast<std::uint32_t>(images_.size()); }
    std::uint32_t operator()(std::uint32_t i) const { return images_[i]; }
    const std::vector<std::uint32_t>& images() const { return images_; }

    bool operator==(const Permutation&) const = default;

    /// n 4-byte big-endian entries; n is implied by the byte length.
    Bytes serialize() const;
    static Permutation deserialize(ByteView data);

private:
    std::vector<std::uint32_t> images_;
};

Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation invert(const Permutation& p);
Permutation random_permutation(std::uint32_t n, Rng& rng);

/// Undirected simple graph: symmetric 0/1 adjacency matrix, zero diagonal.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::uint32_t n);

    static Graph from_edges(std::uint32_t n,
                            const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);
    static Graph random(std::uint32_t n, double edge_probability, Rng& rng);

    std::uint32_t size() const { return n_; }
    bool edge(std::uint32_t i, std::uint32_t j) const { return adj_[idx(i, j)] != 0; }
    void set_edge(std::uint32_t i, std::uint32_t j, bool present);

    std::uint32_t edge_count() const;
    std::vector<std::uint32_t> degrees() const;

    bool operator==(const Graph&) const = default;

    /// 4-byte big-endian vertex count, then the upper triangle (i < j,
    /// row-major) bit-packed MSB-first and zero-padded to a byte.
    Bytes serialize() const;
    static Graph deserialize(ByteView data);

    /// Number of bytes serialize() produces for an n-vertex graph.
    static std::size_t serialized_size(std::uint32_t n);

private:
    std::size_t idx(std::uint32_t i, std::uint32_t j) const;

    std::uint32_t n_ = 0;
    std::vector<std::uint8_t> adj_;
};

/// Relabels vertices: result has an edge {p(i), p(j)} exactly when g has {i, j}.
Graph apply_permutation(const Graph& g, const Permutation& p);

/// Subgraph induced by the embedded vertex list, edges inherited positionally.
Graph induced_subgraph(const Graph& g, const VertexEmbedding& emb);

/// Places g at a uniformly random injection into a host on m vertices and
/// fills every pair touching a fresh vertex with an edge of probability 1/2.
std::pair<Graph, VertexEmbedding> embed_into_larger(const Graph& g, std::uint32_t m, Rng& rng);

/// Vertex color assignment; colors run 1..k, 0 marks an uncolored vertex.
struct Coloring {
    std::uint16_t k = 0;
    std::vector<std::uint16_t> colors;

    bool operator==(const Coloring&) const = default;

    /// One (4-byte vertex, 2-byte color) pair per vertex, ascending vertex.
    /// The color count k travels out of band.
    Bytes serialize() const;
    static Coloring deserialize(ByteView data, std::uint16_t k);
};

bool is_valid_coloring(const Graph& g, const Coloring& col);

/// Coloring of apply_permutation(g, p) that colors p(v) like col colors v.
Coloring push_forward(const Coloring& col, const Permutation& p);

/// Renames colors to 1..d in first-seen order over ascending vertices.
Coloring canonical_colors(const Coloring& col);

/// Builds a k-colorable graph: k color classes with no intra-class edges and
/// cross-class edges of probability 1/2, then a uniformly random relabeling
/// of both graph and coloring.
std::pair<Graph, Coloring> generate_k_colorable_graph(std::uint32_t n, std::uint16_t k, Rng& rng);

/// Same, with an explicit partition of the vertex count into class sizes.
std::pair<Graph, Coloring> generate_k_colorable_graph(const std::vector<std::uint32_t>& partition,
                                                      Rng& rng);

}  // namespace zka
