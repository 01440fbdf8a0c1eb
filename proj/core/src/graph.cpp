#include "zka/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace zka {

namespace {

// large enough for any desk-scale instance, small enough to reject hostile sizes
constexpr std::uint32_t kMaxVertices = 65535;

void check_vertex_count(std::uint32_t n) {
    if (n < 1) throw BadParameters("graph needs at least one vertex");
    if (n > kMaxVertices) throw TooLarge("vertex count " + std::to_string(n) + " exceeds limit");
}

}  // namespace

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::uint32_t v : images_) {
        if (v >= images_.size() || seen[v])
            throw MalformedValue("permutation images are not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::uint32_t n) {
    std::vector<std::uint32_t> images(n);
    std::iota(images.begin(), images.end(), 0u);
    return Permutation(std::move(images));
}

Bytes Permutation::serialize() const {
    Bytes out;
    out.reserve(images_.size() * 4);
    for (std::uint32_t v : images_) put_u32_be(out, v);
    return out;
}

Permutation Permutation::deserialize(ByteView data) {
    if (data.empty() || data.size() % 4 != 0)
        throw MalformedValue("permutation encoding must be a positive multiple of 4 bytes");
    std::size_t n = data.size() / 4;
    if (n > kMaxVertices) throw TooLarge("permutation too large");
    std::vector<std::uint32_t> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = get_u32_be(data.data() + 4 * i);
    return Permutation(std::move(images));
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
    if (outer.size() != inner.size())
        throw SizeMismatch("compose: permutations act on different sets");
    std::vector<std::uint32_t> images(outer.size());
    for (std::uint32_t i = 0; i < inner.size(); ++i) images[i] = outer(inner(i));
    return Permutation(std::move(images));
}

Permutation invert(const Permutation& p) {
    std::vector<std::uint32_t> images(p.size());
    for (std::uint32_t i = 0; i < p.size(); ++i) images[p(i)] = i;
    return Permutation(std::move(images));
}

Permutation random_permutation(std::uint32_t n, Rng& rng) {
    if (n < 1) throw BadParameters("random_permutation: n must be positive");
    std::vector<std::uint32_t> images(n);
    std::iota(images.begin(), images.end(), 0u);
    // Fisher-Yates, one draw per position
    for (std::uint32_t i = n - 1; i > 0; --i) {
        auto j = static_cast<std::uint32_t>(rng.below(i + 1));
        std::swap(images[i], images[j]);
    }
    return Permutation(std::move(images));
}

Graph::Graph(std::uint32_t n) : n_(n) {
    check_vertex_count(n);
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

std::size_t Graph::idx(std::uint32_t i, std::uint32_t j) const {
    if (i >= n_ || j >= n_) throw IndexOutOfRange("vertex index out of range");
    return static_cast<std::size_t>(i) * n_ + j;
}

void Graph::set_edge(std::uint32_t i, std::uint32_t j, bool present) {
    if (i == j) throw BadParameters("self-loops are not allowed");
    adj_[idx(i, j)] = present ? 1 : 0;
    adj_[idx(j, i)] = present ? 1 : 0;
}

Graph Graph::from_edges(std::uint32_t n,
                        const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    Graph g(n);
    for (auto [a, b] : edges) g.set_edge(a, b, true);
    return g;
}

Graph Graph::random(std::uint32_t n, double edge_probability, Rng& rng) {
    if (edge_probability < 0.0 || edge_probability > 1.0)
        throw BadParameters("edge probability must lie in [0, 1]");
    Graph g(n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (rng.unit() < edge_probability) g.set_edge(i, j, true);
    return g;
}

std::uint32_t Graph::edge_count() const {
    std::uint32_t count = 0;
    for (std::uint32_t i = 0; i < n_; ++i)
        for (std::uint32_t j = i + 1; j < n_; ++j)
            if (edge(i, j)) ++count;
    return count;
}

std::vector<std::uint32_t> Graph::degrees() const {
    std::vector<std::uint32_t> deg(n_, 0);
    for (std::uint32_t i = 0; i < n_; ++i)
        for (std::uint32_t j = 0; j < n_; ++j)
            if (i != j && edge(i, j)) ++deg[i];
    return deg;
}

std::size_t Graph::serialized_size(std::uint32_t n) {
    std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    return 4 + (pairs + 7) / 8;
}

Bytes Graph::serialize() const {
    Bytes out;
    out.reserve(serialized_size(n_));
    put_u32_be(out, n_);
    std::uint8_t acc = 0;
    int filled = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
        for (std::uint32_t j = i + 1; j < n_; ++j) {
            acc = static_cast<std::uint8_t>((acc << 1) | (edge(i, j) ? 1 : 0));
            if (++filled == 8) {
                out.push_back(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
    return out;
}

Graph Graph::deserialize(ByteView data) {
    if (data.size() < 4) throw MalformedValue("graph encoding shorter than its header");
    std::uint32_t n = get_u32_be(data.data());
    check_vertex_count(n);
    if (data.size() != serialized_size(n))
        throw MalformedValue("graph encoding has the wrong length for its vertex count");
    Graph g(n);
    std::size_t bit = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            std::uint8_t byte = data[4 + bit / 8];
            if ((byte >> (7 - bit % 8)) & 1) g.set_edge(i, j, true);
            ++bit;
        }
    }
    // padding bits must be zero so the encoding stays canonical
    if (bit % 8 != 0) {
        std::uint8_t tail = data[4 + bit / 8];
        if (tail & ((1u << (8 - bit % 8)) - 1))
            throw MalformedValue("graph encoding has nonzero padding bits");
    }
    return g;
}

Graph apply_permutation(const Graph& g, const Permutation& p) {
    if (p.size() != g.size()) throw SizeMismatch("apply_permutation: permutation size != graph size");
    Graph out(g.size());
    for (std::uint32_t i = 0; i < g.size(); ++i)
        for (std::uint32_t j = i + 1; j < g.size(); ++j)
            if (g.edge(i, j)) out.set_edge(p(i), p(j), true);
    return out;
}

Graph induced_subgraph(const Graph& g, const VertexEmbedding& emb) {
    if (emb.empty()) throw BadParameters("induced_subgraph: empty vertex list");
    std::vector<bool> seen(g.size(), false);
    for (std::uint32_t v : emb) {
        if (v >= g.size()) throw IndexOutOfRange("induced_subgraph: vertex out of range");
        if (seen[v]) throw DuplicateIndex("induced_subgraph: repeated vertex");
        seen[v] = true;
    }
    Graph out(static_cast<std::uint32_t>(emb.size()));
    for (std::uint32_t a = 0; a < emb.size(); ++a)
        for (std::uint32_t b = a + 1; b < emb.size(); ++b)
            if (g.edge(emb[a], emb[b])) out.set_edge(a, b, true);
    return out;
}

std::pair<Graph, VertexEmbedding> embed_into_larger(const Graph& g, std::uint32_t m, Rng& rng) {
    if (m < g.size()) throw TooSmall("embed_into_larger: host smaller than the embedded graph");
    check_vertex_count(m);

    // uniformly random injection: the first n entries of a random relabeling of the host
    Permutation placement = random_permutation(m, rng);
    VertexEmbedding emb(placement.images().begin(), placement.images().begin() + g.size());

    std::vector<std::uint32_t> source_of(m, m);  // m = not embedded
    for (std::uint32_t a = 0; a < g.size(); ++a) source_of[emb[a]] = a;

    Graph host(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        for (std::uint32_t j = i + 1; j < m; ++j) {
            bool present;
            if (source_of[i] != m && source_of[j] != m)
                present = g.edge(source_of[i], source_of[j]);
            else
                present = rng.bit() != 0;
            if (present) host.set_edge(i, j, true);
        }
    }
    return {std::move(host), std::move(emb)};
}

Bytes Coloring::serialize() const {
    Bytes out;
    out.reserve(colors.size() * 6);
    for (std::uint32_t v = 0; v < colors.size(); ++v) {
        put_u32_be(out, v);
        put_u16_be(out, colors[v]);
    }
    return out;
}

Coloring Coloring::deserialize(ByteView data, std::uint16_t k) {
    if (data.empty() || data.size() % 6 != 0)
        throw MalformedValue("coloring encoding must be a positive multiple of 6 bytes");
    std::size_t n = data.size() / 6;
    if (n > kMaxVertices) throw TooLarge("coloring too large");
    Coloring col;
    col.k = k;
    col.colors.assign(n, 0);
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t v = get_u32_be(data.data() + 6 * i);
        std::uint16_t c = get_u16_be(data.data() + 6 * i + 4);
        if (v >= n) throw MalformedValue("coloring names a vertex outside 0..n-1");
        if (seen[v]) throw MalformedValue("coloring assigns a vertex twice");
        seen[v] = true;
        col.colors[v] = c;
    }
    return col;
}

bool is_valid_coloring(const Graph& g, const Coloring& col) {
    if (col.colors.size() != g.size())
        throw CoverageMismatch("coloring covers a different vertex set than the graph");
    for (std::uint16_t c : col.colors)
        if (c < 1 || c > col.k) return false;
    for (std::uint32_t i = 0; i < g.size(); ++i)
        for (std::uint32_t j = i + 1; j < g.size(); ++j)
            if (g.edge(i, j) && col.colors[i] == col.colors[j]) return false;
    return true;
}

Coloring push_forward(const Coloring& col, const Permutation& p) {
    if (p.size() != col.colors.size())
        throw SizeMismatch("push_forward: permutation size != coloring size");
    Coloring out;
    out.k = col.k;
    out.colors.assign(col.colors.size(), 0);
    for (std::uint32_t v = 0; v < p.size(); ++v) out.colors[p(v)] = col.colors[v];
    return out;
}

Coloring canonical_colors(const Coloring& col) {
    Coloring out;
    out.k = col.k;
    out.colors.assign(col.colors.size(), 0);
    std::vector<std::uint16_t> renamed(col.k + 1, 0);
    std::uint16_t next = 1;
    for (std::size_t v = 0; v < col.colors.size(); ++v) {
        std::uint16_t c = col.colors[v];
        if (c < 1 || c > col.k) throw MalformedValue("canonical_colors: color out of range");
        if (renamed[c] == 0) renamed[c] = next++;
        out.colors[v] = renamed[c];
    }
    return out;
}

std::pair<Graph, Coloring> generate_k_colorable_graph(const std::vector<std::uint32_t>& partition,
                                                      Rng& rng) {
    if (partition.empty()) throw BadParameters("partition must have at least one class");
    std::uint64_t total = 0;
    for (std::uint32_t part : partition) {
        if (part == 0) throw BadParameters("partition classes must be nonempty");
        total += part;
    }
    if (total > kMaxVertices) throw TooLarge("partition sums to too many vertices");
    if (partition.size() > 0xFFFF) throw BadParameters("too many color classes");
    auto n = static_cast<std::uint32_t>(total);
    auto k = static_cast<std::uint16_t>(partition.size());

    // classes laid out contiguously, then hidden by the relabeling below
    std::vector<std::uint16_t> class_of(n);
    std::uint32_t v = 0;
    for (std::uint16_t c = 0; c < k; ++c)
        for (std::uint32_t i = 0; i < partition[c]; ++i) class_of[v++] = c;

    Graph g(n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (class_of[i] != class_of[j] && rng.bit()) g.set_edge(i, j, true);

    Coloring col;
    col.k = k;
    col.colors.resize(n);
    for (std::uint32_t u = 0; u < n; ++u) col.colors[u] = static_cast<std::uint16_t>(class_of[u] + 1);

    // the construction leaves classes positionally contiguous; relabel to hide them
    Permutation relabel = random_permutation(n, rng);
    return {apply_permutation(g, relabel), push_forward(col, relabel)};
}

std::pair<Graph, Coloring> generate_k_colorable_graph(std::uint32_t n, std::uint16_t k, Rng& rng) {
    if (k < 1 || k > n) throw BadParameters("need 1 <= k <= n");
    // as even as possible: sizes differ by at most one
    std::vector<std::uint32_t> partition(k, n / k);
    for (std::uint32_t i = 0; i < n % k; ++i) ++partition[i];
    return generate_k_colorable_graph(partition, rng);
}

}  // namespace zka
