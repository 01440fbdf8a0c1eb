#include "zka/scheme_subgraph_iso.hpp"

#include <algorithm>

namespace zka::subgraph_iso {

namespace {

Bytes encode_embedding(const VertexEmbedding& emb) {
    Bytes out;
    put_u32_be(out, static_cast<std::uint32_t>(emb.size()));
    for (std::uint32_t v : emb) put_u32_be(out, v);
    return out;
}

VertexEmbedding decode_embedding(ByteView data, std::size_t& consumed) {
    if (data.size() < 4) throw MalformedValue("embedding encoding too short");
    std::uint32_t count = get_u32_be(data.data());
    if (count == 0 || count > 65535) throw MalformedValue("embedding count out of range");
    if (data.size() < 4 + static_cast<std::size_t>(count) * 4)
        throw MalformedValue("embedding encoding shorter than its count");
    VertexEmbedding emb(count);
    for (std::uint32_t i = 0; i < count; ++i) emb[i] = get_u32_be(data.data() + 4 + 4 * i);
    consumed = 4 + static_cast<std::size_t>(count) * 4;
    return emb;
}

bool covers_exactly(const std::vector<std::uint32_t>& sources, std::uint32_t n) {
    if (sources.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (std::uint32_t s : sources) {
        if (s >= n || seen[s]) return false;
        seen[s] = true;
    }
    return true;
}

bool all_distinct_below(const std::vector<std::uint32_t>& targets, std::uint32_t bound) {
    std::vector<bool> seen(bound, false);
    for (std::uint32_t t : targets) {
        if (t >= bound || seen[t]) return false;
        seen[t] = true;
    }
    return true;
}

}  // namespace

Bytes Statement::serialize() const {
    Bytes out = gamma.serialize();
    Bytes second = lambda1.serialize();
    out.insert(out.end(), second.begin(), second.end());
    return out;
}

Statement Statement::deserialize(ByteView data) {
    if (data.size() < 4) throw MalformedValue("statement too short");
    std::uint32_t n = get_u32_be(data.data());
    std::size_t first = Graph::serialized_size(n);
    if (data.size() < first) throw MalformedValue("statement too short for its first graph");
    Statement s;
    s.gamma = Graph::deserialize(data.subspan(0, first));
    s.lambda1 = Graph::deserialize(data.subspan(first));
    if (s.gamma.size() > s.lambda1.size())
        throw MalformedValue("embedded graph larger than its host");
    return s;
}

Bytes Witness::serialize() const {
    Bytes out = encode_embedding(embedding);
    Bytes rest = phi.serialize();
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

Witness Witness::deserialize(ByteView data) {
    Witness w;
    std::size_t consumed = 0;
    w.embedding = decode_embedding(data, consumed);
    w.phi = Permutation::deserialize(data.subspan(consumed));
    if (w.phi.size() != w.embedding.size())
        throw MalformedValue("witness map size differs from its embedding");
    return w;
}

Bytes SubgraphResponse::serialize() const {
    Bytes out;
    put_u32_be(out, static_cast<std::uint32_t>(sources.size()));
    for (std::uint32_t s : sources) put_u32_be(out, s);
    for (std::uint32_t t : targets) put_u32_be(out, t);
    return out;
}

SubgraphResponse SubgraphResponse::deserialize(ByteView data) {
    if (data.size() < 4) throw MalformedValue("response encoding too short");
    std::uint32_t n = get_u32_be(data.data());
    if (n == 0 || n > 65535) throw MalformedValue("response count out of range");
    if (data.size() != 4 + static_cast<std::size_t>(n) * 8)
        throw MalformedValue("response encoding has the wrong length");
    SubgraphResponse r;
    r.sources.resize(n);
    r.targets.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) r.sources[i] = get_u32_be(data.data() + 4 + 4 * i);
    for (std::uint32_t i = 0; i < n; ++i)
        r.targets[i] = get_u32_be(data.data() + 4 + 4 * (n + i));
    return r;
}

Bytes Ephemeral::serialize() const {
    Bytes psi_bytes = psi.serialize();
    Bytes out;
    put_u32_be(out, static_cast<std::uint32_t>(psi_bytes.size()));
    out.insert(out.end(), psi_bytes.begin(), psi_bytes.end());
    Bytes emb = encode_embedding(host_embedding);
    out.insert(out.end(), emb.begin(), emb.end());
    return out;
}

Ephemeral Ephemeral::deserialize(ByteView data) {
    if (data.size() < 4) throw MalformedValue("ephemeral encoding too short");
    std::uint32_t psi_len = get_u32_be(data.data());
    if (data.size() < 4 + psi_len) throw MalformedValue("ephemeral encoding truncated");
    Ephemeral e;
    e.psi = Permutation::deserialize(data.subspan(4, psi_len));
    std::size_t consumed = 0;
    e.host_embedding = decode_embedding(data.subspan(4 + psi_len), consumed);
    return e;
}

bool witness_valid(const Statement& statement, const Witness& witness) {
    if (witness.embedding.size() != statement.gamma.size()) return false;
    if (witness.phi.size() != statement.gamma.size()) return false;
    try {
        return apply_permutation(statement.gamma, witness.phi) ==
               induced_subgraph(statement.lambda1, witness.embedding);
    } catch (const Error&) {
        return false;
    }
}

KeyPair keygen(std::uint32_t n_gamma, std::uint32_t n_lambda, Rng& rng) {
    if (n_gamma < 1) throw BadParameters("keygen: n_gamma must be positive");
    if (n_gamma > n_lambda) throw BadParameters("keygen: host must be at least as large as gamma");
    KeyPair kp;
    kp.statement.gamma = Graph::random(n_gamma, 0.5, rng);
    kp.witness.phi = random_permutation(n_gamma, rng);
    Graph gamma1 = apply_permutation(kp.statement.gamma, kp.witness.phi);
    auto [host, emb] = embed_into_larger(gamma1, n_lambda, rng);
    kp.statement.lambda1 = std::move(host);
    kp.witness.embedding = std::move(emb);
    return kp;
}

std::pair<Graph, Ephemeral> commit(const KeyPair& keypair, std::uint32_t slack, Rng& rng) {
    const Graph& lambda1 = keypair.statement.lambda1;
    Ephemeral eph;
    eph.psi = random_permutation(lambda1.size(), rng);
    Graph gamma2 = apply_permutation(lambda1, eph.psi);
    auto [host, emb] = embed_into_larger(gamma2, lambda1.size() + slack, rng);
    eph.host_embedding = std::move(emb);
    return {std::move(host), std::move(eph)};
}

SubgraphResponse respond(const KeyPair& keypair, const Ephemeral& ephemeral, Challenge c) {
    const auto& emb = ephemeral.host_embedding;
    SubgraphResponse r;
    switch (c.bit) {
        case 0: {
            // reveal the copy of lambda1: i -> host position of psi(i)
            std::uint32_t n = keypair.statement.lambda1.size();
            r.sources.resize(n);
            r.targets.resize(n);
            for (std::uint32_t i = 0; i < n; ++i) {
                r.sources[i] = i;
                r.targets[i] = emb[ephemeral.psi(i)];
            }
            return r;
        }
        case 1: {
            // reveal only the image of gamma: through phi, the key embedding, then psi
            std::uint32_t n = keypair.statement.gamma.size();
            r.sources.resize(n);
            r.targets.resize(n);
            for (std::uint32_t i = 0; i < n; ++i) {
                r.sources[i] = i;
                std::uint32_t in_lambda1 = keypair.witness.embedding[keypair.witness.phi(i)];
                r.targets[i] = emb[ephemeral.psi(in_lambda1)];
            }
            return r;
        }
        default: throw UnsupportedChallenge("challenge bit must be 0 or 1");
    }
}

bool verify_round(const Statement& statement, const Graph& commitment, Challenge c,
                  const SubgraphResponse& response) {
    const Graph& source = (c.bit == 0) ? statement.lambda1 : statement.gamma;
    if (commitment.size() < source.size()) return false;
    if (response.sources.size() != response.targets.size()) return false;
    if (!covers_exactly(response.sources, source.size())) return false;
    if (!all_distinct_below(response.targets, commitment.size())) return false;
    // the map must carry source adjacency exactly onto the induced image
    for (std::uint32_t a = 0; a < response.sources.size(); ++a)
        for (std::uint32_t b = a + 1; b < response.sources.size(); ++b)
            if (source.edge(response.sources[a], response.sources[b]) !=
                commitment.edge(response.targets[a], response.targets[b]))
                return false;
    return true;
}

Witness extract(const Statement& statement, const SubgraphResponse& response0,
                const SubgraphResponse& response1) {
    // sigma0: lambda1 vertex -> host vertex, from the c=0 map
    std::vector<std::uint32_t> sigma0(statement.lambda1.size());
    for (std::uint32_t a = 0; a < response0.sources.size(); ++a)
        sigma0[response0.sources[a]] = response0.targets[a];

    std::vector<std::int64_t> host_to_lambda1;
    for (std::uint32_t v = 0; v < statement.lambda1.size(); ++v) {
        if (sigma0[v] >= host_to_lambda1.size()) host_to_lambda1.resize(sigma0[v] + 1, -1);
        host_to_lambda1[sigma0[v]] = v;
    }

    // pull each gamma vertex's host position back into lambda1
    std::vector<std::uint32_t> located(statement.gamma.size());
    for (std::uint32_t a = 0; a < response1.sources.size(); ++a) {
        std::uint32_t host = response1.targets[a];
        if (host >= host_to_lambda1.size() || host_to_lambda1[host] < 0)
            throw ExtractionFailed("c=1 image is not contained in the c=0 image");
        located[response1.sources[a]] = static_cast<std::uint32_t>(host_to_lambda1[host]);
    }

    Witness w;
    w.embedding = located;
    std::sort(w.embedding.begin(), w.embedding.end());
    std::vector<std::uint32_t> rank(statement.gamma.size());
    for (std::uint32_t i = 0; i < located.size(); ++i) {
        auto it = std::lower_bound(w.embedding.begin(), w.embedding.end(), located[i]);
        rank[i] = static_cast<std::uint32_t>(it - w.embedding.begin());
    }
    w.phi = Permutation(std::move(rank));
    return w;
}

std::pair<Graph, SubgraphResponse> simulate(const Statement& statement, std::uint32_t slack,
                                            Challenge c, Rng& rng) {
    std::uint32_t host_size = statement.lambda1.size() + slack;
    const Graph& source = (c.bit == 0) ? statement.lambda1 : statement.gamma;
    Permutation rho = random_permutation(source.size(), rng);
    Graph image = apply_permutation(source, rho);
    auto [host, emb] = embed_into_larger(image, host_size, rng);
    SubgraphResponse r;
    r.sources.resize(source.size());
    r.targets.resize(source.size());
    for (std::uint32_t i = 0; i < source.size(); ++i) {
        r.sources[i] = i;
        r.targets[i] = emb[rho(i)];
    }
    return {std::move(host), std::move(r)};
}

Scheme::Scheme(Statement statement, std::optional<std::uint32_t> slack)
    : statement_(std::move(statement)),
      slack_(slack.value_or(statement_.lambda1.size())) {}

Scheme::Scheme(KeyPair keypair, std::optional<std::uint32_t> slack)
    : statement_(std::move(keypair.statement)),
      witness_(std::move(keypair.witness)),
      slack_(slack.value_or(statement_.lambda1.size())) {}

Bytes Scheme::statement_bytes() const { return statement_.serialize(); }

bool Scheme::witness_valid() const {
    return witness_ && subgraph_iso::witness_valid(statement_, *witness_);
}

Bytes Scheme::witness_bytes() const {
    if (!witness_) throw InvalidKeyPair("no witness held");
    return witness_->serialize();
}

std::pair<Bytes, Bytes> Scheme::commit(Rng& rng) const {
    if (!witness_) throw InvalidKeyPair("no witness held");
    KeyPair kp{statement_, *witness_};
    auto [commitment, eph] = subgraph_iso::commit(kp, slack_, rng);
    return {commitment.serialize(), eph.serialize()};
}

Bytes Scheme::respond(const Bytes& ephemeral, Challenge c) const {
    if (!witness_) throw InvalidKeyPair("no witness held");
    KeyPair kp{statement_, *witness_};
    return subgraph_iso::respond(kp, Ephemeral::deserialize(ephemeral), c).serialize();
}

bool Scheme::verify_round(const Bytes& commitment, Challenge c, const Bytes& response) const {
    if (c.bit > 1) return false;
    try {
        return subgraph_iso::verify_round(statement_, Graph::deserialize(commitment), c,
                                          SubgraphResponse::deserialize(response));
    } catch (const Error&) {
        return false;
    }
}

Bytes Scheme::extract(const Bytes&, const Bytes& response0, const Bytes& response1) const {
    return subgraph_iso::extract(statement_, SubgraphResponse::deserialize(response0),
                                 SubgraphResponse::deserialize(response1))
        .serialize();
}

std::pair<Bytes, Bytes> Scheme::simulate(Challenge c, Rng& rng) const {
    if (c.bit > 1) throw UnsupportedChallenge("challenge bit must be 0 or 1");
    auto [commitment, response] = subgraph_iso::simulate(statement_, slack_, c, rng);
    return {commitment.serialize(), response.serialize()};
}

}  // namespace zka::subgraph_iso
