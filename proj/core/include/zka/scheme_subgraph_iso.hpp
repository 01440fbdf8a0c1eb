#pragma once

#include <optional>

#include "zka/graph.hpp"
#include "zka/sigma.hpp"

namespace zka::subgraph_iso {

/// Statement: gamma embeds into lambda1. Witness: where, and how.
struct Statement {
    Graph gamma;
    Graph lambda1;

    bool operator==(const Statement&) const = default;

    Bytes serialize() const;
    static Statement deserialize(ByteView data);
};

struct Witness {
    VertexEmbedding embedding;  // locates the image of gamma inside lambda1
    Permutation phi;            // apply_permutation(gamma, phi) == induced_subgraph(lambda1, embedding)

    Bytes serialize() const;
    static Witness deserialize(ByteView data);
};

struct KeyPair {
    Statement statement;
    Witness witness;
};

/// A vertex map (k_1..k_n) -> (m_1..m_n): sources cover the source graph,
/// targets are distinct vertices of the committed host.
struct SubgraphResponse {
    std::vector<std::uint32_t> sources;
    std::vector<std::uint32_t> targets;

    bool operator==(const SubgraphResponse&) const = default;

    Bytes serialize() const;
    static SubgraphResponse deserialize(ByteView data);
};

/// Ephemeral per-round secret: the relabeling of lambda1 and where its image
/// sits inside the committed host.
struct Ephemeral {
    Permutation psi;
    VertexEmbedding host_embedding;

    Bytes serialize() const;
    static Ephemeral deserialize(ByteView data);
};

bool witness_valid(const Statement& statement, const Witness& witness);

KeyPair keygen(std::uint32_t n_gamma, std::uint32_t n_lambda, Rng& rng);

/// Commits to a host that hides a fresh isomorphic copy of lambda1 among
/// `slack` extra vertices.
std::pair<Graph, Ephemeral> commit(const KeyPair& keypair, std::uint32_t slack, Rng& rng);

SubgraphResponse respond(const KeyPair& keypair, const Ephemeral& ephemeral, Challenge c);

bool verify_round(const Statement& statement, const Graph& commitment, Challenge c,
                  const SubgraphResponse& response);

/// Pulls the c=1 image back through the inverse of the c=0 map.
Witness extract(const Statement& statement, const SubgraphResponse& response0,
                const SubgraphResponse& response1);

std::pair<Graph, SubgraphResponse> simulate(const Statement& statement, std::uint32_t slack,
                                            Challenge c, Rng& rng);

class Scheme final : public SchemeContract {
public:
    /// slack: how many camouflage vertices each commitment adds. Omitted
    /// means |lambda1|, i.e. a host twice the size of lambda1.
    explicit Scheme(Statement statement, std::optional<std::uint32_t> slack = std::nullopt);
    explicit Scheme(KeyPair keypair, std::optional<std::uint32_t> slack = std::nullopt);

    SchemeId id() const override { return SchemeId::SubgraphIso; }
    Bytes statement_bytes() const override;
    bool has_witness() const override { return witness_.has_value(); }
    bool witness_valid() const override;
    Bytes witness_bytes() const override;
    std::pair<Bytes, Bytes> commit(Rng& rng) const override;
    Bytes respond(const Bytes& ephemeral, Challenge c) const override;
    bool verify_round(const Bytes& commitment, Challenge c, const Bytes& response) const override;
    Bytes extract(const Bytes& commitment, const Bytes& response0,
                  const Bytes& response1) const override;
    std::pair<Bytes, Bytes> simulate(Challenge c, Rng& rng) const override;

    const Statement& statement() const { return statement_; }
    std::uint32_t slack() const { return slack_; }

private:
    Statement statement_;
    std::optional<Witness> witness_;
    std::uint32_t slack_;
};

}  // namespace zka::subgraph_iso
