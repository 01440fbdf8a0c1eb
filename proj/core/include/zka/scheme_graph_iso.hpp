#pragma once

#include <memory>
#include <optional>

#include "zka/graph.hpp"
#include "zka/sigma.hpp"

namespace zka::graph_iso {

/// Statement: two isomorphic graphs. Witness: the isomorphism between them.
struct Statement {
    Graph gamma;
    Graph gamma1;

    bool operator==(const Statement&) const = default;

    Bytes serialize() const;
    static Statement deserialize(ByteView data);
};

struct KeyPair {
    Statement statement;
    Permutation phi;  // apply_permutation(gamma, phi) == gamma1
};

bool witness_valid(const Statement& statement, const Permutation& phi);

KeyPair keygen(std::uint32_t n, double edge_probability, Rng& rng);

/// Commitment is a fresh isomorphic copy of gamma1; the ephemeral is the
/// relabeling that produced it.
std::pair<Graph, Permutation> commit(const KeyPair& keypair, Rng& rng);
Graph commitment_for(const KeyPair& keypair, const Permutation& psi);

Permutation respond(const KeyPair& keypair, const Permutation& psi, Challenge c);

/// c=0 checks the response against gamma1, c=1 against gamma; graph equality
/// is exact adjacency-matrix equality.
bool verify_round(const Statement& statement, const Graph& commitment, Challenge c,
                  const Permutation& response);

/// psi^-1 composed with psi*phi recovers the witness.
Permutation extract(const Statement& statement, const Permutation& response0,
                    const Permutation& response1);

std::pair<Graph, Permutation> simulate(const Statement& statement, Challenge c, Rng& rng);

/// Byte-level adapter for the engine.
class Scheme final : public SchemeContract {
public:
    explicit Scheme(Statement statement);
    explicit Scheme(KeyPair keypair);

    SchemeId id() const override { return SchemeId::GraphIso; }
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

private:
    Statement statement_;
    std::optional<Permutation> witness_;
};

}  // namespace zka::graph_iso
