#pragma once

#include <optional>
#include <variant>

#include "zka/graph.hpp"
#include "zka/sigma.hpp"

namespace zka::coloring {

/// Statement: a graph and the public color count. Witness: a proper coloring.
struct Statement {
    Graph gamma;
    std::uint16_t k = 0;

    bool operator==(const Statement&) const = default;

    Bytes serialize() const;
    static Statement deserialize(ByteView data);
};

struct KeyPair {
    Statement statement;
    Coloring witness;
};

/// c=0 opens the relabeling, c=1 opens a coloring of the committed copy.
using Response = std::variant<Permutation, Coloring>;

bool witness_valid(const Statement& statement, const Coloring& witness);

KeyPair keygen(std::uint32_t n, std::uint16_t k, Rng& rng);

std::pair<Graph, Permutation> commit(const KeyPair& keypair, Rng& rng);
Graph commitment_for(const KeyPair& keypair, const Permutation& psi);

Response respond(const KeyPair& keypair, const Permutation& psi, Challenge c);

bool verify_round(const Statement& statement, const Graph& commitment, Challenge c,
                  const Response& response);

/// Pulls the revealed coloring of the commitment back through the relabeling.
Coloring extract(const Statement& statement, const Permutation& response0,
                 const Coloring& response1);

std::pair<Graph, Response> simulate(const Statement& statement, Challenge c, Rng& rng);

class Scheme final : public SchemeContract {
public:
    explicit Scheme(Statement statement);
    explicit Scheme(KeyPair keypair);

    SchemeId id() const override { return SchemeId::Coloring; }
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
    std::optional<Coloring> witness_;
};

}  // namespace zka::coloring
