#include "zka/scheme_coloring.hpp"

namespace zka::coloring {

Bytes Statement::serialize() const {
    Bytes out = gamma.serialize();
    put_u16_be(out, k);
    return out;
}

Statement Statement::deserialize(ByteView data) {
    if (data.size() < 6) throw MalformedValue("statement too short");
    Statement s;
    s.gamma = Graph::deserialize(data.subspan(0, data.size() - 2));
    s.k = get_u16_be(data.data() + data.size() - 2);
    if (s.k < 1) throw MalformedValue("statement color count must be positive");
    return s;
}

bool witness_valid(const Statement& statement, const Coloring& witness) {
    if (witness.k != statement.k) return false;
    if (witness.colors.size() != statement.gamma.size()) return false;
    return is_valid_coloring(statement.gamma, witness);
}

KeyPair keygen(std::uint32_t n, std::uint16_t k, Rng& rng) {
    auto [gamma, witness] = generate_k_colorable_graph(n, k, rng);
    KeyPair kp;
    kp.statement.gamma = std::move(gamma);
    kp.statement.k = k;
    kp.witness = std::move(witness);
    return kp;
}

Graph commitment_for(const KeyPair& keypair, const Permutation& psi) {
    return apply_permutation(keypair.statement.gamma, psi);
}

std::pair<Graph, Permutation> commit(const KeyPair& keypair, Rng& rng) {
    Permutation psi = random_permutation(keypair.statement.gamma.size(), rng);
    return {commitment_for(keypair, psi), std::move(psi)};
}

Response respond(const KeyPair& keypair, const Permutation& psi, Challenge c) {
    switch (c.bit) {
        case 0: return psi;
        case 1:
            // color identities are renamed per commitment so that repeated
            // c=1 rounds do not correlate across sessions
            return canonical_colors(push_forward(keypair.witness, psi));
        default: throw UnsupportedChallenge("challenge bit must be 0 or 1");
    }
}

bool verify_round(const Statement& statement, const Graph& commitment, Challenge c,
                  const Response& response) {
    if (commitment.size() != statement.gamma.size()) return false;
    if (c.bit == 0) {
        const auto* psi = std::get_if<Permutation>(&response);
        if (psi == nullptr || psi->size() != statement.gamma.size()) return false;
        return apply_permutation(statement.gamma, *psi) == commitment;
    }
    const auto* col = std::get_if<Coloring>(&response);
    if (col == nullptr || col->k != statement.k) return false;
    if (col->colors.size() != commitment.size()) return false;
    return is_valid_coloring(commitment, *col);
}

Coloring extract(const Statement& statement, const Permutation& response0,
                 const Coloring& response1) {
    // chi(v) = chi1(psi(v)) is a proper coloring of gamma because psi
    // carries gamma's edges onto the committed copy's edges
    Coloring witness;
    witness.k = statement.k;
    witness.colors.resize(statement.gamma.size());
    for (std::uint32_t v = 0; v < statement.gamma.size(); ++v)
        witness.colors[v] = response1.colors[response0(v)];
    return witness;
}

std::pair<Graph, Response> simulate(const Statement& statement, Challenge c, Rng& rng) {
    if (c.bit == 0) {
        Permutation rho = random_permutation(statement.gamma.size(), rng);
        return {apply_permutation(statement.gamma, rho), Response(std::move(rho))};
    }
    // without the witness, commit to a fresh graph the simulator can color
    auto [fresh, col] = generate_k_colorable_graph(statement.gamma.size(), statement.k, rng);
    return {std::move(fresh), Response(canonical_colors(col))};
}

Scheme::Scheme(Statement statement) : statement_(std::move(statement)) {}

Scheme::Scheme(KeyPair keypair)
    : statement_(std::move(keypair.statement)), witness_(std::move(keypair.witness)) {}

Bytes Scheme::statement_bytes() const { return statement_.serialize(); }

bool Scheme::witness_valid() const {
    return witness_ && coloring::witness_valid(statement_, *witness_);
}

Bytes Scheme::witness_bytes() const {
    if (!witness_) throw InvalidKeyPair("no witness held");
    return witness_->serialize();
}

std::pair<Bytes, Bytes> Scheme::commit(Rng& rng) const {
    if (!witness_) throw InvalidKeyPair("no witness held");
    KeyPair kp{statement_, *witness_};
    auto [commitment, psi] = coloring::commit(kp, rng);
    return {commitment.serialize(), psi.serialize()};
}

Bytes Scheme::respond(const Bytes& ephemeral, Challenge c) const {
    if (!witness_) throw InvalidKeyPair("no witness held");
    KeyPair kp{statement_, *witness_};
    Response r = coloring::respond(kp, Permutation::deserialize(ephemeral), c);
    if (const auto* psi = std::get_if<Permutation>(&r)) return psi->serialize();
    return std::get<Coloring>(r).serialize();
}

bool Scheme::verify_round(const Bytes& commitment, Challenge c, const Bytes& response) const {
    if (c.bit > 1) return false;
    try {
        Graph committed = Graph::deserialize(commitment);
        Response r = (c.bit == 0) ? Response(Permutation::deserialize(response))
                                  : Response(Coloring::deserialize(response, statement_.k));
        return coloring::verify_round(statement_, committed, c, r);
    } catch (const Error&) {
        return false;
    }
}

Bytes Scheme::extract(const Bytes&, const Bytes& response0, const Bytes& response1) const {
    return coloring::extract(statement_, Permutation::deserialize(response0),
                             Coloring::deserialize(response1, statement_.k))
        .serialize();
}

std::pair<Bytes, Bytes> Scheme::simulate(Challenge c, Rng& rng) const {
    if (c.bit > 1) throw UnsupportedChallenge("challenge bit must be 0 or 1");
    auto [commitment, response] = coloring::simulate(statement_, c, rng);
    Bytes response_bytes;
    if (const auto* psi = std::get_if<Permutation>(&response))
        response_bytes = psi->serialize();
    else
        response_bytes = std::get<Coloring>(response).serialize();
    return {commitment.serialize(), std::move(response_bytes)};
}

}  // namespace zka::coloring
