#include "zka/scheme_graph_iso.hpp"

namespace zka::graph_iso {

Bytes Statement::serialize() const {
    Bytes out = gamma.serialize();
    Bytes second = gamma1.serialize();
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
    s.gamma1 = Graph::deserialize(data.subspan(first));
    if (s.gamma.size() != s.gamma1.size())
        throw MalformedValue("statement graphs have different sizes");
    return s;
}

bool witness_valid(const Statement& statement, const Permutation& phi) {
    return phi.size() == statement.gamma.size() &&
           apply_permutation(statement.gamma, phi) == statement.gamma1;
}

KeyPair keygen(std::uint32_t n, double edge_probability, Rng& rng) {
    if (n < 1) throw BadParameters("keygen: n must be positive");
    KeyPair kp;
    kp.statement.gamma = Graph::random(n, edge_probability, rng);
    kp.phi = random_permutation(n, rng);
    kp.statement.gamma1 = apply_permutation(kp.statement.gamma, kp.phi);
    return kp;
}

Graph commitment_for(const KeyPair& keypair, const Permutation& psi) {
    return apply_permutation(keypair.statement.gamma1, psi);
}

std::pair<Graph, Permutation> commit(const KeyPair& keypair, Rng& rng) {
    Permutation psi = random_permutation(keypair.statement.gamma1.size(), rng);
    return {commitment_for(keypair, psi), std::move(psi)};
}

Permutation respond(const KeyPair& keypair, const Permutation& psi, Challenge c) {
    switch (c.bit) {
        case 0: return psi;
        case 1: return compose(psi, keypair.phi);
        default: throw UnsupportedChallenge("challenge bit must be 0 or 1");
    }
}

bool verify_round(const Statement& statement, const Graph& commitment, Challenge c,
                  const Permutation& response) {
    if (commitment.size() != statement.gamma.size()) return false;
    if (response.size() != statement.gamma.size()) return false;
    const Graph& base = (c.bit == 0) ? statement.gamma1 : statement.gamma;
    return apply_permutation(base, response) == commitment;
}

Permutation extract(const Statement&, const Permutation& response0, const Permutation& response1) {
    // response0 = psi, response1 = psi*phi, so phi = psi^-1 (psi*phi)
    return compose(invert(response0), response1);
}

std::pair<Graph, Permutation> simulate(const Statement& statement, Challenge c, Rng& rng) {
    const Graph& base = (c.bit == 0) ? statement.gamma1 : statement.gamma;
    Permutation rho = random_permutation(base.size(), rng);
    return {apply_permutation(base, rho), std::move(rho)};
}

Scheme::Scheme(Statement statement) : statement_(std::move(statement)) {}

Scheme::Scheme(KeyPair keypair)
    : statement_(std::move(keypair.statement)), witness_(std::move(keypair.phi)) {}

Bytes Scheme::statement_bytes() const { return statement_.serialize(); }

bool Scheme::witness_valid() const {
    return witness_ && graph_iso::witness_valid(statement_, *witness_);
}

Bytes Scheme::witness_bytes() const {
    if (!witness_) throw InvalidKeyPair("no witness held");
    return witness_->serialize();
}

std::pair<Bytes, Bytes> Scheme::commit(Rng& rng) const {
    if (!witness_) throw InvalidKeyPair("no witness held");
    KeyPair kp{statement_, *witness_};
    auto [commitment, psi] = graph_iso::commit(kp, rng);
    return {commitment.serialize(), psi.serialize()};
}

Bytes Scheme::respond(const Bytes& ephemeral, Challenge c) const {
    if (!witness_) throw InvalidKeyPair("no witness held");
    KeyPair kp{statement_, *witness_};
    return graph_iso::respond(kp, Permutation::deserialize(ephemeral), c).serialize();
}

bool Scheme::verify_round(const Bytes& commitment, Challenge c, const Bytes& response) const {
    if (c.bit > 1) return false;
    try {
        return graph_iso::verify_round(statement_, Graph::deserialize(commitment), c,
                                       Permutation::deserialize(response));
    } catch (const Error&) {
        return false;
    }
}

Bytes Scheme::extract(const Bytes&, const Bytes& response0, const Bytes& response1) const {
    return graph_iso::extract(statement_, Permutation::deserialize(response0),
                              Permutation::deserialize(response1))
        .serialize();
}

std::pair<Bytes, Bytes> Scheme::simulate(Challenge c, Rng& rng) const {
    if (c.bit > 1) throw UnsupportedChallenge("challenge bit must be 0 or 1");
    auto [commitment, response] = graph_iso::simulate(statement_, c, rng);
    return {commitment.serialize(), response.serialize()};
}

}  // namespace zka::graph_iso
