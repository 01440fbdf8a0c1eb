#pragma once

#include <optional>

#include "zka/modmath.hpp"
#include "zka/sigma.hpp"

namespace zka::modexp {

/// Statement: prime modulus p, base x, and public value u = x^s mod p.
/// Witness: the exponent s, a unit mod p-1, so forging is discrete log.
struct Statement {
    BigInt p;
    BigInt x;
    BigInt u;

    bool operator==(const Statement&) const = default;

    Bytes serialize() const;
    static Statement deserialize(ByteView data);
};

struct KeyPair {
    Statement statement;
    BigInt s;
};

bool witness_valid(const Statement& statement, const BigInt& s);

KeyPair keygen(const BigInt& p, Rng& rng);

/// Commitment v = u^t mod p for ephemeral t, itself a unit mod p-1.
std::pair<BigInt, BigInt> commit(const KeyPair& keypair, Rng& rng);
BigInt commitment_for(const KeyPair& keypair, const BigInt& t);

BigInt respond(const KeyPair& keypair, const BigInt& t, Challenge c);

/// The response must land in [1, p-2] and be a unit mod p-1 -- exponents
/// outside the acting set are rejected even when the power equation would
/// hold. c=0 checks commitment == u^r, c=1 checks commitment == x^r.
bool verify_round(const Statement& statement, const BigInt& commitment, Challenge c,
                  const BigInt& response);

/// s = r1 * r0^-1 mod p-1.
BigInt extract(const Statement& statement, const BigInt& response0, const BigInt& response1);

std::pair<BigInt, BigInt> simulate(const Statement& statement, Challenge c, Rng& rng);

/// Byte-level adapter for the engine. All values cross as minimal big-endian
/// magnitudes; padded encodings verify as false.
class Scheme final : public SchemeContract {
public:
    explicit Scheme(Statement statement);
    explicit Scheme(KeyPair keypair);

    SchemeId id() const override { return SchemeId::ModExp; }
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
    std::optional<BigInt> witness_;
};

}  // namespace zka::modexp
