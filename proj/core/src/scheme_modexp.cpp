#include "zka/scheme_modexp.hpp"

namespace zka::modexp {

namespace {

void append_field(Bytes& out, const BigInt& value) {
    Bytes mag = bigint_to_bytes(value);
    if (mag.size() > 0xffffffffu) throw TooLarge("field magnitude exceeds length prefix");
    put_u32_be(out, static_cast<std::uint32_t>(mag.size()));
    out.insert(out.end(), mag.begin(), mag.end());
}

BigInt read_field(ByteView data, std::size_t& pos) {
    if (data.size() - pos < 4) throw MalformedValue("statement field truncated");
    std::uint32_t len = get_u32_be(data.data() + pos);
    pos += 4;
    if (data.size() - pos < len) throw MalformedValue("statement field truncated");
    ByteView mag = data.subspan(pos, len);
    pos += len;
    if (!mag.empty() && mag.front() == 0) throw MalformedValue("statement field not minimal");
    return bigint_from_bytes(mag);
}

/// Minimal big-endian magnitude or nothing: a leading zero byte is rejected so
/// every value has exactly one accepted encoding.
std::optional<BigInt> parse_canonical(ByteView data) {
    if (!data.empty() && data.front() == 0) return std::nullopt;
    return bigint_from_bytes(data);
}

}  // namespace

Bytes Statement::serialize() const {
    Bytes out;
    append_field(out, p);
    append_field(out, x);
    append_field(out, u);
    return out;
}

Statement Statement::deserialize(ByteView data) {
    std::size_t pos = 0;
    Statement s;
    s.p = read_field(data, pos);
    s.x = read_field(data, pos);
    s.u = read_field(data, pos);
    if (pos != data.size()) throw MalformedValue("trailing bytes after statement");
    if (s.p < 3) throw MalformedValue("modulus must be at least 3");
    if (s.x < 1 || s.x >= s.p) throw MalformedValue("base outside [1, p-1]");
    if (s.u < 1 || s.u >= s.p) throw MalformedValue("public value outside [1, p-1]");
    return s;
}

bool witness_valid(const Statement& statement, const BigInt& s) {
    if (s < 1 || s > statement.p - 2) return false;
    if (gcd(s, statement.p - 1) != 1) return false;
    return mod_pow(statement.x, s, statement.p) == statement.u;
}

KeyPair keygen(const BigInt& p, Rng& rng) {
    if (p < 3) throw BadModulus("keygen: modulus must be at least 3");
    if (!is_probable_prime(p)) throw NotPrime("keygen: modulus must be prime");
    KeyPair kp;
    kp.statement.p = p;
    kp.statement.x = random_below(p - 2, rng) + 2;  // uniform in [2, p-1]
    kp.s = random_unit(p - 1, rng);
    kp.statement.u = mod_pow(kp.statement.x, kp.s, p);
    return kp;
}

BigInt commitment_for(const KeyPair& keypair, const BigInt& t) {
    return mod_pow(keypair.statement.u, t, keypair.statement.p);
}

std::pair<BigInt, BigInt> commit(const KeyPair& keypair, Rng& rng) {
    BigInt t = random_unit(keypair.statement.p - 1, rng);
    return {commitment_for(keypair, t), std::move(t)};
}

BigInt respond(const KeyPair& keypair, const BigInt& t, Challenge c) {
    switch (c.bit) {
        case 0: return t;
        case 1: return (t * keypair.s) % (keypair.statement.p - 1);
        default: throw UnsupportedChallenge("challenge bit must be 0 or 1");
    }
}

bool verify_round(const Statement& statement, const BigInt& commitment, Challenge c,
                  const BigInt& response) {
    if (commitment < 1 || commitment >= statement.p) return false;
    if (response < 1 || response > statement.p - 2) return false;
    if (gcd(response, statement.p - 1) != 1) return false;
    const BigInt& base = (c.bit == 0) ? statement.u : statement.x;
    return mod_pow(base, response, statement.p) == commitment;
}

BigInt extract(const Statement& statement, const BigInt& response0, const BigInt& response1) {
    // response0 = t, response1 = t*s mod p-1, so s = response1 * t^-1
    auto inv = mod_inverse(response0, statement.p - 1);
    if (!inv) throw NonInvertibleResponse("c=0 response is not a unit mod p-1");
    return (response1 * *inv) % (statement.p - 1);
}

std::pair<BigInt, BigInt> simulate(const Statement& statement, Challenge c, Rng& rng) {
    // An honest c=1 response t*s is itself a uniform unit, so one recipe
    // covers both branches: pick the response first, derive the commitment.
    BigInt r = random_unit(statement.p - 1, rng);
    const BigInt& base = (c.bit == 0) ? statement.u : statement.x;
    return {mod_pow(base, r, statement.p), std::move(r)};
}

Scheme::Scheme(Statement statement) : statement_(std::move(statement)) {}

Scheme::Scheme(KeyPair keypair)
    : statement_(std::move(keypair.statement)), witness_(std::move(keypair.s)) {}

Bytes Scheme::statement_bytes() const { return statement_.serialize(); }

bool Scheme::witness_valid() const {
    return witness_ && modexp::witness_valid(statement_, *witness_);
}

Bytes Scheme::witness_bytes() const {
    if (!witness_) throw InvalidKeyPair("no witness held");
    return bigint_to_bytes(*witness_);
}

std::pair<Bytes, Bytes> Scheme::commit(Rng& rng) const {
    if (!witness_) throw InvalidKeyPair("no witness held");
    KeyPair kp{statement_, *witness_};
    auto [v, t] = modexp::commit(kp, rng);
    return {bigint_to_bytes(v), bigint_to_bytes(t)};
}

Bytes Scheme::respond(const Bytes& ephemeral, Challenge c) const {
    if (!witness_) throw InvalidKeyPair("no witness held");
    KeyPair kp{statement_, *witness_};
    return bigint_to_bytes(modexp::respond(kp, bigint_from_bytes(ephemeral), c));
}

bool Scheme::verify_round(const Bytes& commitment, Challenge c, const Bytes& response) const {
    if (c.bit > 1) return false;
    auto v = parse_canonical(commitment);
    auto r = parse_canonical(response);
    if (!v || !r) return false;
    return modexp::verify_round(statement_, *v, c, *r);
}

Bytes Scheme::extract(const Bytes&, const Bytes& response0, const Bytes& response1) const {
    return bigint_to_bytes(modexp::extract(statement_, bigint_from_bytes(response0),
                                           bigint_from_bytes(response1)));
}

std::pair<Bytes, Bytes> Scheme::simulate(Challenge c, Rng& rng) const {
    if (c.bit > 1) throw UnsupportedChallenge("challenge bit must be 0 or 1");
    auto [v, r] = modexp::simulate(statement_, c, rng);
    return {bigint_to_bytes(v), bigint_to_bytes(r)};
}

}  // namespace zka::modexp
