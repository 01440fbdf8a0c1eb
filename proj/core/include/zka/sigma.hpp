#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "zka/bytes.hpp"
#include "zka/errors.hpp"
#include "zka/rng.hpp"

namespace zka {

enum class SchemeId : std::uint8_t {
    GraphIso = 1,
    SubgraphIso = 2,
    Coloring = 3,
    ModExp = 4,
};

const char* to_string(SchemeId id);
SchemeId scheme_from_string(const std::string& name);

/// Verifier's random bit.
struct Challenge {
    std::uint8_t bit = 0;

    bool operator==(const Challenge&) const = default;
};

/// One commitment/challenge/response triple.
struct RoundRecord {
    Bytes commitment;
    Challenge challenge;
    Bytes response;
};

struct Transcript {
    Bytes statement;
    std::vector<RoundRecord> rounds;
    bool accepted = false;
};

/// A concrete scheme seen through the engine's eyes. Commitments, responses,
/// ephemerals, and witnesses are opaque byte values here; only the scheme
/// module behind the contract interprets them. A contract built from a key
/// pair can play the prover; one built from a statement alone can only
/// verify, extract, and simulate.
class SchemeContract {
public:
    virtual ~SchemeContract() = default;

    virtual SchemeId id() const = 0;
    virtual Bytes statement_bytes() const = 0;

    virtual bool has_witness() const = 0;
    /// True when the held witness verifies against the statement.
    virtual bool witness_valid() const = 0;
    virtual Bytes witness_bytes() const = 0;

    /// Draws fresh ephemeral randomness; returns (commitment, ephemeral).
    virtual std::pair<Bytes, Bytes> commit(Rng& rng) const = 0;
    virtual Bytes respond(const Bytes& ephemeral, Challenge c) const = 0;

    /// Never throws on malformed commitment/response bytes; they verify as false.
    virtual bool verify_round(const Bytes& commitment, Challenge c,
                              const Bytes& response) const = 0;

    /// Recovers a witness from two accepting responses to the same commitment.
    /// Callers are expected to have checked both rounds; see extract_witness.
    virtual Bytes extract(const Bytes& commitment, const Bytes& response0,
                          const Bytes& response1) const = 0;

    /// Without the witness, fabricates a (commitment, response) pair that
    /// passes verify_round for the chosen challenge.
    virtual std::pair<Bytes, Bytes> simulate(Challenge c, Rng& rng) const = 0;
};

/// Where a verifier's challenge bits come from. Tests inject fixed sequences
/// to force both challenge values; live sessions draw from an Rng.
class ChallengeSource {
public:
    virtual ~ChallengeSource() = default;
    virtual Challenge next() = 0;
};

class RandomChallenges final : public ChallengeSource {
public:
    explicit RandomChallenges(Rng& rng) : rng_(rng) {}
    Challenge next() override { return Challenge{static_cast<std::uint8_t>(rng_.bit())}; }

private:
    Rng& rng_;
};

class FixedChallenges final : public ChallengeSource {
public:
    explicit FixedChallenges(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        if (bits_.empty()) throw BadParameters("FixedChallenges: empty sequence");
    }
    Challenge next() override {
        Challenge c{bits_[pos_ % bits_.size()]};
        ++pos_;
        return c;
    }

private:
    std::vector<std::uint8_t> bits_;
    std::size_t pos_ = 0;
};

/// Prover half of one authentication session: commit, then answer, per round.
/// Calls out of order throw ProtocolViolation.
class ProverSession {
public:
    ProverSession(const SchemeContract& scheme, std::uint32_t rounds);

    Bytes begin_round(Rng& rng);
    Bytes answer(Challenge c);

    std::uint32_t rounds() const { return rounds_; }
    std::uint32_t completed() const { return completed_; }
    bool finished() const { return completed_ == rounds_; }

private:
    const SchemeContract& scheme_;
    std::uint32_t rounds_;
    std::uint32_t completed_ = 0;
    bool awaiting_challenge_ = false;
    Bytes ephemeral_;
};

/// Verifier half. The challenge for round i depends only on the challenge
/// source, never on commitment content: the bit is drawn after the commitment
/// arrives but from an independent stream.
class VerifierSession {
public:
    VerifierSession(const SchemeContract& scheme, std::uint32_t rounds);

    void on_commitment(Bytes commitment);
    Challenge issue_challenge(ChallengeSource& challenges);
    bool on_response(const Bytes& response);

    std::uint32_t completed() const { return completed_; }
    bool finished() const { return completed_ == rounds_; }
    /// Accept verdict; only meaningful once finished.
    bool verdict() const;

private:
    enum class Expect { Commitment, Challenge, Response };

    const SchemeContract& scheme_;
    std::uint32_t rounds_;
    std::uint32_t completed_ = 0;
    bool all_passed_ = true;
    Expect expect_ = Expect::Commitment;
    Bytes commitment_;
    Challenge challenge_;
};

/// Runs a complete honest session in process and verifies every round.
Transcript run_session(const SchemeContract& scheme, std::uint32_t rounds, Rng& prover_rng,
                       ChallengeSource& challenges);
Transcript run_session(const SchemeContract& scheme, std::uint32_t rounds, Rng& prover_rng,
                       Rng& verifier_rng);

/// True iff every round verifies. Shape violations (no rounds, a challenge
/// byte outside {0,1}, a foreign statement) throw MalformedTranscript instead
/// of counting as reject.
bool verify_transcript(const SchemeContract& scheme, const Transcript& transcript);

/// The extractor behind the forgery propositions: two accepting responses to
/// the two challenges on one commitment yield a witness.
Bytes extract_witness(const SchemeContract& scheme, const Bytes& commitment,
                      const Bytes& response0, const Bytes& response1);

/// Honest-verifier zero-knowledge simulator, one round for a chosen challenge.
RoundRecord simulate_transcript(const SchemeContract& scheme, Challenge challenge, Rng& rng);

/// Default number of rounds: forgery probability 2^-32.
inline constexpr std::uint32_t kDefaultRounds = 32;

}  // namespace zka
