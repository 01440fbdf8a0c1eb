#include "zka/sigma.hpp"

namespace zka {

const char* to_string(SchemeId id) {
    switch (id) {
        case SchemeId::GraphIso: return "graph-iso";
        case SchemeId::SubgraphIso: return "subgraph-iso";
        case SchemeId::Coloring: return "coloring";
        case SchemeId::ModExp: return "modexp";
    }
    throw BadParameters("unknown scheme id");
}

SchemeId scheme_from_string(const std::string& name) {
    if (name == "graph-iso") return SchemeId::GraphIso;
    if (name == "subgraph-iso") return SchemeId::SubgraphIso;
    if (name == "coloring") return SchemeId::Coloring;
    if (name == "modexp") return SchemeId::ModExp;
    throw BadParameters("unknown scheme '" + name + "'");
}

ProverSession::ProverSession(const SchemeContract& scheme, std::uint32_t rounds)
    : scheme_(scheme), rounds_(rounds) {
    if (rounds < 1) throw BadParameters("a session needs at least one round");
    if (!scheme.has_witness()) throw InvalidKeyPair("prover needs a witness");
    if (!scheme.witness_valid()) throw InvalidKeyPair("witness does not verify against the statement");
}

Bytes ProverSession::begin_round(Rng& rng) {
    if (finished()) throw ProtocolViolation("session already finished");
    if (awaiting_challenge_) throw ProtocolViolation("commitment already sent this round");
    auto [commitment, ephemeral] = scheme_.commit(rng);
    ephemeral_ = std::move(ephemeral);
    awaiting_challenge_ = true;
    return commitment;
}

Bytes ProverSession::answer(Challenge c) {
    if (!awaiting_challenge_) throw ProtocolViolation("challenge arrived before a commitment");
    if (c.bit > 1) throw UnsupportedChallenge("challenge bit must be 0 or 1");
    Bytes response = scheme_.respond(ephemeral_, c);
    ephemeral_.clear();
    awaiting_challenge_ = false;
    ++completed_;
    return response;
}

VerifierSession::VerifierSession(const SchemeContract& scheme, std::uint32_t rounds)
    : scheme_(scheme), rounds_(rounds) {
    if (rounds < 1) throw BadParameters("a session needs at least one round");
}

void VerifierSession::on_commitment(Bytes commitment) {
    if (finished()) throw ProtocolViolation("session already finished");
    if (expect_ != Expect::Commitment) throw ProtocolViolation("commitment out of order");
    commitment_ = std::move(commitment);
    expect_ = Expect::Challenge;
}

Challenge VerifierSession::issue_challenge(ChallengeSource& challenges) {
    if (expect_ != Expect::Challenge) throw ProtocolViolation("challenge out of order");
    challenge_ = challenges.next();
    expect_ = Expect::Response;
    return challenge_;
}

bool VerifierSession::on_response(const Bytes& response) {
    if (expect_ != Expect::Response) throw ProtocolViolation("response out of order");
    bool ok = scheme_.verify_round(commitment_, challenge_, response);
    all_passed_ = all_passed_ && ok;
    commitment_.clear();
    expect_ = Expect::Commitment;
    ++completed_;
    return ok;
}

bool VerifierSession::verdict() const {
    if (!finished()) throw ProtocolViolation("verdict requested before the last round");
    return all_passed_;
}

Transcript run_session(const SchemeContract& scheme, std::uint32_t rounds, Rng& prover_rng,
                       ChallengeSource& challenges) {
    ProverSession prover(scheme, rounds);
    Transcript transcript;
    transcript.statement = scheme.statement_bytes();
    transcript.rounds.reserve(rounds);
    for (std::uint32_t i = 0; i < rounds; ++i) {
        RoundRecord record;
        record.commitment = prover.begin_round(prover_rng);
        record.challenge = challenges.next();
        record.response = prover.answer(record.challenge);
        transcript.rounds.push_back(std::move(record));
    }
    transcript.accepted = verify_transcript(scheme, transcript);
    return transcript;
}

Transcript run_session(const SchemeContract& scheme, std::uint32_t rounds, Rng& prover_rng,
                       Rng& verifier_rng) {
    RandomChallenges challenges(verifier_rng);
    return run_session(scheme, rounds, prover_rng, challenges);
}

bool verify_transcript(const SchemeContract& scheme, const Transcript& transcript) {
    if (transcript.rounds.empty())
        throw MalformedTranscript("a transcript with no rounds proves nothing");
    if (transcript.statement != scheme.statement_bytes())
        throw MalformedTranscript("transcript statement differs from the verifier's statement");
    for (const RoundRecord& record : transcript.rounds) {
        if (record.challenge.bit > 1)
            throw MalformedTranscript("challenge byte outside {0,1}");
        if (!scheme.verify_round(record.commitment, record.challenge, record.response))
            return false;
    }
    return true;
}

Bytes extract_witness(const SchemeContract& scheme, const Bytes& commitment,
                      const Bytes& response0, const Bytes& response1) {
    bool ok0 = scheme.verify_round(commitment, Challenge{0}, response0);
    bool ok1 = scheme.verify_round(commitment, Challenge{1}, response1);
    if (!ok0 || !ok1)
        throw NotBothAccepting(std::string("extraction needs two accepting rounds; c=0 ") +
                               (ok0 ? "accepts" : "rejects") + ", c=1 " +
                               (ok1 ? "accepts" : "rejects"));
    return scheme.extract(commitment, response0, response1);
}

RoundRecord simulate_transcript(const SchemeContract& scheme, Challenge challenge, Rng& rng) {
    if (challenge.bit > 1) throw UnsupportedChallenge("challenge bit must be 0 or 1");
    auto [commitment, response] = scheme.simulate(challenge, rng);
    RoundRecord record;
    record.commitment = std::move(commitment);
    record.challenge = challenge;
    record.response = std::move(response);
    return record;
}

}  // namespace zka
