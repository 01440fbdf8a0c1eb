#include "zka/wire.hpp"

#include <chrono>
#include <string>

namespace zka {

const char* to_string(Tag tag) {
    switch (tag) {
        case Tag::Hello: return "Hello";
        case Tag::PublicKey: return "PublicKey";
        case Tag::Commitment: return "Commitment";
        case Tag::Challenge: return "Challenge";
        case Tag::Response: return "Response";
        case Tag::Verdict: return "Verdict";
    }
    return "?";
}

namespace {

constexpr std::size_t kHeaderSize = 5;

void validate_payload(const Message& m) {
    if (m.tag == Tag::Challenge) {
        if (m.payload.size() != 1 || m.payload[0] > 1) {
            throw InvalidChallengeByte("challenge payload must be one byte in {0,1}");
        }
    } else if (m.tag == Tag::Verdict) {
        if (m.payload.size() != 1 || m.payload[0] > 1) {
            throw WireError("verdict payload must be one byte in {0,1}");
        }
    }
}

bool known_tag(std::uint8_t b) {
    return b >= static_cast<std::uint8_t>(Tag::Hello) &&
           b <= static_cast<std::uint8_t>(Tag::Verdict);
}

}  // namespace

Bytes encode_message(const Message& m) {
    if (m.payload.size() > 0xffffffffull) {
        throw PayloadTooLarge("payload length does not fit the frame header");
    }
    validate_payload(m);
    Bytes out;
    out.reserve(kHeaderSize + m.payload.size());
    out.push_back(static_cast<std::uint8_t>(m.tag));
    put_u32_be(out, static_cast<std::uint32_t>(m.payload.size()));
    out.insert(out.end(), m.payload.begin(), m.payload.end());
    return out;
}

std::optional<Message> decode_message(ByteView data, std::size_t& consumed) {
    if (data.size() < kHeaderSize) return std::nullopt;
    if (!known_tag(data[0])) throw UnknownTag("unknown frame tag");
    std::uint32_t len = get_u32_be(data.data() + 1);
    if (data.size() - kHeaderSize < len) return std::nullopt;
    Message m;
    m.tag = static_cast<Tag>(data[0]);
    m.payload.assign(data.begin() + kHeaderSize, data.begin() + kHeaderSize + len);
    validate_payload(m);
    consumed = kHeaderSize + len;
    return m;
}

void write_message(ByteStream& stream, const Message& m) {
    Bytes frame = encode_message(m);
    stream.write_all(frame.data(), frame.size());
}

Message read_message(ByteStream& stream) {
    std::uint8_t header[kHeaderSize];
    stream.read_exact(header, kHeaderSize);
    if (!known_tag(header[0])) throw UnknownTag("unknown frame tag");
    std::uint32_t len = get_u32_be(header + 1);
    if (len > kMaxFramePayload) throw PayloadTooLarge("refusing oversized frame");
    Message m;
    m.tag = static_cast<Tag>(header[0]);
    m.payload.resize(len);
    if (len > 0) stream.read_exact(m.payload.data(), len);
    validate_payload(m);
    return m;
}

Message expect_message(ByteStream& stream, Tag expected) {
    Message m = read_message(stream);
    if (m.tag != expected) {
        throw ProtocolViolation(std::string("expected ") + to_string(expected) + ", got " +
                                to_string(m.tag));
    }
    return m;
}

namespace {

constexpr std::uint8_t kProtocolVersion = 1;

Bytes hello_payload(SchemeId scheme, std::uint32_t rounds) {
    Bytes p;
    p.push_back(kProtocolVersion);
    p.push_back(static_cast<std::uint8_t>(scheme));
    put_u32_be(p, rounds);
    return p;
}

}  // namespace

bool prover_endpoint(ByteStream& stream, const SchemeContract& scheme, const SessionConfig& config,
                     Rng& rng) {
    if (!scheme.has_witness() || !scheme.witness_valid()) {
        throw InvalidKeyPair("prover's witness does not prove the statement");
    }
    if (config.rounds < 1) throw BadParameters("session needs at least one round");
    write_message(stream, {Tag::Hello, hello_payload(scheme.id(), config.rounds)});
    write_message(stream, {Tag::PublicKey, scheme.statement_bytes()});
    ProverSession session(scheme, config.rounds);
    while (!session.finished()) {
        write_message(stream, {Tag::Commitment, session.begin_round(rng)});
        Message challenge = expect_message(stream, Tag::Challenge);
        write_message(stream, {Tag::Response, session.answer(Challenge{challenge.payload[0]})});
    }
    Message verdict = expect_message(stream, Tag::Verdict);
    return verdict.payload[0] == 1;
}

bool verifier_endpoint(ByteStream& stream, const ContractFactory& factory,
                       const std::optional<Bytes>& pinned_statement, const SessionConfig& config,
                       Rng& rng) {
    if (config.rounds < 1) throw BadParameters("session needs at least one round");
    Message hello = expect_message(stream, Tag::Hello);
    if (hello.payload.size() != 6) throw ProtocolViolation("malformed Hello payload");
    if (hello.payload[0] != kProtocolVersion) throw ProtocolViolation("unsupported protocol version");
    if (hello.payload[1] != static_cast<std::uint8_t>(config.scheme)) {
        throw ProtocolViolation("peer offered a different scheme");
    }
    // The round count is the verifier's security parameter; a peer asking for
    // fewer rounds is asking for a weaker check.
    if (get_u32_be(hello.payload.data() + 2) != config.rounds) {
        throw ProtocolViolation("peer offered a different round count");
    }

    Message pk = expect_message(stream, Tag::PublicKey);
    if (pinned_statement && pk.payload != *pinned_statement) {
        throw StatementMismatch("presented public key differs from the pinned statement");
    }
    std::unique_ptr<SchemeContract> contract = factory(config.scheme, pk.payload);

    VerifierSession session(*contract, config.rounds);
    RandomChallenges challenges(rng);
    while (!session.finished()) {
        Message commitment = expect_message(stream, Tag::Commitment);
        session.on_commitment(std::move(commitment.payload));
        Challenge c = session.issue_challenge(challenges);
        write_message(stream, {Tag::Challenge, Bytes{c.bit}});
        Message response = expect_message(stream, Tag::Response);
        session.on_response(response.payload);
    }
    bool accept = session.verdict();
    write_message(stream, {Tag::Verdict, Bytes{static_cast<std::uint8_t>(accept ? 1 : 0)}});
    return accept;
}

class LoopbackPair::Endpoint final : public ByteStream {
public:
    Endpoint(std::shared_ptr<Pipe> in, std::shared_ptr<Pipe> out, std::uint32_t timeout_ms)
        : in_(std::move(in)), out_(std::move(out)), timeout_ms_(timeout_ms) {}

    void read_exact(std::uint8_t* dst, std::size_t n) override {
        std::unique_lock lock(in_->mutex);
        for (std::size_t got = 0; got < n;) {
            if (!in_->data.empty()) {
                dst[got++] = in_->data.front();
                in_->data.pop_front();
                continue;
            }
            if (in_->closed) throw TransportClosed("loopback peer closed");
            if (in_->ready.wait_for(lock, std::chrono::milliseconds(timeout_ms_)) ==
                    std::cv_status::timeout &&
                in_->data.empty() && !in_->closed) {
                throw Timeout("loopback read timed out");
            }
        }
    }

    void write_all(const std::uint8_t* src, std::size_t n) override {
        std::lock_guard lock(out_->mutex);
        if (out_->closed) throw TransportClosed("loopback peer closed");
        out_->data.insert(out_->data.end(), src, src + n);
        out_->ready.notify_all();
    }

    void close() override {
        for (auto& pipe : {in_, out_}) {
            std::lock_guard lock(pipe->mutex);
            pipe->closed = true;
            pipe->ready.notify_all();
        }
    }

private:
    std::shared_ptr<Pipe> in_, out_;
    std::uint32_t timeout_ms_;
};

LoopbackPair::LoopbackPair() : LoopbackPair(10'000) {}

LoopbackPair::~LoopbackPair() = default;

ByteStream& LoopbackPair::a() { return *a_; }
ByteStream& LoopbackPair::b() { return *b_; }

LoopbackPair::LoopbackPair(std::uint32_t timeout_ms)
    : ab_(std::make_shared<Pipe>()), ba_(std::make_shared<Pipe>()),
      a_(std::make_unique<Endpoint>(ba_, ab_, timeout_ms)),
      b_(std::make_unique<Endpoint>(ab_, ba_, timeout_ms)) {}

void TapStream::read_exact(std::uint8_t* dst, std::size_t n) {
    inner_.read_exact(dst, n);
    read_.insert(read_.end(), dst, dst + n);
}

void TapStream::write_all(const std::uint8_t* src, std::size_t n) {
    inner_.write_all(src, n);
    written_.insert(written_.end(), src, src + n);
}

}  // namespace zka
