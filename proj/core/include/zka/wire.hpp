#pragma once

#include <condition_variable>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>

#include "zka/bytes.hpp"
#include "zka/errors.hpp"
#include "zka/sigma.hpp"

namespace zka {

enum class Tag : std::uint8_t {
    Hello = 0x01,
    PublicKey = 0x02,
    Commitment = 0x03,
    Challenge = 0x04,
    Response = 0x05,
    Verdict = 0x06,
};

const char* to_string(Tag tag);

struct Message {
    Tag tag = Tag::Hello;
    Bytes payload;

    bool operator==(const Message&) const = default;
};

/// [1-byte tag][4-byte big-endian payload length][payload]. Normative and
/// bit-exact; every scheme's values travel inside these frames.
Bytes encode_message(const Message& m);

/// Streaming inverse of encode_message. Returns nothing when `data` holds only
/// a frame prefix (read more and retry); `consumed` is set only on success.
/// Malformed frames throw UnknownTag / InvalidChallengeByte / WireError.
std::optional<Message> decode_message(ByteView data, std::size_t& consumed);

/// Reliable ordered duplex byte stream; the one interface both transports
/// implement. read_exact blocks for exactly n bytes.
class ByteStream {
public:
    virtual ~ByteStream() = default;

    virtual void read_exact(std::uint8_t* dst, std::size_t n) = 0;
    virtual void write_all(const std::uint8_t* src, std::size_t n) = 0;
    virtual void close() = 0;
};

/// Frames larger than this are refused on read before allocation; the codec
/// itself accepts anything below 2^32.
inline constexpr std::size_t kMaxFramePayload = std::size_t{1} << 28;

void write_message(ByteStream& stream, const Message& m);
Message read_message(ByteStream& stream);
/// Throws ProtocolViolation unless the next frame carries `expected`.
Message expect_message(ByteStream& stream, Tag expected);

struct SessionConfig {
    SchemeId scheme = SchemeId::GraphIso;
    std::uint32_t rounds = kDefaultRounds;
    std::uint32_t timeout_ms = 5000;
};

/// Builds a verify-only contract from a statement received off the wire.
using ContractFactory =
    std::function<std::unique_ptr<SchemeContract>(SchemeId, ByteView statement)>;

/// Drives a full authentication session as the prover: Hello, PublicKey, then
/// per round Commitment -> Challenge -> Response, then reads the Verdict.
/// Returns true iff the verifier accepted.
bool prover_endpoint(ByteStream& stream, const SchemeContract& scheme, const SessionConfig& config,
                     Rng& rng);

/// Verifier side. With `pinned_statement` the presented public key must match
/// byte-for-byte (StatementMismatch otherwise); without it the statement is
/// trusted on first use. Each challenge bit is drawn only after that round's
/// commitment has fully arrived. Sends Verdict(accept) iff every round passed.
bool verifier_endpoint(ByteStream& stream, const ContractFactory& factory,
                       const std::optional<Bytes>& pinned_statement, const SessionConfig& config,
                       Rng& rng);

/// In-memory duplex pipe: two ByteStream endpoints over a pair of byte queues.
/// Endpoints are thread-safe against each other; close() wakes blocked reads.
class LoopbackPair {
public:
    LoopbackPair();
    explicit LoopbackPair(std::uint32_t timeout_ms);
    ~LoopbackPair();

    ByteStream& a();
    ByteStream& b();

private:
    struct Pipe {
        std::mutex mutex;
        std::condition_variable ready;
        std::deque<std::uint8_t> data;
        bool closed = false;
    };
    class Endpoint;

    std::shared_ptr<Pipe> ab_, ba_;
    std::unique_ptr<Endpoint> a_, b_;
};

/// Wraps a stream and records the raw bytes moving each way. Read taps let
/// tests assert what a passive observer of the channel learns.
class TapStream final : public ByteStream {
public:
    explicit TapStream(ByteStream& inner) : inner_(inner) {}

    void read_exact(std::uint8_t* dst, std::size_t n) override;
    void write_all(const std::uint8_t* src, std::size_t n) override;
    void close() override { inner_.close(); }

    const Bytes& bytes_read() const { return read_; }
    const Bytes& bytes_written() const { return written_; }

private:
    ByteStream& inner_;
    Bytes read_;
    Bytes written_;
};

}  // namespace zka
