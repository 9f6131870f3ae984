#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubic/ct.hpp"
#include "cubic/keyio.hpp"
#include "cubic/watermark.hpp"

namespace cubic {

// ---- framing ----------------------------------------------------------
//
// magic "CT01" | kind (1 byte) | length (u32 big-endian) | payload
//
// CIPHERTEXT and ACK payloads are minimal big-endian integers; PUBKEY
// carries the public key file bytes; ERROR carries an ASCII reason.

enum class FrameKind : uint8_t {
    hello = 0x01,
    pubkey = 0x02,
    ciphertext = 0x03,
    ack = 0x04,
    error = 0x05,
};

const char* frame_kind_name(FrameKind kind) noexcept;

inline constexpr std::array<uint8_t, 4> kFrameMagic = {'C', 'T', '0', '1'};
inline constexpr size_t kFrameHeaderSize = 9;
inline constexpr uint32_t kMaxPayload = 1u << 20;

struct Frame {
    FrameKind kind;
    std::vector<uint8_t> payload;

    friend bool operator==(const Frame&, const Frame&) = default;
};

std::vector<uint8_t> frame_encode(FrameKind kind, std::span<const uint8_t> payload);
std::vector<uint8_t> frame_encode(const Frame& frame);
// Whole-buffer decode; rejects bad magic, unknown kinds, truncated or
// oversize input, and trailing bytes.
Frame frame_decode(std::span<const uint8_t> bytes);

// ---- byte streams ------------------------------------------------------

class ByteStream {
public:
    virtual ~ByteStream() = default;

    // Blocks until `size` bytes arrive. Returns false on a clean EOF before
    // the first byte; throws bad_frame("truncated") on EOF mid-read.
    virtual bool read_exact(uint8_t* data, size_t size) = 0;
    virtual void write_all(const uint8_t* data, size_t size) = 0;
    virtual void close() = 0;
};

using StreamPtr = std::unique_ptr<ByteStream>;

// In-process duplex channel for deterministic tests.
std::pair<StreamPtr, StreamPtr> memory_duplex();

class TcpListener {
public:
    // "host:port"; port 0 binds an ephemeral port (see port()).
    explicit TcpListener(const std::string& host_port);
    ~TcpListener();

    TcpListener(const TcpListener&) = delete;
    TcpListener& operator=(const TcpListener&) = delete;

    uint16_t port() const { return port_; }
    StreamPtr accept();
    void close();

private:
    int fd_ = -1;
    uint16_t port_ = 0;
};

StreamPtr tcp_connect(const std::string& host_port);

std::optional<Frame> read_frame(ByteStream& stream); // nullopt on clean EOF
void write_frame(ByteStream& stream, const Frame& frame);

// ---- transcripts -------------------------------------------------------

enum class Direction { sent, received };

struct TranscriptEntry {
    Direction dir;
    Frame frame;
    std::chrono::system_clock::time_point at; // informational only
};

struct Transcript {
    std::vector<TranscriptEntry> entries;

    void add(Direction dir, Frame frame);
    std::string to_text() const; // line-delimited records
};

// ---- sessions ----------------------------------------------------------

struct ReceiverOptions {
    bool echo_plaintext = true; // ACK carries the recovered m
    unsigned max_sessions = 1;  // for serve()
};

// One Bob session over an established stream: answers HELLO with the
// public key, decrypts (or unseals, when a watermark key is configured)
// each CIPHERTEXT, and replies ACK or ERROR. Transport and decryption
// errors end up in the transcript, never as an escaped exception.
Transcript run_receiver_session(const PrivateKey& priv, const PublicKey& pub,
                                const std::optional<WatermarkKey>& wkey,
                                ByteStream& stream,
                                const ReceiverOptions& options = {});

// Accepts and serves max_sessions connections (each on its own thread)
// before returning the concatenated transcripts.
Transcript serve(const PrivateKey& priv, const PublicKey& pub,
                 const std::optional<WatermarkKey>& wkey, TcpListener& listener,
                 const ReceiverOptions& options = {});

struct SendOutcome {
    Nat message;
    bool acked = false;
    std::optional<Nat> echoed; // plaintext echoed by the receiver
    std::string error;         // ERROR frame reason, if any
};

struct SendReport {
    Transcript transcript;
    std::vector<SendOutcome> outcomes;
    std::optional<PublicKey> received_pub; // parsed from the PUBKEY frame
};

// Alice: HELLO, receive PUBKEY, then one CIPHERTEXT per message. Seals
// when a watermark key is supplied, plain-encrypts otherwise. When `pub`
// is absent the key received on the wire is used.
SendReport run_sender(const std::optional<PublicKey>& pub,
                      const std::vector<Nat>& messages,
                      const std::optional<WatermarkKey>& wkey, ByteStream& stream);

// ---- man-in-the-middle proxy -------------------------------------------

enum class TamperPolicy {
    passthrough,
    flip_index,      // T += s mod M: keeps the ciphertext residue, shifts the rank
    randomize_t,     // replace T with a uniform draw != T
    bitflip_payload, // flip one random payload bit
};

const char* policy_name(TamperPolicy policy) noexcept;
std::optional<TamperPolicy> policy_from_name(std::string_view name) noexcept;

struct MitmChange {
    Nat original;
    Nat modified;
};

struct MitmReport {
    Transcript transcript; // client-side view: received originals, sent rewrites
    std::vector<MitmChange> changes;
};

// Relays one client<->upstream session, applying the policy to CIPHERTEXT
// payloads only. The moduli needed by flip_index / randomize_t are learned
// from the PUBKEY frame passing through.
MitmReport mitm_proxy_session(ByteStream& client, ByteStream& upstream,
                              TamperPolicy policy, RandomSource& rng);

MitmReport mitm_proxy(TcpListener& listener, const std::string& forward_host_port,
                      TamperPolicy policy, RandomSource& rng,
                      unsigned max_sessions = 1);

} // namespace cubic
