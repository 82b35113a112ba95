// Copyright (c) 2026 the sha1assp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

/// Reference SHA-1 (FIPS 180-4 / RFC 3174): bit-granular preprocessing,
/// per-block compression and digest assembly. This is the equation-shaped
/// serial implementation; the streaming hasher and the byte one-shot entry
/// points run on a faster kernel that is checked against it in the tests.
namespace sha1assp {

using word32 = std::uint32_t;

/// Circular left rotation of a 32-bit word by s bits, 0 <= s <= 31.
constexpr word32 leftrotate(word32 r, unsigned s) noexcept {
    return std::rotl(r, static_cast<int>(s));
}

/// 160-bit hash code as five 32-bit words.
struct Digest {
    word32 ha = 0;
    word32 hb = 0;
    word32 hc = 0;
    word32 hd = 0;
    word32 he = 0;

    bool operator==(const Digest&) const = default;

    /// Big-endian serialization, 20 bytes.
    std::array<std::uint8_t, 20> bytes() const;
    /// Lowercase 40-character hexadecimal form.
    std::string hex() const;
    /// Parses exactly 40 hex characters (either case). Empty on bad input.
    static std::optional<Digest> from_hex(std::string_view text);
};

/// One 512-bit block as sixteen 32-bit words, each word the big-endian
/// interpretation of its 32 message bits.
struct Block {
    std::array<word32, 16> words{};

    bool operator==(const Block&) const = default;

    static Block from_bytes(std::span<const std::uint8_t, 64> bytes);
};

/// A message of arbitrary bit length. Bits are stored big-endian within
/// bytes (bit 0 of the message is the most significant bit of byte 0);
/// unused low bits of the final byte are kept zero so equal messages
/// compare equal bytewise.
class BitMessage {
public:
    BitMessage() = default;

    static BitMessage from_bytes(std::span<const std::uint8_t> bytes);
    static BitMessage from_string(std::string_view text);
    /// Keeps the first `bit_len` bits of `data`; trailing bits of the final
    /// byte are masked off. Throws std::invalid_argument if `data` is too
    /// short to hold `bit_len` bits.
    static BitMessage from_bits(std::span<const std::uint8_t> data, std::uint64_t bit_len);

    std::uint64_t bit_len() const noexcept { return bit_len_; }
    /// ceil(bit_len/8) bytes backing the message.
    std::span<const std::uint8_t> data() const noexcept { return data_; }
    /// The k-th message bit, 0-indexed. Throws std::out_of_range.
    bool bit(std::uint64_t k) const;

    bool operator==(const BitMessage&) const = default;

private:
    std::vector<std::uint8_t> data_;
    std::uint64_t bit_len_ = 0;
};

/// A message after padding and length insertion, split into 512-bit blocks.
struct PaddedMessage {
    std::vector<Block> blocks;

    std::uint64_t block_count() const noexcept { return blocks.size(); }
    std::uint64_t total_bits() const noexcept { return blocks.size() * 512; }
};

/// Working variables A..E after round n-1; `n` is the next round to execute.
struct RoundState {
    word32 a = 0;
    word32 b = 0;
    word32 c = 0;
    word32 d = 0;
    word32 e = 0;
    unsigned n = 0;

    bool operator==(const RoundState&) const = default;
};

/// Number of padding bits appended to a message of `bit_count` bits:
/// one '1' bit plus zeros so that bit_count + result + 64 is a multiple
/// of 512. Always in [1, 512].
word32 padding_len(std::uint64_t bit_count) noexcept;

/// Appends the padding and the 64-bit big-endian length, then splits the
/// extended message into 512-bit blocks.
PaddedMessage preprocess(const BitMessage& message);

/// The standard initialization constants ha..he.
Digest initial_digest() noexcept;

/// Word schedule value w(n). For n <= 15 `prior` must hold the 16 block
/// words and the block word is returned; for 16 <= n <= 79 `prior` must
/// hold all schedule words for indices < n and the rotate-XOR recurrence
/// over w[n-3], w[n-8], w[n-14], w[n-16] is returned.
/// Throws std::out_of_range for n > 79, std::invalid_argument when
/// `prior` is too short.
word32 schedule_word(unsigned n, std::span<const word32> prior);

/// The round-dependent mixing function: Ch for rounds 0..19, parity for
/// 20..39 and 60..79, majority for 40..59. Throws std::out_of_range.
word32 round_function(unsigned n, word32 b, word32 c, word32 d);

/// The stage constant for round n. Throws std::out_of_range.
word32 round_constant(unsigned n);

/// One round of the compression function; all additions are modulo 2^32.
/// Throws std::out_of_range when s.n > 79.
RoundState round_update(const RoundState& s, word32 w);

/// Runs the 80 rounds seeded from `d` and adds the final working variables
/// back into the digest words (modulo 2^32).
Digest compress_block(const Digest& d, const Block& b);

/// Full hash of an arbitrary-bit-length message: preprocess, then fold
/// compress_block over all blocks starting from initial_digest().
Digest digest(const BitMessage& message);

/// Byte-message convenience entry points (streaming fast path).
Digest sha1(std::span<const std::uint8_t> bytes);
Digest sha1(std::string_view text);

/// Incremental byte-oriented hasher. Buffers at most one 512-bit block of
/// unconsumed input; feeding a message in arbitrary chunk splits yields
/// the same digest as the one-shot functions. An instance is used by one
/// caller at a time but may be moved between threads.
class Sha1Hasher {
public:
    Sha1Hasher() noexcept { reset(); }

    Sha1Hasher& update(std::span<const std::uint8_t> data) noexcept;
    Sha1Hasher& update(std::string_view text) noexcept;

    /// Digest of everything fed so far. Does not consume the hasher; more
    /// input may be appended afterwards.
    Digest finalize() const noexcept;

    void reset() noexcept;

    /// Bytes currently buffered, always < 64.
    std::size_t buffered_bytes() const noexcept { return buf_len_; }

private:
    std::array<word32, 5> state_{};
    std::array<std::uint8_t, 64> buf_{};
    std::uint64_t total_bytes_ = 0;
    std::size_t buf_len_ = 0;
};

} // namespace sha1assp
