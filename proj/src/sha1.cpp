// Copyright (c) 2026 the sha1assp authors
// SPDX-License-Identifier: Apache-2.0

#include "sha1assp/sha1.hpp"

#include <cstring>
#include <stdexcept>

#include "sha1_kernel.hpp"

namespace sha1assp {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) noexcept {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

} // namespace

std::array<std::uint8_t, 20> Digest::bytes() const {
    std::array<std::uint8_t, 20> out{};
    const word32 words[5] = {ha, hb, hc, hd, he};
    for (int i = 0; i < 5; ++i)
        detail::store_be32(out.data() + 4 * i, words[i]);
    return out;
}

std::string Digest::hex() const {
    std::string out;
    out.reserve(40);
    for (std::uint8_t byte : bytes()) {
        out.push_back(kHexDigits[byte >> 4]);
        out.push_back(kHexDigits[byte & 0xF]);
    }
    return out;
}

std::optional<Digest> Digest::from_hex(std::string_view text) {
    if (text.size() != 40)
        return std::nullopt;
    word32 words[5] = {};
    for (int i = 0; i < 40; ++i) {
        int v = hex_value(text[static_cast<std::size_t>(i)]);
        if (v < 0)
            return std::nullopt;
        words[i / 8] = words[i / 8] << 4 | static_cast<word32>(v);
    }
    return Digest{words[0], words[1], words[2], words[3], words[4]};
}

Block Block::from_bytes(std::span<const std::uint8_t, 64> bytes) {
    Block b;
    for (int i = 0; i < 16; ++i)
        b.words[static_cast<std::size_t>(i)] = detail::load_be32(bytes.data() + 4 * i);
    return b;
}

BitMessage BitMessage::from_bytes(std::span<const std::uint8_t> bytes) {
    BitMessage m;
    m.data_.assign(bytes.begin(), bytes.end());
    m.bit_len_ = static_cast<std::uint64_t>(bytes.size()) * 8;
    return m;
}

BitMessage BitMessage::from_string(std::string_view text) {
    return from_bytes({reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
}

BitMessage BitMessage::from_bits(std::span<const std::uint8_t> data, std::uint64_t bit_len) {
    const std::uint64_t need = (bit_len + 7) / 8;
    if (need > data.size())
        throw std::invalid_argument("BitMessage: data shorter than bit_len");
    BitMessage m;
    m.data_.assign(data.begin(), data.begin() + static_cast<std::ptrdiff_t>(need));
    m.bit_len_ = bit_len;
    if (bit_len % 8 != 0) {
        // canonical form: unused low bits of the final byte are zero
        const std::uint8_t mask = static_cast<std::uint8_t>(0xFF << (8 - bit_len % 8));
        m.data_.back() &= mask;
    }
    return m;
}

bool BitMessage::bit(std::uint64_t k) const {
    if (k >= bit_len_)
        throw std::out_of_range("BitMessage::bit: index past end");
    return (data_[k / 8] >> (7 - k % 8)) & 1;
}

word32 padding_len(std::uint64_t bit_count) noexcept {
    const std::uint64_t rem = bit_count % 512;
    return rem < 448 ? static_cast<word32>(448 - rem) : static_cast<word32>(512 - rem + 448);
}

PaddedMessage preprocess(const BitMessage& message) {
    const std::uint64_t k = message.bit_len();
    if (k > UINT64_MAX - 576)
        throw std::overflow_error("preprocess: message length field overflow");
    const word32 p = padding_len(k);
    const std::uint64_t total = k + p + 64;
    const std::uint64_t block_count = total / 512;

    std::vector<std::uint8_t> padded(static_cast<std::size_t>(total / 8), 0);
    auto src = message.data();
    if (!src.empty())
        std::memcpy(padded.data(), src.data(), src.size());
    // the '1' pad bit lands at bit position k; the message's trailing
    // partial byte (if any) already has zeros below bit k
    padded[static_cast<std::size_t>(k / 8)] |= static_cast<std::uint8_t>(0x80 >> (k % 8));
    detail::store_be32(padded.data() + padded.size() - 8, static_cast<word32>(k >> 32));
    detail::store_be32(padded.data() + padded.size() - 4, static_cast<word32>(k));

    PaddedMessage out;
    out.blocks.reserve(static_cast<std::size_t>(block_count));
    for (std::uint64_t j = 0; j < block_count; ++j)
        out.blocks.push_back(Block::from_bytes(
            std::span<const std::uint8_t, 64>(padded.data() + 64 * j, 64)));
    return out;
}

Digest initial_digest() noexcept {
    return {0x67452301u, 0xEFCDAB89u, 0x98BADCFEu, 0x10325476u, 0xC3D2E1F0u};
}

word32 schedule_word(unsigned n, std::span<const word32> prior) {
    if (n > 79)
        throw std::out_of_range("schedule_word: round index past 79");
    if (n <= 15) {
        if (prior.size() < 16)
            throw std::invalid_argument("schedule_word: need the 16 block words");
        return prior[n];
    }
    if (prior.size() < n)
        throw std::invalid_argument("schedule_word: history does not reach index n");
    return leftrotate(prior[n - 3] ^ prior[n - 8] ^ prior[n - 14] ^ prior[n - 16], 1);
}

word32 round_function(unsigned n, word32 b, word32 c, word32 d) {
    if (n > 79)
        throw std::out_of_range("round_function: round index past 79");
    switch (n / 20) {
    case 0: return (b & c) | (~b & d);
    case 2: return (b & c) | (b & d) | (c & d);
    default: return b ^ c ^ d;
    }
}

word32 round_constant(unsigned n) {
    if (n > 79)
        throw std::out_of_range("round_constant: round index past 79");
    static constexpr word32 kStage[4] = {0x5A827999u, 0x6ED9EBA1u, 0x8F1BBCDCu, 0xCA62C1D6u};
    return kStage[n / 20];
}

RoundState round_update(const RoundState& s, word32 w) {
    const word32 z = w + s.e;
    const word32 v = round_function(s.n, s.b, s.c, s.d) + round_constant(s.n);
    RoundState r;
    r.a = v + z + leftrotate(s.a, 5);
    r.b = s.a;
    r.c = leftrotate(s.b, 30);
    r.d = s.c;
    r.e = s.d;
    r.n = s.n + 1;
    return r;
}

Digest compress_block(const Digest& d, const Block& b) {
    std::array<word32, 80> w;
    for (unsigned n = 0; n < 16; ++n)
        w[n] = b.words[n];
    for (unsigned n = 16; n < 80; ++n)
        w[n] = schedule_word(n, std::span<const word32>(w.data(), n));

    RoundState s{d.ha, d.hb, d.hc, d.hd, d.he, 0};
    for (unsigned n = 0; n < 80; ++n)
        s = round_update(s, w[n]);
    return {d.ha + s.a, d.hb + s.b, d.hc + s.c, d.hd + s.d, d.he + s.e};
}

Digest digest(const BitMessage& message) {
    if (message.bit_len() % 8 == 0)
        return sha1(message.data()); // byte-aligned fast path
    Digest h = initial_digest();
    for (const Block& b : preprocess(message).blocks)
        h = compress_block(h, b);
    return h;
}

Digest sha1(std::span<const std::uint8_t> bytes) {
    return Sha1Hasher().update(bytes).finalize();
}

Digest sha1(std::string_view text) {
    return Sha1Hasher().update(text).finalize();
}

namespace detail {

void compress(word32 state[5], const std::uint8_t block[64]) noexcept {
    word32 w[16];
    for (int i = 0; i < 16; ++i)
        w[i] = load_be32(block + 4 * i);

    word32 a = state[0], b = state[1], c = state[2], d = state[3], e = state[4];

    auto mix = [&w](unsigned t) noexcept {
        word32 x = leftrotate(w[(t - 3) & 15] ^ w[(t - 8) & 15] ^ w[(t - 14) & 15] ^ w[t & 15], 1);
        w[t & 15] = x;
        return x;
    };
    auto step = [&](word32 f, word32 k, word32 wt) noexcept {
        word32 t = leftrotate(a, 5) + f + e + k + wt;
        e = d;
        d = c;
        c = leftrotate(b, 30);
        b = a;
        a = t;
    };

    unsigned t = 0;
    for (; t < 16; ++t)
        step((b & c) | (~b & d), 0x5A827999u, w[t]);
    for (; t < 20; ++t)
        step((b & c) | (~b & d), 0x5A827999u, mix(t));
    for (; t < 40; ++t)
        step(b ^ c ^ d, 0x6ED9EBA1u, mix(t));
    for (; t < 60; ++t)
        step((b & c) | (b & d) | (c & d), 0x8F1BBCDCu, mix(t));
    for (; t < 80; ++t)
        step(b ^ c ^ d, 0xCA62C1D6u, mix(t));

    state[0] += a;
    state[1] += b;
    state[2] += c;
    state[3] += d;
    state[4] += e;
}

} // namespace detail

Sha1Hasher& Sha1Hasher::update(std::span<const std::uint8_t> data) noexcept {
    total_bytes_ += data.size();
    std::size_t pos = 0;
    if (buf_len_ > 0) {
        const std::size_t take = std::min(data.size(), 64 - buf_len_);
        std::memcpy(buf_.data() + buf_len_, data.data(), take);
        buf_len_ += take;
        pos = take;
        if (buf_len_ < 64)
            return *this;
        detail::compress(state_.data(), buf_.data());
        buf_len_ = 0;
    }
    for (; pos + 64 <= data.size(); pos += 64)
        detail::compress(state_.data(), data.data() + pos);
    if (pos < data.size()) {
        buf_len_ = data.size() - pos;
        std::memcpy(buf_.data(), data.data() + pos, buf_len_);
    }
    return *this;
}

Sha1Hasher& Sha1Hasher::update(std::string_view text) noexcept {
    return update({reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
}

Digest Sha1Hasher::finalize() const noexcept {
    std::array<word32, 5> s = state_;
    std::array<std::uint8_t, 64> tail{};
    std::memcpy(tail.data(), buf_.data(), buf_len_);
    tail[buf_len_] = 0x80;
    if (buf_len_ >= 56) {
        detail::compress(s.data(), tail.data());
        tail.fill(0);
    }
    const std::uint64_t bits = total_bytes_ * 8;
    detail::store_be32(tail.data() + 56, static_cast<word32>(bits >> 32));
    detail::store_be32(tail.data() + 60, static_cast<word32>(bits));
    detail::compress(s.data(), tail.data());
    return {s[0], s[1], s[2], s[3], s[4]};
}

void Sha1Hasher::reset() noexcept {
    const Digest h0 = initial_digest();
    state_ = {h0.ha, h0.hb, h0.hc, h0.hd, h0.he};
    buf_.fill(0);
    total_bytes_ = 0;
    buf_len_ = 0;
}

} // namespace sha1assp
