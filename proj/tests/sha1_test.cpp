// Copyright (c) 2026 the sha1assp authors
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "sha1assp/sha1.hpp"
#include "test_util.hpp"

using namespace sha1assp;

namespace {

const char* kAbcDigest = "a9993e364706816aba3e25717850c26c9cd0d89d";
const char* kEmptyDigest = "da39a3ee5e6b4b0d3255bfef95601890afd80709";

Block abc_block() {
    return preprocess(BitMessage::from_string("abc")).blocks.at(0);
}

} // namespace

TEST_SUITE("sha1") {

TEST_CASE("padding length examples") {
    CHECK(padding_len(24) == 424);
    CHECK(padding_len(448) == 512);
    CHECK(padding_len(0) == 448);
    CHECK(padding_len(447) == 1);
    CHECK(padding_len(512) == 448);
}

TEST_CASE("padding closes the message to a multiple of 512") {
    std::uniform_int_distribution<std::uint64_t> any(0, UINT64_MAX);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t k = i < 1000 ? static_cast<std::uint64_t>(i) : any(testutil::rng());
        const word32 p = padding_len(k);
        CAPTURE(k);
        CHECK(p >= 1);
        CHECK(p <= 512);
        CHECK((k % 512 + p + 64) % 512 == 0);
    }
}

TEST_CASE("preprocess: abc") {
    const PaddedMessage padded = preprocess(BitMessage::from_string("abc"));
    REQUIRE(padded.block_count() == 1);
    CHECK(padded.blocks[0].words[0] == 0x61626380u);
    for (int i = 1; i < 15; ++i)
        CHECK(padded.blocks[0].words[static_cast<std::size_t>(i)] == 0);
    CHECK(padded.blocks[0].words[15] == 0x00000018u);
    CHECK(padded.total_bits() == 512);
}

TEST_CASE("preprocess: empty message") {
    const PaddedMessage padded = preprocess(BitMessage{});
    REQUIRE(padded.block_count() == 1);
    CHECK(padded.blocks[0].words[0] == 0x80000000u);
    for (int i = 1; i < 16; ++i)
        CHECK(padded.blocks[0].words[static_cast<std::size_t>(i)] == 0);
}

TEST_CASE("preprocess: block counts at the padding boundaries") {
    CHECK(preprocess(testutil::random_message(512)).block_count() == 2);
    CHECK(preprocess(testutil::random_message(448)).block_count() == 2);
    CHECK(preprocess(testutil::random_message(447)).block_count() == 1);
    CHECK(preprocess(testutil::random_message(960)).block_count() == 3);
    CHECK(preprocess(testutil::random_message(1)).block_count() == 1);
}

TEST_CASE("preprocess: total bits follow the padding arithmetic") {
    std::uniform_int_distribution<std::uint64_t> len(0, 4096);
    for (int i = 0; i < 50; ++i) {
        const std::uint64_t k = len(testutil::rng());
        const PaddedMessage padded = preprocess(testutil::random_message(k));
        CHECK(padded.total_bits() == k + padding_len(k) + 64);
        CHECK(padded.total_bits() == 512 * padded.block_count());
    }
}

TEST_CASE("preprocess: a one-bit message keeps its leading bit") {
    const std::uint8_t one = 0xFF;
    const BitMessage m = BitMessage::from_bits({&one, 1}, 1);
    const PaddedMessage padded = preprocess(m);
    // message bit 1, then the pad bit: 11 followed by zeros
    CHECK(padded.blocks[0].words[0] == 0xC0000000u);
    CHECK(padded.blocks[0].words[15] == 1);
}

TEST_CASE("initial digest constants") {
    const Digest h0 = initial_digest();
    CHECK(h0.ha == 0x67452301u);
    CHECK(h0.hb == 0xEFCDAB89u);
    CHECK(h0.hc == 0x98BADCFEu);
    CHECK(h0.hd == 0x10325476u);
    CHECK(h0.he == 0xC3D2E1F0u);
    CHECK(h0.hex() == "67452301efcdab8998badcfe10325476c3d2e1f0");
}

TEST_CASE("leftrotate examples") {
    CHECK(leftrotate(0x80000000u, 1) == 0x00000001u);
    CHECK(leftrotate(0x12345678u, 8) == 0x34567812u);
    CHECK(leftrotate(0xDEADBEEFu, 0) == 0xDEADBEEFu);
}

TEST_CASE("leftrotate inverts with the complementary shift") {
    std::uniform_int_distribution<word32> word(0, UINT32_MAX);
    std::uniform_int_distribution<unsigned> shift(0, 31);
    for (int i = 0; i < 200; ++i) {
        const word32 r = word(testutil::rng());
        const unsigned s = shift(testutil::rng());
        CHECK(leftrotate(leftrotate(r, s), (32 - s) % 32) == r);
    }
}

TEST_CASE("schedule word: passthrough and recurrence") {
    const Block blk = abc_block();
    CHECK(schedule_word(5, blk.words) == blk.words[5]);
    CHECK(schedule_word(0, blk.words) == 0x61626380u);

    const std::array<word32, 16> zeros{};
    CHECK(schedule_word(16, zeros) == 0);

    // w(16) of the "abc" block: lr(w13 ^ w8 ^ w2 ^ w0, 1); only w0 is nonzero
    std::array<word32, 16> w = blk.words;
    CHECK(schedule_word(16, w) == 0xC2C4C700u);
    CHECK(schedule_word(16, w) ==
          leftrotate(w[13] ^ w[8] ^ w[2] ^ w[0], 1));
}

TEST_CASE("schedule word: errors") {
    const std::array<word32, 16> zeros{};
    CHECK_THROWS_AS((void)schedule_word(80, zeros), std::out_of_range);
    const std::array<word32, 8> short_block{};
    CHECK_THROWS_AS((void)schedule_word(3, short_block), std::invalid_argument);
    const std::array<word32, 20> short_hist{};
    CHECK_THROWS_AS((void)schedule_word(40, short_hist), std::invalid_argument);
}

TEST_CASE("round function examples") {
    CHECK(round_function(0, 0, 0, 0) == 0);
    CHECK(round_function(25, 0xFFFFFFFFu, 0xFFFFFFFFu, 0xFFFFFFFFu) == 0xFFFFFFFFu);
    std::uniform_int_distribution<word32> word(0, UINT32_MAX);
    for (int i = 0; i < 50; ++i) {
        const word32 x = word(testutil::rng());
        const word32 y = word(testutil::rng());
        CHECK(round_function(45, x, x, y) == x); // majority with two equal inputs
    }
    CHECK_THROWS_AS((void)round_function(80, 0, 0, 0), std::out_of_range);
}

TEST_CASE("round function: stages 1 and 3 are the same parity") {
    std::uniform_int_distribution<word32> word(0, UINT32_MAX);
    std::uniform_int_distribution<unsigned> n2(20, 39);
    std::uniform_int_distribution<unsigned> n4(60, 79);
    for (int i = 0; i < 200; ++i) {
        const word32 b = word(testutil::rng());
        const word32 c = word(testutil::rng());
        const word32 d = word(testutil::rng());
        CHECK(round_function(n2(testutil::rng()), b, c, d) ==
              round_function(n4(testutil::rng()), b, c, d));
    }
}

TEST_CASE("round function: majority absorbs a duplicated input") {
    std::uniform_int_distribution<word32> word(0, UINT32_MAX);
    std::uniform_int_distribution<unsigned> n3(40, 59);
    for (int i = 0; i < 200; ++i) {
        const word32 b = word(testutil::rng());
        const word32 d = word(testutil::rng());
        CHECK(round_function(n3(testutil::rng()), b, b, d) == b);
    }
}

TEST_CASE("round constants") {
    CHECK(round_constant(0) == 0x5A827999u);
    CHECK(round_constant(19) == 0x5A827999u);
    CHECK(round_constant(20) == 0x6ED9EBA1u);
    CHECK(round_constant(40) == 0x8F1BBCDCu);
    CHECK(round_constant(59) == 0x8F1BBCDCu);
    CHECK(round_constant(60) == 0xCA62C1D6u);
    CHECK(round_constant(79) == 0xCA62C1D6u);
    CHECK_THROWS_AS((void)round_constant(80), std::out_of_range);
}

TEST_CASE("round update: first round of abc") {
    const Digest h0 = initial_digest();
    const RoundState s0{h0.ha, h0.hb, h0.hc, h0.hd, h0.he, 0};
    const RoundState s1 = round_update(s0, abc_block().words[0]);
    CHECK(s1.a == 0x0116FC33u);
    CHECK(s1.b == h0.ha);
    CHECK(s1.c == leftrotate(h0.hb, 30));
    CHECK(s1.d == h0.hc);
    CHECK(s1.e == h0.hd);
    CHECK(s1.n == 1);
}

TEST_CASE("round update: all-zero state at round 20") {
    const RoundState s{0, 0, 0, 0, 0, 20};
    CHECK(round_update(s, 0).a == 0x6ED9EBA1u);
}

TEST_CASE("round update: shift chain and errors") {
    std::uniform_int_distribution<word32> word(0, UINT32_MAX);
    for (int i = 0; i < 50; ++i) {
        RoundState s{word(testutil::rng()), word(testutil::rng()), word(testutil::rng()),
                     word(testutil::rng()), word(testutil::rng()), 7};
        const RoundState r = round_update(s, word(testutil::rng()));
        CHECK(r.b == s.a);
        CHECK(r.d == s.c);
        CHECK(r.e == s.d);
        CHECK(r.n == 8);
    }
    CHECK_THROWS_AS((void)round_update(RoundState{0, 0, 0, 0, 0, 80}, 0),
                    std::out_of_range);
}

TEST_CASE("compress block: published vectors and determinism") {
    const Digest h0 = initial_digest();
    CHECK(compress_block(h0, abc_block()).hex() == kAbcDigest);
    CHECK(compress_block(h0, preprocess(BitMessage{}).blocks[0]).hex() == kEmptyDigest);
    const Block blk = abc_block();
    CHECK(compress_block(h0, blk) == compress_block(h0, blk));
}

TEST_CASE("digest runs exactly 80 round updates per block") {
    for (const std::uint64_t bits : {24ull, 960ull, 1217ull}) {
        const BitMessage m = testutil::random_message(bits);
        const PaddedMessage padded = preprocess(m);
        std::uint64_t updates = 0;
        Digest h = initial_digest();
        for (const Block& blk : padded.blocks) {
            std::array<word32, 80> w;
            for (unsigned n = 0; n < 16; ++n)
                w[n] = blk.words[n];
            for (unsigned n = 16; n < 80; ++n)
                w[n] = schedule_word(n, std::span<const word32>(w.data(), n));
            RoundState s{h.ha, h.hb, h.hc, h.hd, h.he, 0};
            while (s.n < 80) {
                s = round_update(s, w[s.n]);
                ++updates;
            }
            h = Digest{h.ha + s.a, h.hb + s.b, h.hc + s.c, h.hd + s.d, h.he + s.e};
        }
        CHECK(updates == 80 * padded.block_count());
        CHECK(h == digest(m));
    }
}

TEST_CASE("digest: published vectors") {
    CHECK(sha1(std::string_view("abc")).hex() == kAbcDigest);
    CHECK(sha1(std::string_view("")).hex() == kEmptyDigest);
    CHECK(sha1(std::string_view("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq")).hex() ==
          "84983e441c3bd26ebaae4aa1f95129e5e54670f1");
    CHECK(digest(BitMessage::from_string(std::string(1'000'000, 'a'))).hex() ==
          "34aa973cd4c4daa4f61eeb2bdbad27316534016f");
}

TEST_CASE("digest equals the naive bit-vector oracle") {
    const auto lens = testutil::differential_bit_lengths(1000, 2048);
    for (const std::uint64_t bits : lens) {
        const BitMessage m = testutil::random_message(bits);
        CAPTURE(bits);
        REQUIRE(digest(m).hex() == naive::sha1_hex(testutil::to_naive_bits(m)));
    }
}

TEST_CASE("byte fast path agrees with the preprocess route") {
    std::uniform_int_distribution<std::uint64_t> len(0, 300);
    for (int i = 0; i < 100; ++i) {
        const BitMessage m = testutil::random_message(8 * len(testutil::rng()));
        Digest folded = initial_digest();
        for (const Block& blk : preprocess(m).blocks)
            folded = compress_block(folded, blk);
        CHECK(folded == digest(m));
    }
}

TEST_CASE("streaming equals one-shot for arbitrary chunk splits") {
    std::uniform_int_distribution<std::size_t> len(0, 500);
    for (int i = 0; i < 100; ++i) {
        const BitMessage m = testutil::random_message(8 * len(testutil::rng()));
        const auto bytes = m.data();
        Sha1Hasher hasher;
        std::size_t pos = 0;
        while (pos < bytes.size()) {
            std::uniform_int_distribution<std::size_t> take(0, bytes.size() - pos);
            const std::size_t n = take(testutil::rng());
            hasher.update(bytes.subspan(pos, n));
            CHECK(hasher.buffered_bytes() < 64);
            pos += n;
        }
        CHECK(hasher.finalize() == sha1(bytes));
    }
}

TEST_CASE("finalize does not consume the stream") {
    Sha1Hasher hasher;
    hasher.update(std::string_view("ab"));
    CHECK(hasher.finalize() == sha1(std::string_view("ab")));
    hasher.update(std::string_view("c"));
    CHECK(hasher.finalize().hex() == kAbcDigest);
    hasher.reset();
    CHECK(hasher.finalize().hex() == kEmptyDigest);
}

TEST_CASE("digest hex round trip and rejection") {
    const Digest d = sha1(std::string_view("round trip"));
    const auto parsed = Digest::from_hex(d.hex());
    REQUIRE(parsed.has_value());
    CHECK(*parsed == d);
    CHECK(!Digest::from_hex("abc").has_value());
    CHECK(!Digest::from_hex(std::string(40, 'g')).has_value());
    CHECK(!Digest::from_hex(std::string(39, 'a')).has_value());
    CHECK(Digest::from_hex("A9993E364706816ABA3E25717850C26C9CD0D89D")->hex() == kAbcDigest);
}

TEST_CASE("bit message construction and masking") {
    const std::uint8_t raw[2] = {0xAB, 0xFF};
    const BitMessage m = BitMessage::from_bits(raw, 11);
    CHECK(m.bit_len() == 11);
    CHECK(m.data()[1] == 0xE0); // 0xFF masked to its top 3 bits
    CHECK(m.bit(0) == true);
    CHECK(m.bit(1) == false);
    CHECK_THROWS_AS((void)m.bit(11), std::out_of_range);
    CHECK_THROWS_AS((void)BitMessage::from_bits(raw, 17), std::invalid_argument);
    CHECK(m == BitMessage::from_bits(std::vector<std::uint8_t>{0xAB, 0xE0}, 11));
}

} // TEST_SUITE
