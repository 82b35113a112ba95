// Copyright (c) 2026 the sha1assp authors
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "sha1assp/datapath_sim.hpp"
#include "sha1assp/sha1.hpp"
#include "test_util.hpp"
#include "trace_laws.hpp"

using namespace sha1assp;

namespace {

DatapathSim abc_sim() {
    return DatapathSim(preprocess(BitMessage::from_string("abc")));
}

} // namespace

TEST_SUITE("datapath") {

TEST_CASE("reset loads the hash constants into accumulators and registers") {
    DatapathSim sim = abc_sim();
    const DatapathState& st = sim.state();
    CHECK(st.acc_ha == 0x67452301u);
    CHECK(st.ra == 0x67452301u);
    CHECK(st.re == 0xC3D2E1F0u);
    CHECK(st.cn == 0);
    CHECK(st.cj == 0);
    CHECK(st.phase == SimPhase::hashing);
    CHECK(sim.cycles() == 0);

    DatapathSim again = abc_sim();
    CHECK(again.state().ra == st.ra);
    CHECK(again.state().acc_he == st.acc_he);
    CHECK(again.state().cn == st.cn);
}

TEST_CASE("stage selector") {
    CHECK(stage_selector(0) == 0);
    CHECK(stage_selector(19) == 0);
    CHECK(stage_selector(20) == 1);
    CHECK(stage_selector(39) == 1);
    CHECK(stage_selector(40) == 2);
    CHECK(stage_selector(60) == 3);
    CHECK(stage_selector(79) == 3);
    CHECK_THROWS_AS((void)stage_selector(80), std::out_of_range);
}

TEST_CASE("first tick of abc exposes the expected wires") {
    DatapathSim sim = abc_sim();
    const ClockTraceRecord rec = sim.tick();
    CHECK(rec.cycle == 0);
    CHECK(rec.j == 0);
    CHECK(rec.n == 0);
    CHECK(rec.gv == 0);
    CHECK(rec.k == 0x5A827999u);
    CHECK(rec.w == 0x61626380u);
    CHECK(rec.a == 0x0116FC33u);
    CHECK(rec.b == 0x67452301u);
}

TEST_CASE("gv steps at tick 20 and k at round 40") {
    DatapathSim sim = abc_sim();
    ClockTraceRecord rec{};
    for (int i = 0; i <= 20; ++i)
        rec = sim.tick();
    CHECK(rec.n == 20);
    CHECK(rec.gv == 1);
    for (int i = 21; i <= 40; ++i)
        rec = sim.tick();
    CHECK(rec.n == 40);
    CHECK(rec.k == 0x8F1BBCDCu);
    CHECK(rec.gv == 2);
}

TEST_CASE("tick errors") {
    DatapathSim idle;
    CHECK(idle.state().phase == SimPhase::idle);
    CHECK_THROWS_AS((void)idle.tick(), std::logic_error);

    DatapathSim sim = abc_sim();
    for (int i = 0; i < 80; ++i)
        (void)sim.tick();
    CHECK(sim.done());
    CHECK_THROWS_AS((void)sim.tick(), std::logic_error);

    CHECK_THROWS_AS(DatapathSim{PaddedMessage{}}, std::invalid_argument);
}

TEST_CASE("run to completion: digests and exact cycle counts") {
    auto run = [](const BitMessage& m) {
        DatapathSim sim(preprocess(m));
        return sim.run_to_completion();
    };

    const auto [abc, abc_cycles] = run(BitMessage::from_string("abc"));
    CHECK(abc.hex() == "a9993e364706816aba3e25717850c26c9cd0d89d");
    CHECK(abc_cycles == 80);

    const auto [empty, empty_cycles] = run(BitMessage{});
    CHECK(empty.hex() == "da39a3ee5e6b4b0d3255bfef95601890afd80709");
    CHECK(empty_cycles == 80);

    // 1024-bit message: K mod 512 = 0 gives P = 448, so Z = 1536 and L = 3
    const auto [d3, c3] = run(testutil::random_message(1024));
    CHECK(c3 == 240);
    (void)d3;

    const auto [d2, c2] =
        run(BitMessage::from_string("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq"));
    CHECK(d2.hex() == "84983e441c3bd26ebaae4aa1f95129e5e54670f1");
    CHECK(c2 == 160);
}

TEST_CASE("phase transitions across block boundaries") {
    DatapathSim sim(preprocess(testutil::random_message(512))); // two blocks
    for (int i = 0; i < 79; ++i)
        (void)sim.tick();
    CHECK(sim.state().phase == SimPhase::hashing);
    (void)sim.tick();
    CHECK(sim.state().phase == SimPhase::block_done);
    CHECK(sim.state().cn == 0); // rolls over exactly when cj increments
    CHECK(sim.state().cj == 1);
    // the reload happened inside the rollover tick
    CHECK(sim.state().ra == sim.state().acc_ha);
    (void)sim.tick();
    CHECK(sim.state().phase == SimPhase::hashing);
    for (int i = 0; i < 79; ++i)
        (void)sim.tick();
    CHECK(sim.state().phase == SimPhase::message_done);
    CHECK(sim.state().cj == 2);
    CHECK(sim.cycles() == 160);
}

TEST_CASE("rw bank holds at most 64 words and only for the current block") {
    DatapathSim sim(preprocess(testutil::random_message(512)));
    int written = 0;
    for (int t = 0; t < 160; ++t) {
        (void)sim.tick();
        written = 0;
        for (bool b : sim.state().rw_written)
            written += b ? 1 : 0;
        CHECK(written <= 64);
    }
    CHECK(written == 64); // a finished block latched every slot
}

TEST_CASE("differential against the reference implementation") {
    const auto lens = testutil::differential_bit_lengths(1000, 2048);
    for (const std::uint64_t bits : lens) {
        const BitMessage m = testutil::random_message(bits);
        const PaddedMessage padded = preprocess(m);
        DatapathSim sim(padded);
        const auto [dig, cycles] = sim.run_to_completion();
        CAPTURE(bits);
        REQUIRE(dig == digest(m));
        REQUIRE(cycles == 80 * padded.block_count());
    }
}

TEST_CASE("trace records satisfy the datapath laws") {
    std::uniform_int_distribution<std::uint64_t> len(0, 1471); // one to three blocks
    for (int i = 0; i < 25; ++i) {
        const auto violation =
            testutil::find_trace_violation(preprocess(testutil::random_message(len(testutil::rng()))));
        CHECK_MESSAGE(!violation.has_value(), violation.value_or(""));
    }
}

TEST_CASE("trace emission: one record per tick in the external format") {
    std::ostringstream out;
    DatapathSim sim = abc_sim();
    sim.emit_trace(out);
    const auto [dig, cycles] = sim.run_to_completion();
    (void)dig;
    CHECK(cycles == 80);

    std::istringstream in(out.str());
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == kTraceHeader);
    std::vector<ClockTraceRecord> records;
    while (std::getline(in, line)) {
        const auto rec = parse_trace_record(line);
        REQUIRE(rec.has_value());
        records.push_back(*rec);
    }
    REQUIRE(records.size() == 80);
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].cycle == i); // strictly increasing from zero
        CHECK(records[i].n == i);
    }
    CHECK(records[40].k == 0x8F1BBCDCu);
    CHECK(records[0].w == 0x61626380u);
}

TEST_CASE("trace round trip preserves every field") {
    DatapathSim sim(preprocess(testutil::random_message(300)));
    std::ostringstream out;
    sim.emit_trace(out);
    std::vector<ClockTraceRecord> direct;
    while (!sim.done())
        direct.push_back(sim.tick());

    std::istringstream in(out.str());
    std::string line;
    std::vector<ClockTraceRecord> parsed;
    while (std::getline(in, line))
        if (auto rec = parse_trace_record(line))
            parsed.push_back(*rec);
    CHECK(parsed == direct);
}

TEST_CASE("trace attached mid-run records only subsequent ticks") {
    DatapathSim sim = abc_sim();
    for (int i = 0; i < 10; ++i)
        (void)sim.tick();
    std::ostringstream out;
    sim.emit_trace(out);
    (void)sim.run_to_completion();
    std::istringstream in(out.str());
    std::string line;
    int records = 0;
    while (std::getline(in, line))
        if (parse_trace_record(line))
            ++records;
    CHECK(records == 70);
}

TEST_CASE("trace parser rejects malformed records") {
    CHECK(!parse_trace_record(kTraceHeader).has_value());
    CHECK(!parse_trace_record("").has_value());
    CHECK_THROWS_AS((void)parse_trace_record("1 2 3"), std::invalid_argument);
    CHECK_THROWS_AS(
        (void)parse_trace_record("x 0 0 0 0 0 0 0 0 0 0 0"), std::invalid_argument);
}

TEST_CASE("trace sink failure raises") {
    std::ostringstream out;
    out.setstate(std::ios::badbit);
    DatapathSim sim = abc_sim();
    CHECK_THROWS_AS(sim.emit_trace(out), std::runtime_error);
}

} // TEST_SUITE
