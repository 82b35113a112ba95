// Copyright (c) 2026 the sha1assp authors
// SPDX-License-Identifier: Apache-2.0

#include "sha1assp/datapath_sim.hpp"

#include <cinttypes>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace sha1assp {

namespace {

// internal invariant check; a violation is a simulator bug, never silent
// wraparound
void sim_check(bool ok, const char* what) {
    if (!ok)
        throw std::logic_error(std::string("datapath invariant violated: ") + what);
}

} // namespace

unsigned stage_selector(unsigned n) {
    if (n > 79)
        throw std::out_of_range("stage_selector: round index past 79");
    return n / 20;
}

void write_trace_record(std::ostream& sink, const ClockTraceRecord& rec) {
    char line[160];
    std::snprintf(line, sizeof line,
                  "%" PRIu64 " %" PRIu64 " %u %08x %08x %08x %08x %08x %08x %08x %08x %u\n",
                  rec.cycle, rec.j, rec.n, rec.a, rec.b, rec.c, rec.d, rec.e,
                  rec.w, rec.f, rec.k, rec.gv);
    sink << line;
}

std::optional<ClockTraceRecord> parse_trace_record(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty() || line.front() == '#')
        return std::nullopt;
    ClockTraceRecord rec;
    int consumed = 0;
    const std::string buf(line);
    const int got = std::sscanf(buf.c_str(),
                                "%" SCNu64 " %" SCNu64 " %u %8x %8x %8x %8x %8x %8x %8x %8x %u%n",
                                &rec.cycle, &rec.j, &rec.n, &rec.a, &rec.b, &rec.c, &rec.d,
                                &rec.e, &rec.w, &rec.f, &rec.k, &rec.gv, &consumed);
    if (got != 12 || static_cast<std::size_t>(consumed) != buf.size())
        throw std::invalid_argument("malformed trace record: " + buf);
    return rec;
}

void DatapathSim::reset(PaddedMessage padded) {
    if (padded.blocks.empty())
        throw std::invalid_argument("DatapathSim: message has no blocks");
    padded_ = std::move(padded);
    state_ = DatapathState{};
    const Digest h0 = initial_digest();
    state_.acc_ha = h0.ha;
    state_.acc_hb = h0.hb;
    state_.acc_hc = h0.hc;
    state_.acc_hd = h0.hd;
    state_.acc_he = h0.he;
    // h0 broadcast: working registers start from the accumulators
    state_.ra = state_.acc_ha;
    state_.rb = state_.acc_hb;
    state_.rc = state_.acc_hc;
    state_.rd = state_.acc_hd;
    state_.re = state_.acc_he;
    state_.phase = SimPhase::hashing;
    cycle_ = 0;
    trace_ = nullptr;
}

word32 DatapathSim::schedule_value(unsigned index, const Block& blk) const {
    if (index < 16)
        return blk.words[index]; // straight off the DM bus
    sim_check(state_.rw_written[index - 16], "RW register read before it was latched");
    return state_.rw[index - 16];
}

ClockTraceRecord DatapathSim::tick() {
    if (state_.phase == SimPhase::idle)
        throw std::logic_error("DatapathSim::tick: no message loaded");
    if (state_.phase == SimPhase::message_done)
        throw std::logic_error("DatapathSim::tick: message already completed");
    state_.phase = SimPhase::hashing;

    const unsigned n = state_.cn;
    sim_check(n <= 79, "CN out of range");
    sim_check(state_.cj < padded_.block_count(), "CJ out of range");
    const Block& blk = padded_.blocks[static_cast<std::size_t>(state_.cj)];

    // combinational paths, in dependency order
    const unsigned gv = stage_selector(n);
    const word32 w = schedule_value(n, blk);
    const word32 f = round_function(n, state_.rb, state_.rc, state_.rd);
    const word32 k = round_constant(n);

    // SW network: the register for schedule position n+3 latches now,
    // from the current W-MUX output and three older schedule values
    if (n + 3 >= 16 && n + 3 <= 79) {
        const word32 x = w ^ schedule_value(n - 5, blk) ^ schedule_value(n - 11, blk) ^
                         schedule_value(n - 13, blk);
        state_.rw[n + 3 - 16] = leftrotate(x, 1);
        state_.rw_written[n + 3 - 16] = true;
    }

    // adders: S1 and S2 in parallel, then S3 and S4
    const word32 z = w + state_.re;
    const word32 v = f + k;
    const word32 a_next = v + z + leftrotate(state_.ra, 5);

    // register latch
    state_.re = state_.rd;
    state_.rd = state_.rc;
    state_.rc = leftrotate(state_.rb, 30);
    state_.rb = state_.ra;
    state_.ra = a_next;

    ClockTraceRecord rec{cycle_,    state_.cj, n,         state_.ra, state_.rb, state_.rc,
                         state_.rd, state_.re, w,         f,         k,         gv};
    ++cycle_;

    if (n == 79) {
        // hash update and block rollover within the same tick
        state_.acc_ha += state_.ra;
        state_.acc_hb += state_.rb;
        state_.acc_hc += state_.rc;
        state_.acc_hd += state_.rd;
        state_.acc_he += state_.re;
        state_.cn = 0;
        ++state_.cj;
        state_.rw_written.fill(false);
        if (state_.cj == padded_.block_count()) {
            state_.phase = SimPhase::message_done;
        } else {
            state_.phase = SimPhase::block_done;
            // h0 broadcast reloads the working registers for the next block
            state_.ra = state_.acc_ha;
            state_.rb = state_.acc_hb;
            state_.rc = state_.acc_hc;
            state_.rd = state_.acc_hd;
            state_.re = state_.acc_he;
        }
    } else {
        state_.cn = n + 1;
    }

    if (trace_ != nullptr) {
        write_trace_record(*trace_, rec);
        if (!*trace_)
            throw std::runtime_error("trace sink write failed");
    }
    return rec;
}

std::pair<Digest, std::uint64_t> DatapathSim::run_to_completion() {
    while (!done())
        tick();
    return {digest(), cycle_};
}

void DatapathSim::emit_trace(std::ostream& sink) {
    sink << kTraceHeader << '\n';
    if (!sink)
        throw std::runtime_error("trace sink write failed");
    trace_ = &sink;
}

} // namespace sha1assp
