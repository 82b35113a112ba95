// Copyright (c) 2026 the sha1assp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <utility>

#include "sha1assp/sha1.hpp"

/// Cycle-accurate register-transfer-level model of an iterative-looping
/// SHA-1 datapath: one simulator tick is one round of the compression
/// function on the shared datapath. Every named hardware block of the
/// architecture is represented — the RA..RE working registers, the RW
/// schedule-register bank, the CN/CJ counters, the GF/GK/GW selector
/// modules and the HA..HE hash accumulators — and is observable either
/// through the per-tick trace record (the wires) or through the datapath
/// state (the registers).
namespace sha1assp {

enum class SimPhase {
    idle,         ///< no message loaded
    hashing,      ///< mid-block
    block_done,   ///< a non-final block just finished; ticking continues
    message_done, ///< all blocks finished; further ticks are an error
};

/// Every register of the datapath at one clock instant.
struct DatapathState {
    word32 ra = 0, rb = 0, rc = 0, rd = 0, re = 0; ///< working registers
    std::array<word32, 64> rw{};       ///< schedule registers RW16..RW79, slot k-16
    std::array<bool, 64> rw_written{}; ///< latched this block (at tick n = k-3)
    unsigned cn = 0;        ///< round counter: next round to execute, 0..79
    std::uint64_t cj = 0;   ///< block counter
    word32 acc_ha = 0, acc_hb = 0, acc_hc = 0, acc_hd = 0, acc_he = 0;
    SimPhase phase = SimPhase::idle;
};

/// Wires and post-latch registers observed during one tick.
struct ClockTraceRecord {
    std::uint64_t cycle = 0; ///< global tick count, starts at 0
    std::uint64_t j = 0;     ///< block index
    unsigned n = 0;          ///< round index 0..79
    word32 a = 0, b = 0, c = 0, d = 0, e = 0; ///< registers after the latch
    word32 w = 0;  ///< W-MUX output
    word32 f = 0;  ///< GF-MUX output
    word32 k = 0;  ///< GK output
    unsigned gv = 0; ///< stage selector, floor(n/20)

    bool operator==(const ClockTraceRecord&) const = default;
};

/// GV selector value for round n. Throws std::out_of_range for n > 79.
unsigned stage_selector(unsigned n);

/// Header line of the line-delimited trace format; gives the field order
/// and the format version.
inline constexpr std::string_view kTraceHeader =
    "# sha1assp-trace v1: cycle j n a b c d e w f k gv";

/// Formats one record: cycle/j/n/gv as decimal, word32 fields as
/// fixed-width 8-digit lowercase hex, space separated.
void write_trace_record(std::ostream& sink, const ClockTraceRecord& rec);

/// Parses one line of the trace format. Returns nullopt for header and
/// blank lines, throws std::invalid_argument on malformed records.
std::optional<ClockTraceRecord> parse_trace_record(std::string_view line);

/// One hashing job on the simulated datapath. Strictly single-stepped:
/// no concurrent ticks on one instance, but distinct instances are fully
/// independent and an instance may be handed between threads between
/// ticks.
class DatapathSim {
public:
    /// An idle simulator; load a message with reset().
    DatapathSim() = default;

    /// Equivalent to DatapathSim() followed by reset(padded).
    explicit DatapathSim(PaddedMessage padded) { reset(std::move(padded)); }

    /// Loads a message: accumulators take the standard initialization
    /// constants, the working registers are loaded from them, both
    /// counters clear and the phase becomes `hashing`, with no round
    /// executed yet. Throws std::invalid_argument on an empty block list.
    void reset(PaddedMessage padded);

    /// Advances one clock: resolves the combinational paths for the
    /// current round (GV, GF-MUX, GK, W-MUX and the SW schedule network,
    /// then the four adders), latches RA..RE, and advances CN. When the
    /// round counter rolls over, the accumulators absorb the final
    /// working variables, CJ advances, and RA..RE reload from the
    /// accumulators within the same tick. Throws std::logic_error when
    /// no message is loaded or the message already completed.
    ClockTraceRecord tick();

    /// Ticks until the message completes; returns the digest (the
    /// concatenation of the HA..HE accumulators) and the total number of
    /// ticks consumed since reset, exactly 80 x block_count.
    std::pair<Digest, std::uint64_t> run_to_completion();

    /// Attaches a trace sink: the header is written immediately and every
    /// subsequent tick appends one record line. Throws std::runtime_error
    /// if the sink cannot be written.
    void emit_trace(std::ostream& sink);

    const DatapathState& state() const noexcept { return state_; }
    const PaddedMessage& message() const noexcept { return padded_; }
    bool done() const noexcept { return state_.phase == SimPhase::message_done; }
    std::uint64_t cycles() const noexcept { return cycle_; }

    /// Concatenation of the HA..HE accumulators (the CO module output).
    Digest digest() const noexcept {
        return {state_.acc_ha, state_.acc_hb, state_.acc_hc, state_.acc_hd, state_.acc_he};
    }

private:
    word32 schedule_value(unsigned index, const Block& blk) const;

    PaddedMessage padded_;
    DatapathState state_;
    std::uint64_t cycle_ = 0;
    std::ostream* trace_ = nullptr;
};

} // namespace sha1assp
