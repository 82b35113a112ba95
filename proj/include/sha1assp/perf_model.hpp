// Copyright (c) 2026 the sha1assp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "sha1assp/sha1.hpp"

/// Throughput model for the iterative-looping SHA-1 datapath (one round
/// per clock, 80 clocks per 512-bit block, NI parallel instances), the
/// bundled synthesis reference dataset, and a desk-scale brute-force
/// keyspace search that runs the real hash engines.
namespace sha1assp {

/// Register and LUT capacity of the reference target device.
inline constexpr int kDeviceRegisters = 301'440;
inline constexpr int kDeviceLuts = 150'720;

/// One row of the bundled synthesis results: instance count, occupancy,
/// clock period and throughput. NR/NLUT and the clock period come from a
/// hardware synthesis run and are reference data only — they cannot be
/// recomputed in software, unlike the percentages and the throughput.
struct SynthesisRecord {
    int ni;         ///< number of parallel hash instances
    int nr;         ///< registers used
    double pr_pct;  ///< registers used, percent of device total
    int nlut;       ///< LUTs used
    double plut_pct; ///< LUTs used, percent of device total
    double ts_ns;   ///< clock (sample) period in nanoseconds
    double rs_gbps; ///< published throughput in gigabits per second
};

/// The six bundled rows, sorted ascending by instance count.
std::span<const SynthesisRecord> table1();

/// The bundled rows as delimiter-separated text with a header row.
std::string table1_csv(char delimiter = ',');

/// Modeled throughput in Gbps: 512 * ni bits hashed every 80 clock
/// periods. Throws std::domain_error on non-positive inputs.
double throughput_gbps(int ni, double ts_ns);

/// Modeled hash-candidate rate per second when each candidate costs
/// `blocks_per_candidate` 512-bit blocks of 80 clocks each.
/// Throws std::domain_error on non-positive inputs.
double hashes_per_second(int ni, double ts_ns, int blocks_per_candidate);

/// A fixed-length password keyspace over an ordered alphabet. Symbols are
/// bytes and encode as themselves; candidates are enumerated in
/// lexicographic alphabet order (index 0 is alphabet[0] repeated).
struct KeyspaceSpec {
    std::string alphabet;
    std::uint32_t length = 0;

    /// Throws std::invalid_argument if the alphabet is empty or has
    /// duplicate symbols.
    void validate() const;

    /// |alphabet|^length candidates; length 0 is the empty keyspace (0).
    /// Throws std::overflow_error past 2^63.
    std::uint64_t size() const;

    /// The index-th candidate in lexicographic alphabet order.
    std::string candidate(std::uint64_t index) const;
};

/// Worst-case time for the modeled hardware to exhaust the keyspace.
/// Candidates must pad into a single 512-bit block (length <= 55 bytes);
/// longer candidates are rejected with std::domain_error rather than
/// silently mispredicted.
std::chrono::duration<double> predict_crack_time(const KeyspaceSpec& spec, int ni, double ts_ns);

/// Hash engine used by the brute-force search.
enum class CrackEngine {
    fast,     ///< reference-checked fast software kernel
    datapath, ///< the cycle-accurate simulator, for fidelity over speed
};

struct CrackResult {
    /// Lexicographically smallest matching candidate, if any.
    std::optional<std::string> found;
    /// Canonical early-exit count: match position + 1 when found, the full
    /// keyspace size otherwise. Independent of the worker count.
    std::uint64_t candidates_tested = 0;
    std::chrono::duration<double> wall_time{0};
    /// Worst-case exhaustion time from the timing model.
    std::chrono::duration<double> predicted_time{0};
};

/// Refuse keyspaces that are not enumerable at desk scale.
inline constexpr std::uint64_t kMaxCrackKeyspace = 1'000'000'000;

/// Exhaustive search for a preimage of `target` in the keyspace,
/// partitioned into contiguous index ranges across `workers` concurrent
/// workers. The result is the lexicographically smallest match and is
/// independent of the worker count. Throws std::length_error when the
/// keyspace exceeds kMaxCrackKeyspace, std::invalid_argument on a bad
/// alphabet or worker count.
CrackResult crack(const Digest& target, const KeyspaceSpec& spec, int workers,
                  CrackEngine engine = CrackEngine::fast, int model_ni = 48,
                  double model_ts_ns = 10.909);

/// Plain single-loop reference implementation of the same search, kept
/// for testing the parallel path against.
CrackResult crack_serial(const Digest& target, const KeyspaceSpec& spec,
                         CrackEngine engine = CrackEngine::fast, int model_ni = 48,
                         double model_ts_ns = 10.909);

/// Measured candidates-per-second of the fast kernel on single-block
/// password-style inputs, across `threads` OpenMP workers.
double bench_fast_engine(double seconds, int threads);

/// Measured candidates-per-second of the cycle-accurate simulator.
double bench_datapath_engine(double seconds);

} // namespace sha1assp
