// Copyright (c) 2026 the sha1assp authors
// SPDX-License-Identifier: Apache-2.0

#include "sha1assp/perf_model.hpp"

#include <array>
#include <cstdio>
#include <stdexcept>

namespace sha1assp {

namespace {

// Synthesis results for 1..48 parallel instances on the reference device.
constexpr std::array<SynthesisRecord, 6> kTable1{{
    {1, 2154, 0.71, 2605, 1.72, 9.932, 0.644},
    {4, 8575, 2.84, 10388, 6.89, 9.961, 2.570},
    {8, 17136, 5.68, 20662, 13.71, 9.965, 5.138},
    {16, 34255, 11.36, 43263, 28.70, 9.994, 10.246},
    {32, 68498, 22.72, 86873, 57.64, 9.994, 18.296},
    {48, 102733, 34.08, 129902, 86.19, 10.909, 28.160},
}};

} // namespace

std::span<const SynthesisRecord> table1() {
    return kTable1;
}

std::string table1_csv(char delimiter) {
    std::string out = "ni,nr,pr_pct,nlut,plut_pct,ts_ns,rs_gbps\n";
    if (delimiter != ',')
        for (char& c : out)
            if (c == ',')
                c = delimiter;
    for (const SynthesisRecord& r : kTable1) {
        char line[128];
        std::snprintf(line, sizeof line, "%d%c%d%c%.2f%c%d%c%.2f%c%.3f%c%.3f\n", r.ni,
                      delimiter, r.nr, delimiter, r.pr_pct, delimiter, r.nlut, delimiter,
                      r.plut_pct, delimiter, r.ts_ns, delimiter, r.rs_gbps);
        out += line;
    }
    return out;
}

double throughput_gbps(int ni, double ts_ns) {
    if (ni < 1)
        throw std::domain_error("throughput_gbps: instance count must be positive");
    if (!(ts_ns > 0))
        throw std::domain_error("throughput_gbps: clock period must be positive");
    // 512 * ni bits per 80 clocks; bits per nanosecond is Gbps
    return 512.0 * ni / (80.0 * ts_ns);
}

double hashes_per_second(int ni, double ts_ns, int blocks_per_candidate) {
    if (ni < 1 || blocks_per_candidate < 1)
        throw std::domain_error("hashes_per_second: counts must be positive");
    if (!(ts_ns > 0))
        throw std::domain_error("hashes_per_second: clock period must be positive");
    return ni * 1e9 / (80.0 * blocks_per_candidate * ts_ns);
}

void KeyspaceSpec::validate() const {
    if (alphabet.empty())
        throw std::invalid_argument("keyspace: alphabet is empty");
    std::array<bool, 256> seen{};
    for (unsigned char c : alphabet) {
        if (seen[c])
            throw std::invalid_argument("keyspace: duplicate alphabet symbol");
        seen[c] = true;
    }
}

std::uint64_t KeyspaceSpec::size() const {
    validate();
    if (length == 0)
        return 0; // empty keyspace
    constexpr std::uint64_t kLimit = std::uint64_t{1} << 63;
    std::uint64_t n = 1;
    for (std::uint32_t i = 0; i < length; ++i) {
        if (n > kLimit / alphabet.size())
            throw std::overflow_error("keyspace: size exceeds 2^63");
        n *= alphabet.size();
    }
    return n;
}

std::string KeyspaceSpec::candidate(std::uint64_t index) const {
    if (index >= size())
        throw std::out_of_range("keyspace: candidate index past end");
    std::string out(length, alphabet[0]);
    for (std::uint32_t pos = length; pos-- > 0;) {
        out[pos] = alphabet[index % alphabet.size()];
        index /= alphabet.size();
    }
    return out;
}

std::chrono::duration<double> predict_crack_time(const KeyspaceSpec& spec, int ni,
                                                 double ts_ns) {
    if (spec.length > 55)
        throw std::domain_error(
            "predict_crack_time: candidates longer than one padded block");
    const std::uint64_t n = spec.size();
    return std::chrono::duration<double>(static_cast<double>(n) /
                                         hashes_per_second(ni, ts_ns, 1));
}

} // namespace sha1assp
