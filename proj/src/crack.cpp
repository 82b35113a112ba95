// Copyright (c) 2026 the sha1assp authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <vector>

#include "sha1_kernel.hpp"
#include "sha1assp/datapath_sim.hpp"
#include "sha1assp/perf_model.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sha1assp {

namespace {

constexpr std::uint64_t kNoMatch = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kPollChunk = 2048; // candidates between early-exit polls

// Enumerates candidates as an incrementing odometer over the alphabet,
// avoiding per-candidate div/mod.
class Odometer {
public:
    Odometer(const KeyspaceSpec& spec, std::uint64_t index)
        : alphabet_(spec.alphabet), text_(spec.length, '\0'), digit_(spec.length, 0) {
        for (std::size_t pos = text_.size(); pos-- > 0;) {
            digit_[pos] = static_cast<std::uint32_t>(index % alphabet_.size());
            text_[pos] = alphabet_[digit_[pos]];
            index /= alphabet_.size();
        }
    }

    const std::string& text() const noexcept { return text_; }

    void advance() noexcept {
        for (std::size_t pos = text_.size(); pos-- > 0;) {
            if (++digit_[pos] < alphabet_.size()) {
                text_[pos] = alphabet_[digit_[pos]];
                return;
            }
            digit_[pos] = 0;
            text_[pos] = alphabet_[0];
        }
    }

private:
    const std::string& alphabet_;
    std::string text_;
    std::vector<std::uint32_t> digit_;
};

// Candidates up to 55 bytes pad into one fixed block: only the candidate
// bytes change between hashes.
class SingleBlockScanner {
public:
    explicit SingleBlockScanner(std::uint32_t length) : length_(length) {
        buf_[length_] = 0x80;
        detail::store_be32(buf_.data() + 60, static_cast<word32>(length_) * 8);
    }

    bool matches(const std::string& text, const Digest& target) noexcept {
        std::memcpy(buf_.data(), text.data(), length_);
        const Digest h0 = initial_digest();
        word32 s[5] = {h0.ha, h0.hb, h0.hc, h0.hd, h0.he};
        detail::compress(s, buf_.data());
        return s[0] == target.ha && s[1] == target.hb && s[2] == target.hc &&
               s[3] == target.hd && s[4] == target.he;
    }

private:
    std::array<std::uint8_t, 64> buf_{};
    std::uint32_t length_;
};

void atomic_min(std::atomic<std::uint64_t>& best, std::uint64_t value) noexcept {
    std::uint64_t cur = best.load(std::memory_order_relaxed);
    while (value < cur &&
           !best.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
    }
}

std::pair<std::uint64_t, std::uint64_t> partition_range(std::uint64_t total, int parts,
                                                        int index) noexcept {
    const auto p = static_cast<std::uint64_t>(parts);
    const auto i = static_cast<std::uint64_t>(index);
    return {total * i / p, total * (i + 1) / p};
}

template <typename Matches>
void scan_range(std::uint64_t lo, std::uint64_t hi, const KeyspaceSpec& spec,
                std::atomic<std::uint64_t>& best, Matches&& matches) {
    if (lo >= hi)
        return;
    Odometer odo(spec, lo);
    std::uint64_t i = lo;
    while (i < hi) {
        if (best.load(std::memory_order_relaxed) < i)
            return; // a smaller match exists; nothing above can beat it
        const std::uint64_t stop = std::min(hi, i + kPollChunk);
        for (; i < stop; ++i, odo.advance()) {
            if (matches(odo.text())) {
                atomic_min(best, i);
                return; // later indices in this range cannot beat i
            }
        }
    }
}

void scan_with_engine(std::uint64_t lo, std::uint64_t hi, const KeyspaceSpec& spec,
                      const Digest& target, CrackEngine engine,
                      std::atomic<std::uint64_t>& best) {
    if (engine == CrackEngine::fast) {
        if (spec.length <= 55) {
            SingleBlockScanner scanner(spec.length);
            scan_range(lo, hi, spec, best,
                       [&](const std::string& t) { return scanner.matches(t, target); });
        } else {
            scan_range(lo, hi, spec, best,
                       [&](const std::string& t) { return sha1(t) == target; });
        }
    } else {
        DatapathSim sim;
        scan_range(lo, hi, spec, best, [&](const std::string& t) {
            sim.reset(preprocess(BitMessage::from_string(t)));
            return sim.run_to_completion().first == target;
        });
    }
}

int blocks_per_candidate(std::uint32_t length_bytes) noexcept {
    const std::uint64_t bits = std::uint64_t{8} * length_bytes;
    return static_cast<int>((bits + padding_len(bits) + 64) / 512);
}

CrackResult finish(const KeyspaceSpec& spec, std::uint64_t total, std::uint64_t best,
                   std::chrono::duration<double> wall,
                   std::chrono::duration<double> predicted) {
    CrackResult r;
    r.wall_time = wall;
    r.predicted_time = predicted;
    if (best != kNoMatch) {
        r.found = spec.candidate(best);
        r.candidates_tested = best + 1;
    } else {
        r.candidates_tested = total;
    }
    return r;
}

std::uint64_t checked_size(const KeyspaceSpec& spec) {
    spec.validate();
    const std::uint64_t total = spec.size();
    if (total > kMaxCrackKeyspace)
        throw std::length_error("crack: keyspace too large to enumerate");
    return total;
}

} // namespace

CrackResult crack(const Digest& target, const KeyspaceSpec& spec, int workers,
                  CrackEngine engine, int model_ni, double model_ts_ns) {
    if (workers < 1)
        throw std::invalid_argument("crack: worker count must be positive");
    const std::uint64_t total = checked_size(spec);
    const auto predicted = std::chrono::duration<double>(
        static_cast<double>(total) /
        hashes_per_second(model_ni, model_ts_ns, blocks_per_candidate(spec.length)));

    std::atomic<std::uint64_t> best{kNoMatch};
    const auto start = std::chrono::steady_clock::now();
    if (total > 0) {
#ifdef _OPENMP
#pragma omp parallel num_threads(workers)
        {
            const int team = omp_get_num_threads();
            const auto [lo, hi] = partition_range(total, team, omp_get_thread_num());
            scan_with_engine(lo, hi, spec, target, engine, best);
        }
#else
        for (int w = 0; w < workers; ++w) {
            const auto [lo, hi] = partition_range(total, workers, w);
            scan_with_engine(lo, hi, spec, target, engine, best);
        }
#endif
    }
    const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;
    return finish(spec, total, best.load(), wall, predicted);
}

CrackResult crack_serial(const Digest& target, const KeyspaceSpec& spec, CrackEngine engine,
                         int model_ni, double model_ts_ns) {
    const std::uint64_t total = checked_size(spec);
    const auto predicted = std::chrono::duration<double>(
        static_cast<double>(total) /
        hashes_per_second(model_ni, model_ts_ns, blocks_per_candidate(spec.length)));

    std::atomic<std::uint64_t> best{kNoMatch};
    const auto start = std::chrono::steady_clock::now();
    if (total > 0)
        scan_with_engine(0, total, spec, target, engine, best);
    const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;
    return finish(spec, total, best.load(), wall, predicted);
}

double bench_fast_engine(double seconds, int threads) {
    if (threads < 1 || !(seconds > 0))
        throw std::domain_error("bench: positive duration and thread count required");
    const KeyspaceSpec spec{"abcdefghijklmnopqrstuvwxyz", 8};
    const Digest never = {~0u, ~0u, ~0u, ~0u, ~0u}; // unreachable target
    std::atomic<std::uint64_t> hashed{0};
    const auto deadline =
        std::chrono::steady_clock::now() + std::chrono::duration<double>(seconds);
    const auto start = std::chrono::steady_clock::now();
#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
#endif
    {
        SingleBlockScanner scanner(spec.length);
#ifdef _OPENMP
        Odometer odo(spec, static_cast<std::uint64_t>(omp_get_thread_num()) << 32);
#else
        Odometer odo(spec, 0);
#endif
        std::uint64_t local = 0;
        bool hit = false;
        while (std::chrono::steady_clock::now() < deadline) {
            for (int i = 0; i < 4096; ++i, odo.advance()) {
                hit |= scanner.matches(odo.text(), never);
                ++local;
            }
        }
        hashed.fetch_add(hit ? local + 1 : local); // keep the hash live
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return static_cast<double>(hashed.load()) / elapsed.count();
}

double bench_datapath_engine(double seconds) {
    if (!(seconds > 0))
        throw std::domain_error("bench: positive duration required");
    const PaddedMessage padded = preprocess(BitMessage::from_string("aaaaaaaa"));
    const Digest expect = sha1(std::string_view("aaaaaaaa"));
    std::uint64_t hashed = 0;
    DatapathSim sim;
    const auto deadline =
        std::chrono::steady_clock::now() + std::chrono::duration<double>(seconds);
    const auto start = std::chrono::steady_clock::now();
    while (std::chrono::steady_clock::now() < deadline) {
        for (int i = 0; i < 16; ++i) {
            sim.reset(padded);
            if (sim.run_to_completion().first != expect)
                throw std::logic_error("bench: datapath digest mismatch");
            ++hashed;
        }
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return static_cast<double>(hashed) / elapsed.count();
}

} // namespace sha1assp
