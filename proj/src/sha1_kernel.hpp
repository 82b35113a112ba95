// Copyright (c) 2026 the sha1assp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "sha1assp/sha1.hpp"

namespace sha1assp::detail {

inline word32 load_be32(const std::uint8_t* p) noexcept {
    return static_cast<word32>(p[0]) << 24 | static_cast<word32>(p[1]) << 16 |
           static_cast<word32>(p[2]) << 8 | static_cast<word32>(p[3]);
}

inline void store_be32(std::uint8_t* p, word32 v) noexcept {
    p[0] = static_cast<std::uint8_t>(v >> 24);
    p[1] = static_cast<std::uint8_t>(v >> 16);
    p[2] = static_cast<std::uint8_t>(v >> 8);
    p[3] = static_cast<std::uint8_t>(v);
}

/// Fast single-block compression over a raw 64-byte block. Ring-buffered
/// word schedule, stage-split round loops. Kept separate from the
/// equation-shaped compress_block so the two can be tested against each
/// other and benchmarked side by side.
void compress(word32 state[5], const std::uint8_t block[64]) noexcept;

} // namespace sha1assp::detail
