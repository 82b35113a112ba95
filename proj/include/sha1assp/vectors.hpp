// Copyright (c) 2026 the sha1assp authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "sha1assp/sha1.hpp"

/// Test-vector file format: one record per line,
///
///   <message> <expected-40-hex-digest>
///
/// where <message> is a double-quoted ASCII string (no escapes), a hex
/// byte string, or `<hex>:<bit_len>` truncating the hex bytes to bit_len
/// bits. `#` starts a comment; blank lines are skipped.
namespace sha1assp {

struct TestVector {
    BitMessage message;
    Digest expected;
};

/// Parses one line. Returns nullopt for blank and comment lines; throws
/// std::invalid_argument on a malformed record.
std::optional<TestVector> parse_vector_line(std::string_view line);

/// Loads every record of a vector file. Throws std::runtime_error when
/// the file cannot be read, std::invalid_argument (with the line number)
/// on a malformed record.
std::vector<TestVector> load_vector_file(const std::filesystem::path& path);

} // namespace sha1assp
