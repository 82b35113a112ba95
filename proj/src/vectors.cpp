// Copyright (c) 2026 the sha1assp authors
// SPDX-License-Identifier: Apache-2.0

#include "sha1assp/vectors.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>
#include <string>

namespace sha1assp {

namespace {

int hex_value(char c) noexcept {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::vector<std::uint8_t> parse_hex_bytes(std::string_view hex) {
    if (hex.size() % 2 != 0)
        throw std::invalid_argument("vector record: odd-length hex message");
    std::vector<std::uint8_t> out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int hi = hex_value(hex[2 * i]);
        const int lo = hex_value(hex[2 * i + 1]);
        if (hi < 0 || lo < 0)
            throw std::invalid_argument("vector record: bad hex digit in message");
        out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
    }
    return out;
}

std::string_view skip_ws(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    return s;
}

BitMessage parse_message_token(std::string_view token) {
    if (token.front() == '"') {
        if (token.size() < 2 || token.back() != '"')
            throw std::invalid_argument("vector record: unterminated quoted message");
        return BitMessage::from_string(token.substr(1, token.size() - 2));
    }
    const std::size_t colon = token.find(':');
    if (colon == std::string_view::npos)
        return BitMessage::from_bytes(parse_hex_bytes(token));
    const auto bytes = parse_hex_bytes(token.substr(0, colon));
    const std::string_view len_text = token.substr(colon + 1);
    if (len_text.empty())
        throw std::invalid_argument("vector record: missing bit length");
    std::uint64_t bit_len = 0;
    for (char c : len_text) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("vector record: bad bit length");
        bit_len = bit_len * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return BitMessage::from_bits(bytes, bit_len);
}

} // namespace

std::optional<TestVector> parse_vector_line(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    line = skip_ws(line);
    if (line.empty() || line.front() == '#')
        return std::nullopt;

    // message token: quoted strings may contain '#' and spaces
    std::size_t end;
    if (line.front() == '"') {
        end = line.find('"', 1);
        if (end == std::string_view::npos)
            throw std::invalid_argument("vector record: unterminated quoted message");
        ++end;
    } else {
        end = std::min(line.find_first_of(" \t"), line.size());
    }
    const std::string_view msg_token = line.substr(0, end);
    std::string_view rest = skip_ws(line.substr(end));

    const std::size_t dig_end = std::min(rest.find_first_of(" \t"), rest.size());
    const std::string_view digest_token = rest.substr(0, dig_end);
    const std::string_view tail = skip_ws(rest.substr(dig_end));
    if (!tail.empty() && tail.front() != '#')
        throw std::invalid_argument("vector record: trailing junk");

    const auto expected = Digest::from_hex(digest_token);
    if (!expected)
        throw std::invalid_argument("vector record: expected a 40-hex-digit digest");
    return TestVector{parse_message_token(msg_token), *expected};
}

std::vector<TestVector> load_vector_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read vector file: " + path.string());
    std::vector<TestVector> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        try {
            if (auto v = parse_vector_line(line))
                out.push_back(std::move(*v));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(path.string() + ":" + std::to_string(lineno) +
                                        ": " + e.what());
        }
    }
    return out;
}

} // namespace sha1assp
