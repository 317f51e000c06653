#pragma once

#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <system_error>

namespace pvbess {

// Shortest decimal representation that parses back to the same double.
// Locale-independent; used for all CSV/JSON-adjacent number output so that
// identical runs produce byte-identical files.
inline std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc()) throw std::runtime_error("format_double: to_chars failed");
    return std::string(buf, res.ptr);
}

// Strict double parse of a whole token (leading/trailing whitespace allowed).
inline bool parse_double(std::string_view token, double& out) {
    size_t b = token.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return false;
    size_t e = token.find_last_not_of(" \t\r");
    token = token.substr(b, e - b + 1);
    auto res = std::from_chars(token.data(), token.data() + token.size(), out);
    return res.ec == std::errc() && res.ptr == token.data() + token.size();
}

} // namespace pvbess
