#pragma once

// Line-oriented text parsing shared by the file loaders.

#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "localhk/error.hpp"
#include "localhk/graph.hpp"

namespace localhk::detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline OriginalId parse_label(std::string_view token, std::size_t line) {
    OriginalId value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError("expected a non-negative integer vertex id, got '" + std::string(token) + "'",
                         line);
    }
    return value;
}

// Calls fn(tokens, line_number) for every non-comment, non-blank line.
template <class Fn>
void for_each_record(std::istream& in, Fn&& fn) {
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto body = trim(raw);
        if (body.empty() || body.front() == '#') continue;
        fn(split_ws(body), line);
    }
}

inline std::ifstream open_or_throw(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    return in;
}

inline double parse_real(std::string_view token, std::size_t line) {
    double value = 0.0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError("expected a decimal number, got '" + std::string(token) + "'", line);
    }
    return value;
}

}  // namespace localhk::detail
