#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "discont/word.hpp"

namespace discont::detail {

/// One non-blank line with `#` comments stripped.
struct Line {
    std::size_t number = 0;
    std::vector<std::string> tokens;
    std::string key;                ///< first token minus a trailing ':' (empty if it has none)
    std::vector<std::string> rest;  ///< tokens after the key
};

std::vector<Line> logical_lines(std::string_view text);

/// Symbol-name tokens to a word; a single `_` is ε. Names must match exactly.
Word parse_label(const Alphabet& alphabet, const std::vector<std::string>& tokens, std::size_t line);

}  // namespace discont::detail
