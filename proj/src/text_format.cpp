#include "text_format.hpp"

#include <sstream>

namespace discont::detail {

std::vector<Line> logical_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::istringstream in{std::string(raw)};
        Line ln;
        ln.number = number;
        for (std::string tok; in >> tok;) ln.tokens.push_back(tok);
        if (ln.tokens.empty()) continue;
        if (ln.tokens.front().size() > 1 && ln.tokens.front().back() == ':') {
            ln.key = ln.tokens.front().substr(0, ln.tokens.front().size() - 1);
            ln.rest.assign(ln.tokens.begin() + 1, ln.tokens.end());
        }
        out.push_back(std::move(ln));
    }
    return out;
}

Word parse_label(const Alphabet& alphabet, const std::vector<std::string>& tokens, std::size_t line) {
    if (tokens.size() == 1 && tokens.front() == "_") return {};
    Word w;
    for (const auto& t : tokens) {
        if (!alphabet.contains(t)) throw ParseError(line, "unknown symbol '" + t + "'");
        w.push_back(alphabet.at(t));
    }
    return w;
}

}  // namespace discont::detail
