#include "discont/word.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <limits>
#include <sstream>

namespace discont {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_symbol: return "invalid-symbol";
        case ErrorKind::invalid_position: return "invalid-position";
        case ErrorKind::alphabet_mismatch: return "alphabet-mismatch";
        case ErrorKind::parse_error: return "parse-error";
        case ErrorKind::not_gnf: return "not-gnf";
        case ErrorKind::unknown_symbol: return "unknown-symbol";
        case ErrorKind::empty_rule_set: return "empty-rule-set";
        case ErrorKind::empty_input: return "empty-input";
        case ErrorKind::not_derivable: return "not-derivable";
        case ErrorKind::not_applicable: return "not-applicable";
        case ErrorKind::invalid_parameters: return "invalid-parameters";
        case ErrorKind::unknown_suite: return "unknown-suite";
        case ErrorKind::filter_on_nonbinary: return "filter-on-nonbinary";
        case ErrorKind::not_clearing: return "not-clearing";
    }
    return "unknown";
}

Word power(const Word& w, std::size_t n) {
    std::u16string out;
    out.reserve(w.size() * n);
    for (std::size_t i = 0; i < n; ++i) out += w.raw();
    return Word(std::move(out));
}

bool is_reserved_token(std::string_view name) {
    static constexpr std::array<std::string_view, 6> reserved{"^", "$", "_", "#", "|", "->"};
    return std::ranges::find(reserved, name) != reserved.end();
}

namespace {

void check_name(std::string_view name) {
    if (name.empty()) throw Error(ErrorKind::invalid_symbol, "empty symbol name");
    if (is_reserved_token(name))
        throw Error(ErrorKind::invalid_symbol, "symbol name '" + std::string(name) + "' is reserved");
    for (char c : name) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f')
            throw Error(ErrorKind::invalid_symbol, "symbol name '" + std::string(name) + "' contains whitespace");
        if (c == '#') throw Error(ErrorKind::invalid_symbol, "symbol name '" + std::string(name) + "' contains '#'");
    }
}

std::vector<std::string_view> split_ws(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j > i) out.push_back(text.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) {
    for (auto& n : names) add(std::move(n));
}

Symbol Alphabet::add(std::string name) {
    check_name(name);
    if (index_.contains(name)) throw Error(ErrorKind::invalid_symbol, "duplicate symbol '" + name + "'");
    if (names_.size() >= std::numeric_limits<Symbol>::max())
        throw Error(ErrorKind::invalid_symbol, "alphabet too large");
    auto s = static_cast<Symbol>(names_.size());
    index_.emplace(name, s);
    names_.push_back(std::move(name));
    return s;
}

Symbol Alphabet::at(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) throw Error(ErrorKind::alphabet_mismatch, "unknown symbol '" + std::string(name) + "'");
    return it->second;
}

SymbolSet Alphabet::all() const {
    SymbolSet out;
    for (std::size_t i = 0; i < names_.size(); ++i) out.insert(static_cast<Symbol>(i));
    return out;
}

bool Alphabet::owns(const Word& w) const {
    return std::ranges::all_of(w, [&](Symbol s) { return s < names_.size(); });
}

Word Alphabet::word(std::initializer_list<std::string_view> names) const {
    Word w;
    for (auto n : names) w.push_back(at(n));
    return w;
}

Word Alphabet::parse(std::string_view text) const {
    Word w;
    auto tokens = split_ws(text);
    if (tokens.size() == 1 && tokens[0] == "_") return w;
    for (auto tok : tokens) {
        if (tok == "_") throw Error(ErrorKind::alphabet_mismatch, "'_' (empty word) must stand alone");
        if (auto it = index_.find(std::string(tok)); it != index_.end()) {
            w.push_back(it->second);
            continue;
        }
        // Greedy longest-match split of a run of concatenated names.
        std::size_t i = 0;
        while (i < tok.size()) {
            std::size_t best = 0;
            Symbol best_sym = 0;
            for (std::size_t s = 0; s < names_.size(); ++s) {
                const auto& n = names_[s];
                if (n.size() > best && tok.substr(i).starts_with(n)) {
                    best = n.size();
                    best_sym = static_cast<Symbol>(s);
                }
            }
            if (best == 0)
                throw Error(ErrorKind::alphabet_mismatch,
                            "cannot read '" + std::string(tok.substr(i)) + "' as symbols of the alphabet");
            w.push_back(best_sym);
            i += best;
        }
    }
    return w;
}

std::string Alphabet::format(const Word& w) const {
    if (w.empty()) return "_";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += name(w[i]);
    }
    return out;
}

std::string Alphabet::compact(const Word& w) const {
    if (!std::ranges::all_of(names_, [](const std::string& n) { return n.size() == 1; })) return format(w);
    if (w.empty()) return "_";
    std::string out;
    for (Symbol s : w) out += name(s);
    return out;
}

std::vector<std::size_t> occurrences(const Word& host, const Word& piece) {
    std::vector<std::size_t> out;
    if (piece.size() > host.size()) return out;
    auto h = host.view();
    for (std::size_t p = 0; p + piece.size() <= host.size(); ++p)
        if (h.substr(p, piece.size()) == piece.view()) out.push_back(p + 1);
    return out;
}

Word delete_at(const Word& host, const Word& piece, std::size_t position) {
    if (position < 1 || position - 1 + piece.size() > host.size() ||
        host.view().substr(position - 1, piece.size()) != piece.view())
        throw Error(ErrorKind::invalid_position,
                    "no occurrence of the factor at position " + std::to_string(position));
    std::u16string out = host.raw();
    out.erase(position - 1, piece.size());
    return Word(std::move(out));
}

Word insert_at(const Word& host, const Word& piece, std::size_t position) {
    if (position < 1 || position > host.size() + 1)
        throw Error(ErrorKind::invalid_position, "insertion position " + std::to_string(position) + " out of range");
    std::u16string out = host.raw();
    out.insert(position - 1, piece.raw());
    return Word(std::move(out));
}

WordSet insertions(const Word& host, const Word& piece) {
    WordSet out;
    for (std::size_t p = 1; p <= host.size() + 1; ++p) out.insert(insert_at(host, piece, p));
    return out;
}

WordSet insert_closure(const Word& seed, std::span<const Word> pieces, std::size_t maxlen) {
    WordSet seen{seed};
    if (seed.size() > maxlen) return {};
    std::deque<Word> frontier{seed};
    while (!frontier.empty()) {
        Word w = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& piece : pieces) {
            if (w.size() + piece.size() > maxlen) continue;
            for (auto& y : insertions(w, piece))
                if (seen.insert(y).second) frontier.push_back(y);
        }
    }
    return seen;
}

Word project(const Word& w, const SymbolSet& sub) {
    Word out;
    for (Symbol s : w)
        if (sub.contains(s)) out.push_back(s);
    return out;
}

std::vector<Word> all_words(std::size_t alphabet_size, std::size_t n) {
    std::vector<Word> out;
    if (alphabet_size == 0) {
        if (n == 0) out.emplace_back();
        return out;
    }
    std::u16string cur(n, 0);
    while (true) {
        out.emplace_back(cur);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (static_cast<std::size_t>(cur[i]) + 1 < alphabet_size) {
                ++cur[i];
                std::fill(cur.begin() + static_cast<std::ptrdiff_t>(i) + 1, cur.end(), Symbol{0});
                break;
            }
            if (i == 0) return out;
        }
        if (n == 0) return out;
    }
}

std::vector<Word> all_words_up_to(std::size_t alphabet_size, std::size_t n) {
    std::vector<Word> out;
    for (std::size_t len = 0; len <= n; ++len) {
        auto layer = all_words(alphabet_size, len);
        out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
    }
    return out;
}

}  // namespace discont
