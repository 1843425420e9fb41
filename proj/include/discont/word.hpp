#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "discont/error.hpp"

namespace discont {

/// A symbol is its index in the owning alphabet. Index order is declaration
/// order, which is also the tie-break order of shortlex.
using Symbol = char16_t;

/// Immutable-by-convention word over some alphabet. Positions in the public
/// API are 1-indexed; `operator[]` is 0-indexed like any container.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}
    explicit Word(std::u16string symbols) : symbols_(std::move(symbols)) {}
    explicit Word(std::span<const Symbol> symbols) : symbols_(symbols.begin(), symbols.end()) {}

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    /// 0-indexed factor view.
    std::u16string_view view() const noexcept { return symbols_; }
    Word factor(std::size_t offset, std::size_t count) const { return Word(symbols_.substr(offset, count)); }
    bool has_prefix(const Word& p) const { return view().starts_with(p.view()); }
    bool has_suffix(const Word& s) const { return view().ends_with(s.view()); }

    Word operator+(const Word& rhs) const { return Word(symbols_ + rhs.symbols_); }
    Word& operator+=(const Word& rhs) {
        symbols_ += rhs.symbols_;
        return *this;
    }
    Word& push_back(Symbol s) {
        symbols_.push_back(s);
        return *this;
    }

    friend bool operator==(const Word&, const Word&) = default;

    const std::u16string& raw() const noexcept { return symbols_; }

private:
    std::u16string symbols_;
};

/// `w` repeated `n` times.
Word power(const Word& w, std::size_t n);

/// Shortlex: length first, then lexicographic by symbol index.
struct Shortlex {
    bool operator()(const Word& a, const Word& b) const noexcept {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.raw() < b.raw();
    }
};

using WordSet = std::set<Word, Shortlex>;

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept { return std::hash<std::u16string>{}(w.raw()); }
};

using SymbolSet = std::set<Symbol>;

bool is_reserved_token(std::string_view name);

/// Ordered set of named symbols. Names are non-empty, whitespace-free and
/// never one of the reserved tokens `^ $ _ # | ->`.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    /// Appends a new symbol; throws invalid_symbol on a bad or duplicate name.
    Symbol add(std::string name);

    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }
    const std::string& name(Symbol s) const { return names_.at(s); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    bool contains(std::string_view name) const { return index_.contains(std::string(name)); }
    Symbol at(std::string_view name) const;
    SymbolSet all() const;

    /// True iff every symbol of `w` is a valid index here.
    bool owns(const Word& w) const;

    /// Word from a list of symbol names.
    Word word(std::initializer_list<std::string_view> names) const;

    /// Parses whitespace-separated symbol names; a lone `_` is ε. Tokens that
    /// are not symbol names are split greedily into known names, so "0100"
    /// reads the same as "0 1 0 0" over {0, 1}.
    Word parse(std::string_view text) const;

    /// Whitespace-separated names, `_` for ε.
    std::string format(const Word& w) const;

    /// Names concatenated without separators when every name is one byte,
    /// otherwise the same as format().
    std::string compact(const Word& w) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Symbol> index_;
};

/// Ascending 1-indexed start positions of `piece` in `host`, overlaps included.
std::vector<std::size_t> occurrences(const Word& host, const Word& piece);

/// Removes the occurrence of `piece` starting at 1-indexed `position`.
Word delete_at(const Word& host, const Word& piece, std::size_t position);

/// Inserts `piece` before 1-indexed `position` (|host|+1 appends).
Word insert_at(const Word& host, const Word& piece, std::size_t position);

/// host ← piece, deduplicated.
WordSet insertions(const Word& host, const Word& piece);

/// The fragment of seed ←* pieces with length at most `maxlen`.
WordSet insert_closure(const Word& seed, std::span<const Word> pieces, std::size_t maxlen);

/// Subsequence of `w` made of the symbols in `sub`.
Word project(const Word& w, const SymbolSet& sub);

/// Every word over `alphabet` of length exactly `n`, in shortlex order.
std::vector<Word> all_words(std::size_t alphabet_size, std::size_t n);

/// Every word over `alphabet` of length at most `n`, in shortlex order.
std::vector<Word> all_words_up_to(std::size_t alphabet_size, std::size_t n);

}  // namespace discont
