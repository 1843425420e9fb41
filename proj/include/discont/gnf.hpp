#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "discont/word.hpp"

namespace discont {

struct GnfRule {
    Symbol lhs = 0;
    Word rhs;

    friend bool operator==(const GnfRule&, const GnfRule&) = default;
};

/// Context-free grammar expected to be in Greibach normal form. Terminals and
/// nonterminals share one alphabet: terminals occupy indices
/// [0, terminal_count), nonterminals follow in declaration order A_1..A_m.
class GnfGrammar {
public:
    GnfGrammar(std::vector<std::string> terminals, std::vector<std::string> nonterminals, std::string_view start,
               std::vector<GnfRule> rules);

    const Alphabet& symbols() const noexcept { return symbols_; }
    std::size_t terminal_count() const noexcept { return terminal_count_; }
    std::size_t nonterminal_count() const noexcept { return symbols_.size() - terminal_count_; }
    bool is_terminal(Symbol s) const noexcept { return s < terminal_count_; }
    bool is_nonterminal(Symbol s) const noexcept { return s >= terminal_count_ && s < symbols_.size(); }
    /// A_{i+1} for i in [0, m).
    Symbol nonterminal(std::size_t i) const { return static_cast<Symbol>(terminal_count_ + i); }
    /// 0-based position of a nonterminal in the A_1..A_m order.
    std::size_t nonterminal_index(Symbol s) const { return s - terminal_count_; }
    SymbolSet terminals() const;
    SymbolSet nonterminals() const;
    Symbol start() const noexcept { return start_; }
    const std::vector<GnfRule>& rules() const noexcept { return rules_; }

    /// Builds a word from names; convenience for tests and tools.
    Word word(std::initializer_list<std::string_view> names) const { return symbols_.word(names); }

private:
    Alphabet symbols_;
    std::size_t terminal_count_;
    Symbol start_;
    std::vector<GnfRule> rules_;
};

struct GrammarIssue {
    ErrorKind kind;
    std::optional<std::size_t> rule;  ///< 0-based index of the offending rule
    std::string message;
};

/// First violated invariant, or nullopt when the grammar is well formed GNF.
std::optional<GrammarIssue> validate(const GnfGrammar& g);

/// Throws the issue reported by validate(), if any.
void require_valid(const GnfGrammar& g);

/// Membership by memoized search over (input position, nonterminal stack).
bool derives(const GnfGrammar& g, const Word& w);

/// Lexicographically first leftmost derivation as rule indices; its length is
/// |w| whenever present.
std::optional<std::vector<std::size_t>> leftmost_derivation(const GnfGrammar& g, const Word& w);

GnfGrammar parse_gnf(std::string_view text);
std::string write_gnf(const GnfGrammar& g);

}  // namespace discont
