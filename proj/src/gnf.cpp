#include "discont/gnf.hpp"

#include <unordered_set>

#include "text_format.hpp"

namespace discont {

GnfGrammar::GnfGrammar(std::vector<std::string> terminals, std::vector<std::string> nonterminals,
                       std::string_view start, std::vector<GnfRule> rules)
    : terminal_count_(terminals.size()), rules_(std::move(rules)) {
    for (auto& t : terminals) symbols_.add(std::move(t));
    for (auto& n : nonterminals) symbols_.add(std::move(n));
    if (nonterminal_count() == 0) throw Error(ErrorKind::invalid_parameters, "grammar has no nonterminals");
    start_ = symbols_.at(start);
    if (!is_nonterminal(start_))
        throw Error(ErrorKind::invalid_parameters, "start symbol '" + std::string(start) + "' is not a nonterminal");
}

SymbolSet GnfGrammar::terminals() const {
    SymbolSet out;
    for (std::size_t i = 0; i < terminal_count_; ++i) out.insert(static_cast<Symbol>(i));
    return out;
}

SymbolSet GnfGrammar::nonterminals() const {
    SymbolSet out;
    for (std::size_t i = 0; i < nonterminal_count(); ++i) out.insert(nonterminal(i));
    return out;
}

std::optional<GrammarIssue> validate(const GnfGrammar& g) {
    if (g.rules().empty()) return GrammarIssue{ErrorKind::empty_rule_set, std::nullopt, "grammar has no rules"};
    const auto& names = g.symbols();
    for (std::size_t i = 0; i < g.rules().size(); ++i) {
        const auto& r = g.rules()[i];
        auto describe = [&] {
            std::string lhs = r.lhs < names.size() ? names.name(r.lhs) : "?";
            std::string rhs = names.owns(r.rhs) ? names.format(r.rhs) : "?";
            return "rule " + std::to_string(i + 1) + " (" + lhs + " -> " + rhs + ")";
        };
        if (r.lhs >= names.size() || !names.owns(r.rhs))
            return GrammarIssue{ErrorKind::unknown_symbol, i, describe() + " uses an undeclared symbol"};
        if (!g.is_nonterminal(r.lhs))
            return GrammarIssue{ErrorKind::not_gnf, i, describe() + ": left-hand side must be a nonterminal"};
        if (r.rhs.empty())
            return GrammarIssue{ErrorKind::not_gnf, i, describe() + ": empty right-hand side"};
        if (!g.is_terminal(r.rhs[0]))
            return GrammarIssue{ErrorKind::not_gnf, i, describe() + ": right-hand side must start with a terminal"};
        for (std::size_t k = 1; k < r.rhs.size(); ++k)
            if (!g.is_nonterminal(r.rhs[k]))
                return GrammarIssue{ErrorKind::not_gnf, i,
                                    describe() + ": only nonterminals may follow the leading terminal"};
    }
    return std::nullopt;
}

void require_valid(const GnfGrammar& g) {
    if (auto issue = validate(g)) throw Error(issue->kind, issue->message);
}

namespace {

// Stack with its top at the back.
struct ParseState {
    std::size_t pos;
    Word stack;
    friend bool operator==(const ParseState&, const ParseState&) = default;
};

struct ParseStateHash {
    std::size_t operator()(const ParseState& s) const noexcept { return WordHash{}(s.stack) * 131 + s.pos; }
};

class LeftmostSearch {
public:
    LeftmostSearch(const GnfGrammar& g, const Word& w) : g_(g), w_(w) {}

    bool run(std::size_t pos, Word stack) {
        if (stack.empty()) return pos == w_.size();
        // Each stacked nonterminal consumes at least one terminal.
        if (stack.size() > w_.size() - pos) return false;
        if (!failed_.insert(ParseState{pos, stack}).second) return false;
        Symbol top = stack[stack.size() - 1];
        Word below = stack.factor(0, stack.size() - 1);
        for (std::size_t r = 0; r < g_.rules().size(); ++r) {
            const auto& rule = g_.rules()[r];
            if (rule.lhs != top || rule.rhs.empty() || rule.rhs[0] != w_[pos]) continue;
            Word next = below;
            for (std::size_t k = rule.rhs.size(); k > 1; --k) next.push_back(rule.rhs[k - 1]);
            path_.push_back(r);
            if (run(pos + 1, std::move(next))) return true;
            path_.pop_back();
        }
        return false;
    }

    std::vector<std::size_t> path() const { return path_; }

private:
    const GnfGrammar& g_;
    const Word& w_;
    std::unordered_set<ParseState, ParseStateHash> failed_;
    std::vector<std::size_t> path_;
};

void require_terminal_word(const GnfGrammar& g, const Word& w) {
    for (Symbol s : w)
        if (!g.is_terminal(s)) throw Error(ErrorKind::alphabet_mismatch, "word contains a non-terminal symbol");
}

}  // namespace

std::optional<std::vector<std::size_t>> leftmost_derivation(const GnfGrammar& g, const Word& w) {
    require_terminal_word(g, w);
    LeftmostSearch search(g, w);
    if (search.run(0, Word{g.start()})) return search.path();
    return std::nullopt;
}

bool derives(const GnfGrammar& g, const Word& w) { return leftmost_derivation(g, w).has_value(); }

GnfGrammar parse_gnf(std::string_view text) {
    auto lines = detail::logical_lines(text);
    if (lines.empty() || lines.front().tokens != std::vector<std::string>{"gnf"})
        throw ParseError(lines.empty() ? 0 : lines.front().number, "expected header 'gnf'");
    std::vector<std::string> terminals, nonterminals;
    std::optional<std::string> start;
    std::size_t start_line = 0;
    struct RawRule {
        std::size_t line;
        std::vector<std::string> tokens;
    };
    std::vector<RawRule> raw;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& ln = lines[i];
        if (ln.key == "terminals") {
            terminals = ln.rest;
        } else if (ln.key == "nonterminals") {
            nonterminals = ln.rest;
        } else if (ln.key == "start") {
            if (ln.rest.size() != 1) throw ParseError(ln.number, "'start:' takes exactly one nonterminal");
            start = ln.rest.front();
            start_line = ln.number;
        } else if (ln.key == "rule") {
            raw.push_back({ln.number, ln.rest});
        } else {
            throw ParseError(ln.number, "unknown directive '" + (ln.key.empty() ? ln.tokens.front() : ln.key) + "'");
        }
    }
    if (!start) throw ParseError(0, "missing 'start:' line");
    auto g = [&] {
        try {
            return GnfGrammar(terminals, nonterminals, *start, {});
        } catch (const Error& e) {
            throw ParseError(start_line, e.what());
        }
    }();
    std::vector<GnfRule> rules;
    for (const auto& r : raw) {
        if (r.tokens.size() < 2 || r.tokens[1] != "->") throw ParseError(r.line, "expected 'rule: LHS -> RHS...'");
        const auto& syms = g.symbols();
        if (!syms.contains(r.tokens[0])) throw ParseError(r.line, "unknown symbol '" + r.tokens[0] + "'");
        std::vector<std::string> rhs(r.tokens.begin() + 2, r.tokens.end());
        // An empty or `_` right-hand side is representable; validate() rejects it.
        Word body = rhs.empty() ? Word{} : detail::parse_label(syms, rhs, r.line);
        rules.push_back({syms.at(r.tokens[0]), std::move(body)});
    }
    return GnfGrammar(terminals, nonterminals, *start, std::move(rules));
}

std::string write_gnf(const GnfGrammar& g) {
    const auto& s = g.symbols();
    std::string out = "gnf\nterminals:";
    for (std::size_t i = 0; i < g.terminal_count(); ++i) out += " " + s.name(static_cast<Symbol>(i));
    out += "\nnonterminals:";
    for (std::size_t i = 0; i < g.nonterminal_count(); ++i) out += " " + s.name(g.nonterminal(i));
    out += "\nstart: " + s.name(g.start()) + "\n";
    for (const auto& r : g.rules()) out += "rule: " + s.name(r.lhs) + " -> " + s.format(r.rhs) + "\n";
    return out;
}

}  // namespace discont
