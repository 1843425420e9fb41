#include "discont/reduction.hpp"

#include <algorithm>
#include <unordered_set>

namespace discont {

namespace {

void push_unique(std::vector<Word>& set, Word w) {
    if (std::ranges::find(set, w) == set.end()) set.push_back(std::move(w));
}

std::string fresh_marker_name(const Alphabet& taken, std::size_t i) {
    std::string name = "\xCE\xB2" + std::to_string(i + 1);  // β<i>
    while (taken.contains(name)) name += "'";
    return name;
}

}  // namespace

SymbolSet ReductionArtifacts::terminals() const {
    SymbolSet out;
    for (std::size_t i = 0; i < terminal_count; ++i) out.insert(static_cast<Symbol>(i));
    return out;
}

SymbolSet ReductionArtifacts::nonterminals() const {
    SymbolSet out;
    for (std::size_t i = 0; i < nonterminal_count; ++i) out.insert(nonterminal(i));
    return out;
}

SymbolSet ReductionArtifacts::markers() const {
    SymbolSet out;
    for (std::size_t i = 0; i < nonterminal_count; ++i) out.insert(marker(i));
    return out;
}

ReductionArtifacts build_artifacts(const GnfGrammar& g) {
    require_valid(g);
    const std::size_t nt = g.terminal_count();
    const std::size_t m = g.nonterminal_count();

    Alphabet gamma = g.symbols();
    for (std::size_t i = 0; i < m; ++i) gamma.add(fresh_marker_name(g.symbols(), i));
    auto A = [&](std::size_t i) { return g.nonterminal(i); };
    auto b = [&](std::size_t i) { return static_cast<Symbol>(nt + m + i); };
    auto x = [](std::size_t i) { return static_cast<Symbol>(i); };

    std::vector<Word> p_bu, p_nb, p_c;
    for (const auto& r : g.rules()) push_unique(p_bu, Word{b(g.nonterminal_index(r.lhs))} + r.rhs);
    for (std::size_t i = 0; i < m; ++i) push_unique(p_nb, Word{A(i), b(i)});
    for (std::size_t k = 0; k < nt; ++k) push_unique(p_c, Word{x(k), A(0)});
    for (std::size_t i = 0; i < m; ++i) push_unique(p_c, Word{A(i), b(i)});
    for (std::size_t i = 0; i + 1 < m; ++i) push_unique(p_c, Word{b(i), A(i + 1)});
    for (std::size_t k = 0; k < nt; ++k) push_unique(p_c, Word{b(m - 1), x(k)});

    Word t;
    for (std::size_t i = 0; i < m; ++i) t += Word{A(i), b(i)};

    enum : StateId { q0, q1, q2, q3, q4 };
    std::vector<GjfaRule> rules;
    rules.push_back({q0, {}, q1});
    for (const auto& p : p_bu) rules.push_back({q1, p, q1});
    for (const auto& p : p_nb) rules.push_back({q1, p, q1});
    rules.push_back({q1, Word{g.start()}, q4});

    const auto gsize = gamma.size();
    for (const auto& u : all_words(gsize, 2))
        if (std::ranges::find(p_c, u) == p_c.end()) rules.push_back({q0, u, q2});
    for (std::size_t s = 0; s < gsize; ++s) rules.push_back({q2, Word{static_cast<Symbol>(s)}, q2});
    rules.push_back({q2, {}, q4});

    rules.push_back({q0, {}, q3});
    for (std::size_t k = 0; k < nt; ++k) rules.push_back({q3, Word{x(k)}, q3});
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) rules.push_back({q3, Word{b(i), A(j)}, q3});
    for (std::size_t i = 0; i < m; ++i) rules.push_back({q3, Word{A(i)}, q4});
    for (std::size_t i = 0; i < m; ++i) rules.push_back({q3, Word{b(i)}, q4});
    rules.push_back({q3, {}, q4});

    Gjfa machine(gamma, {"q0", "q1", "q2", "q3", "q4"}, q0, {q4}, std::move(rules));
    return ReductionArtifacts{std::move(gamma), nt, m, g.start(), std::move(p_bu), std::move(p_nb),
                              std::move(p_c), std::move(t), std::move(machine)};
}

Word interleave(const ReductionArtifacts& art, const Word& v) {
    if (v.empty()) throw Error(ErrorKind::empty_input, "interleave needs a non-empty terminal word");
    Word out;
    for (Symbol s : v) {
        if (!art.is_terminal(s)) throw Error(ErrorKind::alphabet_mismatch, "interleave takes a terminal word");
        out.push_back(s);
        out += art.t;
    }
    return out;
}

std::vector<Word> annotate(const ReductionArtifacts& art, const GnfGrammar& g, const Word& v) {
    auto derivation = leftmost_derivation(g, v);
    if (!derivation) throw Error(ErrorKind::not_derivable, "the grammar does not derive " + g.symbols().format(v));
    std::vector<Word> out{Word{art.start}};
    for (std::size_t r : *derivation) {
        const auto& rule = g.rules()[r];
        const Word& w = out.back();
        std::size_t pos = w.size();
        for (std::size_t p = 0; p < w.size(); ++p) {
            if (!art.is_nonterminal(w[p])) continue;
            Symbol mark = art.marker(w[p] - art.terminal_count);
            if (p + 1 < w.size() && w[p + 1] == mark) continue;
            pos = p;
            break;
        }
        if (pos == w.size() || w[pos] != rule.lhs)
            throw Error(ErrorKind::not_derivable, "derivation does not rewrite the leftmost pending nonterminal");
        Word insert = Word{art.marker(g.nonterminal_index(rule.lhs))} + rule.rhs;
        out.push_back(insert_at(w, insert, pos + 2));
    }
    return out;
}

bool reduce_wd_check(const ReductionArtifacts& art, const Word& w_d) {
    const Word target{art.start};
    std::unordered_set<Word, WordHash> seen;
    std::vector<Word> stack{w_d};
    while (!stack.empty()) {
        Word w = std::move(stack.back());
        stack.pop_back();
        if (w == target) return true;
        if (!seen.insert(w).second) continue;
        for (const auto& p : art.p_bu)
            for (std::size_t pos : occurrences(w, p)) stack.push_back(delete_at(w, p, pos));
    }
    return false;
}

std::string write_sets(const ReductionArtifacts& art) {
    std::string out;
    for (const auto& w : art.p_bu) out += "P_BU: " + art.gamma.format(w) + "\n";
    for (const auto& w : art.p_nb) out += "P_NB: " + art.gamma.format(w) + "\n";
    for (const auto& w : art.p_c) out += "P_C: " + art.gamma.format(w) + "\n";
    out += "t: " + art.gamma.format(art.t) + "\n";
    return out;
}

}  // namespace discont
