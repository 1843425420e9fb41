#pragma once

#include <string>
#include <vector>

#include "discont/gjfa.hpp"
#include "discont/gnf.hpp"

namespace discont {

/// Everything the grammar-to-GJFA universality reduction produces.
///
/// The working alphabet gamma lists the grammar's terminals, then its
/// nonterminals A_1..A_m, then one fresh marker b_i per nonterminal, so any
/// word over the grammar is a word over gamma with the same symbol indices.
///
/// The machine has states q0..q4, start q0, final q4, and rules
///   q0 -ε-> q1, q1 -P_BU ∪ P_NB-> q1, q1 -A_S-> q4            (derivation branch)
///   q0 -(Γ²∖P_C)-> q2, q2 -Γ-> q2, q2 -ε-> q4                 (bad 2-factor)
///   q0 -ε-> q3, q3 -Σ_T-> q3, q3 -Σ_B Σ_N-> q3,
///   q3 -(Σ_N ∪ Σ_B ∪ {ε})-> q4                                (bad endpoint)
/// listed in that order.
struct ReductionArtifacts {
    Alphabet gamma;
    std::size_t terminal_count = 0;
    std::size_t nonterminal_count = 0;
    Symbol start = 0;
    std::vector<Word> p_bu;
    std::vector<Word> p_nb;
    std::vector<Word> p_c;
    Word t;
    Gjfa machine;

    /// Marker b_{i+1} for 0-based nonterminal index i.
    Symbol marker(std::size_t i) const { return static_cast<Symbol>(terminal_count + nonterminal_count + i); }
    Symbol nonterminal(std::size_t i) const { return static_cast<Symbol>(terminal_count + i); }
    bool is_terminal(Symbol s) const { return s < terminal_count; }
    bool is_nonterminal(Symbol s) const { return s >= terminal_count && s < terminal_count + nonterminal_count; }
    bool is_marker(Symbol s) const { return s >= terminal_count + nonterminal_count && s < gamma.size(); }
    SymbolSet terminals() const;
    SymbolSet nonterminals() const;
    SymbolSet markers() const;
};

/// Builds gamma, P_BU, P_NB, P_C, t and the machine. Throws the grammar's
/// validation error when it is not in Greibach normal form.
ReductionArtifacts build_artifacts(const GnfGrammar& g);

/// x_1 t x_2 t ... x_n t for v = x_1 ... x_n; throws empty_input on ε.
Word interleave(const ReductionArtifacts& art, const Word& v);

/// Annotated derivation words w_0 = A_S, ..., w_d, where each step rewrites
/// the leftmost pending nonterminal A (one not yet followed by its marker) as
/// A b u. Throws not_derivable when G does not derive v.
std::vector<Word> annotate(const ReductionArtifacts& art, const GnfGrammar& g, const Word& v);

/// True iff w_d reduces to the one-letter word A_S by deleting P_BU factors.
bool reduce_wd_check(const ReductionArtifacts& art, const Word& w_d);

/// Sidecar text: one labelled word per line (P_BU, P_NB, P_C, t).
std::string write_sets(const ReductionArtifacts& art);

}  // namespace discont
