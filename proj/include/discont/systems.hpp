#pragma once

#include <cstdint>
#include <string_view>

#include "discont/rewriting.hpp"

namespace discont {

/// The binary 2-clearing restarting automaton over {0, 1} (nine
/// instructions, types 0 to 3) whose language meets K in words of length
/// 2·3^n only.
ClearingRA builtin_r01();

/// The 1-context rewriting system over {u, V} that R01 simulates through phi.
ContextRewritingSystem builtin_ruv();

/// Symbol indices of the builtin alphabets.
inline constexpr Symbol zero = 0, one = 1;
inline constexpr Symbol sym_u = 0, sym_v = 1;

/// Builds a binary word from a string of '0'/'1' characters.
Word binary(std::string_view bits);
/// Builds a {u, V} word from a string of 'u'/'V' characters.
Word uv(std::string_view letters);

/// Length-preserving map to {u, V}: an interior position whose two neighbours
/// are equal becomes V, every other position u.
Word phi(const Word& w);

/// True iff w has none of the factors 000, 010, 101, 111.
bool in_k(const Word& w);

/// Φ(ε) = 0, Φ(u·w) = 1 + Φ(w), Φ(V·w) = 1 + 3·Φ(w).
std::uint64_t potential(const Word& w);

/// 00 (1100)^alpha 1000 (1100)^beta, the left end of the shift chain.
Word shift_word(std::uint64_t alpha, std::uint64_t beta);

/// The sixteen single productions of R01 from
/// 00(1100)^α 1000 (1100)^β to 00(1100)^{α+9} 1000 (1100)^{β-1}.
/// Requires alpha >= 1 and beta >= 1 (invalid_parameters otherwise).
DerivationTrace lemma6_chain(std::uint64_t alpha, std::uint64_t beta);

/// 001000 (1100)^β ⊣* 00 (1100)^{9β} 1000 as β chained shift chains
/// (16β steps). Requires beta >= 1.
DerivationTrace corollary5_chain(std::uint64_t beta);

/// (2·9^k − 2) / 4, exact; k above 6 is rejected with invalid_parameters.
std::uint64_t corollary_exponent(unsigned k);

/// Produce-direction certificate ε ⊣* 00 (1100)^{N_k} built level by level:
/// 0a, then per level 1a, 1b, the chained shift chains and a closing six-step
/// chain (3b 2a 2b 2d 2c 3a). The first and last closing insertions sit right
/// before the end of the word, so only the $-anchored type-3 instructions
/// certify them.
DerivationTrace corollary7_derivation(unsigned k);

}  // namespace discont
