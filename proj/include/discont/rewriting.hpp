#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "discont/word.hpp"

namespace discont {

/// Instruction (u_L, v -> t, u_R). The sentinels ¢ and $ are flags on the
/// contexts rather than symbols, so contexts stay words over the working
/// alphabet. Contexts shorter than k, ε included, constrain less.
struct Instruction {
    std::string id;
    bool left_sentinel = false;  ///< u_L = ¢ · left
    Word left;
    Word from;
    Word to;
    Word right;
    bool right_sentinel = false;  ///< u_R = right · $

    bool clearing() const noexcept { return to.empty() && !from.empty(); }
    std::size_t left_width() const noexcept { return left.size() + (left_sentinel ? 1 : 0); }
    std::size_t right_width() const noexcept { return right.size() + (right_sentinel ? 1 : 0); }

    /// Does (left, right) accept the split u_1 · [from] · u_2 of some word?
    bool contexts_match(std::u16string_view u1, std::u16string_view u2) const;

    friend bool operator==(const Instruction&, const Instruction&) = default;
};

/// k-context rewriting system (Σ, Γ, I) with Σ ⊆ Γ given as a prefix of Γ.
class ContextRewritingSystem {
public:
    ContextRewritingSystem(Alphabet gamma, std::size_t sigma_size, std::size_t k,
                           std::vector<Instruction> instructions);

    const Alphabet& gamma() const noexcept { return gamma_; }
    std::size_t sigma_size() const noexcept { return sigma_size_; }
    bool over_sigma(const Word& w) const;
    std::size_t k() const noexcept { return k_; }
    const std::vector<Instruction>& instructions() const noexcept { return instructions_; }
    const Instruction& instruction(std::string_view id) const;
    std::optional<std::size_t> find(std::string_view id) const;

    bool all_clearing() const;
    /// No instruction shortens the word.
    bool non_shrinking() const;

    friend bool operator==(const ContextRewritingSystem&, const ContextRewritingSystem&) = default;

private:
    Alphabet gamma_;
    std::size_t sigma_size_;
    std::size_t k_;
    std::vector<Instruction> instructions_;
};

/// k-clearing restarting automaton: Γ = Σ and every instruction erases a
/// non-empty factor.
class ClearingRA {
public:
    /// Throws not_clearing when `system` violates either condition.
    explicit ClearingRA(ContextRewritingSystem system);

    const ContextRewritingSystem& system() const noexcept { return system_; }
    const Alphabet& sigma() const noexcept { return system_.gamma(); }

private:
    ContextRewritingSystem system_;
};

struct Match {
    std::size_t instruction = 0;  ///< index into instructions()
    std::size_t position = 0;     ///< 1-indexed start of the rule's left-hand side

    friend bool operator==(const Match&, const Match&) = default;
};

enum class Direction { reduce, produce };

struct TraceStep {
    std::string instruction;
    std::size_t position = 0;
    Word word;
};

/// A certified computation. In reduce direction each step applies the
/// instruction at the position to the previous word. In produce direction the
/// step goes the other way: applying it to the recorded word yields the
/// previous one, and the position locates the inserted factor in the recorded
/// word.
struct DerivationTrace {
    Word start;
    std::vector<TraceStep> steps;
    Direction direction = Direction::reduce;

    const Word& last() const { return steps.empty() ? start : steps.back().word; }
};

/// All (instruction, position) pairs that can rewrite `w`, instruction order
/// then ascending position.
std::vector<Match> applicable(const ContextRewritingSystem& r, const Word& w);

/// u_1 · t · u_2. Throws not_applicable unless the match is in applicable().
Word apply(const ContextRewritingSystem& r, const Word& w, std::size_t instruction, std::size_t position);
Word apply(const ContextRewritingSystem& r, const Word& w, std::string_view id, std::size_t position);

struct Reduction {
    bool accepted = false;
    std::optional<DerivationTrace> trace;
};

/// w ⊢* ε, by memoized depth-first search.
Reduction reduce_to_empty(const ClearingRA& m, const Word& w);

/// One-step productions v ⊣ u with the instruction/position that relates them
/// (position of the inserted factor in v). Unsorted, duplicates possible.
std::vector<std::pair<Match, Word>> productions(const ClearingRA& m, const Word& u);

/// { v : v ⊢ u in one step }.
WordSet produce_step(const ClearingRA& m, const Word& u);

/// { w : |w| <= maxlen, w ⊢* ε } as the capped closure of {ε} under production.
WordSet generate(const ClearingRA& m, std::size_t maxlen);

/// Words of length at most maxlen reachable from seed through words of
/// length at most maxlen.
WordSet forward_closure(const ContextRewritingSystem& r, const Word& seed, std::size_t maxlen);

/// Shortest →_R derivation from `from` to `to` through words of length at
/// most maxlen (breadth-first, deterministic), as a reduce-direction trace.
std::optional<DerivationTrace> find_derivation(const ContextRewritingSystem& r, const Word& from, const Word& to,
                                               std::size_t maxlen);

/// Index of the first step that does not replay, or nullopt when the whole
/// trace checks out.
std::optional<std::size_t> validate_trace(const ContextRewritingSystem& r, const DerivationTrace& trace);

/// Line-based `crs k=N` text format.
ContextRewritingSystem parse_crs(std::string_view text);
std::string write_crs(const ContextRewritingSystem& r);

}  // namespace discont
