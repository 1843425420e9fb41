#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "discont/word.hpp"

namespace discont {

using StateId = std::size_t;

/// A GJFA rule `(from, label, to)`: in state `from`, delete a factor equal to
/// `label` anywhere in the word and move to `to`.
struct GjfaRule {
    StateId from = 0;
    Word label;
    StateId to = 0;

    friend bool operator==(const GjfaRule&, const GjfaRule&) = default;
};

/// General jumping finite automaton. States are named; rules refer to them by
/// index in `state_names` (declaration order).
class Gjfa {
public:
    Gjfa(Alphabet alphabet, std::vector<std::string> state_names, StateId start, std::vector<StateId> finals,
         std::vector<GjfaRule> rules);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<std::string>& state_names() const noexcept { return states_; }
    std::size_t state_count() const noexcept { return states_.size(); }
    StateId start() const noexcept { return start_; }
    const std::vector<StateId>& finals() const noexcept { return finals_; }
    bool is_final(StateId q) const noexcept { return is_final_[q]; }
    const std::vector<GjfaRule>& rules() const noexcept { return rules_; }
    StateId state(std::string_view name) const;

    friend bool operator==(const Gjfa& a, const Gjfa& b) {
        return a.alphabet_ == b.alphabet_ && a.states_ == b.states_ && a.start_ == b.start_ &&
               a.finals_ == b.finals_ && a.rules_ == b.rules_;
    }

private:
    Alphabet alphabet_;
    std::vector<std::string> states_;
    StateId start_;
    std::vector<StateId> finals_;
    std::vector<bool> is_final_;
    std::vector<GjfaRule> rules_;
};

struct WitnessStep {
    std::size_t rule = 0;      ///< index into Gjfa::rules()
    std::size_t position = 0;  ///< 1-indexed start of the deleted factor

    friend bool operator==(const WitnessStep&, const WitnessStep&) = default;
};

/// Rule/position sequence that deletes the input down to ε along a
/// start-to-final path.
struct AcceptWitness {
    std::vector<WitnessStep> steps;
};

struct Acceptance {
    bool accepted = false;
    std::optional<AcceptWitness> witness;
};

/// Membership by memoized search over (state, remaining word); rules are tried
/// in declaration order and positions ascending, so the witness is
/// deterministic. Throws alphabet_mismatch on foreign symbols.
Acceptance accepts(const Gjfa& m, const Word& w);

/// True iff replaying `witness` from `w` deletes it to ε along a path from the
/// start state to a final state.
bool check_witness(const Gjfa& m, const Word& w, const AcceptWitness& witness);

/// Words of length at most `maxlen` accepted by `m`, via backward insertion
/// closure from (final, ε).
WordSet enumerate(const Gjfa& m, std::size_t maxlen);

/// Shortlex-least rejected word of length at most `maxlen`, if any.
std::optional<Word> refute_universality(const Gjfa& m, std::size_t maxlen);

/// Reads the line-based `gjfa` text format.
Gjfa parse_gjfa(std::string_view text);
std::string write_gjfa(const Gjfa& m);

}  // namespace discont
