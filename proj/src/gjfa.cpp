#include "discont/gjfa.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "text_format.hpp"

namespace discont {

Gjfa::Gjfa(Alphabet alphabet, std::vector<std::string> state_names, StateId start, std::vector<StateId> finals,
           std::vector<GjfaRule> rules)
    : alphabet_(std::move(alphabet)),
      states_(std::move(state_names)),
      start_(start),
      finals_(std::move(finals)),
      rules_(std::move(rules)) {
    if (states_.empty()) throw Error(ErrorKind::invalid_parameters, "a GJFA needs at least one state");
    for (std::size_t i = 0; i < states_.size(); ++i)
        for (std::size_t j = i + 1; j < states_.size(); ++j)
            if (states_[i] == states_[j])
                throw Error(ErrorKind::invalid_parameters, "duplicate state '" + states_[i] + "'");
    if (start_ >= states_.size()) throw Error(ErrorKind::invalid_parameters, "start state out of range");
    is_final_.assign(states_.size(), false);
    for (StateId f : finals_) {
        if (f >= states_.size()) throw Error(ErrorKind::invalid_parameters, "final state out of range");
        is_final_[f] = true;
    }
    for (const auto& r : rules_) {
        if (r.from >= states_.size() || r.to >= states_.size())
            throw Error(ErrorKind::invalid_parameters, "rule endpoint out of range");
        if (!alphabet_.owns(r.label))
            throw Error(ErrorKind::alphabet_mismatch, "rule label uses a symbol outside the alphabet");
    }
}

StateId Gjfa::state(std::string_view name) const {
    auto it = std::ranges::find(states_, name);
    if (it == states_.end()) throw Error(ErrorKind::invalid_parameters, "unknown state '" + std::string(name) + "'");
    return static_cast<StateId>(it - states_.begin());
}

namespace {

struct Config {
    StateId state;
    Word word;
    friend bool operator==(const Config&, const Config&) = default;
};

struct ConfigHash {
    std::size_t operator()(const Config& c) const noexcept { return WordHash{}(c.word) * 31 + c.state; }
};

class MembershipSearch {
public:
    explicit MembershipSearch(const Gjfa& m) : m_(m) {}

    bool run(StateId q, const Word& w) {
        if (w.empty() && m_.is_final(q)) return true;
        if (!visited_.insert(Config{q, w}).second) return false;
        const auto& rules = m_.rules();
        for (std::size_t r = 0; r < rules.size(); ++r) {
            if (rules[r].from != q) continue;
            const Word& label = rules[r].label;
            // ε deletes nothing; every position yields the same word.
            auto positions = label.empty() ? std::vector<std::size_t>{1} : occurrences(w, label);
            for (std::size_t p : positions) {
                path_.push_back({r, p});
                if (run(rules[r].to, delete_at(w, label, p))) return true;
                path_.pop_back();
            }
        }
        return false;
    }

    AcceptWitness witness() const { return AcceptWitness{path_}; }

private:
    const Gjfa& m_;
    std::unordered_set<Config, ConfigHash> visited_;
    std::vector<WitnessStep> path_;
};

}  // namespace

Acceptance accepts(const Gjfa& m, const Word& w) {
    if (!m.alphabet().owns(w)) throw Error(ErrorKind::alphabet_mismatch, "word uses symbols outside the alphabet");
    MembershipSearch search(m);
    if (search.run(m.start(), w)) return {true, search.witness()};
    return {false, std::nullopt};
}

bool check_witness(const Gjfa& m, const Word& w, const AcceptWitness& witness) {
    StateId q = m.start();
    Word cur = w;
    for (const auto& step : witness.steps) {
        if (step.rule >= m.rules().size()) return false;
        const auto& rule = m.rules()[step.rule];
        if (rule.from != q) return false;
        if (rule.label.empty()) {
            if (step.position < 1 || step.position > cur.size() + 1) return false;
        } else {
            auto occ = occurrences(cur, rule.label);
            if (!std::ranges::binary_search(occ, step.position)) return false;
            cur = delete_at(cur, rule.label, step.position);
        }
        q = rule.to;
    }
    return cur.empty() && m.is_final(q);
}

WordSet enumerate(const Gjfa& m, std::size_t maxlen) {
    // reached[q] holds words w such that (q, w) reaches (final, ε).
    std::vector<std::unordered_set<Word, WordHash>> reached(m.state_count());
    std::deque<Config> work;
    for (StateId f : m.finals())
        if (reached[f].insert(Word{}).second) work.push_back({f, Word{}});

    std::vector<std::vector<std::size_t>> rules_into(m.state_count());
    for (std::size_t r = 0; r < m.rules().size(); ++r) rules_into[m.rules()[r].to].push_back(r);

    while (!work.empty()) {
        Config c = std::move(work.front());
        work.pop_front();
        for (std::size_t r : rules_into[c.state]) {
            const auto& rule = m.rules()[r];
            if (c.word.size() + rule.label.size() > maxlen) continue;
            for (const auto& y : insertions(c.word, rule.label))
                if (reached[rule.from].insert(y).second) work.push_back({rule.from, y});
        }
    }
    return WordSet(reached[m.start()].begin(), reached[m.start()].end());
}

std::optional<Word> refute_universality(const Gjfa& m, std::size_t maxlen) {
    for (std::size_t len = 0; len <= maxlen; ++len)
        for (const auto& w : all_words(m.alphabet().size(), len))
            if (!accepts(m, w).accepted) return w;
    return std::nullopt;
}

Gjfa parse_gjfa(std::string_view text) {
    auto lines = detail::logical_lines(text);
    if (lines.empty() || lines.front().tokens != std::vector<std::string>{"gjfa"})
        throw ParseError(lines.empty() ? 0 : lines.front().number, "expected header 'gjfa'");

    std::optional<Alphabet> alphabet;
    std::optional<std::vector<std::string>> states;
    std::optional<std::string> start;
    std::size_t start_line = 0;
    std::vector<std::pair<std::string, std::size_t>> finals;
    struct RawRule {
        std::size_t line;
        std::string from, to;
        std::vector<std::string> label;
    };
    std::vector<RawRule> raw_rules;

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& ln = lines[i];
        const auto& key = ln.key;
        auto rest = ln.rest;
        if (key == "alphabet") {
            try {
                alphabet = Alphabet(rest);
            } catch (const Error& e) {
                throw ParseError(ln.number, e.what());
            }
        } else if (key == "states") {
            states = rest;
        } else if (key == "start") {
            if (rest.size() != 1) throw ParseError(ln.number, "'start:' takes exactly one state");
            start = rest.front();
            start_line = ln.number;
        } else if (key == "final") {
            for (const auto& f : rest) finals.emplace_back(f, ln.number);
        } else if (key == "rule") {
            if (rest.size() < 3) throw ParseError(ln.number, "'rule:' needs FROM TO LABEL...");
            raw_rules.push_back({ln.number, rest[0], rest[1], {rest.begin() + 2, rest.end()}});
        } else {
            throw ParseError(ln.number, "unknown directive '" + key + "'");
        }
    }
    if (!alphabet) throw ParseError(0, "missing 'alphabet:' line");
    if (!states || states->empty()) throw ParseError(0, "missing 'states:' line");
    if (!start) throw ParseError(0, "missing 'start:' line");

    auto state_index = [&](const std::string& name, std::size_t line) -> StateId {
        auto it = std::ranges::find(*states, name);
        if (it == states->end()) throw ParseError(line, "unknown state '" + name + "'");
        return static_cast<StateId>(it - states->begin());
    };
    StateId s = state_index(*start, start_line);
    std::vector<StateId> final_ids;
    for (const auto& [f, line] : finals) final_ids.push_back(state_index(f, line));
    std::vector<GjfaRule> rules;
    for (const auto& rr : raw_rules) {
        GjfaRule r{state_index(rr.from, rr.line), detail::parse_label(*alphabet, rr.label, rr.line),
                   state_index(rr.to, rr.line)};
        rules.push_back(std::move(r));
    }
    try {
        return Gjfa(std::move(*alphabet), std::move(*states), s, std::move(final_ids), std::move(rules));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(0, e.what());
    }
}

std::string write_gjfa(const Gjfa& m) {
    std::string out = "gjfa\nalphabet:";
    for (const auto& n : m.alphabet().names()) out += " " + n;
    out += "\nstates:";
    for (const auto& n : m.state_names()) out += " " + n;
    out += "\nstart: " + m.state_names()[m.start()] + "\nfinal:";
    for (StateId f : m.finals()) out += " " + m.state_names()[f];
    out += "\n";
    for (const auto& r : m.rules())
        out += "rule: " + m.state_names()[r.from] + " " + m.state_names()[r.to] + " " + m.alphabet().format(r.label) +
               "\n";
    return out;
}

}  // namespace discont
