#include "discont/rewriting.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "text_format.hpp"

namespace discont {

bool Instruction::contexts_match(std::u16string_view u1, std::u16string_view u2) const {
    // ¢ occurs only at the very start, so ¢x is a suffix of ¢u_1 iff u_1 = x.
    if (left_sentinel ? u1 != left.view() : !u1.ends_with(left.view())) return false;
    if (right_sentinel ? u2 != right.view() : !u2.starts_with(right.view())) return false;
    return true;
}

ContextRewritingSystem::ContextRewritingSystem(Alphabet gamma, std::size_t sigma_size, std::size_t k,
                                               std::vector<Instruction> instructions)
    : gamma_(std::move(gamma)), sigma_size_(sigma_size), k_(k), instructions_(std::move(instructions)) {
    if (sigma_size_ > gamma_.size()) throw Error(ErrorKind::invalid_parameters, "sigma is larger than gamma");
    for (std::size_t i = 0; i < instructions_.size(); ++i) {
        const auto& ins = instructions_[i];
        if (ins.id.empty()) throw Error(ErrorKind::invalid_parameters, "instruction without an id");
        for (std::size_t j = 0; j < i; ++j)
            if (instructions_[j].id == ins.id)
                throw Error(ErrorKind::invalid_parameters, "duplicate instruction id '" + ins.id + "'");
        for (const Word* w : {&ins.left, &ins.from, &ins.to, &ins.right})
            if (!gamma_.owns(*w))
                throw Error(ErrorKind::alphabet_mismatch, "instruction " + ins.id + " uses a symbol outside gamma");
        if (ins.left_width() > k_ || ins.right_width() > k_)
            throw Error(ErrorKind::invalid_parameters,
                        "instruction " + ins.id + " has a context longer than k = " + std::to_string(k_));
    }
}

bool ContextRewritingSystem::over_sigma(const Word& w) const {
    return std::ranges::all_of(w, [&](Symbol s) { return s < sigma_size_; });
}

std::optional<std::size_t> ContextRewritingSystem::find(std::string_view id) const {
    for (std::size_t i = 0; i < instructions_.size(); ++i)
        if (instructions_[i].id == id) return i;
    return std::nullopt;
}

const Instruction& ContextRewritingSystem::instruction(std::string_view id) const {
    auto i = find(id);
    if (!i) throw Error(ErrorKind::invalid_parameters, "no instruction '" + std::string(id) + "'");
    return instructions_[*i];
}

bool ContextRewritingSystem::all_clearing() const {
    return std::ranges::all_of(instructions_, [](const Instruction& i) { return i.clearing(); });
}

bool ContextRewritingSystem::non_shrinking() const {
    return std::ranges::all_of(instructions_, [](const Instruction& i) { return i.to.size() >= i.from.size(); });
}

ClearingRA::ClearingRA(ContextRewritingSystem system) : system_(std::move(system)) {
    if (system_.sigma_size() != system_.gamma().size())
        throw Error(ErrorKind::not_clearing, "a clearing restarting automaton has no auxiliary symbols");
    for (const auto& ins : system_.instructions())
        if (!ins.clearing())
            throw Error(ErrorKind::not_clearing, "instruction " + ins.id + " does not erase a non-empty factor");
}

std::vector<Match> applicable(const ContextRewritingSystem& r, const Word& w) {
    std::vector<Match> out;
    auto v = w.view();
    for (std::size_t i = 0; i < r.instructions().size(); ++i) {
        const auto& ins = r.instructions()[i];
        const auto len = ins.from.size();
        if (len > v.size()) continue;
        for (std::size_t p = 0; p + len <= v.size(); ++p) {
            if (v.substr(p, len) != ins.from.view()) continue;
            if (ins.contexts_match(v.substr(0, p), v.substr(p + len))) out.push_back({i, p + 1});
        }
    }
    return out;
}

Word apply(const ContextRewritingSystem& r, const Word& w, std::size_t instruction, std::size_t position) {
    if (instruction >= r.instructions().size())
        throw Error(ErrorKind::not_applicable, "instruction index out of range");
    const auto& ins = r.instructions()[instruction];
    auto v = w.view();
    const auto len = ins.from.size();
    if (position < 1 || position - 1 + len > v.size() || v.substr(position - 1, len) != ins.from.view() ||
        !ins.contexts_match(v.substr(0, position - 1), v.substr(position - 1 + len)))
        throw Error(ErrorKind::not_applicable,
                    "instruction " + ins.id + " does not apply at position " + std::to_string(position));
    std::u16string out(v.substr(0, position - 1));
    out += ins.to.raw();
    out += v.substr(position - 1 + len);
    return Word(std::move(out));
}

Word apply(const ContextRewritingSystem& r, const Word& w, std::string_view id, std::size_t position) {
    auto i = r.find(id);
    if (!i) throw Error(ErrorKind::not_applicable, "no instruction '" + std::string(id) + "'");
    return apply(r, w, *i, position);
}

namespace {

class ClearingSearch {
public:
    explicit ClearingSearch(const ContextRewritingSystem& r) : r_(r) {}

    bool run(const Word& w) {
        if (w.empty()) return true;
        if (!failed_.insert(w).second) return false;
        for (const auto& m : applicable(r_, w)) {
            Word next = apply(r_, w, m.instruction, m.position);
            steps_.push_back({r_.instructions()[m.instruction].id, m.position, next});
            if (run(next)) return true;
            steps_.pop_back();
        }
        return false;
    }

    std::vector<TraceStep> steps() const { return steps_; }

private:
    const ContextRewritingSystem& r_;
    std::unordered_set<Word, WordHash> failed_;
    std::vector<TraceStep> steps_;
};

}  // namespace

Reduction reduce_to_empty(const ClearingRA& m, const Word& w) {
    if (!m.system().over_sigma(w)) throw Error(ErrorKind::alphabet_mismatch, "word uses symbols outside sigma");
    ClearingSearch search(m.system());
    if (search.run(w)) return {true, DerivationTrace{w, search.steps(), Direction::reduce}};
    return {false, std::nullopt};
}

std::vector<std::pair<Match, Word>> productions(const ClearingRA& m, const Word& u) {
    std::vector<std::pair<Match, Word>> out;
    const auto& ins = m.system().instructions();
    auto v = u.view();
    for (std::size_t i = 0; i < ins.size(); ++i)
        for (std::size_t split = 0; split <= v.size(); ++split) {
            if (!ins[i].contexts_match(v.substr(0, split), v.substr(split))) continue;
            out.push_back({Match{i, split + 1}, insert_at(u, ins[i].from, split + 1)});
        }
    return out;
}

WordSet produce_step(const ClearingRA& m, const Word& u) {
    WordSet out;
    for (auto& [match, v] : productions(m, u)) out.insert(std::move(v));
    return out;
}

WordSet generate(const ClearingRA& m, std::size_t maxlen) {
    std::unordered_set<Word, WordHash> seen{Word{}};
    std::deque<Word> frontier{Word{}};
    const auto& ins = m.system().instructions();
    while (!frontier.empty()) {
        Word u = std::move(frontier.front());
        frontier.pop_front();
        auto v = u.view();
        for (const auto& in : ins) {
            if (u.size() + in.from.size() > maxlen) continue;
            for (std::size_t split = 0; split <= v.size(); ++split) {
                if (!in.contexts_match(v.substr(0, split), v.substr(split))) continue;
                Word next = insert_at(u, in.from, split + 1);
                if (seen.insert(next).second) frontier.push_back(std::move(next));
            }
        }
    }
    return WordSet(seen.begin(), seen.end());
}

WordSet forward_closure(const ContextRewritingSystem& r, const Word& seed, std::size_t maxlen) {
    if (seed.size() > maxlen) return {};
    std::unordered_set<Word, WordHash> seen{seed};
    std::deque<Word> frontier{seed};
    while (!frontier.empty()) {
        Word w = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& m : applicable(r, w)) {
            const auto& ins = r.instructions()[m.instruction];
            if (w.size() - ins.from.size() + ins.to.size() > maxlen) continue;
            Word next = apply(r, w, m.instruction, m.position);
            if (seen.insert(next).second) frontier.push_back(std::move(next));
        }
    }
    return WordSet(seen.begin(), seen.end());
}

std::optional<DerivationTrace> find_derivation(const ContextRewritingSystem& r, const Word& from, const Word& to,
                                               std::size_t maxlen) {
    if (from.size() > maxlen) return std::nullopt;
    struct Parent {
        Word word;
        std::size_t instruction;
        std::size_t position;
    };
    std::unordered_map<Word, std::optional<Parent>, WordHash> parent{{from, std::nullopt}};
    std::deque<Word> frontier{from};
    while (!frontier.empty()) {
        Word w = std::move(frontier.front());
        frontier.pop_front();
        if (w == to) {
            std::vector<TraceStep> steps;
            for (Word cur = w; parent.at(cur);) {
                const Parent& p = *parent.at(cur);
                steps.push_back({r.instructions()[p.instruction].id, p.position, cur});
                cur = p.word;
            }
            std::ranges::reverse(steps);
            return DerivationTrace{from, std::move(steps), Direction::reduce};
        }
        for (const auto& m : applicable(r, w)) {
            const auto& ins = r.instructions()[m.instruction];
            if (w.size() - ins.from.size() + ins.to.size() > maxlen) continue;
            Word next = apply(r, w, m.instruction, m.position);
            if (parent.emplace(next, Parent{w, m.instruction, m.position}).second) frontier.push_back(std::move(next));
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> validate_trace(const ContextRewritingSystem& r, const DerivationTrace& trace) {
    const Word* prev = &trace.start;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& step = trace.steps[i];
        try {
            bool ok = trace.direction == Direction::reduce
                          ? apply(r, *prev, step.instruction, step.position) == step.word
                          : apply(r, step.word, step.instruction, step.position) == *prev;
            if (!ok) return i;
        } catch (const Error&) {
            return i;
        }
        prev = &step.word;
    }
    return std::nullopt;
}

namespace {

std::vector<std::vector<std::string>> split_on(const std::vector<std::string>& tokens, std::string_view sep) {
    std::vector<std::vector<std::string>> parts(1);
    for (const auto& t : tokens) {
        if (t == sep)
            parts.emplace_back();
        else
            parts.back().push_back(t);
    }
    return parts;
}

Instruction parse_instruction(const Alphabet& gamma, std::string id, const std::vector<std::string>& body,
                              std::size_t line) {
    auto parts = split_on(body, "/");
    if (parts.size() != 3) throw ParseError(line, "expected 'LEFT / FROM -> TO / RIGHT'");
    auto rule = split_on(parts[1], "->");
    if (rule.size() != 2 || rule[0].empty() || rule[1].empty())
        throw ParseError(line, "expected 'FROM -> TO' between the contexts");
    Instruction ins;
    ins.id = std::move(id);

    auto left = parts[0];
    if (!left.empty() && left.front() == "^") {
        ins.left_sentinel = true;
        left.erase(left.begin());
    }
    auto right = parts[2];
    if (!right.empty() && right.back() == "$") {
        ins.right_sentinel = true;
        right.pop_back();
    }
    auto context = [&](const std::vector<std::string>& toks, bool sentinel, const char* what) -> Word {
        if (toks.empty()) {
            if (!sentinel) throw ParseError(line, std::string("empty ") + what + " context; write '_' for ε");
            return {};
        }
        if (toks.size() == 1 && toks.front() == "_" && !sentinel) return {};
        for (const auto& t : toks)
            if (t == "^" || t == "$" || t == "_")
                throw ParseError(line, std::string("misplaced '") + t + "' in " + what + " context");
        return detail::parse_label(gamma, toks, line);
    };
    ins.left = context(left, ins.left_sentinel, "left");
    ins.right = context(right, ins.right_sentinel, "right");
    ins.from = detail::parse_label(gamma, rule[0], line);
    ins.to = detail::parse_label(gamma, rule[1], line);
    return ins;
}

}  // namespace

ContextRewritingSystem parse_crs(std::string_view text) {
    auto lines = detail::logical_lines(text);
    if (lines.empty()) throw ParseError(0, "empty input");
    const auto& head = lines.front();
    std::size_t k = 0;
    if (head.tokens.size() != 2 || head.tokens[0] != "crs" || !head.tokens[1].starts_with("k="))
        throw ParseError(head.number, "expected header 'crs k=N'");
    {
        const auto& num = head.tokens[1];
        auto [ptr, ec] = std::from_chars(num.data() + 2, num.data() + num.size(), k);
        if (ec != std::errc{} || ptr != num.data() + num.size()) throw ParseError(head.number, "bad context width");
    }
    std::optional<std::vector<std::string>> sigma, gamma;
    struct RawInstr {
        std::size_t line;
        std::string id;
        std::vector<std::string> body;
    };
    std::vector<RawInstr> raw;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& ln = lines[i];
        if (ln.key == "sigma") {
            sigma = ln.rest;
        } else if (ln.key == "gamma") {
            gamma = ln.rest;
        } else if (ln.tokens.front() == "instr") {
            if (ln.tokens.size() < 2 || ln.tokens[1].size() < 2 || ln.tokens[1].back() != ':')
                throw ParseError(ln.number, "expected 'instr ID: ...'");
            raw.push_back({ln.number, ln.tokens[1].substr(0, ln.tokens[1].size() - 1),
                           {ln.tokens.begin() + 2, ln.tokens.end()}});
        } else {
            throw ParseError(ln.number, "unknown directive '" + ln.tokens.front() + "'");
        }
    }
    if (!sigma) throw ParseError(0, "missing 'sigma:' line");
    Alphabet alphabet;
    try {
        for (const auto& s : *sigma) alphabet.add(s);
        if (gamma) {
            for (const auto& s : *sigma)
                if (std::ranges::find(*gamma, s) == gamma->end())
                    throw ParseError(0, "sigma symbol '" + s + "' missing from gamma");
            for (const auto& s : *gamma)
                if (!alphabet.contains(s)) alphabet.add(s);
        }
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(0, e.what());
    }
    std::vector<Instruction> instructions;
    for (const auto& r : raw) instructions.push_back(parse_instruction(alphabet, r.id, r.body, r.line));
    try {
        return ContextRewritingSystem(std::move(alphabet), sigma->size(), k, std::move(instructions));
    } catch (const Error& e) {
        throw ParseError(0, e.what());
    }
}

std::string write_crs(const ContextRewritingSystem& r) {
    const auto& g = r.gamma();
    std::string out = "crs k=" + std::to_string(r.k()) + "\nsigma:";
    for (std::size_t i = 0; i < r.sigma_size(); ++i) out += " " + g.name(static_cast<Symbol>(i));
    out += "\ngamma:";
    for (const auto& n : g.names()) out += " " + n;
    out += "\n";
    for (const auto& ins : r.instructions()) {
        std::string left = ins.left_sentinel ? (ins.left.empty() ? "^" : "^ " + g.format(ins.left))
                                             : g.format(ins.left);
        std::string right = ins.right_sentinel ? (ins.right.empty() ? "$" : g.format(ins.right) + " $")
                                               : g.format(ins.right);
        out += "instr " + ins.id + ": " + left + " / " + g.format(ins.from) + " -> " + g.format(ins.to) + " / " +
               right + "\n";
    }
    return out;
}

}  // namespace discont
