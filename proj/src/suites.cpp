#include "discont/suites.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <set>
#include <unordered_set>

#include "discont/reduction.hpp"
#include "discont/systems.hpp"

namespace discont {

bool SuiteReport::pass() const {
    return std::ranges::all_of(checks, [](const CheckResult& c) { return c.pass; });
}

std::string SuiteReport::render() const {
    std::string out;
    for (const auto& c : checks) {
        out += c.pass ? "PASS " : "FAIL ";
        out += suite + "." + c.name;
        if (!c.pass && !c.counterexample.empty()) out += " " + c.counterexample;
        out += "\n";
    }
    return out;
}

GnfGrammar grammar_ga() {
    return parse_gnf("gnf\nterminals: a\nnonterminals: S\nstart: S\nrule: S -> a S\nrule: S -> a\n");
}

GnfGrammar grammar_gab() {
    return parse_gnf("gnf\nterminals: a b\nnonterminals: S B\nstart: S\nrule: S -> a B\nrule: B -> b\n");
}

GnfGrammar grammar_gfull() {
    return parse_gnf(
        "gnf\nterminals: a b\nnonterminals: S\nstart: S\n"
        "rule: S -> a S\nrule: S -> b S\nrule: S -> a\nrule: S -> b\n");
}

Gjfa random_gjfa(std::mt19937_64& rng, std::size_t max_states, std::size_t max_rules, std::size_t max_label) {
    auto pick = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    const std::size_t n = pick(1, max_states);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("q" + std::to_string(i));
    std::vector<StateId> finals;
    for (std::size_t i = 0; i < n; ++i)
        if (pick(0, 1)) finals.push_back(i);
    std::vector<GjfaRule> rules;
    const std::size_t r = pick(1, max_rules);
    for (std::size_t i = 0; i < r; ++i) {
        Word label;
        for (std::size_t len = pick(0, max_label); len > 0; --len) label.push_back(static_cast<Symbol>(pick(0, 1)));
        rules.push_back({pick(0, n - 1), std::move(label), pick(0, n - 1)});
    }
    return Gjfa(Alphabet({"a", "b"}), std::move(names), 0, std::move(finals), std::move(rules));
}

std::vector<Gjfa> gjfa_pool(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    std::vector<Gjfa> pool;
    pool.reserve(count);
    for (std::size_t i = 0; i < count; ++i) pool.push_back(random_gjfa(rng));
    return pool;
}

namespace {

class Report {
public:
    explicit Report(std::string suite) { report_.suite = std::move(suite); }

    void check(std::string name, bool pass, std::string counterexample = {}) {
        report_.checks.push_back({std::move(name), pass, pass ? std::string{} : std::move(counterexample)});
    }

    /// Passes iff `first_failure` finds nothing.
    void check_all(std::string name, const std::optional<std::string>& first_failure) {
        check(std::move(name), !first_failure, first_failure.value_or(""));
    }

    SuiteReport take() && { return std::move(report_); }

private:
    SuiteReport report_;
};

std::string bits(const Word& w) { return Alphabet({"0", "1"}).compact(w); }
std::string uvs(const Word& w) { return Alphabet({"u", "V"}).compact(w); }

bool all_u(const Word& w) {
    return std::ranges::all_of(w, [](Symbol s) { return s == sym_u; });
}

bool is_two_times_power_of_three(std::uint64_t n) {
    if (n < 2 || n % 2) return false;
    for (n /= 2; n % 3 == 0; n /= 3) {
    }
    return n == 1;
}

std::string trace_failure(const ContextRewritingSystem& r, const DerivationTrace& t) {
    auto bad = validate_trace(r, t);
    return bad ? "step " + std::to_string(*bad) : std::string{};
}

ClearingRA r01_of(const SuiteOptions& o) { return o.r01 ? *o.r01 : builtin_r01(); }

SuiteReport lemma2(const SuiteOptions&) {
    Report rep("lemma2");
    std::optional<std::string> failure;
    for (const auto& w : all_words_up_to(2, 12))
        if (in_k(w) != all_u(phi(w))) {
            failure = bits(w);
            break;
        }
    rep.check_all("k-iff-phi-all-u", failure);
    return std::move(rep).take();
}

SuiteReport lemma3(const SuiteOptions&) {
    Report rep("lemma3");
    const auto ruv = builtin_ruv();
    std::array<std::optional<std::string>, 4> law_failure;
    for (const auto& w : all_words_up_to(2, 8)) {
        const auto before = potential(w);
        for (const auto& m : applicable(ruv, w)) {
            auto& slot = law_failure[m.instruction];
            if (slot) continue;
            const auto after = potential(apply(ruv, w, m.instruction, m.position));
            bool ok = m.instruction == 0   ? before == 0 && after == 2
                      : m.instruction == 1 ? after == 3 * before
                                           : after == before;
            if (!ok) slot = uvs(w) + "@" + std::to_string(m.position);
        }
    }
    rep.check_all("rule0-creates-potential-2", law_failure[0]);
    rep.check_all("rule1-triples-potential", law_failure[1]);
    rep.check_all("rule2-preserves-potential", law_failure[2]);
    rep.check_all("rule3-preserves-potential", law_failure[3]);

    std::optional<std::string> not_length;
    for (std::size_t n = 0; n <= 20 && !not_length; ++n)
        if (potential(power(uv("u"), n)) != n) not_length = "u^" + std::to_string(n);
    rep.check_all("potential-of-u-power-is-length", not_length);

    const auto closure = forward_closure(ruv, Word{}, 20);
    std::optional<std::string> bad_potential, bad_length;
    for (const auto& w : closure) {
        if (!w.empty() && !bad_potential && !is_two_times_power_of_three(potential(w))) bad_potential = uvs(w);
        if (!w.empty() && all_u(w) && !bad_length && w.size() != 2 && w.size() != 6 && w.size() != 18)
            bad_length = uvs(w);
    }
    rep.check_all("closure-potential-is-2*3^n", bad_potential);
    rep.check_all("closure-u-lengths-in-{2,6,18}", bad_length);
    return std::move(rep).take();
}

SuiteReport lemma4(const SuiteOptions& o) {
    Report rep("lemma4");
    const auto r01 = r01_of(o);
    const auto ruv = builtin_ruv();
    std::optional<std::string> failure;
    for (const auto& u : all_words_up_to(2, 10)) {
        const Word pu = phi(u);
        std::vector<Word> successors;
        for (const auto& m : applicable(ruv, pu)) successors.push_back(apply(ruv, pu, m.instruction, m.position));
        for (const auto& [match, v] : productions(r01, u))
            if (std::ranges::find(successors, phi(v)) == successors.end()) {
                failure = bits(u) + "->" + bits(v);
                break;
            }
        if (failure) break;
    }
    rep.check_all("production-simulated-by-ruv-step", failure);
    return std::move(rep).take();
}

SuiteReport lemma6(const SuiteOptions& o) {
    Report rep("lemma6");
    const auto r01 = r01_of(o);
    for (std::uint64_t a = 1; a <= 3; ++a)
        for (std::uint64_t b = 1; b <= 3; ++b) {
            auto chain = lemma6_chain(a, b);
            std::string fail = trace_failure(r01.system(), chain);
            if (fail.empty() && chain.steps.size() != 16) fail = "length " + std::to_string(chain.steps.size());
            if (fail.empty() && chain.last() != shift_word(a + 9, b - 1)) fail = "endpoint " + bits(chain.last());
            rep.check("chain(" + std::to_string(a) + "," + std::to_string(b) + ")", fail.empty(), fail);
        }
    return std::move(rep).take();
}

SuiteReport cor5(const SuiteOptions& o) {
    Report rep("cor5");
    const auto r01 = r01_of(o);
    const Word block = binary("1100");
    for (std::uint64_t b = 1; b <= 3; ++b) {
        auto chain = corollary5_chain(b);
        std::string fail = trace_failure(r01.system(), chain);
        if (fail.empty() && chain.steps.size() != 16 * b) fail = "length " + std::to_string(chain.steps.size());
        if (fail.empty() && chain.last() != binary("00") + power(block, 9 * b) + binary("1000"))
            fail = "endpoint " + bits(chain.last());
        rep.check("chain(" + std::to_string(b) + ")", fail.empty(), fail);
    }
    return std::move(rep).take();
}

SuiteReport cor7(const SuiteOptions& o) {
    Report rep("cor7");
    const auto r01 = r01_of(o);
    for (unsigned k = 0; k <= 2; ++k) {
        auto trace = corollary7_derivation(k);
        const Word expected = binary("00") + power(binary("1100"), corollary_exponent(k));
        std::string fail = trace_failure(r01.system(), trace);
        if (fail.empty() && trace.last() != expected) fail = "endpoint " + bits(trace.last());
        if (fail.empty() && !in_k(trace.last())) fail = "endpoint outside K";
        rep.check("certificate(k=" + std::to_string(k) + ")", fail.empty(), fail);
        if (k <= 1) {
            bool ok = reduce_to_empty(r01, expected).accepted;
            rep.check("reduces-to-empty(k=" + std::to_string(k) + ")", ok, bits(expected));
        }
    }
    return std::move(rep).take();
}

SuiteReport cor8(const SuiteOptions& o) {
    Report rep("cor8");
    const auto r01 = r01_of(o);
    const auto lang = generate(r01, 18);
    std::set<std::size_t> lengths;
    for (const auto& w : lang)
        if (!w.empty() && in_k(w)) lengths.insert(w.size());
    std::string got;
    for (auto n : lengths) got += (got.empty() ? "" : ",") + std::to_string(n);
    rep.check("length-set-is-{2,6,18}", lengths == std::set<std::size_t>{2, 6, 18}, "{" + got + "}");
    for (const char* witness : {"00", "100110", "001100110011001100"}) {
        Word w = binary(witness);
        rep.check(std::string("witness(") + witness + ")", lang.contains(w) && in_k(w), witness);
    }
    std::optional<std::string> disagreement;
    const auto small = generate(r01, 10);
    for (const auto& w : all_words_up_to(2, 10))
        if (small.contains(w) != reduce_to_empty(r01, w).accepted) {
            disagreement = bits(w);
            break;
        }
    rep.check_all("generate-agrees-with-reduce(<=10)", disagreement);
    return std::move(rep).take();
}

SuiteReport spectrum(const SuiteOptions& o) {
    Report rep("spectrum");
    const auto r01 = r01_of(o);
    const auto ruv_lang = forward_closure(builtin_ruv(), Word{}, 18);
    std::optional<std::string> not_simulated, bad_length;
    for (const auto& w : generate(r01, 18)) {
        if (!in_k(w)) continue;
        const Word image = phi(w);
        if (!not_simulated && !(all_u(image) && ruv_lang.contains(image))) not_simulated = bits(w);
        if (!bad_length && !w.empty() && !is_two_times_power_of_three(w.size())) bad_length = bits(w);
    }
    rep.check_all("phi-image-in-ruv-and-u-star", not_simulated);
    rep.check_all("lengths-are-2*3^n", bad_length);
    return std::move(rep).take();
}

// Factors of (x_1 t)(x_2 t)... with |factor| <= maxlen, deduplicated.
std::vector<Word> interleaved_factors(const ReductionArtifacts& art, std::size_t maxlen) {
    const std::size_t block = 1 + art.t.size();
    const std::size_t blocks = maxlen / block + 2;
    std::unordered_set<Word, WordHash> seen;
    std::vector<Word> out;
    for (const auto& xs : all_words(art.terminal_count, blocks)) {
        Word full = interleave(art, xs);
        for (std::size_t i = 0; i < full.size(); ++i)
            for (std::size_t len = 1; len <= maxlen && i + len <= full.size(); ++len) {
                Word f = full.factor(i, len);
                if (seen.insert(f).second) out.push_back(std::move(f));
            }
    }
    std::ranges::sort(out, Shortlex{});
    return out;
}

void reduction_checks(Report& rep, const std::string& tag, const GnfGrammar& g, std::size_t reverse_bound) {
    const auto art = build_artifacts(g);
    const auto& m = art.machine;
    auto fmt = [&](const Word& w) { return art.gamma.compact(w); };

    std::optional<std::string> bad_factor;
    for (const auto& w : all_words_up_to(art.gamma.size(), 5)) {
        bool has_bad = false;
        for (std::size_t i = 0; i + 1 < w.size() && !has_bad; ++i)
            has_bad = std::ranges::find(art.p_c, w.factor(i, 2)) == art.p_c.end();
        if (has_bad && !accepts(m, w).accepted) {
            bad_factor = fmt(w);
            break;
        }
    }
    rep.check_all(tag + ".bad-factor-accepted", bad_factor);

    std::optional<std::string> bad_endpoint;
    for (const auto& w : interleaved_factors(art, 6)) {
        bool starts_b = art.is_marker(w[0]);
        bool ends_n = art.is_nonterminal(w[w.size() - 1]);
        if ((starts_b || ends_n) && !accepts(m, w).accepted) {
            bad_endpoint = fmt(w);
            break;
        }
    }
    rep.check_all(tag + ".bad-endpoint-accepted", bad_endpoint);

    std::optional<std::string> wd_failure;
    for (const auto& v : all_words_up_to(art.terminal_count, 3)) {
        if (!derives(g, v)) continue;
        const Word wd = annotate(art, g, v).back();
        auto result = accepts(m, wd);
        bool via_q1 = result.accepted && !result.witness->steps.empty() &&
                      m.rules()[result.witness->steps.front().rule].to == m.state("q1");
        if (!via_q1 || !reduce_wd_check(art, wd) || project(wd, art.terminals()) != v) {
            wd_failure = fmt(wd);
            break;
        }
    }
    rep.check_all(tag + ".derivation-word-accepted", wd_failure);

    std::optional<std::string> reverse_failure;
    for (std::size_t len = 1; len <= reverse_bound && !reverse_failure; ++len)
        for (const auto& v : all_words(art.terminal_count, len))
            if (accepts(m, interleave(art, v)).accepted && !derives(g, v)) {
                reverse_failure = fmt(v);
                break;
            }
    rep.check_all(tag + ".interleave-accepted-implies-derivable", reverse_failure);
}

SuiteReport reduction(const SuiteOptions&) {
    Report rep("reduction");
    reduction_checks(rep, "Ga", grammar_ga(), 3);
    const auto gab = grammar_gab();
    reduction_checks(rep, "Gab", gab, 2);
    const auto art = build_artifacts(gab);
    rep.check("Gab.interleave(aa)-rejected", !accepts(art.machine, interleave(art, gab.word({"a", "a"}))).accepted);
    auto refuted = refute_universality(art.machine, 2);
    rep.check("Gab.not-universal(<=2)", refuted.has_value());
    return std::move(rep).take();
}

SuiteReport gjfa_cross(const SuiteOptions& o) {
    Report rep("gjfa-cross");
    const auto pool = gjfa_pool(o.seed, 200);
    const auto words = all_words_up_to(2, 6);
    std::optional<std::string> disagreement, bad_witness, not_monotone;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        const auto& m = pool[i];
        const auto lang = enumerate(m, 6);
        const auto shorter = enumerate(m, 5);
        if (!not_monotone && !std::ranges::includes(lang, shorter, Shortlex{}))
            not_monotone = "machine " + std::to_string(i);
        for (const auto& w : words) {
            auto result = accepts(m, w);
            if (!disagreement && result.accepted != lang.contains(w))
                disagreement = "machine " + std::to_string(i) + " word " + m.alphabet().compact(w);
            if (!bad_witness && result.accepted && !check_witness(m, w, *result.witness))
                bad_witness = "machine " + std::to_string(i) + " word " + m.alphabet().compact(w);
        }
    }
    rep.check("pool-size>=200", pool.size() >= 200);
    rep.check_all("accepts-iff-enumerated", disagreement);
    rep.check_all("witness-replays", bad_witness);
    rep.check_all("enumerate-monotone", not_monotone);

    // ε-only machines: exactly {ε} when a final state is ε-reachable.
    Gjfa loop(Alphabet({"a", "b"}), {"s", "f"}, 0, {1}, {{0, {}, 0}, {0, {}, 1}, {1, {}, 0}});
    Gjfa dead(Alphabet({"a", "b"}), {"s", "f"}, 0, {1}, {{0, {}, 0}, {1, {}, 1}});
    bool eps_ok = enumerate(loop, 4) == WordSet{Word{}} && accepts(loop, Word{}).accepted &&
                  !accepts(loop, Word{0}).accepted && enumerate(dead, 4).empty() && !accepts(dead, Word{}).accepted;
    rep.check("epsilon-rule-machines", eps_ok);
    return std::move(rep).take();
}

using SuiteFn = SuiteReport (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites{
        {"lemma2", lemma2}, {"lemma3", lemma3},     {"lemma4", lemma4},       {"lemma6", lemma6},
        {"cor5", cor5},     {"cor7", cor7},         {"cor8", cor8},           {"spectrum", spectrum},
        {"reduction", reduction}, {"gjfa-cross", gjfa_cross},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
    for (const auto& [n, fn] : registry())
        if (n == name) {
            const auto t0 = std::chrono::steady_clock::now();
            SuiteReport report = fn(options);
            report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return report;
        }
    throw Error(ErrorKind::unknown_suite, "unknown suite '" + std::string(name) + "'");
}

std::vector<SuiteReport> run_all(const SuiteOptions& options) {
    std::vector<SuiteReport> out;
    for (const auto& name : suite_names()) out.push_back(run_suite(name, options));
    return out;
}

}  // namespace discont
