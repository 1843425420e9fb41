#include <doctest.h>

#include <algorithm>

#include "discont/reduction.hpp"
#include "discont/suites.hpp"

using namespace discont;

namespace {

std::vector<Word> words_of(const Alphabet& a, std::initializer_list<std::string_view> texts) {
    std::vector<Word> out;
    for (auto t : texts) out.push_back(a.parse(t));
    return out;
}

bool same_set(std::vector<Word> x, std::vector<Word> y) {
    std::ranges::sort(x, Shortlex{});
    std::ranges::sort(y, Shortlex{});
    return x == y;
}

}  // namespace

TEST_CASE("artifacts of G_ab") {
    const auto art = build_artifacts(grammar_gab());
    const Alphabet& g = art.gamma;
    CHECK(g.names() == std::vector<std::string>{"a", "b", "S", "B", "β1", "β2"});
    CHECK(art.t == g.parse("S β1 B β2"));
    CHECK(same_set(art.p_bu, words_of(g, {"β1 a B", "β2 b"})));
    CHECK(same_set(art.p_nb, words_of(g, {"S β1", "B β2"})));
    CHECK(same_set(art.p_c, words_of(g, {"a S", "b S", "S β1", "B β2", "β1 B", "β2 a", "β2 b"})));
    CHECK(art.markers() == SymbolSet{4, 5});
    CHECK(art.marker(1) == g.at("β2"));
    CHECK(art.start == g.at("S"));
}

TEST_CASE("structural invariants") {
    for (const auto& grammar : {grammar_ga(), grammar_gab(), grammar_gfull()}) {
        const auto art = build_artifacts(grammar);
        CHECK(art.t.size() == 2 * art.nonterminal_count);
        CHECK(art.markers().size() == art.nonterminal_count);
        for (const auto& x : art.p_nb) CHECK(std::ranges::find(art.p_c, x) != art.p_c.end());
        for (const auto& x : art.p_bu) CHECK(x.size() >= 2);
        const auto& m = art.machine;
        CHECK(m.state_names() == std::vector<std::string>{"q0", "q1", "q2", "q3", "q4"});
        CHECK(m.start() == 0);
        CHECK(m.finals() == std::vector<StateId>{4});
    }
}

TEST_CASE("marker names avoid clashes") {
    const auto g = parse_gnf("gnf\nterminals: β1 a\nnonterminals: S\nstart: S\nrule: S -> a\n");
    const auto art = build_artifacts(g);
    CHECK(art.gamma.size() == 4);
    CHECK(art.gamma.name(art.marker(0)) != "β1");
    CHECK_THROWS_AS(build_artifacts(parse_gnf("gnf\nterminals: a\nnonterminals: S\nstart: S\nrule: S -> S\n")),
                    Error);
}

TEST_CASE("interleave") {
    const auto ga = build_artifacts(grammar_ga());
    CHECK(interleave(ga, ga.gamma.parse("a")) == ga.gamma.parse("a S β1"));
    const auto gab = build_artifacts(grammar_gab());
    CHECK(interleave(gab, gab.gamma.parse("a b")) == gab.gamma.parse("a S β1 B β2 b S β1 B β2"));
    for (std::size_t n = 1; n <= 5; ++n)
        CHECK(interleave(ga, power(ga.gamma.parse("a"), n)).size() == 3 * n);
    try {
        interleave(ga, Word{});
        FAIL("expected empty_input");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::empty_input);
    }
}

TEST_CASE("annotate and reduce_wd_check") {
    const auto gab_g = grammar_gab();
    const auto gab = build_artifacts(gab_g);
    const Alphabet& g = gab.gamma;
    CHECK(annotate(gab, gab_g, g.parse("a b")) == words_of(g, {"S", "S β1 a B", "S β1 a B β2 b"}));
    CHECK(project(annotate(gab, gab_g, g.parse("a b")).back(), gab.terminals()) == g.parse("a b"));
    CHECK_THROWS_AS(annotate(gab, gab_g, g.parse("b a")), Error);

    const auto ga_g = grammar_ga();
    const auto ga = build_artifacts(ga_g);
    CHECK(annotate(ga, ga_g, ga.gamma.parse("a")) == words_of(ga.gamma, {"S", "S β1 a"}));

    CHECK(reduce_wd_check(gab, g.parse("S β1 a B β2 b")));
    CHECK(reduce_wd_check(gab, g.parse("S")));
    CHECK_FALSE(reduce_wd_check(gab, g.parse("a S")));
    CHECK_FALSE(reduce_wd_check(gab, g.parse("S β1 a")));
}

TEST_CASE("machine branches") {
    const auto art = build_artifacts(grammar_gab());
    const Alphabet& g = art.gamma;
    // A factor outside P_C is enough.
    CHECK(accepts(art.machine, g.parse("a a")).accepted);
    CHECK(accepts(art.machine, g.parse("S β1 S")).accepted);
    // A factor of (Σ_T t)* that starts with a marker or ends with a nonterminal.
    CHECK(accepts(art.machine, g.parse("β1 B")).accepted);
    CHECK(accepts(art.machine, g.parse("a S")).accepted);
    CHECK(accepts(art.machine, g.parse("S β1 a B β2 b")).accepted);
    CHECK_FALSE(accepts(art.machine, interleave(art, g.parse("a a"))).accepted);
}

TEST_CASE("property: accepted interleavings come from derivable words") {
    for (const auto& [grammar, bound] : {std::pair{grammar_ga(), 3}, std::pair{grammar_gab(), 2},
                                         std::pair{grammar_gfull(), 2}}) {
        const auto art = build_artifacts(grammar);
        for (const auto& v : all_words_up_to(grammar.terminal_count(), bound)) {
            if (v.empty()) continue;
            if (accepts(art.machine, interleave(art, v)).accepted) CHECK(derives(grammar, v));
            if (derives(grammar, v)) {
                const auto ws = annotate(art, grammar, v);
                CHECK(ws.size() == v.size() + 1);
                CHECK(reduce_wd_check(art, ws.back()));
                CHECK(accepts(art.machine, ws.back()).accepted);
            }
        }
    }
}

TEST_CASE("sets file") {
    const auto art = build_artifacts(grammar_gab());
    const std::string text = write_sets(art);
    CHECK(text.find("t: S β1 B β2\n") != std::string::npos);
    CHECK(text.find("P_BU: β1 a B\n") != std::string::npos);
    CHECK(text.find("P_C: β2 b\n") != std::string::npos);
}
