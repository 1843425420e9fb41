#include <doctest.h>

#include <map>

#include "discont/gjfa.hpp"
#include "discont/suites.hpp"

using namespace discont;

namespace {

const Alphabet ab({"a", "b"});

Gjfa m1() { return Gjfa(ab, {"s", "f"}, 0, {1}, {{0, ab.parse("ab"), 1}}); }

Gjfa m2() { return Gjfa(ab, {"s", "f"}, 0, {1}, {{0, ab.parse("ab"), 1}, {1, ab.parse("ab"), 1}}); }

// Naive oracle: breadth-first over (state, word) without memoization or rule
// order, trying every rule at every occurrence.
bool accepts_oracle(const Gjfa& m, const Word& w) {
    std::set<std::pair<StateId, std::u16string>> seen;
    std::vector<std::pair<StateId, Word>> frontier{{m.start(), w}};
    while (!frontier.empty()) {
        auto [q, x] = frontier.back();
        frontier.pop_back();
        if (!seen.insert({q, x.raw()}).second) continue;
        if (x.empty() && m.is_final(q)) return true;
        for (const auto& r : m.rules()) {
            if (r.from != q) continue;
            for (std::size_t i = 0; i + r.label.size() <= x.size(); ++i)
                if (x.view().substr(i, r.label.size()) == r.label.view())
                    frontier.push_back({r.to, x.factor(0, i) + x.factor(i + r.label.size(), x.size())});
        }
    }
    return false;
}

}  // namespace

TEST_CASE("membership examples") {
    CHECK(accepts(m1(), ab.parse("ab")).accepted);
    CHECK_FALSE(accepts(m1(), Word{}).accepted);
    CHECK_FALSE(accepts(m1(), ab.parse("ba")).accepted);

    const auto r = accepts(m2(), ab.parse("aabb"));
    REQUIRE(r.accepted);
    REQUIRE(r.witness);
    CHECK(r.witness->steps == std::vector<WitnessStep>{{0, 2}, {1, 1}});
    CHECK(check_witness(m2(), ab.parse("aabb"), *r.witness));
    CHECK_FALSE(check_witness(m2(), ab.parse("aabb"), AcceptWitness{{{0, 1}}}));
    CHECK_FALSE(check_witness(m2(), ab.parse("aabb"), AcceptWitness{{{1, 2}, {1, 1}}}));

    CHECK_THROWS_AS(accepts(m1(), Word{5}), Error);
}

TEST_CASE("enumerate examples") {
    CHECK(enumerate(m1(), 2) == WordSet{ab.parse("ab")});
    CHECK(enumerate(m2(), 4) == WordSet{ab.parse("ab"), ab.parse("aabb"), ab.parse("abab")});
    CHECK(enumerate(Gjfa(ab, {"s"}, 0, {}, {{0, ab.parse("a"), 0}}), 5).empty());
    CHECK(enumerate(m2(), 1).empty());
}

TEST_CASE("refute_universality examples") {
    CHECK(refute_universality(m1(), 1) == Word{});
    const Gjfa all(ab, {"s"}, 0, {0}, {{0, ab.parse("a"), 0}, {0, ab.parse("b"), 0}});
    CHECK_FALSE(refute_universality(all, 3).has_value());
    const Gjfa m1_final_start(ab, {"s", "f"}, 0, {0, 1}, {{0, ab.parse("ab"), 1}});
    CHECK_FALSE(refute_universality(m1_final_start, 0).has_value());
    CHECK(refute_universality(m1_final_start, 2) == ab.parse("a"));
}

TEST_CASE("epsilon rules") {
    // An ε-loop must not hang the search; an ε-move alone can change state.
    const Gjfa m(ab, {"s", "t", "f"}, 0, {2},
                 {{0, Word{}, 0}, {0, Word{}, 1}, {1, Word{}, 0}, {1, ab.parse("b"), 2}, {2, ab.parse("a"), 2}});
    CHECK(accepts(m, ab.parse("b")).accepted);
    CHECK(accepts(m, ab.parse("aba")).accepted);
    CHECK_FALSE(accepts(m, ab.parse("a")).accepted);
    CHECK_FALSE(accepts(m, Word{}).accepted);
    const auto r = accepts(m, ab.parse("ab"));
    REQUIRE(r.accepted);
    CHECK(check_witness(m, ab.parse("ab"), *r.witness));
    CHECK(enumerate(m, 3) == WordSet{ab.parse("b"), ab.parse("ab"), ab.parse("ba"), ab.parse("aab"),
                                     ab.parse("aba"), ab.parse("baa")});
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(Gjfa(ab, {"s"}, 1, {0}, {}), Error);
    CHECK_THROWS_AS(Gjfa(ab, {"s"}, 0, {3}, {}), Error);
    CHECK_THROWS_AS(Gjfa(ab, {"s"}, 0, {0}, {{0, Word{7}, 0}}), Error);
    CHECK_THROWS_AS(Gjfa(ab, {"s", "s"}, 0, {0}, {}), Error);
}

TEST_CASE("text format") {
    const std::string text =
        "gjfa\n# two states\nalphabet: a b\nstates: s f\nstart: s\nfinal: f\n\nrule: s f a b\nrule: f f a b\n";
    const Gjfa m = parse_gjfa(text);
    CHECK(m == m2());
    CHECK(parse_gjfa(write_gjfa(m)) == m);

    const Gjfa eps = parse_gjfa("gjfa\nalphabet: a\nstates: s\nstart: s\nfinal: s\nrule: s s _\n");
    CHECK(eps.rules().front().label.empty());

    auto line_of = [](const std::string& bad) -> std::size_t {
        try {
            parse_gjfa(bad);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("gjfa\nalphabet: a b\nstates: s\nstart: s\nfinal: s\nrule: s s c\n") == 6);
    CHECK(line_of("gjfa\nalphabet: a b\nstates: s\nstart: x\n") == 4);
    CHECK(line_of("nope\n") == 1);
    CHECK(line_of("gjfa\nalphabet: a\nstates: s\nstart: s\nfinal: s\nrule: s t a\n") == 6);
}

TEST_CASE("property: engine agrees with a naive oracle") {
    const auto pool = gjfa_pool(default_seed + 1, 60);
    const auto words = all_words_up_to(2, 5);
    std::size_t disagreements = 0, witness_failures = 0;
    for (const auto& m : pool) {
        const auto lang = enumerate(m, 5);
        for (const auto& x : words) {
            const auto r = accepts(m, x);
            const bool oracle = accepts_oracle(m, x);
            if (r.accepted != oracle || lang.contains(x) != oracle) ++disagreements;
            if (r.accepted && !check_witness(m, x, *r.witness)) ++witness_failures;
        }
        auto cex = refute_universality(m, 5);
        for (const auto& x : words) {
            if (cex && Shortlex{}(x, *cex)) CHECK(lang.contains(x));
            if (cex && x == *cex) CHECK_FALSE(lang.contains(x));
        }
        if (!cex) CHECK(lang.size() == words.size());
    }
    CHECK(disagreements == 0);
    CHECK(witness_failures == 0);
}

TEST_CASE("property: enumerate is monotone in the bound") {
    for (const auto& m : gjfa_pool(7, 40)) {
        const auto small = enumerate(m, 4);
        const auto large = enumerate(m, 6);
        for (const auto& x : small) CHECK(large.contains(x));
        for (const auto& x : large)
            if (x.size() <= 4) CHECK(small.contains(x));
    }
}
