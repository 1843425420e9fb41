#include <doctest.h>

#include <regex>
#include <sstream>

#include "discont/suites.hpp"
#include "discont/systems.hpp"

using namespace discont;

namespace {

std::string without_times(const std::vector<SuiteReport>& reports) {
    std::string out;
    for (const auto& r : reports) out += r.render();
    return out;
}

ClearingRA mutate(std::string_view id, const Word& right) {
    auto ins = builtin_r01().system().instructions();
    for (auto& i : ins)
        if (i.id == id) i.right = right;
    return ClearingRA(ContextRewritingSystem(Alphabet({"0", "1"}), 2, 2, std::move(ins)));
}

}  // namespace

TEST_CASE("every suite passes on a fresh build") {
    const auto reports = run_all();
    CHECK(reports.size() == suite_names().size());
    for (const auto& r : reports) {
        INFO(r.render());
        CHECK(r.pass());
        CHECK_FALSE(r.checks.empty());
    }
}

TEST_CASE("render format") {
    const auto r = run_suite("lemma6");
    const std::regex line(R"((PASS|FAIL) lemma6\.\S+( .+)?)");
    std::size_t lines = 0;
    std::istringstream in(r.render());
    for (std::string l; std::getline(in, l); ++lines) CHECK(std::regex_match(l, line));
    CHECK(lines == 9);

    SuiteReport failing{"x", {{"a", true, ""}, {"b", false, "0110"}}, 0.0};
    CHECK_FALSE(failing.pass());
    CHECK(failing.render() == "PASS x.a\nFAIL x.b 0110\n");
}

TEST_CASE("unknown suite") {
    try {
        run_suite("nosuch");
        FAIL("expected unknown_suite");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::unknown_suite);
    }
}

TEST_CASE("reports are deterministic") {
    CHECK(without_times(run_all()) == without_times(run_all()));
    SuiteOptions other;
    other.seed = 99;
    CHECK(run_suite("gjfa-cross", other).pass());
}

TEST_CASE("mutating an instruction is caught") {
    // Loosen one right context at a time.
    for (const auto& [id, right] : {std::pair{"2b", binary("0")}, std::pair{"1a", binary("0")},
                                    std::pair{"3a", binary("")}}) {
        SuiteOptions o;
        o.r01 = mutate(id, right);
        const auto lemma4 = run_suite("lemma4", o);
        const auto cor8 = run_suite("cor8", o);
        INFO(id);
        CHECK_FALSE((lemma4.pass() && cor8.pass()));
        for (const auto& r : {lemma4, cor8})
            for (const auto& c : r.checks)
                if (!c.pass) CHECK_FALSE(c.counterexample.empty());
    }
}

TEST_CASE("fixed grammars and machine pool") {
    CHECK(derives(grammar_gfull(), Alphabet({"a", "b"}).parse("abba")));
    CHECK_FALSE(derives(grammar_ga(), Word{}));
    const auto a = gjfa_pool(5, 20);
    const auto b = gjfa_pool(5, 20);
    REQUIRE(a.size() == 20);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
        CHECK(a[i].state_count() <= 3);
        CHECK(a[i].rules().size() <= 4);
        for (const auto& r : a[i].rules()) CHECK(r.label.size() <= 2);
    }
}
