#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"
#include "discont/gjfa.hpp"
#include "discont/reduction.hpp"
#include "discont/rewriting.hpp"
#include "discont/suites.hpp"
#include "discont/systems.hpp"

using namespace discont;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DISCONT_DATA_DIR) + "/" + name; }

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("member") {
    auto r = run({"member", "builtin:R01", "100110", "--trace"});
    CHECK(r.code == 0);
    CHECK(r.out == "ACCEPT\n100110  [3b @ 4]\n1000  [1a @ 1]\n00  [0a @ 1]\n_\n");

    r = run({"member", "builtin:R01", "0011"});
    CHECK(r.code == 1);
    CHECK(r.out == "REJECT\n");

    r = run({"member", "builtin:R01", "102"});
    CHECK(r.code == 2);
    CHECK(r.err.find("error (") == 0);

    r = run({"member", data("m2.gjfa"), "aabb", "--trace"});
    CHECK(r.code == 0);
    CHECK(r.out == "ACCEPT\naabb  [r1 @ 2]\nab  [r2 @ 1]\n_\n");

    r = run({"member", "builtin:RuV", "uuVu", "--trace"});
    CHECK(r.code == 0);
    CHECK(r.out == "ACCEPT\n_  [0 @ 1]\nuu  [1 @ 1]\nuuVu\n");
    CHECK(run({"member", data("ruv.crs"), "uuu"}).code == 1);
    CHECK(run({"member", data("r01.crs"), "_"}).code == 0);
    CHECK(run({"member", "builtin:Nope", "0"}).code == 2);
    CHECK(run({"member", data("missing.gjfa"), "a"}).code == 2);
}

TEST_CASE("member traces replay") {
    const auto r01 = builtin_r01();
    for (const char* word : {"00", "1000", "100110", "001000"}) {
        auto r = run({"member", "builtin:R01", word, "--trace"});
        REQUIRE(r.code == 0);
        auto lines = lines_of(r.out);
        DerivationTrace t{binary(word), {}, Direction::reduce};
        for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
            const auto open = lines[i].find("  [");
            const auto at = lines[i].find(" @ ");
            const std::string id = lines[i].substr(open + 3, at - open - 3);
            const std::size_t pos = std::stoul(lines[i].substr(at + 3));
            const std::string next = lines[i + 1].substr(0, lines[i + 1].find(' '));
            t.steps.push_back({id, pos, next == "_" ? Word{} : binary(next)});
        }
        CHECK_FALSE(validate_trace(r01.system(), t).has_value());
        CHECK(t.last().empty());
    }
}

TEST_CASE("generate") {
    auto r = run({"generate", "builtin:R01", "--maxlen", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "_\n00\n1000\n001000\n100110\n");
    r = run({"generate", "builtin:R01", "--maxlen", "6", "--filter", "K"});
    CHECK(r.out == "_\n00\n100110\n");
    r = run({"generate", data("m1.gjfa"), "--maxlen", "2"});
    CHECK(r.out == "ab\n");
    r = run({"generate", "builtin:RuV", "--maxlen", "4"});
    CHECK(r.out == "_\nuu\nuuVu\n");
    r = run({"generate", "builtin:RuV", "--maxlen", "4", "--filter", "K"});
    CHECK(r.code == 2);
    CHECK(r.err.find("filter-on-nonbinary") != std::string::npos);
    CHECK(run({"generate", "builtin:R01"}).code == 2);
}

TEST_CASE("reduce") {
    const auto dir = std::filesystem::temp_directory_path() / "discont_cli_test";
    std::filesystem::create_directories(dir);
    const std::string prefix = (dir / "gab").string();
    auto r = run({"reduce", data("g_ab.gnf"), "--out", prefix});
    REQUIRE(r.code == 0);
    const auto sets = slurp(prefix + ".sets");
    CHECK(sets.find("t: S β1 B β2\n") != std::string::npos);
    const auto machine = parse_gjfa(slurp(prefix + ".gjfa"));
    CHECK(machine == build_artifacts(grammar_gab()).machine);

    const std::string a_prefix = (dir / "ga").string();
    REQUIRE(run({"reduce", data("g_a.gnf"), "--out", a_prefix}).code == 0);
    const auto ga = parse_gjfa(slurp(a_prefix + ".gjfa"));
    CHECK(ga.state_count() == 5);
    CHECK(ga.finals() == std::vector<StateId>{ga.state("q4")});

    r = run({"reduce", data("g_bad.gnf"), "--out", (dir / "bad").string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("rule 2") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("verify") {
    auto r = run({"verify", "--suite", "lemma6"});
    CHECK(r.code == 0);
    std::size_t pass_lines = 0;
    for (const auto& l : lines_of(r.out)) pass_lines += l.starts_with("PASS lemma6.");
    CHECK(pass_lines == 9);
    r = run({"verify", "--suite", "nosuch"});
    CHECK(r.code == 2);
    CHECK(r.err.find("unknown-suite") != std::string::npos);
    CHECK(run({"verify"}).code == 2);
    r = run({"verify", "--all"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("refute") {
    auto r = run({"refute", data("m1.gjfa"), "--maxlen", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "_\n");
    r = run({"refute", data("universal.gjfa"), "--maxlen", "3"});
    CHECK(r.out == "NONE-UP-TO 3\n");
    CHECK(run({"refute", "builtin:R01", "--maxlen", "3"}).code == 2);

    // The reduction machine of G_ab rejects interleave(aa) on its own.
    const auto dir = std::filesystem::temp_directory_path() / "discont_cli_refute";
    std::filesystem::create_directories(dir);
    const std::string prefix = (dir / "gab").string();
    REQUIRE(run({"reduce", data("g_ab.gnf"), "--out", prefix}).code == 0);
    r = run({"member", prefix + ".gjfa", "a S β1 B β2 a S β1 B β2"});
    CHECK(r.code == 1);
    std::filesystem::remove_all(dir);
}

TEST_CASE("phi") {
    auto r = run({"phi", "0100"});
    CHECK(r.code == 0);
    CHECK(r.out == "phi: uVuu\nin_k: false\npotential: 8\n");
    r = run({"phi", "100110"});
    CHECK(r.out.find("in_k: true") != std::string::npos);
    CHECK(run({"phi", "012"}).code == 2);
}

TEST_CASE("usage") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("member") != std::string::npos);
}
