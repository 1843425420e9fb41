#include <doctest.h>

#include "discont/systems.hpp"

using namespace discont;

namespace {

// φ spelled out position by position, 1-indexed as in x_1 ... x_n.
Word phi_oracle(const std::string& bits) {
    std::string out;
    const std::size_t n = bits.size();
    for (std::size_t k = 1; k <= n; ++k)
        out += (k > 1 && k < n && bits[k - 2] == bits[k]) ? 'V' : 'u';
    return uv(out);
}

bool in_k_oracle(const std::string& bits) {
    for (const char* bad : {"000", "010", "101", "111"})
        if (bits.find(bad) != std::string::npos) return false;
    return true;
}

std::string bits_of(const Word& w) {
    std::string s;
    for (auto c : w) s += c == zero ? '0' : '1';
    return s;
}

// Φ by the recursive definition.
std::uint64_t potential_oracle(std::u16string_view w) {
    if (w.empty()) return 0;
    const std::uint64_t rest = potential_oracle(w.substr(1));
    return w.front() == sym_v ? 1 + 3 * rest : 1 + rest;
}

Word block_power(std::size_t n) { return power(binary("1100"), n); }

}  // namespace

TEST_CASE("builtin systems") {
    const auto r01 = builtin_r01();
    CHECK(r01.system().instructions().size() == 9);
    CHECK(r01.system().k() == 2);
    CHECK(reduce_to_empty(r01, binary("00")).accepted);
    const auto ruv = builtin_ruv();
    CHECK(ruv.instructions().size() == 4);
    CHECK(ruv.k() == 1);
    CHECK(apply(ruv, Word{}, "0", 1) == uv("uu"));
    CHECK(apply(ruv, uv("Vu"), "3", 1) == uv("uuuu"));
    CHECK_THROWS_AS(binary("012"), Error);
    CHECK_THROWS_AS(uv("uv"), Error);
}

TEST_CASE("phi, in_k and potential") {
    CHECK(phi(binary("00")) == uv("uu"));
    CHECK(phi(binary("0100")) == uv("uVuu"));
    CHECK(phi(Word{}).empty());
    CHECK(in_k(binary("100110")));
    CHECK_FALSE(in_k(binary("001000")));
    CHECK(in_k(Word{}));
    CHECK(potential(uv("uu")) == 2);
    CHECK(potential(uv("Vu")) == 4);
    CHECK(potential(uv("uuVu")) == 6);
    CHECK(potential(uv("uuuu")) == potential(uv("Vu")));
}

TEST_CASE("property: phi and in_k against position-wise oracles") {
    for (const auto& w : all_words_up_to(2, 10)) {
        const auto bits = bits_of(w);
        CHECK(phi(w) == phi_oracle(bits));
        CHECK(in_k(w) == in_k_oracle(bits));
        CHECK(phi(w).size() == w.size());
    }
    for (const auto& w : all_words_up_to(2, 9)) CHECK(potential(w) == potential_oracle(w.view()));
}

TEST_CASE("shift chains") {
    const auto r01 = builtin_r01();
    auto t = lemma6_chain(1, 1);
    CHECK(t.start == binary("00110010001100"));
    CHECK(t.last() == binary("00") + block_power(10) + binary("1000"));
    CHECK(t.steps.size() == 16);
    CHECK_FALSE(validate_trace(r01.system(), t).has_value());
    CHECK(t.last().size() - t.start.size() == 32);
    Word prev = t.start;
    for (const auto& s : t.steps) {
        CHECK(s.word.size() == prev.size() + 2);
        prev = s.word;
    }
    for (std::uint64_t a = 1; a <= 3; ++a)
        for (std::uint64_t b = 1; b <= 3; ++b) {
            auto c = lemma6_chain(a, b);
            CHECK_FALSE(validate_trace(r01.system(), c).has_value());
            CHECK(c.last() == binary("00") + block_power(a + 9) + binary("1000") + block_power(b - 1));
        }
    CHECK_THROWS_AS(lemma6_chain(0, 1), Error);
    CHECK_THROWS_AS(lemma6_chain(1, 0), Error);

    // Swapping one instruction breaks exactly that step.
    t.steps[5].instruction = t.steps[5].instruction == "2c" ? "2d" : "2c";
    CHECK(validate_trace(r01.system(), t) == 5);
}

TEST_CASE("chained shift chains") {
    const auto r01 = builtin_r01();
    const auto one = corollary5_chain(1);
    CHECK(one.start == binary("001000") + block_power(1));
    CHECK(one.last() == binary("00") + block_power(9) + binary("1000"));
    const auto two = corollary5_chain(2);
    CHECK(two.steps.size() == 32);
    CHECK_FALSE(validate_trace(r01.system(), two).has_value());
    CHECK(two.last() == binary("00") + block_power(18) + binary("1000"));
    CHECK_THROWS_AS(corollary5_chain(0), Error);
}

TEST_CASE("level derivations") {
    const auto r01 = builtin_r01();
    CHECK(corollary_exponent(0) == 0);
    CHECK(corollary_exponent(1) == 4);
    CHECK(corollary_exponent(2) == 40);
    CHECK(corollary_exponent(6) == (2 * 531441 - 2) / 4);
    CHECK_THROWS_AS(corollary_exponent(7), Error);

    const auto zero_level = corollary7_derivation(0);
    REQUIRE(zero_level.steps.size() == 1);
    CHECK(zero_level.last() == binary("00"));

    const auto one = corollary7_derivation(1);
    CHECK(one.last() == binary("00") + block_power(4));
    CHECK(one.last().size() == 18);
    CHECK_FALSE(validate_trace(r01.system(), one).has_value());
    CHECK(reduce_to_empty(r01, one.last()).accepted);
    CHECK(in_k(one.last()));

    const auto two = corollary7_derivation(2);
    CHECK(two.last() == binary("00") + block_power(40));
    CHECK_FALSE(validate_trace(r01.system(), two).has_value());
}

TEST_CASE("closing chain needs the end-anchored instructions") {
    // The same words labelled 2b/2a at the two steps next to the right end do
    // not replay: only 0$ can follow the inserted factor there.
    const auto r01 = builtin_r01();
    auto t = corollary7_derivation(1);
    REQUIRE(t.steps.size() == 9);
    CHECK(t.steps[3].instruction == "3b");
    CHECK(t.steps[8].instruction == "3a");
    t.steps[3].instruction = "2b";
    CHECK(validate_trace(r01.system(), t) == 3);
    t.steps[3].instruction = "3b";
    t.steps[8].instruction = "2a";
    CHECK(validate_trace(r01.system(), t) == 8);
}
