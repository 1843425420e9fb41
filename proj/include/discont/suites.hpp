#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "discont/gjfa.hpp"
#include "discont/gnf.hpp"
#include "discont/rewriting.hpp"

namespace discont {

struct CheckResult {
    std::string name;  ///< dotted suffix after the suite name, no spaces
    bool pass = false;
    std::string counterexample;  ///< concrete word or step index when failing
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    bool pass() const;
    /// `PASS|FAIL <suite>.<check> [counterexample]`, one line per check.
    std::string render() const;
};

inline constexpr std::uint64_t default_seed = 20150610;

struct SuiteOptions {
    std::uint64_t seed = default_seed;
    /// Replaces the builtin R01 everywhere it is used (mutation testing).
    std::optional<ClearingRA> r01;
};

/// Suite names in run order.
const std::vector<std::string>& suite_names();

/// Throws unknown_suite for names outside suite_names().
SuiteReport run_suite(std::string_view name, const SuiteOptions& options = {});
std::vector<SuiteReport> run_all(const SuiteOptions& options = {});

/// G_a: S -> a S | a.
GnfGrammar grammar_ga();
/// G_ab: S -> a B, B -> b.
GnfGrammar grammar_gab();
/// G_full: S -> a S | b S | a | b.
GnfGrammar grammar_gfull();

/// Random GJFA over {a, b} with 1..max_states states, 1..max_rules rules and
/// labels of length at most max_label.
Gjfa random_gjfa(std::mt19937_64& rng, std::size_t max_states = 3, std::size_t max_rules = 4,
                 std::size_t max_label = 2);

/// `count` machines drawn from random_gjfa with a generator seeded by `seed`.
std::vector<Gjfa> gjfa_pool(std::uint64_t seed, std::size_t count);

}  // namespace discont
