#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <variant>

#include "discont/gjfa.hpp"
#include "discont/gnf.hpp"
#include "discont/reduction.hpp"
#include "discont/rewriting.hpp"
#include "discont/suites.hpp"
#include "discont/systems.hpp"

namespace discont::cli {

namespace {

constexpr int exit_accept = 0;
constexpr int exit_reject = 1;
constexpr int exit_usage = 2;

using Machine = std::variant<Gjfa, ClearingRA, ContextRewritingSystem>;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::parse_error, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string first_token(const std::string& text) {
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream words(line);
        if (std::string tok; words >> tok) return tok;
    }
    return {};
}

Machine load_machine(const std::string& ref) {
    if (ref == "builtin:R01") return builtin_r01();
    if (ref == "builtin:RuV") return builtin_ruv();
    if (ref.starts_with("builtin:")) throw Error(ErrorKind::parse_error, "unknown builtin '" + ref + "'");
    const std::string text = read_file(ref);
    const std::string head = first_token(text);
    try {
        if (head == "gjfa") return parse_gjfa(text);
        if (head == "crs") {
            auto system = parse_crs(text);
            if (system.all_clearing() && system.sigma_size() == system.gamma().size()) return ClearingRA(system);
            return system;
        }
    } catch (const ParseError& e) {
        throw ParseError(0, ref + ": " + e.what());
    }
    throw Error(ErrorKind::parse_error, ref + ": expected a 'gjfa' or 'crs' file");
}

const Alphabet& input_alphabet(const Machine& m) {
    return std::visit(
        [](const auto& x) -> const Alphabet& {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Gjfa>)
                return x.alphabet();
            else if constexpr (std::is_same_v<T, ClearingRA>)
                return x.sigma();
            else
                return x.gamma();
        },
        m);
}

Word read_word(const Machine& m, const std::string& text) {
    Word w = input_alphabet(m).parse(text);
    if (const auto* crs = std::get_if<ContextRewritingSystem>(&m); crs && !crs->over_sigma(w))
        throw Error(ErrorKind::alphabet_mismatch, "word uses working symbols outside sigma");
    return w;
}

void print_trace(std::ostream& out, const Alphabet& a, const DerivationTrace& t) {
    const Word* cur = &t.start;
    for (const auto& s : t.steps) {
        out << a.compact(*cur) << "  [" << s.instruction << " @ " << s.position << "]\n";
        cur = &s.word;
    }
    out << a.compact(*cur) << "\n";
}

int cmd_member(const std::string& ref, const std::string& word_text, bool trace, std::ostream& out) {
    const Machine machine = load_machine(ref);
    const Word w = read_word(machine, word_text);
    const Alphabet& a = input_alphabet(machine);

    if (const auto* g = std::get_if<Gjfa>(&machine)) {
        auto result = accepts(*g, w);
        out << (result.accepted ? "ACCEPT" : "REJECT") << "\n";
        if (result.accepted && trace) {
            Word cur = w;
            for (const auto& s : result.witness->steps) {
                const auto& rule = g->rules()[s.rule];
                out << a.compact(cur) << "  [r" << s.rule + 1 << " @ " << s.position << "]\n";
                if (!rule.label.empty()) cur = delete_at(cur, rule.label, s.position);
            }
            out << a.compact(cur) << "\n";
        }
        return result.accepted ? exit_accept : exit_reject;
    }
    if (const auto* cl = std::get_if<ClearingRA>(&machine)) {
        auto result = reduce_to_empty(*cl, w);
        out << (result.accepted ? "ACCEPT" : "REJECT") << "\n";
        if (result.accepted && trace) print_trace(out, a, *result.trace);
        return result.accepted ? exit_accept : exit_reject;
    }
    // General systems accept the forward closure of ε; with no shrinking
    // instruction a derivation of w never passes a longer word.
    const auto& crs = std::get<ContextRewritingSystem>(machine);
    if (!crs.non_shrinking())
        throw Error(ErrorKind::invalid_parameters, "membership needs a system without shrinking instructions");
    auto derivation = find_derivation(crs, Word{}, w, w.size());
    out << (derivation ? "ACCEPT" : "REJECT") << "\n";
    if (derivation && trace) print_trace(out, a, *derivation);
    return derivation ? exit_accept : exit_reject;
}

bool is_binary(const Alphabet& a) { return a == Alphabet({"0", "1"}); }

int cmd_generate(const std::string& ref, std::size_t maxlen, const std::string& filter, std::ostream& out) {
    const Machine machine = load_machine(ref);
    const Alphabet& a = input_alphabet(machine);
    if (!filter.empty() && filter != "K") throw Error(ErrorKind::invalid_parameters, "only --filter K is known");
    if (!filter.empty() && !is_binary(a))
        throw Error(ErrorKind::filter_on_nonbinary, "--filter K needs a machine over {0, 1}");
    WordSet words = std::visit(
        [&](const auto& m) -> WordSet {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Gjfa>)
                return enumerate(m, maxlen);
            else if constexpr (std::is_same_v<T, ClearingRA>)
                return generate(m, maxlen);
            else
                return forward_closure(m, Word{}, maxlen);
        },
        machine);
    for (const auto& w : words)
        if (filter.empty() || in_k(w)) out << a.compact(w) << "\n";
    return exit_accept;
}

int cmd_reduce(const std::string& grammar_path, const std::string& prefix, std::ostream& out) {
    const auto grammar = parse_gnf(read_file(grammar_path));
    if (auto issue = validate(grammar)) throw Error(issue->kind, issue->message);
    const auto art = build_artifacts(grammar);
    const std::string machine_path = prefix + ".gjfa";
    const std::string sets_path = prefix + ".sets";
    for (const auto& [path, body] : {std::pair{machine_path, write_gjfa(art.machine)},
                                     std::pair{sets_path, write_sets(art)}}) {
        std::ofstream file(path, std::ios::binary);
        if (!file || !(file << body)) throw Error(ErrorKind::parse_error, "cannot write '" + path + "'");
    }
    out << "wrote " << machine_path << " (" << art.machine.state_count() << " states, "
        << art.machine.rules().size() << " rules)\n"
        << "wrote " << sets_path << "\n";
    return exit_accept;
}

int cmd_verify(const std::vector<std::string>& suites, bool all, std::uint64_t seed, std::ostream& out) {
    if (!all && suites.empty()) throw Error(ErrorKind::invalid_parameters, "give --suite NAME or --all");
    for (const auto& s : suites)
        if (std::ranges::find(suite_names(), s) == suite_names().end())
            throw Error(ErrorKind::unknown_suite, "unknown suite '" + s + "'");
    SuiteOptions options;
    options.seed = seed;
    bool pass = true;
    for (const auto& name : all ? suite_names() : suites) {
        auto report = run_suite(name, options);
        out << report.render();
        out << "# " << name << ": " << report.checks.size() << " checks in " << std::fixed << std::setprecision(3)
            << report.seconds << " s\n";
        pass = pass && report.pass();
    }
    return pass ? exit_accept : exit_reject;
}

int cmd_refute(const std::string& ref, std::size_t maxlen, std::ostream& out) {
    const Machine machine = load_machine(ref);
    const auto* g = std::get_if<Gjfa>(&machine);
    if (!g) throw Error(ErrorKind::invalid_parameters, "refute needs a GJFA");
    if (auto w = refute_universality(*g, maxlen))
        out << g->alphabet().compact(*w) << "\n";
    else
        out << "NONE-UP-TO " << maxlen << "\n";
    return exit_accept;
}

int cmd_phi(const std::string& word_text, std::ostream& out) {
    const Word w = Alphabet({"0", "1"}).parse(word_text);
    const Word image = phi(w);
    out << "phi: " << Alphabet({"u", "V"}).compact(image) << "\n"
        << "in_k: " << (in_k(w) ? "true" : "false") << "\n"
        << "potential: " << potential(image) << "\n";
    return exit_accept;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Jumping automata, clearing restarting automata and their verification suites", "discont"};
    app.require_subcommand(1);

    std::string machine, word, filter, grammar, prefix = "reduced";
    std::size_t maxlen = 0;
    bool trace = false, all = false;
    std::vector<std::string> suites;
    std::uint64_t seed = default_seed;

    auto* member = app.add_subcommand("member", "Decide membership of a word");
    member->add_option("machine", machine, "GJFA or CRS file, or builtin:R01 / builtin:RuV")->required();
    member->add_option("word", word, "word; '_' is the empty word")->required();
    member->add_flag("--trace", trace, "print the accepting computation");

    auto* gen = app.add_subcommand("generate", "List accepted words up to a length");
    gen->add_option("machine", machine, "GJFA or CRS file, or builtin:R01 / builtin:RuV")->required();
    gen->add_option("--maxlen", maxlen, "length bound")->required();
    gen->add_option("--filter", filter, "intersect with the regular filter K");

    auto* red = app.add_subcommand("reduce", "Build the universality-reduction GJFA of a GNF grammar");
    red->add_option("grammar", grammar, "grammar file")->required();
    red->add_option("--out", prefix, "output prefix for .gjfa and .sets");

    auto* ver = app.add_subcommand("verify", "Run verification suites");
    ver->add_option("--suite", suites, "suite name (repeatable)");
    ver->add_flag("--all", all, "run every suite");
    ver->add_option("--seed", seed, "seed for sampled machine pools");

    auto* ref = app.add_subcommand("refute", "Search for a rejected word (bounded universality refutation)");
    ref->add_option("machine", machine, "GJFA file")->required();
    ref->add_option("--maxlen", maxlen, "length bound")->required();

    auto* ph = app.add_subcommand("phi", "Print phi, K-membership and potential of a binary word");
    ph->add_option("word", word, "binary word")->required();

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_accept;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_accept;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (*member) return cmd_member(machine, word, trace, out);
        if (*gen) return cmd_generate(machine, maxlen, filter, out);
        if (*red) return cmd_reduce(grammar, prefix, out);
        if (*ver) return cmd_verify(suites, all, seed, out);
        if (*ref) return cmd_refute(machine, maxlen, out);
        if (*ph) return cmd_phi(word, out);
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace discont::cli
