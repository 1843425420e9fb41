#include "discont/systems.hpp"

#include <array>

namespace discont {

namespace {

Instruction clearing(std::string id, bool left_sentinel, std::string_view left, std::string_view from,
                     std::string_view right, bool right_sentinel) {
    return Instruction{std::move(id), left_sentinel, binary(left), binary(from), Word{}, binary(right),
                       right_sentinel};
}

}  // namespace

Word binary(std::string_view bits) {
    Word w;
    for (char c : bits) {
        if (c != '0' && c != '1') throw Error(ErrorKind::alphabet_mismatch, "binary word expected");
        w.push_back(c == '0' ? zero : one);
    }
    return w;
}

Word uv(std::string_view letters) {
    Word w;
    for (char c : letters) {
        if (c != 'u' && c != 'V') throw Error(ErrorKind::alphabet_mismatch, "word over {u, V} expected");
        w.push_back(c == 'u' ? sym_u : sym_v);
    }
    return w;
}

ClearingRA builtin_r01() {
    std::vector<Instruction> ins{
        clearing("0a", true, "", "00", "", true),
        clearing("1a", true, "", "10", "00", false),
        clearing("1b", true, "", "00", "10", false),
        clearing("2a", false, "01", "10", "00", false),
        clearing("2b", false, "00", "11", "01", false),
        clearing("2c", false, "11", "00", "10", false),
        clearing("2d", false, "10", "01", "11", false),
        clearing("3a", false, "01", "10", "0", true),
        clearing("3b", false, "00", "11", "0", true),
    };
    return ClearingRA(ContextRewritingSystem(Alphabet({"0", "1"}), 2, 2, std::move(ins)));
}

ContextRewritingSystem builtin_ruv() {
    std::vector<Instruction> ins{
        Instruction{"0", true, {}, {}, uv("uu"), {}, true},
        Instruction{"1", true, {}, uv("u"), uv("uuV"), {}, false},
        Instruction{"2", false, {}, uv("Vu"), uv("uuuV"), {}, false},
        Instruction{"3", false, {}, uv("Vu"), uv("uuuu"), {}, true},
    };
    return ContextRewritingSystem(Alphabet({"u", "V"}), 2, 1, std::move(ins));
}

Word phi(const Word& w) {
    Word out;
    const std::size_t n = w.size();
    for (std::size_t k = 0; k < n; ++k) {
        bool interior = k > 0 && k + 1 < n;
        out.push_back(interior && w[k - 1] == w[k + 1] ? sym_v : sym_u);
    }
    return out;
}

bool in_k(const Word& w) {
    // The forbidden factors are exactly the length-3 words with x1 = x3.
    for (std::size_t i = 0; i + 2 < w.size(); ++i)
        if (w[i] == w[i + 2]) return false;
    return true;
}

std::uint64_t potential(const Word& w) {
    std::uint64_t value = 0;
    for (std::size_t i = w.size(); i > 0; --i) value = w[i - 1] == sym_v ? 1 + 3 * value : 1 + value;
    return value;
}

Word shift_word(std::uint64_t alpha, std::uint64_t beta) {
    return binary("00") + power(binary("1100"), alpha) + binary("1000") + power(binary("1100"), beta);
}

namespace {

// One line of the shift chain: the produced word is
//   00 (1100)^{α + alpha_shift} tail (1100)^{β - beta_shift}
// and the inserted factor starts `offset` symbols into `tail`.
struct ShiftStep {
    const char* instruction;
    unsigned alpha_shift;
    const char* tail;
    unsigned beta_shift;
    unsigned offset;
};

constexpr std::array<ShiftStep, 16> shift_steps{{
    {"2b", 0, "100110", 0, 4},
    {"2a", 0, "11000110", 0, 2},
    {"2b", 1, "110110", 0, 1},
    {"2d", 1, "11001110", 0, 4},
    {"2d", 2, "111001", 0, 5},
    {"2c", 2, "11001001", 0, 3},
    {"2a", 3, "110001", 0, 2},
    {"2b", 4, "1101", 0, 1},
    {"2c", 4, "1101100100", 1, 6},
    {"2d", 4, "110011100100", 1, 4},
    {"2c", 5, "1100100100", 1, 3},
    {"2a", 6, "11000100", 1, 2},
    {"2a", 7, "011000", 1, 3},
    {"2b", 7, "11011000", 1, 1},
    {"2d", 7, "1100111000", 1, 4},
    {"2c", 8, "11001000", 1, 3},
}};

// Shift chain without the alpha >= 1 restriction; alpha = 0 is what the
// level iteration starts from.
std::vector<TraceStep> shift_chain_steps(std::uint64_t alpha, std::uint64_t beta) {
    const Word block = binary("1100");
    std::vector<TraceStep> steps;
    for (const auto& s : shift_steps) {
        Word prefix = binary("00") + power(block, alpha + s.alpha_shift);
        Word word = prefix + binary(s.tail) + power(block, beta - s.beta_shift);
        steps.push_back({s.instruction, prefix.size() + s.offset, std::move(word)});
    }
    return steps;
}

constexpr std::uint64_t max_level = 6;

}  // namespace

DerivationTrace lemma6_chain(std::uint64_t alpha, std::uint64_t beta) {
    if (alpha < 1 || beta < 1) throw Error(ErrorKind::invalid_parameters, "lemma6_chain needs alpha, beta >= 1");
    return DerivationTrace{shift_word(alpha, beta), shift_chain_steps(alpha, beta), Direction::produce};
}

namespace {

std::vector<TraceStep> corollary5_steps(std::uint64_t beta) {
    std::vector<TraceStep> steps;
    for (std::uint64_t j = 0; j < beta; ++j) {
        auto chain = shift_chain_steps(9 * j, beta - j);
        steps.insert(steps.end(), std::make_move_iterator(chain.begin()), std::make_move_iterator(chain.end()));
    }
    return steps;
}

}  // namespace

DerivationTrace corollary5_chain(std::uint64_t beta) {
    if (beta < 1) throw Error(ErrorKind::invalid_parameters, "corollary5_chain needs beta >= 1");
    return DerivationTrace{shift_word(0, beta), corollary5_steps(beta), Direction::produce};
}

std::uint64_t corollary_exponent(unsigned k) {
    if (k > max_level) throw Error(ErrorKind::invalid_parameters, "level above 6 is not supported");
    std::uint64_t nine_k = 1;
    for (unsigned i = 0; i < k; ++i) nine_k *= 9;
    return (2 * nine_k - 2) / 4;
}

DerivationTrace corollary7_derivation(unsigned k) {
    if (k > max_level) throw Error(ErrorKind::invalid_parameters, "level above 6 is not supported");
    const Word block = binary("1100");
    DerivationTrace trace{Word{}, {}, Direction::produce};
    trace.steps.push_back({"0a", 1, binary("00")});
    for (unsigned level = 0; level < k; ++level) {
        const std::uint64_t n = corollary_exponent(level);
        trace.steps.push_back({"1a", 1, binary("1000") + power(block, n)});
        trace.steps.push_back({"1b", 1, binary("001000") + power(block, n)});
        auto shift = corollary5_steps(n);
        trace.steps.insert(trace.steps.end(), std::make_move_iterator(shift.begin()),
                           std::make_move_iterator(shift.end()));
        const Word p = binary("00") + power(block, 9 * n);
        static constexpr std::array<std::pair<const char*, const char*>, 6> closing{{
            {"3b", "100110"},
            {"2a", "11000110"},
            {"2b", "1100110110"},
            {"2d", "110011001110"},
            {"2c", "11001100110010"},
            {"3a", "1100110011001100"},
        }};
        static constexpr std::array<std::size_t, 6> offsets{4, 2, 5, 8, 11, 14};
        for (std::size_t i = 0; i < closing.size(); ++i)
            trace.steps.push_back({closing[i].first, p.size() + offsets[i], p + binary(closing[i].second)});
    }
    return trace;
}

}  // namespace discont
