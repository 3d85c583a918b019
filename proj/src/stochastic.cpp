#include "dnne/stochastic.hpp"

#include <array>
#include <cctype>

namespace dnne::stoch {

bool is_unary(GateKind g) { return g == GateKind::Not; }

const char* gate_name(GateKind g) {
    switch (g) {
        case GateKind::Not: return "NOT";
        case GateKind::And: return "AND";
        case GateKind::Or: return "OR";
        case GateKind::Nand: return "NAND";
        case GateKind::Nor: return "NOR";
        case GateKind::Xor: return "XOR";
        case GateKind::Xnor: return "XNOR";
    }
    return "?";
}

std::optional<GateKind> gate_from_name(const std::string& name) {
    std::string up;
    up.reserve(name.size());
    for (char c : name) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    static const std::array<std::pair<const char*, GateKind>, 7> table = {{
        {"NOT", GateKind::Not}, {"AND", GateKind::And}, {"OR", GateKind::Or},
        {"NAND", GateKind::Nand}, {"NOR", GateKind::Nor}, {"XOR", GateKind::Xor},
        {"XNOR", GateKind::Xnor},
    }};
    for (const auto& [n, g] : table)
        if (up == n) return g;
    return std::nullopt;
}

bool gate_truth(GateKind g, bool a, bool b) {
    switch (g) {
        case GateKind::Not: return !a;
        case GateKind::And: return a && b;
        case GateKind::Or: return a || b;
        case GateKind::Nand: return !(a && b);
        case GateKind::Nor: return !(a || b);
        case GateKind::Xor: return a != b;
        case GateKind::Xnor: return a == b;
    }
    return false;
}

Fraction gate_eval(GateKind g, Fraction x, std::optional<Fraction> y) {
    if (is_unary(g)) {
        if (y.has_value())
            throw ArgumentError("NOT takes a single input");
        return Fraction::clamped(1.0 - x.value());
    }
    if (!y.has_value())
        throw ArgumentError(std::string(gate_name(g)) + " takes two inputs");

    const double a = x.value();
    const double b = y->value();
    // NAND/NOR/XNOR are literally 1 - the clamped base gate, so the De
    // Morgan identities hold bit-exactly, not just to tolerance.
    const auto inverted = [](Fraction f) { return Fraction::clamped(1.0 - f.value()); };
    switch (g) {
        case GateKind::And: return Fraction::clamped(a * b);
        case GateKind::Or: return Fraction::clamped(1.0 - (1.0 - a) * (1.0 - b));
        case GateKind::Xor: return Fraction::clamped(a * (1.0 - b) + b * (1.0 - a));
        case GateKind::Nand: return inverted(gate_eval(GateKind::And, x, y));
        case GateKind::Nor: return inverted(gate_eval(GateKind::Or, x, y));
        case GateKind::Xnor: return inverted(gate_eval(GateKind::Xor, x, y));
        case GateKind::Not: break; // handled above
    }
    throw ArgumentError("unknown gate");
}

Bitstream Bitstream::encode(Fraction x, std::size_t length, std::uint64_t seed) {
    if (length == 0)
        throw ArgumentError("bitstream length must be >= 1");
    Bitstream s;
    s.seed_ = seed;
    s.bits_.resize(length);
    Rng rng(seed);
    const double p = x.value();
    for (std::size_t i = 0; i < length; ++i)
        s.bits_[i] = rng.bernoulli(p) ? 1 : 0;
    return s;
}

Bitstream Bitstream::from_bits(std::vector<std::uint8_t> bits, std::uint64_t seed) {
    if (bits.empty())
        throw ArgumentError("bitstream length must be >= 1");
    for (auto b : bits)
        if (b > 1)
            throw ArgumentError("bitstream entries must be 0 or 1");
    Bitstream s;
    s.bits_ = std::move(bits);
    s.seed_ = seed;
    return s;
}

std::uint64_t Bitstream::ones() const noexcept {
    std::uint64_t c = 0;
    for (auto b : bits_) c += b;
    return c;
}

double Bitstream::mean() const noexcept {
    return static_cast<double>(ones()) / static_cast<double>(bits_.size());
}

Bitstream gate_apply(GateKind g, const Bitstream& s1, const Bitstream* s2) {
    if (is_unary(g)) {
        if (s2 != nullptr)
            throw ArgumentError("NOT takes a single stream");
        std::vector<std::uint8_t> out(s1.length());
        for (std::size_t i = 0; i < s1.length(); ++i)
            out[i] = gate_truth(g, s1.bit(i)) ? 1 : 0;
        return Bitstream::from_bits(std::move(out));
    }
    if (s2 == nullptr)
        throw ArgumentError(std::string(gate_name(g)) + " takes two streams");
    if (s1.length() != s2->length())
        throw ArgumentError("stream length mismatch: " + std::to_string(s1.length()) +
                            " vs " + std::to_string(s2->length()));
    std::vector<std::uint8_t> out(s1.length());
    for (std::size_t i = 0; i < s1.length(); ++i)
        out[i] = gate_truth(g, s1.bit(i), s2->bit(i)) ? 1 : 0;
    return Bitstream::from_bits(std::move(out));
}

} // namespace dnne::stoch
