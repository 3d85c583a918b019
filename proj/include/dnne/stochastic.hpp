#pragma once

#include "dnne/fractional.hpp"
#include "dnne/rng.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dnne::stoch {

/// The seven basic gates and their unit-interval algebra.
enum class GateKind { Not, And, Or, Nand, Nor, Xor, Xnor };

/// True for the single-input gate (NOT).
bool is_unary(GateKind g);

const char* gate_name(GateKind g);
std::optional<GateKind> gate_from_name(const std::string& name);

/// Boolean truth value of the gate on concrete bits. For NOT, b is ignored.
bool gate_truth(GateKind g, bool a, bool b = false);

/// Exact probability algebra of a gate on independent inputs:
///   NOT 1-x, AND xy, OR x+y-xy, NAND 1-xy, NOR 1-x-y+xy,
///   XOR x+y-2xy, XNOR 1-x-y+2xy.
/// Throws ArgumentError on arity mismatch (NOT takes one input, the rest two).
Fraction gate_eval(GateKind g, Fraction x, std::optional<Fraction> y = std::nullopt);

/// A serial random bitstream encoding a fraction as the density of ones.
class Bitstream {
public:
    /// Each bit drawn independently with P(1) = x; deterministic per seed.
    static Bitstream encode(Fraction x, std::size_t length, std::uint64_t seed);

    /// Wrap explicit bits (used by tests and gate application).
    static Bitstream from_bits(std::vector<std::uint8_t> bits, std::uint64_t seed = 0);

    std::size_t length() const noexcept { return bits_.size(); }
    bool bit(std::size_t i) const { return bits_.at(i) != 0; }
    std::uint64_t seed() const noexcept { return seed_; }
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

    std::uint64_t ones() const noexcept;
    double mean() const noexcept;

private:
    std::vector<std::uint8_t> bits_;
    std::uint64_t seed_ = 0;
};

/// Bitwise Boolean application; streams must have equal lengths and the gate
/// arity must match the number of streams supplied.
Bitstream gate_apply(GateKind g, const Bitstream& s1,
                     const Bitstream* s2 = nullptr);

} // namespace dnne::stoch
