#pragma once

#include "dnne/errors.hpp"

namespace dnne {

/// A value in the unit interval [0,1]: a relative concentration or a
/// probability. The range invariant is enforced at construction and every
/// operation in the library returns values re-checked through here.
class Fraction {
public:
    Fraction() = default;

    explicit Fraction(double v) : v_(v) {
        if (!(v >= 0.0 && v <= 1.0))
            throw ArgumentError("fraction out of [0,1]: " + std::to_string(v));
    }

    /// Clamp-to-range factory for results of unit-interval algebra, where
    /// rounding may land an epsilon outside [0,1].
    static Fraction clamped(double v) noexcept {
        Fraction f;
        f.v_ = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
        return f;
    }

    double value() const noexcept { return v_; }

    friend bool operator==(Fraction a, Fraction b) noexcept { return a.v_ == b.v_; }

private:
    double v_ = 0.0;
};

} // namespace dnne
