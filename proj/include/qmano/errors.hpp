#pragma once

#include <stdexcept>
#include <string>

namespace qmano {

// Raised when a perturbation denominator E(ref) - E(target) falls below the
// resonance tolerance, i.e. a box transition is degenerate with a whole
// number of oscillator quanta.
class ResonanceError : public std::runtime_error {
public:
    ResonanceError(int k_gas, int k_wall, double denominator, const std::string& what)
        : std::runtime_error(what), k_gas_(k_gas), k_wall_(k_wall), denominator_(denominator) {}

    int k_gas() const { return k_gas_; }
    int k_wall() const { return k_wall_; }
    double denominator() const { return denominator_; }

private:
    int k_gas_;
    int k_wall_;
    double denominator_;
};

// Raised when a thermal level truncation cannot satisfy the tail bound.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when no eigenvector has a dominant overlap with the reference state.
class AmbiguityError : public std::runtime_error {
public:
    AmbiguityError(double best_overlap_sq, const std::string& what)
        : std::runtime_error(what), best_overlap_sq_(best_overlap_sq) {}

    double best_overlap_sq() const { return best_overlap_sq_; }

private:
    double best_overlap_sq_;
};

} // namespace qmano
