#pragma once

#include <stdexcept>

namespace qmano {

// Product-basis label: box quantum number j_gas >= 1, oscillator level j_wall >= 0.
struct BasisIndex {
    int j_gas = 1;
    int j_wall = 0;

    bool operator==(const BasisIndex&) const = default;
};

inline void validate_index(const BasisIndex& b) {
    if (b.j_gas < 1) throw std::invalid_argument("BasisIndex: j_gas must be >= 1");
    if (b.j_wall < 0) throw std::invalid_argument("BasisIndex: j_wall must be >= 0");
}

// Truncation bounds: gas states j_gas = 1..n_gas, wall states j_wall = 0..n_wall-1.
// Flat layout is gas-major so wall blocks are contiguous.
struct TruncatedBasis {
    int n_gas = 40;
    int n_wall = 8;

    void validate() const {
        if (n_gas < 2 || n_wall < 2) {
            throw std::invalid_argument("TruncatedBasis: need n_gas >= 2 and n_wall >= 2");
        }
    }

    int dimension() const { return n_gas * n_wall; }

    bool contains(const BasisIndex& b) const {
        return b.j_gas >= 1 && b.j_gas <= n_gas && b.j_wall >= 0 && b.j_wall < n_wall;
    }

    int flat(const BasisIndex& b) const { return (b.j_gas - 1) * n_wall + b.j_wall; }

    BasisIndex unflat(int idx) const { return BasisIndex{idx / n_wall + 1, idx % n_wall}; }
};

} // namespace qmano
