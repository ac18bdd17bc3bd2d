#pragma once

#include <optional>

namespace qmano {

struct Dimensions3D {
    double L1 = 1.0;
    double L2 = 1.0;
    double L3 = 1.0;

    double volume() const { return L1 * L2 * L3; }
};

// Physical parameters of the manometer: a one-particle gas in a box of
// length L whose movable boundary (the wall) sits in a harmonic potential.
// Values are interpreted in natural units (hbar = 1 unless set otherwise).
struct SystemParams {
    double gas_mass = 1.0;        // M_g
    double wall_mass = 1.0;       // M_W
    double box_length = 1.0;      // L (identical to dims->L1 in 3D mode)
    double spring_constant = 1.0; // f_W
    double hbar = 1.0;
    std::optional<Dimensions3D> dims; // engaged => 3D mode

    bool is_3d() const { return dims.has_value(); }

    // Throws std::invalid_argument on non-positive values or L1 != box_length.
    void validate() const;
};

// Dimensionless smallness parameters plus the derived oscillator scales.
//   lambda = sqrt(hbar) / (M_W^(1/4) f_W^(1/4) L)   (oscillator length / L)
//   beta   = sqrt(M_g / M_W)
struct ExpansionParams {
    double lambda = 0.0;
    double beta = 0.0;
    double omega = 0.0;             // sqrt(f_W / M_W)
    double oscillator_length = 0.0; // sqrt(hbar / (M_W omega))
};

struct RegimeReport {
    bool ok = false;              // max(lambda, beta) <= max_eps
    double lambda = 0.0;
    double beta = 0.0;
    double max_eps = 0.0;
    double ratio = 0.0;           // beta / lambda
    bool disparate_orders = false; // lambda, beta more than two decades apart
};

ExpansionParams derive_expansion_params(const SystemParams& p);

RegimeReport validate_regime(const ExpansionParams& e, double max_eps = 1e-2);

// Natural-unit instantiation with M_g = L = hbar = 1 realizing the requested
// lambda and beta:  M_W = M_g / beta^2,  f_W = hbar^2 beta^2 / (lambda^4 L^4 M_g).
SystemParams params_from_lambda_beta(double lambda, double beta, double box_length = 1.0,
                                     double gas_mass = 1.0, double hbar = 1.0);

// Scales an SI-valued parameter set into the internal natural system with
// m0 = M_g, l0 = L, hbar = 1. Returns the converted params plus the scale
// factors needed to map results back (lengths in l0, energies in e0).
struct NaturalScales {
    double mass = 1.0;   // m0
    double length = 1.0; // l0
    double energy = 1.0; // e0 = hbar_SI^2 / (m0 l0^2)
};

struct NaturalConversion {
    SystemParams params;
    NaturalScales scales;
};

NaturalConversion to_natural_units(const SystemParams& si);

} // namespace qmano
