#pragma once

#include <array>
#include <vector>

#include "qmano/basis.hpp"
#include "qmano/channels.hpp"
#include "qmano/errors.hpp"
#include "qmano/params.hpp"

namespace qmano {

// Which perturbation operators feed the coefficient table.
enum class ChannelMode { LeadingChannels, AllChannels };

// Per-channel split of a first-order coefficient
//   1C = <target| W |ref> / (E0_ref - E0_target).
struct CoefficientBreakdown {
    std::array<double, 7> per_channel{}; // ordered as kAllChannels
    double total = 0.0;
    double denominator = 0.0;

    double channel(Channel ch) const { return per_channel[static_cast<size_t>(ch)]; }
};

// Relative resonance tolerance against the gas energy scale pi^2 hbar^2/(2 M_g L^2).
inline constexpr double kDefaultResonanceRtol = 1e-6;

CoefficientBreakdown coefficient_generic(const BasisIndex& ref, const BasisIndex& target,
                                         const SystemParams& p,
                                         double resonance_rtol = kDefaultResonanceRtol);

// Closed form for the W_c contribution (reference j_W = 0):
//   (pi^2 j_g^2 / sqrt(2)) (lambda^3 / beta^2) delta_{k_W,1} delta_{j_g,k_g}.
double coefficient_closed_form_c(int j_g, int k_g, int k_w, double lambda, double beta);

// Closed form for the W_f contribution (reference j_W = 0). Diagonal branch
// -lambda/(2 sqrt(2)); off-diagonal branch carries the resonance bracket
// pi^2 (j_g^2 - k_g^2) - 2 beta^2/lambda^2, whose vanishing raises ResonanceError.
double coefficient_closed_form_f(int j_g, int k_g, int k_w, double lambda, double beta,
                                 double resonance_rtol = kDefaultResonanceRtol);

// First-order perturbed state for reference (j_g, 0): coefficient table over
// the truncated basis plus the normalization N = sqrt(1 + sum 1C^2).
class PerturbedState {
public:
    PerturbedState(BasisIndex ref, SystemParams params, TruncatedBasis truncation,
                   ChannelMode mode, std::vector<double> coefficients);

    const BasisIndex& reference() const { return ref_; }
    const SystemParams& params() const { return params_; }
    const TruncatedBasis& truncation() const { return truncation_; }
    ChannelMode mode() const { return mode_; }

    // 1C for (k_g, k_w); zero at the reference slot by construction.
    double coefficient(int k_g, int k_w) const;
    const std::vector<double>& coefficients() const { return coeffs_; }

    double sum_of_squares() const { return sum_sq_; }
    double normalization() const { return normalization_; }

private:
    BasisIndex ref_;
    SystemParams params_;
    TruncatedBasis truncation_;
    ChannelMode mode_;
    std::vector<double> coeffs_; // flat over truncation
    double sum_sq_ = 0.0;
    double normalization_ = 1.0;
};

PerturbedState build_perturbed_state(const BasisIndex& ref, const SystemParams& p,
                                     const TruncatedBasis& basis,
                                     ChannelMode mode = ChannelMode::LeadingChannels,
                                     double resonance_rtol = kDefaultResonanceRtol);

// Diagonal <ref| W |ref>. Exactly zero for the leading channels; the
// all-channel value is second order against the gas energy.
double first_order_energy(const BasisIndex& ref, const SystemParams& p, ChannelMode mode);

// Rows (k_g, k_w, channel, value) for CSV export; includes per-channel
// contributions and the per-target total.
struct CoefficientRow {
    int k_gas = 0;
    int k_wall = 0;
    std::string_view channel; // "Wa".."Wh" or "total"
    double value = 0.0;
};

std::vector<CoefficientRow> coefficient_table(const BasisIndex& ref, const SystemParams& p,
                                              const TruncatedBasis& basis, ChannelMode mode,
                                              double resonance_rtol = kDefaultResonanceRtol);

} // namespace qmano
