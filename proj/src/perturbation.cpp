#include "qmano/perturbation.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "qmano/box_elements.hpp"

namespace qmano {

namespace {

constexpr double kPi = std::numbers::pi;

double gas_energy_scale(const SystemParams& p) {
    return kPi * kPi * p.hbar * p.hbar / (2.0 * p.gas_mass * p.box_length * p.box_length);
}

void check_denominator(double den, double scale, int k_gas, int k_wall, double rtol) {
    if (std::abs(den) < rtol * scale) {
        std::ostringstream msg;
        msg << "resonant denominator " << den << " at target (k_gas=" << k_gas
            << ", k_wall=" << k_wall << "): box transition degenerate with oscillator quanta";
        throw ResonanceError(k_gas, k_wall, den, msg.str());
    }
}

std::pair<const Channel*, size_t> channels_for(ChannelMode mode) {
    if (mode == ChannelMode::LeadingChannels) {
        return {kLeadingChannels.data(), kLeadingChannels.size()};
    }
    return {kAllChannels.data(), kAllChannels.size()};
}

} // namespace

CoefficientBreakdown coefficient_generic(const BasisIndex& ref, const BasisIndex& target,
                                         const SystemParams& p, double resonance_rtol) {
    validate_index(ref);
    validate_index(target);
    if (target == ref) {
        throw std::invalid_argument("coefficient_generic: target must differ from reference");
    }
    CoefficientBreakdown out;
    out.denominator = unperturbed_energy(ref, p) - unperturbed_energy(target, p);
    check_denominator(out.denominator, gas_energy_scale(p), target.j_gas, target.j_wall,
                      resonance_rtol);
    for (size_t i = 0; i < kAllChannels.size(); ++i) {
        const double elem = channel_matrix_element(kAllChannels[i], target, ref, p);
        out.per_channel[i] = elem / out.denominator;
        out.total += out.per_channel[i];
    }
    return out;
}

double coefficient_closed_form_c(int j_g, int k_g, int k_w, double lambda, double beta) {
    if (j_g < 1 || k_g < 1 || k_w < 0) {
        throw std::invalid_argument("coefficient_closed_form_c: invalid indices");
    }
    if (k_w != 1 || k_g != j_g) return 0.0;
    const double j2 = static_cast<double>(j_g) * j_g;
    return kPi * kPi * j2 / std::sqrt(2.0) * (lambda * lambda * lambda) / (beta * beta);
}

double coefficient_closed_form_f(int j_g, int k_g, int k_w, double lambda, double beta,
                                 double resonance_rtol) {
    if (j_g < 1 || k_g < 1 || k_w < 0) {
        throw std::invalid_argument("coefficient_closed_form_f: invalid indices");
    }
    if (k_w != 1) return 0.0;
    if (k_g == j_g) return -lambda / (2.0 * std::sqrt(2.0));
    const double j2 = static_cast<double>(j_g) * j_g;
    const double k2 = static_cast<double>(k_g) * k_g;
    const double bracket = kPi * kPi * (j2 - k2) - 2.0 * beta * beta / (lambda * lambda);
    // same vanishing condition as the generic denominator, expressed in the
    // dimensionless bracket (units of the gas energy scale, factor 2)
    check_denominator(bracket, 2.0, k_g, k_w, resonance_rtol);
    const double sign = ((j_g + k_g) % 2 == 0) ? 1.0 : -1.0;
    const double jk = static_cast<double>(j_g) * k_g;
    return -2.0 * std::sqrt(2.0) * jk * sign / (bracket * (j2 - k2)) * (beta * beta) / lambda;
}

PerturbedState::PerturbedState(BasisIndex ref, SystemParams params, TruncatedBasis truncation,
                               ChannelMode mode, std::vector<double> coefficients)
    : ref_(ref), params_(std::move(params)), truncation_(truncation), mode_(mode),
      coeffs_(std::move(coefficients)) {
    truncation_.validate();
    if (static_cast<int>(coeffs_.size()) != truncation_.dimension()) {
        throw std::invalid_argument("PerturbedState: coefficient table size mismatch");
    }
    for (double c : coeffs_) sum_sq_ += c * c;
    normalization_ = std::sqrt(1.0 + sum_sq_);
}

double PerturbedState::coefficient(int k_g, int k_w) const {
    const BasisIndex b{k_g, k_w};
    if (!truncation_.contains(b)) return 0.0;
    return coeffs_[truncation_.flat(b)];
}

PerturbedState build_perturbed_state(const BasisIndex& ref, const SystemParams& p,
                                     const TruncatedBasis& basis, ChannelMode mode,
                                     double resonance_rtol) {
    validate_index(ref);
    if (ref.j_wall != 0) {
        throw std::invalid_argument("build_perturbed_state: reference must have j_wall = 0");
    }
    basis.validate();
    if (!basis.contains(ref)) {
        throw std::invalid_argument("build_perturbed_state: reference outside truncation");
    }
    p.validate();

    const auto [channels, n_channels] = channels_for(mode);
    const double e_ref = unperturbed_energy(ref, p);
    const double scale = gas_energy_scale(p);

    std::vector<double> coeffs(basis.dimension(), 0.0);
    for (int k_g = 1; k_g <= basis.n_gas; ++k_g) {
        for (int k_w = 0; k_w < basis.n_wall; ++k_w) {
            const BasisIndex target{k_g, k_w};
            if (target == ref) continue;
            double elem = 0.0;
            for (size_t i = 0; i < n_channels; ++i) {
                elem += channel_matrix_element(channels[i], target, ref, p);
            }
            if (elem == 0.0) continue;
            const double den = e_ref - unperturbed_energy(target, p);
            check_denominator(den, scale, k_g, k_w, resonance_rtol);
            coeffs[basis.flat(target)] = elem / den;
        }
    }
    return PerturbedState(ref, p, basis, mode, std::move(coeffs));
}

double first_order_energy(const BasisIndex& ref, const SystemParams& p, ChannelMode mode) {
    validate_index(ref);
    const auto [channels, n_channels] = channels_for(mode);
    double sum = 0.0;
    for (size_t i = 0; i < n_channels; ++i) {
        sum += channel_matrix_element(channels[i], ref, ref, p);
    }
    return sum;
}

std::vector<CoefficientRow> coefficient_table(const BasisIndex& ref, const SystemParams& p,
                                              const TruncatedBasis& basis, ChannelMode mode,
                                              double resonance_rtol) {
    validate_index(ref);
    basis.validate();
    const auto [channels, n_channels] = channels_for(mode);
    std::vector<CoefficientRow> rows;
    for (int k_g = 1; k_g <= basis.n_gas; ++k_g) {
        for (int k_w = 0; k_w < basis.n_wall; ++k_w) {
            const BasisIndex target{k_g, k_w};
            if (target == ref) continue;
            const CoefficientBreakdown bd = coefficient_generic(ref, target, p, resonance_rtol);
            double total = 0.0;
            for (size_t i = 0; i < n_channels; ++i) {
                const double v = bd.channel(channels[i]);
                total += v;
                if (v != 0.0) {
                    rows.push_back({k_g, k_w, channel_name(channels[i]), v});
                }
            }
            if (total != 0.0) rows.push_back({k_g, k_w, "total", total});
        }
    }
    return rows;
}

} // namespace qmano
