#include "qmano/channels.hpp"

#include <cstdlib>
#include <stdexcept>

#include "qmano/box_elements.hpp"
#include "qmano/osc_elements.hpp"

namespace qmano {

std::string_view channel_name(Channel ch) {
    switch (ch) {
    case Channel::Wa: return "Wa";
    case Channel::Wb: return "Wb";
    case Channel::Wc: return "Wc";
    case Channel::Wd: return "Wd";
    case Channel::We: return "We";
    case Channel::Wf: return "Wf";
    case Channel::Wh: return "Wh";
    }
    throw std::invalid_argument("channel_name: unknown channel");
}

Channel channel_from_name(std::string_view name) {
    for (Channel ch : kAllChannels) {
        if (channel_name(ch) == name) return ch;
    }
    throw std::invalid_argument("channel_from_name: unknown channel '" + std::string(name) + "'");
}

bool wall_coupling_allowed(Channel ch, int m, int n) {
    const int d = std::abs(m - n);
    switch (ch) {
    case Channel::Wa:
    case Channel::Wb:
        return d == 0;
    case Channel::Wc:
    case Channel::Wd:
    case Channel::We:
    case Channel::Wf:
        return d == 1;
    case Channel::Wh:
        return d == 0 || d == 2;
    }
    return false;
}

double channel_prefactor(Channel ch, const SystemParams& p) {
    const double h2 = p.hbar * p.hbar;
    const double L = p.box_length;
    switch (ch) {
    case Channel::Wa: return -h2 / (2.0 * p.wall_mass * L * L);
    case Channel::Wb: return -h2 / (p.wall_mass * L * L);
    case Channel::Wc: return h2 / (p.gas_mass * L);
    case Channel::Wd: return h2 / (p.wall_mass * L * L * L);
    case Channel::We: return 2.0 * h2 / (p.wall_mass * L * L * L);
    case Channel::Wf: return h2 / (p.wall_mass * L);
    case Channel::Wh: return -h2 / (p.wall_mass * L * L);
    }
    throw std::invalid_argument("channel_prefactor: unknown channel");
}

double channel_box_factor(Channel ch, int j_ket, int k_bra, const SystemParams& p) {
    const double L = p.box_length;
    switch (ch) {
    case Channel::Wa: return box::moment_times_second_derivative(2, j_ket, k_bra, L);
    case Channel::Wb: return box::y_times_derivative(j_ket, k_bra);
    case Channel::Wc: return box::moment_times_second_derivative(0, j_ket, k_bra, L);
    case Channel::Wd: return box::moment_times_second_derivative(2, j_ket, k_bra, L);
    case Channel::We: return box::y_times_derivative(j_ket, k_bra);
    case Channel::Wf: return box::y_times_derivative(j_ket, k_bra);
    case Channel::Wh: return box::y_times_derivative(j_ket, k_bra);
    }
    throw std::invalid_argument("channel_box_factor: unknown channel");
}

double channel_wall_factor(Channel ch, int n_ket, int m_bra, const SystemParams& p) {
    const ExpansionParams e = derive_expansion_params(p);
    switch (ch) {
    case Channel::Wa:
    case Channel::Wb:
        return (m_bra == n_ket) ? 1.0 : 0.0;
    case Channel::Wc:
    case Channel::Wd:
    case Channel::We:
        return osc::position_power(1, m_bra, n_ket, p.wall_mass, e.omega, p.hbar);
    case Channel::Wf:
        return osc::derivative(m_bra, n_ket, p.wall_mass, e.omega, p.hbar);
    case Channel::Wh:
        return osc::y_times_derivative(m_bra, n_ket);
    }
    throw std::invalid_argument("channel_wall_factor: unknown channel");
}

double channel_matrix_element(Channel ch, const BasisIndex& bra, const BasisIndex& ket,
                              const SystemParams& p) {
    validate_index(bra);
    validate_index(ket);
    if (!wall_coupling_allowed(ch, bra.j_wall, ket.j_wall)) return 0.0;
    return channel_prefactor(ch, p) *
           channel_box_factor(ch, ket.j_gas, bra.j_gas, p) *
           channel_wall_factor(ch, ket.j_wall, bra.j_wall, p);
}

double unperturbed_energy(const BasisIndex& b, const SystemParams& p) {
    const ExpansionParams e = derive_expansion_params(p);
    return box::energy(b.j_gas, p.gas_mass, p.box_length, p.hbar) +
           osc::energy(b.j_wall, e.omega, p.hbar);
}

} // namespace qmano
