#pragma once

#include <array>
#include <string_view>

#include "qmano/basis.hpp"
#include "qmano/params.hpp"

namespace qmano {

// The seven perturbation operators of the transformed Hamiltonian. H0 is not
// a channel. Each channel factorizes into prefactor * (box factor) * (wall factor):
//
//   Wa = -hbar^2/(2 M_W)  (y_g^2/L^2) d^2/dy_g^2
//   Wb = -hbar^2/M_W      (y_g/L^2)   d/dy_g
//   Wc = +hbar^2/M_g      (y_W/L)     d^2/dy_g^2
//   Wd = +hbar^2/M_W      (y_g^2 y_W / L^3) d^2/dy_g^2
//   We = +hbar^2/M_W      (2 y_g y_W / L^3) d/dy_g
//   Wf = +hbar^2/M_W      (y_g/L)     d^2/(dy_g dy_W)
//   Wh = -hbar^2/M_W      (y_g y_W / L^2) d^2/(dy_g dy_W)
enum class Channel { Wa, Wb, Wc, Wd, We, Wf, Wh };

inline constexpr std::array<Channel, 7> kAllChannels = {
    Channel::Wa, Channel::Wb, Channel::Wc, Channel::Wd,
    Channel::We, Channel::Wf, Channel::Wh};

// Channels carrying the first-order physics; the other five enter at order
// two or three in {lambda, beta}.
inline constexpr std::array<Channel, 2> kLeadingChannels = {Channel::Wc, Channel::Wf};

std::string_view channel_name(Channel ch);
Channel channel_from_name(std::string_view name);

// Allowed |delta j_W| values: Wa, Wb are diagonal in the wall index; Wc, Wd,
// We, Wf couple |delta| = 1; Wh couples delta in {0, +-2}.
bool wall_coupling_allowed(Channel ch, int m, int n);

// <bra| W_ch |ket> in the unperturbed product basis, closed forms.
double channel_matrix_element(Channel ch, const BasisIndex& bra, const BasisIndex& ket,
                              const SystemParams& p);

// Factor decomposition, used by the quadrature cross-check.
double channel_prefactor(Channel ch, const SystemParams& p);
double channel_box_factor(Channel ch, int j_ket, int k_bra, const SystemParams& p);
double channel_wall_factor(Channel ch, int n_ket, int m_bra, const SystemParams& p);

// Unperturbed product energy E^g_{j_gas} + E^W_{j_wall}.
double unperturbed_energy(const BasisIndex& b, const SystemParams& p);

} // namespace qmano
