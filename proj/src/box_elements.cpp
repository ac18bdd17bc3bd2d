#include "qmano/box_elements.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qmano::box {

namespace {

constexpr double kPi = std::numbers::pi;

int parity_sign(int m) { return (m % 2 == 0) ? 1 : -1; }

// (2/L) * integral_0^L y sin(k pi y/L) sin(j pi y/L) dy, k != j
double moment1_offdiag(int j, int k, double L) {
    if ((j + k) % 2 == 0) return 0.0;
    const double djk = static_cast<double>(j) * k;
    const double d2 = static_cast<double>(k * k - j * j);
    return -8.0 * djk * L / (kPi * kPi * d2 * d2);
}

double moment2_offdiag(int j, int k, double L) {
    const double djk = static_cast<double>(j) * k;
    const double d2 = static_cast<double>(k * k - j * j);
    return 8.0 * djk * L * L * parity_sign(j + k) / (kPi * kPi * d2 * d2);
}

// Antiderivative bookkeeping for integral_0^L y^3 cos(m pi y/L) dy, m != 0,
// folded into the sin-product expansion.
double moment3_term(int m) {
    const double m2 = static_cast<double>(m) * m;
    const double a2 = m2 * kPi * kPi; // (m pi)^2
    const double a4 = a2 * a2;
    return parity_sign(m) * (3.0 / a2 - 6.0 / a4) + 6.0 / a4;
}

double moment3(int j, int k, double L) {
    const double L3 = L * L * L;
    if (j == k) {
        const double j2 = static_cast<double>(j) * j;
        return L3 * (0.25 - 3.0 / (4.0 * kPi * kPi * j2));
    }
    return L3 * (moment3_term(k - j) - moment3_term(k + j));
}

void check_indices(int j, int k) {
    if (j < 1 || k < 1) throw std::invalid_argument("box elements: indices must be >= 1");
}

} // namespace

double energy(int j, double gas_mass, double box_length, double hbar) {
    check_indices(j, j);
    const double jj = static_cast<double>(j) * j;
    return kPi * kPi * hbar * hbar * jj / (2.0 * gas_mass * box_length * box_length);
}

double position_moment(int n, int j, int k, double L) {
    check_indices(j, k);
    switch (n) {
    case 1:
        if (j == k) return 0.5 * L;
        return moment1_offdiag(j, k, L);
    case 2:
        if (j == k) {
            const double j2 = static_cast<double>(j) * j;
            return L * L * (1.0 / 3.0 - 1.0 / (2.0 * kPi * kPi * j2));
        }
        return moment2_offdiag(j, k, L);
    case 3:
        return moment3(j, k, L);
    default:
        throw std::invalid_argument("box position_moment: power must be 1, 2 or 3");
    }
}

double derivative(int j, int k, double L) {
    check_indices(j, k);
    if (j == k || (j + k) % 2 == 0) return 0.0;
    const double djk = static_cast<double>(j) * k;
    return 4.0 * djk / (L * static_cast<double>(k * k - j * j));
}

double second_derivative(int j, int k, double L) {
    check_indices(j, k);
    if (j != k) return 0.0;
    const double w = j * kPi / L;
    return -w * w;
}

double y_times_derivative(int j, int k) {
    check_indices(j, k);
    if (j == k) return -0.5;
    const double djk = static_cast<double>(j) * k;
    return 2.0 * djk * parity_sign(j + k) / static_cast<double>(j * j - k * k);
}

double moment_times_second_derivative(int n, int j, int k, double L) {
    check_indices(j, k);
    const double w = j * kPi / L;
    if (n == 0) return (j == k) ? -w * w : 0.0;
    return -w * w * position_moment(n, j, k, L);
}

} // namespace qmano::box
