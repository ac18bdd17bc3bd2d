#include "qmano/osc_elements.hpp"

#include <cmath>
#include <stdexcept>

namespace qmano::osc {

namespace {

void check_indices(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("oscillator elements: indices must be >= 0");
}

inline double fd(int v) { return static_cast<double>(v); }

} // namespace

double energy(int n, double omega, double hbar) {
    check_indices(n, n);
    return hbar * omega * (fd(n) + 0.5);
}

double oscillator_length(double mass, double omega, double hbar) {
    return std::sqrt(hbar / (mass * omega));
}

double position_power(int p, int m, int n, double mass, double omega, double hbar) {
    check_indices(m, n);
    const double a = oscillator_length(mass, omega, hbar);
    const double s = a / std::sqrt(2.0); // scale per ladder power
    switch (p) {
    case 1:
        if (m == n - 1) return s * std::sqrt(fd(n));
        if (m == n + 1) return s * std::sqrt(fd(n) + 1.0);
        return 0.0;
    case 2:
        if (m == n) return s * s * (2.0 * fd(n) + 1.0);
        if (m == n - 2) return s * s * std::sqrt(fd(n) * fd(n - 1));
        if (m == n + 2) return s * s * std::sqrt(fd(n + 1) * fd(n + 2));
        return 0.0;
    case 3: {
        const double s3 = s * s * s;
        if (m == n - 3) return s3 * std::sqrt(fd(n) * fd(n - 1) * fd(n - 2));
        if (m == n - 1) return s3 * 3.0 * fd(n) * std::sqrt(fd(n));
        if (m == n + 1) return s3 * 3.0 * (fd(n) + 1.0) * std::sqrt(fd(n) + 1.0);
        if (m == n + 3) return s3 * std::sqrt(fd(n + 1) * fd(n + 2) * fd(n + 3));
        return 0.0;
    }
    default:
        throw std::invalid_argument("osc position_power: power must be 1, 2 or 3");
    }
}

double derivative(int m, int n, double mass, double omega, double hbar) {
    check_indices(m, n);
    const double a = oscillator_length(mass, omega, hbar);
    if (m == n - 1) return std::sqrt(fd(n)) / (a * std::sqrt(2.0));
    if (m == n + 1) return -std::sqrt(fd(n) + 1.0) / (a * std::sqrt(2.0));
    return 0.0;
}

double y_times_derivative(int m, int n) {
    check_indices(m, n);
    if (m == n) return -0.5;
    if (m == n - 2) return 0.5 * std::sqrt(fd(n) * fd(n - 1));
    if (m == n + 2) return -0.5 * std::sqrt(fd(n + 1) * fd(n + 2));
    return 0.0;
}

} // namespace qmano::osc
