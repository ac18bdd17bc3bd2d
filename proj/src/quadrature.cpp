#include "qmano/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qmano/osc_elements.hpp"

namespace qmano {

namespace {

constexpr double kPi = std::numbers::pi;

// Hermite function h_n(xi) = H_n(xi) exp(-xi^2/2) / sqrt(2^n n! sqrt(pi)),
// evaluated by upward recurrence on the normalized functions to avoid
// overflow:  h_n = xi sqrt(2/n) h_{n-1} - sqrt((n-1)/n) h_{n-2}.
double hermite_function(int n, double xi) {
    const double h0 = std::exp(-0.5 * xi * xi) / std::pow(kPi, 0.25);
    if (n == 0) return h0;
    double hm1 = h0;
    double h = xi * std::sqrt(2.0) * h0;
    for (int k = 2; k <= n; ++k) {
        const double next = xi * std::sqrt(2.0 / k) * h - std::sqrt((k - 1.0) / k) * hm1;
        hm1 = h;
        h = next;
    }
    return h;
}

// d/dxi of the Hermite function: h_n' = sqrt(n/2) h_{n-1} - sqrt((n+1)/2) h_{n+1}.
double hermite_function_derivative(int n, double xi) {
    const double lower = (n > 0) ? std::sqrt(n / 2.0) * hermite_function(n - 1, xi) : 0.0;
    const double upper = std::sqrt((n + 1) / 2.0) * hermite_function(n + 1, xi);
    return lower - upper;
}

} // namespace

QuadratureRule gauss_legendre(int n, double a, double b) {
    if (n < 2) throw std::invalid_argument("gauss_legendre: need at least 2 points");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double xm = 0.5 * (b + a);
    const double xl = 0.5 * (b - a);
    const int m = (n + 1) / 2;
    for (int i = 1; i <= m; ++i) {
        double z = std::cos(kPi * (i - 0.25) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        rule.nodes[i - 1] = xm - xl * z;
        rule.nodes[n - i] = xm + xl * z;
        rule.weights[i - 1] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
        rule.weights[n - i] = rule.weights[i - 1];
    }
    return rule;
}

double box_eigenfunction(int j, double y, double L) {
    return std::sqrt(2.0 / L) * std::sin(j * kPi * y / L);
}

double box_eigenfunction_derivative(int j, double y, double L) {
    const double w = j * kPi / L;
    return std::sqrt(2.0 / L) * w * std::cos(w * y);
}

double oscillator_eigenfunction(int n, double y, double mass, double omega, double hbar) {
    const double a = osc::oscillator_length(mass, omega, hbar);
    return hermite_function(n, y / a) / std::sqrt(a);
}

double oscillator_eigenfunction_derivative(int n, double y, double mass, double omega,
                                           double hbar) {
    const double a = osc::oscillator_length(mass, omega, hbar);
    return hermite_function_derivative(n, y / a) / (a * std::sqrt(a));
}

double box_element_numeric(int p, int q, int j, int k, double L, int points) {
    const QuadratureRule rule = gauss_legendre(points, 0.0, L);
    double sum = 0.0;
    const double w2 = (j * kPi / L) * (j * kPi / L);
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const double y = rule.nodes[i];
        double op;
        switch (q) {
        case 0: op = box_eigenfunction(j, y, L); break;
        case 1: op = box_eigenfunction_derivative(j, y, L); break;
        case 2: op = -w2 * box_eigenfunction(j, y, L); break;
        default: throw std::invalid_argument("box_element_numeric: derivative order 0..2");
        }
        sum += rule.weights[i] * box_eigenfunction(k, y, L) * std::pow(y, p) * op;
    }
    return sum;
}

double oscillator_element_numeric(int p, int q, int n, int m, double mass, double omega,
                                  double hbar, int points, double half_width) {
    const double a = osc::oscillator_length(mass, omega, hbar);
    const QuadratureRule rule = gauss_legendre(points, -half_width * a, half_width * a);
    double sum = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const double y = rule.nodes[i];
        double op;
        switch (q) {
        case 0: op = oscillator_eigenfunction(n, y, mass, omega, hbar); break;
        case 1: op = oscillator_eigenfunction_derivative(n, y, mass, omega, hbar); break;
        default: throw std::invalid_argument("oscillator_element_numeric: derivative order 0..1");
        }
        sum += rule.weights[i] * oscillator_eigenfunction(m, y, mass, omega, hbar) *
               std::pow(y, p) * op;
    }
    return sum;
}

namespace {

// (p, q) powers of y and d/dy for each channel's box and wall factors.
struct FactorPowers {
    int box_p, box_q;
    int wall_p, wall_q;
};

FactorPowers factor_powers(Channel ch) {
    switch (ch) {
    case Channel::Wa: return {2, 2, 0, 0};
    case Channel::Wb: return {1, 1, 0, 0};
    case Channel::Wc: return {0, 2, 1, 0};
    case Channel::Wd: return {2, 2, 1, 0};
    case Channel::We: return {1, 1, 1, 0};
    case Channel::Wf: return {1, 1, 0, 1};
    case Channel::Wh: return {1, 1, 1, 1};
    }
    throw std::invalid_argument("factor_powers: unknown channel");
}

double numeric_element(Channel ch, const BasisIndex& bra, const BasisIndex& ket,
                       const SystemParams& p, int box_points, int wall_points) {
    const ExpansionParams e = derive_expansion_params(p);
    const FactorPowers fp = factor_powers(ch);
    const double box_part =
        box_element_numeric(fp.box_p, fp.box_q, ket.j_gas, bra.j_gas, p.box_length, box_points);
    const double wall_part =
        oscillator_element_numeric(fp.wall_p, fp.wall_q, ket.j_wall, bra.j_wall, p.wall_mass,
                                   e.omega, p.hbar, wall_points);
    return channel_prefactor(ch, p) * box_part * wall_part;
}

} // namespace

QuadratureCheck quadrature_check(Channel ch, const BasisIndex& bra, const BasisIndex& ket,
                                 const SystemParams& p, int box_points, int wall_points) {
    validate_index(bra);
    validate_index(ket);
    QuadratureCheck out;
    out.analytic = channel_matrix_element(ch, bra, ket, p);
    out.numeric = numeric_element(ch, bra, ket, p, box_points, wall_points);
    const double refined = numeric_element(ch, bra, ket, p, 2 * box_points, 2 * wall_points);
    const double scale = std::max({std::abs(out.numeric), std::abs(refined), 1e-300});
    out.drift = std::abs(refined - out.numeric) / scale;
    // below absolute noise floor the relative drift is meaningless
    out.converged = out.drift <= 1e-8 || std::abs(refined - out.numeric) < 1e-13;
    out.numeric = refined;
    out.abs_diff = std::abs(out.analytic - out.numeric);
    return out;
}

} // namespace qmano
