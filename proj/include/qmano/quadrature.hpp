#pragma once

#include <vector>

#include "qmano/basis.hpp"
#include "qmano/channels.hpp"
#include "qmano/params.hpp"

namespace qmano {

// Gauss-Legendre rule on [a, b].
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

QuadratureRule gauss_legendre(int n, double a, double b);

// Explicit eigenfunctions, used only for numerical cross-checks.
double box_eigenfunction(int j, double y, double box_length);
double box_eigenfunction_derivative(int j, double y, double box_length);
double oscillator_eigenfunction(int n, double y, double mass, double omega, double hbar);
double oscillator_eigenfunction_derivative(int n, double y, double mass, double omega, double hbar);

// Numeric <k| y^p (d/dy)^q |j> over box eigenfunctions, p in 0..3, q in 0..2.
double box_element_numeric(int p, int q, int j, int k, double box_length, int points);

// Numeric <m| y^p (d/dy)^q |n> over oscillator eigenfunctions; the grid spans
// [-half_width, half_width] oscillator lengths (default 8).
double oscillator_element_numeric(int p, int q, int n, int m, double mass, double omega,
                                  double hbar, int points, double half_width = 8.0);

struct QuadratureCheck {
    double analytic = 0.0;
    double numeric = 0.0;
    double abs_diff = 0.0;
    bool converged = true;    // doubling the grid moved the value by < 1e-8 relative
    double drift = 0.0;       // relative change under grid doubling
};

// Evaluates <bra| W_ch |ket> by numerical integration of the explicit
// eigenfunctions and compares with the closed form.
QuadratureCheck quadrature_check(Channel ch, const BasisIndex& bra, const BasisIndex& ket,
                                 const SystemParams& p, int box_points = 2048,
                                 int wall_points = 2048);

} // namespace qmano
