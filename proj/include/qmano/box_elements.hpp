#pragma once

namespace qmano::box {

// Closed-form matrix elements over infinite-square-well eigenfunctions
// psi_j(y) = sqrt(2/L) sin(j pi y / L) on [0, L], j >= 1.
// Convention throughout: element(j, k, ...) = <k| O |j>  (j labels the ket).

double energy(int j, double gas_mass, double box_length, double hbar);

// <k| y^n |j> for n in {1, 2, 3}.
double position_moment(int n, int j, int k, double box_length);

// <k| d/dy |j>; antisymmetric in (j, k), zero for j + k even.
double derivative(int j, int k, double box_length);

// <k| d^2/dy^2 |j> = -(j pi / L)^2 delta_jk.
double second_derivative(int j, int k, double box_length);

// <k| y d/dy |j>; dimensionless (independent of L). Diagonal is -1/2.
double y_times_derivative(int j, int k);

// <k| y^n d^2/dy^2 |j> = -(j pi / L)^2 <k| y^n |j>, n in {0, 1, 2}.
double moment_times_second_derivative(int n, int j, int k, double box_length);

} // namespace qmano::box
