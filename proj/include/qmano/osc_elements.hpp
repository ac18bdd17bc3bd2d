#pragma once

namespace qmano::osc {

// Ladder-operator matrix elements for a harmonic oscillator of mass M and
// frequency omega; oscillator length a = sqrt(hbar / (M omega)).
// Convention: element(m, n, ...) = <m| O |n>  (n labels the ket).

double energy(int n, double omega, double hbar);

double oscillator_length(double mass, double omega, double hbar);

// <m| y^p |n> for p in {1, 2, 3}. Selection rules |m - n| <= p, parity of p.
double position_power(int p, int m, int n, double mass, double omega, double hbar);

// <m| d/dy |n> = (sqrt(n) delta_{m,n-1} - sqrt(n+1) delta_{m,n+1}) / (a sqrt(2)).
double derivative(int m, int n, double mass, double omega, double hbar);

// <m| y d/dy |n> = (sqrt(n(n-1)) delta_{m,n-2} - sqrt((n+1)(n+2)) delta_{m,n+2}
//                   - delta_{mn}) / 2; dimensionless.
double y_times_derivative(int m, int n);

} // namespace qmano::osc
