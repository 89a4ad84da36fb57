#ifndef OH_SPECIAL_HPP
#define OH_SPECIAL_HPP

// Complete elliptic integrals of the first, second and third kind in the
// parameter convention m = k^2, i.e.
//
//   K(m)    = int_0^{pi/2} (1 - m sin^2 t)^{-1/2} dt
//   E(m)    = int_0^{pi/2} (1 - m sin^2 t)^{+1/2} dt
//   Pi(n,m) = int_0^{pi/2} (1 - n sin^2 t)^{-1} (1 - m sin^2 t)^{-1/2} dt
//
// Both the m = k^2 and the k conventions appear in the literature; everything
// in this library uses m = k^2.  Evaluation goes through the Carlson symmetric
// forms R_F, R_D, R_J with the duplication theorem, which keeps full double
// accuracy over the whole parameter range.  For characteristic n > 1 the
// integrand of Pi has a pole and ell_pi returns the Cauchy principal value.

namespace oh::special {

// Carlson symmetric forms (Carlson, Numerical Algorithms 10, 13-26, 1995).
double rf(double x, double y, double z);
double rd(double x, double y, double z);
double rc(double x, double y);
double rj(double x, double y, double z, double p);

// K(m); domain 0 <= m <= 1 - 1e-15.
double ell_k(double m);
// E(m); domain 0 <= m <= 1.
double ell_e(double m);
// Associated integrals K(1-m), E(1-m).
double ell_k_bar(double m);
double ell_e_bar(double m);

// Pi(n, m).  For n < 1 the classical integral; for n > 1 the Cauchy
// principal value, computed with the characteristic exchange
//   pv Pi(n, m) = K(m) - Pi(m/n, m),
// which lands the characteristic m/n in (0, m).  n = 1 is rejected.
double ell_pi(double n, double m);

// r-th elliptic integral singular value k_r, K(1-k_r^2)/K(k_r^2) = sqrt(r).
// Supported: r = 1 and r = 3 (closed forms 1/sqrt(2) and (sqrt(6)-sqrt(2))/4).
double singular_value(int r);

} // namespace oh::special

#endif
