#pragma once

// Standard Schroedinger solution of hydrogen: energy levels, the low-lying
// bound-state wavefunctions, and the local-frequency analysis of the
// time-dependent states.

#include <complex>

#include "core/quantities.hpp"

namespace hydrodyn::schrodinger {

struct QuantumNumbers {
    int n;        // principal
    int n_prime;  // radial index
    int l;        // angular index
    int m_l;      // magnetic index
};

// Validated factory; enforces n = n' + l + 1 and |m_l| <= l.
QuantumNumbers make_quantum_numbers(int n_prime, int l, int m_l);

struct HydrogenEigenstate {
    QuantumNumbers qn;
    double energy;  // [J], negative for every bound state
    double bohr_a;  // [m]
    double omega;   // energy / hbar [rad/s], sign preserved
};

HydrogenEigenstate make_eigenstate(const QuantumNumbers& qn, const PhysicalConstants& k);

// a = hbar^2 / (m_e e_g^2) [m]
double bohr_radius(const PhysicalConstants& k);

// E_n = -(e_g^2/hbar)^2 m_e / (2 n^2) [J]
double energy_level(int n, const PhysicalConstants& k);

// Regular radial solution y_l(x) = x^{l+1} e^{-x/2} sum_{p=0}^{n'} c_p (-x)^p
// with c_p = n'! (2l+1)! / ((n'-p)! (2l+1+p)! p!) (associated-Laguerre
// convention for the sign of the x^p term).
double radial_series(int n_prime, int l, double x);

enum class BoundState { s100, s200, s210 };

// Maps the conventional (n l m) label 100/200/210 to a BoundState;
// rejects anything else.
BoundState bound_state_from_label(int label);

// Closed-form amplitude of the labeled state at (r, theta) with the phase
// factor e^{-i omega_n t}. All three states carry the a^{-3/2} dimensional
// factor so the result is in m^{-3/2}.
std::complex<double> eval_wavefunction(BoundState state, double r, double theta, double t,
                                       const PhysicalConstants& k);

enum class FrequencyVariant {
    full,        // literal radial-equation frequency, coefficient (hbar^2/(m a) - e_g^2)
    mechanical,  // kinetic-only analogy, coefficient hbar^2/(m a)
};

// hbar * omega(r) [J] of the local-frequency profile for the (100) state.
double local_frequency(double r, FrequencyVariant variant, const PhysicalConstants& k);

// Radius where the local frequency crosses zero: 0 for the full variant
// (the printed "(2 - 2) a"), 2a for the mechanical analogy.
double frequency_zero_radius(FrequencyVariant variant, const PhysicalConstants& k);

}  // namespace hydrodyn::schrodinger
