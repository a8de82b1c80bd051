#pragma once

// Photon emission: spectral lines from the level energy differences, and the
// deterministic decay of a coupled nucleus-shell oscillation over one
// emission interval, with an analytic closed form and a numeric integrator
// for cross-checking it.

#include <vector>

#include "core/dynamic_model.hpp"
#include "core/quantities.hpp"

namespace hydrodyn::emission {

using dynamic::CalibratedModel;

struct EmissionLine {
    int lower;          // n
    int upper;          // m > n (higher index = lower excitation)
    double frequency;   // [Hz]
    double energy;      // h * frequency [J]
    double wavelength;  // c / frequency [m]
};

// nu_nm = nu_em0 (1/n^2 - 1/m^2), nu_em0 = m_e v0^2 / (2h).
EmissionLine line_frequency(const CalibratedModel& m, int n, int upper,
                            const PhysicalConstants& k);

// Prefactor of the line series [Hz].
double emission_prefactor(const CalibratedModel& m, const PhysicalConstants& k);

// Delta W = (m_e/2)(u_n^2 - u_m^2); antisymmetric, positive iff n < m.
double energy_difference(const CalibratedModel& m, int n, int upper, const PhysicalConstants& k);

struct DecayConfig {
    int n;              // initial level
    int m;              // final level, m > n (loses excitation)
    double tau_eps;     // emission interval [s]
    double decay_rate;  // (2/tau_eps) ln(m/n) [1/s]
};

DecayConfig decay_config(int n, int m, double tau_eps);

// Guard band around zeros of cos(omega0 t): the closed-form velocity is
// singular there while the product u^2 cos^2 stays smooth.
inline constexpr double kCosineGuard = 0.1;

// Smooth product w(t) = u^2(t) cos^2(omega0 t)
//   = u_n^2 - u_n^2 e^{-alpha t} sin^2(omega0 t) - (u_n^2 - u_m^2) t / tau_eps.
// Negative values are signalled (no real velocity).
double velocity_sq_product(const CalibratedModel& m, const DecayConfig& cfg, double t);

// u^2(t) = w(t)/cos^2(omega0 t); rejects t outside [0, tau_eps] and signals
// times inside the guard band.
double analytic_velocity_sq(const CalibratedModel& m, const DecayConfig& cfg, double t,
                            double probe_r);

// Constant first-approximation photon rate (d phi_ph / dt) at the probe
// radius: (rho_el0/r^2)(u_n^2 - u_m^2)/tau_eps.
double photon_rate(const CalibratedModel& m, const DecayConfig& cfg, double probe_r);

// Electron-motion potential during emission as a function of x = t/tau_eps:
//   phi_el(x, r) = -phi_nuc(x, r) + (rho_el0/r^2)(u_n^2 - (u_n^2 - u_m^2) x).
double emission_potential_profile(const CalibratedModel& m, const DecayConfig& cfg, double x,
                                  double probe_r);

// Damped nuclear potential (rho_el0 u_n^2/r^2) sin^2(omega0 t) e^{-alpha t}.
double nuclear_emission_potential(const CalibratedModel& m, const DecayConfig& cfg, double t,
                                  double probe_r);

struct DecayTrace {
    std::vector<double> times;        // [s], uniform grid over [0, tau_eps]
    std::vector<double> u_squared;    // w/cos^2 at each grid time (unguarded)
    std::vector<double> phi_el;       // (rho_el0/r^2) w(t), smooth
    std::vector<double> phi_nuc;      // damped nuclear potential
    double photon_rate;               // constant rate used
    double endpoint_residual;         // |u^2(tau) - u_m^2|/u_m^2 (NaN if tau not integer-period)
    long steps;                       // steps actually used after refinement
};

// Fixed-step classical 4th-order integration of the product form,
// w'(t) = -h(t); requires steps >= 10^4. For an integer-period tau_eps the
// endpoint is checked against u_m^2 and the step count refined (up to 3
// doublings) before giving up.
DecayTrace numeric_decay_oracle(const CalibratedModel& m, const DecayConfig& cfg, double probe_r,
                                long steps);

// tau_1/tau_2 = ln(m1/n) / ln(m2/n) for two decays out of the same level.
double emission_interval_ratio(int n, int m1, int m2);

}  // namespace hydrodyn::emission
