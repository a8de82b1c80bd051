#pragma once

// Dynamic hydrogen model: resonant radial electron waves inside the shell,
// calibration from the ionization energy, photon-exchange potentials coupling
// shell and nucleus, nuclear oscillation, nuclear potentials and radius
// estimates, and bulk-density checks.
//
// Index convention: small n is HIGH excitation; the ground state sits at
// n -> infinity. All per-level energies are positive.

#include "core/quantities.hpp"

namespace hydrodyn::dynamic {

struct CalibratedModel {
    double e0;       // ionization energy [J], stored negative
    double v0;       // nu0 * R0 [m/s]
    double r0;       // atomic radius [m]
    double nu0;      // resonance frequency [Hz]
    double omega0;   // 2 pi nu0 [rad/s]
    double tau0;     // 1/nu0 [s]
    double rho_el0;  // density amplitude m_e / (2 pi R0) [kg/m]
};

// Calibrates the model from the ionization energy (positive magnitude, eV):
//   v0 = sqrt(2 E0 / m_e),  R0 = h / (m_e v0),  nu0 = v0 / R0.
CalibratedModel calibrate(double e0_ev, const PhysicalConstants& k);

struct RadialMode {
    int n;
    double u_n;            // radial speed v0/n [m/s]
    double k_n;            // wavenumber omega0/u_n = 2 pi n / R0 [1/m]
    double lambda_n;       // de Broglie wavelength h/(m_e u_n) = n R0 [m]
    double nu_n;           // wave frequency, W_T/h [Hz]
    double w_total;        // m_e u_n^2 [J]
    double w_kinetic;      // m_e u_n^2 / 2 [J]
    double w_interaction;  // -m_e u_n^2 / 2 [J]
};

RadialMode radial_mode(const CalibratedModel& m, int n, const PhysicalConstants& k);

// rho(r) = rho_el0 sin^2(k_n r) / r^2 on (0, R0] [kg/m^3].
double density_profile(const CalibratedModel& m, int n, double r);

// p(r,t) = rho(r) u_n cos(omega0 t) [kg/(m^2 s)].
double momentum_field(const CalibratedModel& m, int n, double r, double t);

struct FieldSample {
    double r;
    double t;
    double p_r;            // radial momentum density
    double phi_total;      // rho_el0 u_n^2 cos^2(omega0 t) / r^2
    double phi_photon;     // rho_el0 u_n^2 sin^2(omega0 t) / r^2
    double phi_intrinsic;  // rho_el0 u_n cos^2(k_n r) cos^2(omega0 t) / r^2
    double phi_external;   // phi_intrinsic + (m_e nu0^2 / 2n) sin(omega0 t) / r
};

// Evaluates every potential of the exchange balance at (r, t);
// phi_total + phi_photon is independent of t at fixed r.
FieldSample potential_balance(const CalibratedModel& m, int n, double r, double t,
                              const PhysicalConstants& k);

// phi_ext alone (the last FieldSample component), per the Gauss-integrated
// field relation.
double external_potential(const CalibratedModel& m, int n, double r, double t,
                          const PhysicalConstants& k);

enum class RetardedBranch { inward, outward };

// t_ret = t -/+ (r - R_N)/c; the inward branch is the default elsewhere.
double retarded_time(double t, double r, double r_nuc, const PhysicalConstants& k,
                     RetardedBranch branch = RetardedBranch::inward);

// Photon potential arriving at the nuclear surface, rho_el0 u_n^2
// sin^2(omega0 t_ret) / R_N^2, and its complement of nuclear motion.
double photon_potential_at_nucleus(const CalibratedModel& m, int n, double r_nuc, double t_ret);
double nuclear_surface_potential(const CalibratedModel& m, int n, double r_nuc, double t_ret);

struct NuclearModel {
    double r_nuc;           // equilibrium nuclear radius [m]
    double rho_nuc0;        // m_p / (2 pi R_N), same kg/m convention as rho_el0
    double coupling_ratio;  // sqrt(rho_el(R_N)/rho_nuc(R_N)), dimensionless
    double amplitude;       // coupling_ratio * u_n / omega0 [m]
    double kappa;           // restoring coefficient rho_nuc(R_N) * omega0^2
};

// Default proton charge-radius scale for the oscillation model.
inline constexpr double kDefaultNuclearRadius = 0.88e-15;  // [m]

NuclearModel make_nuclear_model(const CalibratedModel& m, int n, const PhysicalConstants& k,
                                double r_nuc = kDefaultNuclearRadius);

struct NuclearState {
    double u_nuc;    // surface velocity coupling_ratio * u_n * cos(omega0 t)
    double radius;   // R_N + amplitude * sin(omega0 t) (positive branch)
};

NuclearState nuclear_motion(const CalibratedModel& m, int n, const NuclearModel& nuc, double t);

// (phi_N^0)^2 / R_N^3 = nu0^2 * 3 pi^2 m_e m_p / R0 [kg^2/(m s^2)].
double nuclear_field_intensity(const CalibratedModel& m, const PhysicalConstants& k);

enum class Coupling { electrostatic, gravitational };

struct NuclearRadiusEstimate {
    double k_constant;  // right-hand side of the r_N^{7/2} relation
    double radius;      // solved nuclear radius [m]
};

// Solves eps * r_N^{7/2} = K_el (electrostatic) or gamma^{-1} * r_N^{7/2} =
// K_grav (gravitational) with K = 6 q^2 / (32 pi^3 m_e nu0^2) *
// sqrt(2 m_e R0 / (3 m_p)), q^2 = e^2 or m_p^2.
NuclearRadiusEstimate nuclear_radius_estimate(const CalibratedModel& m, Coupling coupling,
                                              const PhysicalConstants& k);

enum class Phase { gas, liquid };

struct BulkReport {
    double atom_count;
    double occupied_volume_l;   // atom_count * (4/3) pi R0^3, in litres
    double reference_volume_l;  // measured volume of the same mass
    double ratio_to_reference;
};

// Reference densities: gas 0.0899 g/l (standard conditions), liquid 70.7 g/l.
BulkReport bulk_volume_check(const CalibratedModel& m, Phase phase, double mass_g,
                             const PhysicalConstants& k);

}  // namespace hydrodyn::dynamic
