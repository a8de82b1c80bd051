#include "core/dynamic_model.hpp"

#include <cmath>
#include <stdexcept>

namespace hydrodyn::dynamic {

namespace {

constexpr double kPi = std::numbers::pi;

void check_shell_radius(const CalibratedModel& m, double r) {
    if (!(r > 0.0) || r > m.r0)
        throw std::domain_error("radius must lie in (0, R0]");
}

void check_level(int n) {
    if (n < 1) throw std::invalid_argument("excitation level n must be >= 1");
}

}  // namespace

CalibratedModel calibrate(double e0_ev, const PhysicalConstants& k) {
    if (!(e0_ev > 0.0)) throw std::invalid_argument("E0 must be positive");
    const double e0 = e0_ev * k.ev;
    CalibratedModel m{};
    m.e0 = -e0;
    m.v0 = std::sqrt(2.0 * e0 / k.m_e);
    m.r0 = k.h / (k.m_e * m.v0);
    m.nu0 = m.v0 / m.r0;
    m.omega0 = 2.0 * kPi * m.nu0;
    m.tau0 = 1.0 / m.nu0;
    m.rho_el0 = k.m_e / (2.0 * kPi * m.r0);
    return m;
}

RadialMode radial_mode(const CalibratedModel& m, int n, const PhysicalConstants& k) {
    check_level(n);
    RadialMode mode{};
    mode.n = n;
    mode.u_n = m.v0 / n;
    mode.k_n = m.omega0 / mode.u_n;
    mode.lambda_n = k.h / (k.m_e * mode.u_n);
    mode.w_total = k.m_e * mode.u_n * mode.u_n;
    mode.w_kinetic = 0.5 * k.m_e * mode.u_n * mode.u_n;
    mode.w_interaction = -mode.w_kinetic;
    mode.nu_n = mode.w_total / k.h;
    return mode;
}

double density_profile(const CalibratedModel& m, int n, double r) {
    check_level(n);
    check_shell_radius(m, r);
    const double k_n = m.omega0 / (m.v0 / n);
    const double s = std::sin(k_n * r);
    return m.rho_el0 * s * s / (r * r);
}

double momentum_field(const CalibratedModel& m, int n, double r, double t) {
    return density_profile(m, n, r) * (m.v0 / n) * std::cos(m.omega0 * t);
}

FieldSample potential_balance(const CalibratedModel& m, int n, double r, double t,
                              const PhysicalConstants& k) {
    check_level(n);
    check_shell_radius(m, r);
    const double u_n = m.v0 / n;
    const double k_n = m.omega0 / u_n;
    const double c = std::cos(m.omega0 * t);
    const double s = std::sin(m.omega0 * t);
    const double cr = std::cos(k_n * r);
    FieldSample f{};
    f.r = r;
    f.t = t;
    f.p_r = m.rho_el0 * std::pow(std::sin(k_n * r), 2) / (r * r) * u_n * c;
    f.phi_total = m.rho_el0 * u_n * u_n * c * c / (r * r);
    f.phi_photon = m.rho_el0 * u_n * u_n * s * s / (r * r);
    f.phi_intrinsic = m.rho_el0 * u_n * cr * cr * c * c / (r * r);
    f.phi_external = f.phi_intrinsic + k.m_e * m.nu0 * m.nu0 / (2.0 * n) * s / r;
    return f;
}

double external_potential(const CalibratedModel& m, int n, double r, double t,
                          const PhysicalConstants& k) {
    return potential_balance(m, n, r, t, k).phi_external;
}

double retarded_time(double t, double r, double r_nuc, const PhysicalConstants& k,
                     RetardedBranch branch) {
    const double delay = (r - r_nuc) / k.c;
    return branch == RetardedBranch::inward ? t - delay : t + delay;
}

double photon_potential_at_nucleus(const CalibratedModel& m, int n, double r_nuc, double t_ret) {
    check_level(n);
    if (!(r_nuc > 0.0)) throw std::domain_error("nuclear radius must be > 0");
    const double u_n = m.v0 / n;
    const double s = std::sin(m.omega0 * t_ret);
    return m.rho_el0 * u_n * u_n * s * s / (r_nuc * r_nuc);
}

double nuclear_surface_potential(const CalibratedModel& m, int n, double r_nuc, double t_ret) {
    check_level(n);
    if (!(r_nuc > 0.0)) throw std::domain_error("nuclear radius must be > 0");
    const double u_n = m.v0 / n;
    const double c = std::cos(m.omega0 * t_ret);
    return m.rho_el0 * u_n * u_n * c * c / (r_nuc * r_nuc);
}

NuclearModel make_nuclear_model(const CalibratedModel& m, int n, const PhysicalConstants& k,
                                double r_nuc) {
    check_level(n);
    if (!(r_nuc > 0.0)) throw std::invalid_argument("nuclear radius must be > 0");
    NuclearModel nuc{};
    nuc.r_nuc = r_nuc;
    nuc.rho_nuc0 = k.m_p / (2.0 * kPi * r_nuc);
    // Density ratio at R_N; the common 1/R_N^2 of the two profiles cancels.
    nuc.coupling_ratio = std::sqrt(m.rho_el0 / nuc.rho_nuc0);
    nuc.amplitude = nuc.coupling_ratio * (m.v0 / n) / m.omega0;
    nuc.kappa = nuc.rho_nuc0 / (r_nuc * r_nuc) * m.omega0 * m.omega0;
    return nuc;
}

NuclearState nuclear_motion(const CalibratedModel& m, int n, const NuclearModel& nuc, double t) {
    check_level(n);
    NuclearState st{};
    st.u_nuc = nuc.coupling_ratio * (m.v0 / n) * std::cos(m.omega0 * t);
    st.radius = nuc.r_nuc + nuc.amplitude * std::sin(m.omega0 * t);
    return st;
}

double nuclear_field_intensity(const CalibratedModel& m, const PhysicalConstants& k) {
    return m.nu0 * m.nu0 * 3.0 * kPi * kPi * k.m_e * k.m_p / m.r0;
}

NuclearRadiusEstimate nuclear_radius_estimate(const CalibratedModel& m, Coupling coupling,
                                              const PhysicalConstants& k) {
    const double charge_sq =
        coupling == Coupling::electrostatic ? k.e * k.e : k.m_p * k.m_p;
    const double k_constant = 6.0 * charge_sq / (32.0 * kPi * kPi * kPi * k.m_e * m.nu0 * m.nu0) *
                              std::sqrt(2.0 * k.m_e * m.r0 / (3.0 * k.m_p));
    // eps r^{7/2} = K_el  or  gamma^{-1} r^{7/2} = K_grav
    const double r72 = coupling == Coupling::electrostatic ? k_constant / k.eps0
                                                           : k_constant * k.gamma_g;
    return NuclearRadiusEstimate{k_constant, std::pow(r72, 2.0 / 7.0)};
}

BulkReport bulk_volume_check(const CalibratedModel& m, Phase phase, double mass_g,
                             const PhysicalConstants& k) {
    if (!(mass_g > 0.0)) throw std::invalid_argument("mass must be positive");
    const double ref_density_g_per_l = phase == Phase::gas ? 0.0899 : 70.7;
    BulkReport rep{};
    rep.atom_count = mass_g * 1e-3 / k.m_p;
    const double volume_m3 = rep.atom_count * (4.0 / 3.0) * kPi * m.r0 * m.r0 * m.r0;
    rep.occupied_volume_l = volume_m3 * 1e3;
    rep.reference_volume_l = mass_g / ref_density_g_per_l;
    rep.ratio_to_reference = rep.occupied_volume_l / rep.reference_volume_l;
    return rep;
}

}  // namespace hydrodyn::dynamic
