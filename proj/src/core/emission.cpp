#include "core/emission.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "core/errors.hpp"

namespace hydrodyn::emission {

namespace {

void check_probe_radius(const CalibratedModel& m, double r) {
    if (!(r > 0.0) || r > m.r0)
        throw std::domain_error("probe radius must lie in (0, R0]");
}

double level_speed_sq(const CalibratedModel& m, int level) {
    const double u = m.v0 / level;
    return u * u;
}

// Integrand of the product-form balance: w'(t) = -h(t) with
// h(t) = u_n^2 e^{-alpha t} (omega0 sin(2 omega0 t) - alpha sin^2(omega0 t)) + q,
// q the constant photon rate scaled back to velocity-squared units.
struct ProductRhs {
    double omega0;
    double alpha;
    double q_over_un2;  // (1 - (n/m)^2) / tau_eps

    double operator()(double t) const {
        const double s = std::sin(omega0 * t);
        return std::exp(-alpha * t) * (omega0 * std::sin(2.0 * omega0 * t) - alpha * s * s) +
               q_over_un2;
    }
};

}  // namespace

double emission_prefactor(const CalibratedModel& m, const PhysicalConstants& k) {
    return k.m_e * m.v0 * m.v0 / (2.0 * k.h);
}

EmissionLine line_frequency(const CalibratedModel& m, int n, int upper,
                            const PhysicalConstants& k) {
    if (n < 1) throw std::invalid_argument("line_frequency: n must be >= 1");
    if (upper <= n) throw std::invalid_argument("line_frequency: upper level must exceed lower");
    EmissionLine line{};
    line.lower = n;
    line.upper = upper;
    const double nd = n, md = upper;
    line.frequency = emission_prefactor(m, k) * (1.0 / (nd * nd) - 1.0 / (md * md));
    line.energy = energy_difference(m, n, upper, k);
    line.wavelength = k.c / line.frequency;
    return line;
}

double energy_difference(const CalibratedModel& m, int n, int upper, const PhysicalConstants& k) {
    if (n < 1 || upper < 1) throw std::invalid_argument("energy_difference: levels must be >= 1");
    return 0.5 * k.m_e * (level_speed_sq(m, n) - level_speed_sq(m, upper));
}

DecayConfig decay_config(int n, int m, double tau_eps) {
    if (n < 1) throw std::invalid_argument("decay_config: n must be >= 1");
    if (m <= n) throw std::invalid_argument("decay_config: m must exceed n (no decay otherwise)");
    if (!(tau_eps > 0.0)) throw std::invalid_argument("decay_config: tau_eps must be positive");
    const double rate = 2.0 / tau_eps * std::log(static_cast<double>(m) / n);
    return DecayConfig{n, m, tau_eps, rate};
}

double velocity_sq_product(const CalibratedModel& m, const DecayConfig& cfg, double t) {
    const double un2 = level_speed_sq(m, cfg.n);
    const double um2 = level_speed_sq(m, cfg.m);
    const double s = std::sin(m.omega0 * t);
    const double w = un2 - un2 * std::exp(-cfg.decay_rate * t) * s * s -
                     (un2 - um2) * t / cfg.tau_eps;
    if (w < 0.0)
        throw negative_radicand_error("velocity product negative at t = " + std::to_string(t));
    return w;
}

double analytic_velocity_sq(const CalibratedModel& m, const DecayConfig& cfg, double t,
                            double probe_r) {
    check_probe_radius(m, probe_r);
    if (!(t >= 0.0) || t > cfg.tau_eps)
        throw std::domain_error("analytic_velocity_sq: t must lie in [0, tau_eps]");
    const double c = std::cos(m.omega0 * t);
    if (std::abs(c) <= kCosineGuard)
        throw singular_time_error("t lies in the guard band of a cos(omega0 t) zero");
    return velocity_sq_product(m, cfg, t) / (c * c);
}

double photon_rate(const CalibratedModel& m, const DecayConfig& cfg, double probe_r) {
    check_probe_radius(m, probe_r);
    const double un2 = level_speed_sq(m, cfg.n);
    const double um2 = level_speed_sq(m, cfg.m);
    return m.rho_el0 / (probe_r * probe_r) * (un2 - um2) / cfg.tau_eps;
}

double nuclear_emission_potential(const CalibratedModel& m, const DecayConfig& cfg, double t,
                                  double probe_r) {
    check_probe_radius(m, probe_r);
    const double un2 = level_speed_sq(m, cfg.n);
    const double s = std::sin(m.omega0 * t);
    return m.rho_el0 * un2 / (probe_r * probe_r) * s * s * std::exp(-cfg.decay_rate * t);
}

double emission_potential_profile(const CalibratedModel& m, const DecayConfig& cfg, double x,
                                  double probe_r) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("emission_potential_profile: x must lie in [0, 1]");
    check_probe_radius(m, probe_r);
    const double un2 = level_speed_sq(m, cfg.n);
    const double um2 = level_speed_sq(m, cfg.m);
    const double linear = m.rho_el0 / (probe_r * probe_r) * (un2 - (un2 - um2) * x);
    return -nuclear_emission_potential(m, cfg, x * cfg.tau_eps, probe_r) + linear;
}

DecayTrace numeric_decay_oracle(const CalibratedModel& m, const DecayConfig& cfg, double probe_r,
                                long steps) {
    check_probe_radius(m, probe_r);
    if (steps < 10000)
        throw std::invalid_argument("numeric_decay_oracle: steps must be >= 10^4");

    const double un2 = level_speed_sq(m, cfg.n);
    const double um2 = level_speed_sq(m, cfg.m);
    const ProductRhs rhs{m.omega0, cfg.decay_rate, (1.0 - um2 / un2) / cfg.tau_eps};
    const bool integer_period = std::abs(std::sin(m.omega0 * cfg.tau_eps)) < 1e-6;
    constexpr double kEndpointTol = 1e-6;
    constexpr int kMaxRefinements = 3;

    DecayTrace trace{};
    for (int attempt = 0;; ++attempt) {
        const long n_steps = steps << attempt;
        const double dt = cfg.tau_eps / static_cast<double>(n_steps);
        trace.times.assign(n_steps + 1, 0.0);
        trace.u_squared.assign(n_steps + 1, 0.0);
        trace.phi_el.assign(n_steps + 1, 0.0);
        trace.phi_nuc.assign(n_steps + 1, 0.0);

        // Classical RK4 on w' = -h(t), in units of u_n^2.
        double w = 1.0;
        const auto record = [&](long i, double t, double wi) {
            const double c = std::cos(m.omega0 * t);
            trace.times[i] = t;
            trace.u_squared[i] = wi * un2 / (c * c);
            trace.phi_el[i] = m.rho_el0 / (probe_r * probe_r) * wi * un2;
            trace.phi_nuc[i] = nuclear_emission_potential(m, cfg, t, probe_r);
        };
        record(0, 0.0, w);
        for (long i = 0; i < n_steps; ++i) {
            const double t = static_cast<double>(i) * dt;
            const double k1 = -rhs(t);
            const double k23 = -rhs(t + 0.5 * dt);
            const double k4 = -rhs(t + dt);
            w += dt / 6.0 * (k1 + 4.0 * k23 + k4);
            record(i + 1, static_cast<double>(i + 1) * dt, w);
        }

        trace.photon_rate = photon_rate(m, cfg, probe_r);
        trace.steps = n_steps;
        if (!integer_period) {
            trace.endpoint_residual = std::numeric_limits<double>::quiet_NaN();
            return trace;
        }
        trace.endpoint_residual = std::abs(trace.u_squared.back() - um2) / um2;
        if (trace.endpoint_residual <= kEndpointTol) return trace;
        if (attempt == kMaxRefinements)
            throw convergence_error("decay oracle endpoint residual " +
                                    std::to_string(trace.endpoint_residual) +
                                    " above tolerance after max refinement");
    }
}

double emission_interval_ratio(int n, int m1, int m2) {
    if (n < 1) throw std::invalid_argument("emission_interval_ratio: n must be >= 1");
    if (m1 <= n || m2 <= n)
        throw std::invalid_argument("emission_interval_ratio: both targets must exceed n");
    const double nd = n;
    return (std::log(static_cast<double>(m1)) - std::log(nd)) /
           (std::log(static_cast<double>(m2)) - std::log(nd));
}

}  // namespace hydrodyn::emission
