#include "doctest.h"

#include <cmath>

#include "core/dynamic_model.hpp"
#include "core/emission.hpp"
#include "core/errors.hpp"
#include "core/quantities.hpp"
#include "support/oracles.hpp"

using namespace hydrodyn::emission;
using hydrodyn::PhysicalConstants;
using testsupport::rel_diff;

namespace {
const PhysicalConstants k = PhysicalConstants::codata2018();
const CalibratedModel model = hydrodyn::dynamic::calibrate(13.598, k);
const double probe_r = model.r0 / 2.0;
}  // namespace

TEST_CASE("line series prefactor and the visible lines") {
    CHECK(emission_prefactor(model, k) == doctest::Approx(3.288e15).epsilon(5e-3));

    const auto h_alpha = line_frequency(model, 2, 3, k);
    CHECK(h_alpha.frequency == doctest::Approx(4.566e14).epsilon(5e-3));
    CHECK(h_alpha.wavelength == doctest::Approx(656.5e-9).epsilon(5e-3));

    // Series limit of the (1 -> m) ladder reproduces the calibration input.
    const auto limit = line_frequency(model, 1, 1000000, k);
    CHECK(limit.energy / k.ev == doctest::Approx(13.598).epsilon(2e-3));

    CHECK_THROWS_AS(line_frequency(model, 3, 3, k), std::invalid_argument);
    CHECK_THROWS_AS(line_frequency(model, 3, 2, k), std::invalid_argument);
}

TEST_CASE("line frequency and energy difference agree") {
    for (int n = 1; n < 50; ++n)
        for (int m = n + 1; m <= 50; ++m) {
            const auto line = line_frequency(model, n, m, k);
            CHECK(rel_diff(k.h * line.frequency, energy_difference(model, n, m, k)) < 1e-12);
            CHECK(line.wavelength == doctest::Approx(k.c / line.frequency).epsilon(1e-14));
        }
}

TEST_CASE("energy differences") {
    CHECK(energy_difference(model, 4, 4, k) == 0.0);
    CHECK(energy_difference(model, 2, 1, k) == -energy_difference(model, 1, 2, k));
    const double w12 = energy_difference(model, 1, 2, k);
    const double w23 = energy_difference(model, 2, 3, k);
    const double w13 = energy_difference(model, 1, 3, k);
    CHECK(rel_diff(w12 + w23, w13) < 1e-12);
    CHECK(rel_diff(w12, k.h * line_frequency(model, 1, 2, k).frequency) < 1e-12);
}

TEST_CASE("Ritz combination") {
    for (int n = 1; n <= 18; ++n)
        for (int m = n + 1; m <= 19; ++m)
            for (int l = m + 1; l <= 20; ++l) {
                const double direct = line_frequency(model, n, l, k).frequency;
                const double via = line_frequency(model, n, m, k).frequency +
                                   line_frequency(model, m, l, k).frequency;
                CHECK(rel_diff(direct, via) < 1e-12);
            }
}

TEST_CASE("decay configuration") {
    const auto cfg = decay_config(1, 2, 1.0);
    CHECK(cfg.decay_rate == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));

    const double un2 = model.v0 * model.v0;
    const double um2 = un2 / 4.0;
    CHECK(rel_diff(un2 * std::exp(-cfg.decay_rate * cfg.tau_eps), um2) < 1e-12);

    CHECK_THROWS_AS(decay_config(2, 2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(decay_config(3, 2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(decay_config(1, 2, 0.0), std::invalid_argument);

    auto rng = testsupport::seeded_rng();
    std::uniform_int_distribution<int> ndist(1, 40);
    std::uniform_int_distribution<int> step(1, 30);
    for (int i = 0; i < 100; ++i) {
        const int n = ndist(rng);
        const int m = n + step(rng);
        const double tau = testsupport::log_uniform(rng, 1e-18, 1.0);
        const auto c = decay_config(n, m, tau);
        const double ratio = static_cast<double>(n) / m;
        CHECK(rel_diff(std::exp(-c.decay_rate * c.tau_eps), ratio * ratio) < 1e-12);
    }
}

TEST_CASE("analytic velocity over the emission interval") {
    const auto cfg = decay_config(1, 2, 10.0 * model.tau0);
    const double un2 = model.v0 * model.v0;
    const double um2 = un2 / 4.0;

    CHECK(analytic_velocity_sq(model, cfg, 0.0, probe_r) == doctest::Approx(un2).epsilon(1e-12));
    CHECK(analytic_velocity_sq(model, cfg, cfg.tau_eps, probe_r) ==
          doctest::Approx(um2).epsilon(1e-9));

    CHECK_THROWS_AS(analytic_velocity_sq(model, cfg, model.tau0 / 4.0, probe_r),
                    hydrodyn::singular_time_error);
    CHECK_THROWS_AS(analytic_velocity_sq(model, cfg, -1e-18, probe_r), std::domain_error);
    CHECK_THROWS_AS(analytic_velocity_sq(model, cfg, 1.1 * cfg.tau_eps, probe_r),
                    std::domain_error);

    // A hand-built config with the damping removed drives the product
    // negative where the photon drain exceeds the undamped balance
    // (t = 9.3 tau0: sin^2 = 0.90, drain fraction 0.70).
    const DecayConfig undamped{1, 2, 10.0 * model.tau0, 0.0};
    CHECK_THROWS_AS(analytic_velocity_sq(model, undamped, 0.93 * undamped.tau_eps, probe_r),
                    hydrodyn::negative_radicand_error);
}

TEST_CASE("constant photon rate") {
    const auto cfg = decay_config(1, 2, 10.0 * model.tau0);
    const double un2 = model.v0 * model.v0;
    const double expected = model.rho_el0 / (probe_r * probe_r) * un2 * 0.75 / cfg.tau_eps;
    CHECK(photon_rate(model, cfg, probe_r) == doctest::Approx(expected).epsilon(1e-12));

    const DecayConfig same_level{2, 2, 1.0, 0.0};
    CHECK(photon_rate(model, same_level, probe_r) == 0.0);

    // Constant-rate closure over the interval.
    const double um2 = un2 / 4.0;
    const double integral = photon_rate(model, cfg, probe_r) * cfg.tau_eps;
    CHECK(rel_diff(integral * probe_r * probe_r / model.rho_el0, un2 - um2) < 1e-12);
}

TEST_CASE("emission potential profile") {
    const auto cfg = decay_config(1, 2, 10.0 * model.tau0);
    const double un2 = model.v0 * model.v0;
    const double um2 = un2 / 4.0;
    const double scale = model.rho_el0 / (probe_r * probe_r);

    CHECK(emission_potential_profile(model, cfg, 0.0, probe_r) ==
          doctest::Approx(scale * un2).epsilon(1e-12));
    CHECK(emission_potential_profile(model, cfg, 1.0, probe_r) ==
          doctest::Approx(scale * um2).epsilon(1e-9));

    // Adding back the nuclear term leaves the linear drain with slope
    // -(rho/r^2)(u_n^2 - u_m^2).
    const auto linear_part = [&](double x) {
        return emission_potential_profile(model, cfg, x, probe_r) +
               nuclear_emission_potential(model, cfg, x * cfg.tau_eps, probe_r);
    };
    const double slope = (linear_part(0.75) - linear_part(0.25)) / 0.5;
    CHECK(slope == doctest::Approx(-scale * (un2 - um2)).epsilon(1e-9));

    CHECK_THROWS_AS(emission_potential_profile(model, cfg, -0.1, probe_r), std::domain_error);
    CHECK_THROWS_AS(emission_potential_profile(model, cfg, 1.1, probe_r), std::domain_error);
}

TEST_CASE("numeric oracle endpoint contracts") {
    const double um_ratio = 0.25;  // (n/m)^2 for 1 -> 2
    for (const int periods : {1, 10, 51}) {
        const auto cfg = decay_config(1, 2, periods * model.tau0);
        const auto trace = numeric_decay_oracle(model, cfg, probe_r, 10000);
        CHECK(trace.endpoint_residual < 1e-6);
        CHECK(trace.u_squared.front() == doctest::Approx(model.v0 * model.v0).epsilon(1e-12));
        CHECK(trace.u_squared.back() ==
              doctest::Approx(model.v0 * model.v0 * um_ratio).epsilon(1e-6));
    }
    const auto cfg = decay_config(1, 2, 10.0 * model.tau0);
    const auto fine = numeric_decay_oracle(model, cfg, probe_r, 1000000);
    CHECK(fine.endpoint_residual < 1e-6);
    CHECK_THROWS_AS(numeric_decay_oracle(model, cfg, probe_r, 9999), std::invalid_argument);
}

TEST_CASE("numeric oracle converges at fourth order") {
    const auto cfg = decay_config(1, 2, 10.0 * model.tau0);
    const double e1 = numeric_decay_oracle(model, cfg, probe_r, 10000).endpoint_residual;
    const double e2 = numeric_decay_oracle(model, cfg, probe_r, 20000).endpoint_residual;
    CHECK(e1 / e2 >= 8.0);  // halving the step cuts the error by ~2^4
}

TEST_CASE("numeric oracle matches the analytic solution away from singular times") {
    for (const auto& [n, m] : {std::pair{1, 2}, {2, 3}, {1, 5}}) {
        const auto cfg = decay_config(n, m, 10.0 * model.tau0);
        const double un2 = std::pow(model.v0 / n, 2);
        const auto trace = numeric_decay_oracle(model, cfg, probe_r, 20000);
        const size_t total = trace.times.size();
        size_t compared = 0;
        for (size_t i = 0; i < total && compared < 50; i += total / 61) {
            const double t = trace.times[i];
            if (std::abs(std::cos(model.omega0 * t)) <= kCosineGuard) continue;
            const double analytic = analytic_velocity_sq(model, cfg, t, probe_r);
            CHECK(std::abs(analytic - trace.u_squared[i]) / un2 < 1e-6);
            ++compared;
        }
        CHECK(compared == 50);
    }
}

TEST_CASE("undriven, undamped balance is conserved") {
    // Degenerate config: no level change, so no photon drain and no damping.
    const DecayConfig frozen{1, 1, 10.0 * model.tau0, 0.0};
    const auto trace = numeric_decay_oracle(model, frozen, probe_r, 10000);
    const double un2 = model.v0 * model.v0;
    const double scale = model.rho_el0 / (probe_r * probe_r);
    for (size_t i = 0; i < trace.times.size(); i += 97) {
        const double w = trace.phi_el[i] / scale;  // u^2 cos^2 recovered from the potential
        const double s = std::sin(model.omega0 * trace.times[i]);
        CHECK(w + un2 * s * s == doctest::Approx(un2).epsilon(1e-9));
    }
}

TEST_CASE("emission interval ratios") {
    CHECK(emission_interval_ratio(1, 3, 3) == 1.0);
    CHECK(emission_interval_ratio(1, 2, 4) == doctest::Approx(0.5).epsilon(1e-12));
    const double ab = emission_interval_ratio(2, 5, 9);
    const double ba = emission_interval_ratio(2, 9, 5);
    CHECK(ab * ba == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(emission_interval_ratio(3, 3, 5), std::invalid_argument);
    CHECK_THROWS_AS(emission_interval_ratio(3, 5, 2), std::invalid_argument);
}
