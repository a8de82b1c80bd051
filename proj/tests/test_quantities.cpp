#include "doctest.h"

#include <numbers>

#include "core/quantities.hpp"
#include "core/schrodinger.hpp"
#include "support/oracles.hpp"

using hydrodyn::EnergyDirection;
using hydrodyn::PhysicalConstants;

namespace {
const PhysicalConstants k = PhysicalConstants::codata2018();
}

TEST_CASE("constants are positive and h = 2 pi hbar") {
    for (const double v : {k.hbar, k.h, k.m_e, k.m_p, k.e, k.eps0, k.k_b, k.c, k.gamma_g, k.ev})
        CHECK(v > 0.0);
    CHECK(k.h / k.hbar == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-12));
}

TEST_CASE("gaussian charge squared") {
    const double eg2 = hydrodyn::gaussian_charge_squared(k);
    CHECK(eg2 == doctest::Approx(2.307e-28).epsilon(1e-3));

    // One hartree when divided by the Bohr radius.
    const double hartree_ev = eg2 / hydrodyn::schrodinger::bohr_radius(k) / k.ev;
    CHECK(hartree_ev == doctest::Approx(27.21).epsilon(1e-3));

    PhysicalConstants doubled = k;
    doubled.e *= 2.0;
    CHECK(hydrodyn::gaussian_charge_squared(doubled) == doctest::Approx(4.0 * eg2).epsilon(1e-14));
}

TEST_CASE("energy conversion") {
    CHECK(hydrodyn::energy_convert(1.0, EnergyDirection::ev_to_joule, k) ==
          doctest::Approx(1.602e-19).epsilon(1e-3));
    CHECK(hydrodyn::energy_convert(0.0, EnergyDirection::ev_to_joule, k) == 0.0);
    const double joule = hydrodyn::energy_convert(13.598, EnergyDirection::ev_to_joule, k);
    CHECK(hydrodyn::energy_convert(joule, EnergyDirection::joule_to_ev, k) ==
          doctest::Approx(13.598).epsilon(1e-12));
    CHECK_THROWS_AS(
        hydrodyn::energy_convert(std::numeric_limits<double>::infinity(),
                                 EnergyDirection::ev_to_joule, k),
        std::invalid_argument);
}

TEST_CASE("energy conversion round trip over random magnitudes") {
    auto rng = testsupport::seeded_rng();
    for (int i = 0; i < 1000; ++i) {
        const double x = testsupport::log_uniform(rng, 1e-30, 1e10);
        const double back = hydrodyn::energy_convert(
            hydrodyn::energy_convert(x, EnergyDirection::ev_to_joule, k),
            EnergyDirection::joule_to_ev, k);
        CHECK(back == doctest::Approx(x).epsilon(1e-12));
    }
}
