#pragma once

// Physical constants and unit conversions. Every module computes in SI;
// Coulomb terms written in Gaussian convention are realized through
// gaussian_charge_squared() so the rest of the code never mixes unit systems.

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hydrodyn {

// CODATA 2018 snapshot (https://physics.nist.gov/cuu/Constants/).
// h, e, k_B and c are exact in the 2019 SI; the masses, eps0 and G carry
// the 2018 recommended uncertainties. Golden tests cite this snapshot.
struct PhysicalConstants {
    double hbar;     // reduced Planck constant [J s]
    double h;        // Planck constant [J s]
    double m_e;      // electron mass [kg]
    double m_p;      // proton mass [kg]
    double e;        // elementary charge [C]
    double eps0;     // vacuum permittivity [C^2 / (J m)]
    double k_b;      // Boltzmann constant [J/K]
    double c;        // speed of light [m/s]
    double gamma_g;  // Newtonian gravitational constant [m^3 / (kg s^2)]
    double ev;       // one electron volt [J]

    static constexpr PhysicalConstants codata2018() {
        PhysicalConstants k{};
        k.h = 6.62607015e-34;
        k.hbar = k.h / (2.0 * std::numbers::pi);
        k.m_e = 9.1093837015e-31;
        k.m_p = 1.67262192369e-27;
        k.e = 1.602176634e-19;
        k.eps0 = 8.8541878128e-12;
        k.k_b = 1.380649e-23;
        k.c = 299792458.0;
        k.gamma_g = 6.67430e-11;
        k.ev = 1.602176634e-19;
        return k;
    }
};

// e^2 in the Gaussian convention, e_g^2 = e^2 / (4 pi eps0) [J m].
// This is the quantity the source formulas write as "e^2/r".
inline double gaussian_charge_squared(const PhysicalConstants& k) {
    return k.e * k.e / (4.0 * std::numbers::pi * k.eps0);
}

enum class EnergyDirection { ev_to_joule, joule_to_ev };

inline double energy_convert(double x, EnergyDirection dir, const PhysicalConstants& k) {
    if (!std::isfinite(x)) throw std::invalid_argument("energy_convert: non-finite input");
    return dir == EnergyDirection::ev_to_joule ? x * k.ev : x / k.ev;
}

}  // namespace hydrodyn
