#include "core/schrodinger.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hydrodyn::schrodinger {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

}  // namespace

QuantumNumbers make_quantum_numbers(int n_prime, int l, int m_l) {
    if (n_prime < 0) throw std::invalid_argument("quantum numbers: n' must be >= 0");
    if (l < 0) throw std::invalid_argument("quantum numbers: l must be >= 0");
    if (std::abs(m_l) > l) throw std::invalid_argument("quantum numbers: |m_l| must be <= l");
    return QuantumNumbers{n_prime + l + 1, n_prime, l, m_l};
}

HydrogenEigenstate make_eigenstate(const QuantumNumbers& qn, const PhysicalConstants& k) {
    const double energy = energy_level(qn.n, k);
    return HydrogenEigenstate{qn, energy, bohr_radius(k), energy / k.hbar};
}

double bohr_radius(const PhysicalConstants& k) {
    return k.hbar * k.hbar / (k.m_e * gaussian_charge_squared(k));
}

double energy_level(int n, const PhysicalConstants& k) {
    if (n < 1) throw std::invalid_argument("energy_level: n must be >= 1");
    const double v = gaussian_charge_squared(k) / k.hbar;  // e_g^2/hbar has units of speed
    const double nd = static_cast<double>(n);
    return -v * v * k.m_e / (2.0 * nd * nd);
}

double radial_series(int n_prime, int l, double x) {
    if (n_prime < 0 || l < 0) throw std::invalid_argument("radial_series: indices must be >= 0");
    if (!(x >= 0.0)) throw std::invalid_argument("radial_series: x must be >= 0");
    // c_{p+1}/c_p = (n'-p) / ((2l+2+p)(p+1)); avoids forming factorials.
    double coeff = 1.0;
    double power = 1.0;  // (-x)^p
    double sum = 0.0;
    for (int p = 0;; ++p) {
        sum += coeff * power;
        if (p == n_prime) break;
        coeff *= static_cast<double>(n_prime - p) /
                 (static_cast<double>(2 * l + 2 + p) * static_cast<double>(p + 1));
        power *= -x;
    }
    return std::pow(x, l + 1) * std::exp(-x / 2.0) * sum;
}

BoundState bound_state_from_label(int label) {
    switch (label) {
        case 100: return BoundState::s100;
        case 200: return BoundState::s200;
        case 210: return BoundState::s210;
    }
    throw std::invalid_argument("bound state label must be one of 100, 200, 210; got " +
                                std::to_string(label));
}

std::complex<double> eval_wavefunction(BoundState state, double r, double theta, double t,
                                       const PhysicalConstants& k) {
    if (!(r >= 0.0)) throw std::invalid_argument("eval_wavefunction: r must be >= 0");
    const double a = bohr_radius(k);
    const double norm = std::pow(a, -1.5);
    double radial = 0.0;
    int n = 1;
    switch (state) {
        case BoundState::s100:
            radial = 2.0 / std::sqrt(kFourPi) * std::exp(-r / a);
            n = 1;
            break;
        case BoundState::s200:
            radial = 1.0 / std::sqrt(2.0 * kFourPi) * (1.0 - r / (2.0 * a)) * std::exp(-r / (2.0 * a));
            n = 2;
            break;
        case BoundState::s210:
            radial = 1.0 / std::sqrt(kFourPi) * (r / (2.0 * a)) * std::exp(-r / (2.0 * a)) *
                     std::cos(theta);
            n = 2;
            break;
    }
    const double omega = energy_level(n, k) / k.hbar;
    return norm * radial * std::exp(std::complex<double>(0.0, -omega * t));
}

double local_frequency(double r, FrequencyVariant variant, const PhysicalConstants& k) {
    if (!(r > 0.0)) throw std::invalid_argument("local_frequency: r must be > 0");
    const double a = bohr_radius(k);
    const double kinetic = k.hbar * k.hbar / (k.m_e * a);
    const double coeff =
        variant == FrequencyVariant::full ? kinetic - gaussian_charge_squared(k) : kinetic;
    return coeff / r - k.hbar * k.hbar / (2.0 * k.m_e * a * a);
}

double frequency_zero_radius(FrequencyVariant variant, const PhysicalConstants& k) {
    // Full variant: the printed arithmetic "(2 - 2) a" is reproduced literally.
    if (variant == FrequencyVariant::full) return 0.0;
    return 2.0 * bohr_radius(k);
}

}  // namespace hydrodyn::schrodinger
