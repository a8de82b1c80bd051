#include "core/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hydrodyn::thermo {

double excitation_probability(const CalibratedModel& m, int n, double temperature_k,
                              const PhysicalConstants& k) {
    if (n < 1) throw std::invalid_argument("excitation_probability: n must be >= 1");
    if (!(temperature_k > 0.0)) throw std::invalid_argument("temperature must be positive");
    const double nd = n;
    return std::exp(-(-m.e0) / (nd * nd * k.k_b * temperature_k));
}

ExcitationDistribution distribution_table(const CalibratedModel& m, double temperature_k,
                                          int n_max, const PhysicalConstants& k) {
    if (n_max < 1) throw std::invalid_argument("distribution_table: n_max must be >= 1");
    ExcitationDistribution dist{temperature_k, {}};
    dist.levels.reserve(n_max);
    for (int n = 1; n <= n_max; ++n)
        dist.levels.emplace_back(n, excitation_probability(m, n, temperature_k, k));
    return dist;
}

TransitionBand transition_band(const CalibratedModel& m, double temperature_k, double lo,
                               double hi, const PhysicalConstants& k) {
    if (!(lo > 0.0 && lo < hi && hi < 1.0))
        throw std::invalid_argument("transition_band: need 0 < lo < hi < 1");
    // The factor is monotone in n, so n(threshold) follows from the closed
    // form n^2 >= |E0| / (k_B T * (-ln thr)); step back a little and scan up
    // to absorb rounding at the boundary.
    const auto smallest_at_least = [&](double threshold) {
        const double exact =
            std::sqrt(-m.e0 / (k.k_b * temperature_k * (-std::log(threshold))));
        int n = std::max(1, static_cast<int>(exact) - 2);
        while (excitation_probability(m, n, temperature_k, k) < threshold) ++n;
        return n;
    };
    return TransitionBand{smallest_at_least(lo), smallest_at_least(hi)};
}

}  // namespace hydrodyn::thermo
