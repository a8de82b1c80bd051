#pragma once

// Maxwell-Boltzmann excitation statistics over the dynamic levels. The
// factors are deliberately unnormalized: W(n) -> 1 for n -> infinity (the
// inert ground state) and the level set is unbounded, so no partition sum
// exists to divide by.

#include <vector>

#include "core/dynamic_model.hpp"
#include "core/quantities.hpp"

namespace hydrodyn::thermo {

using dynamic::CalibratedModel;

// W(n, T) = exp(-|E0| / (n^2 k_B T)), the Boltzmann factor of the per-level
// electron energy W_el(n) = |E0|/n^2.
double excitation_probability(const CalibratedModel& m, int n, double temperature_k,
                              const PhysicalConstants& k);

struct ExcitationDistribution {
    double temperature;                              // [K]
    std::vector<std::pair<int, double>> levels;      // (n, factor), n = 1..n_max
};

ExcitationDistribution distribution_table(const CalibratedModel& m, double temperature_k,
                                          int n_max, const PhysicalConstants& k);

struct TransitionBand {
    int n_lo;  // smallest n with factor >= lo
    int n_hi;  // smallest n with factor >= hi
};

// Defaults lo = 0.01, hi = 0.95 bracket the reported 293 K transition range.
TransitionBand transition_band(const CalibratedModel& m, double temperature_k, double lo,
                               double hi, const PhysicalConstants& k);

}  // namespace hydrodyn::thermo
