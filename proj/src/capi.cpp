#include "hydrodyn/hydrodyn.h"

#include <exception>
#include <new>
#include <stdexcept>

#include "core/dynamic_model.hpp"
#include "core/emission.hpp"
#include "core/errors.hpp"
#include "core/quantities.hpp"
#include "core/schrodinger.hpp"
#include "core/thermo.hpp"

namespace {

const hydrodyn::PhysicalConstants& consts() {
    static const hydrodyn::PhysicalConstants k = hydrodyn::PhysicalConstants::codata2018();
    return k;
}

// Runs a callable and folds its exceptions into status codes.
template <typename Fn>
hydro_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        return HYDRO_OK;
    } catch (const hydrodyn::singular_time_error&) {
        return HYDRO_ERR_SINGULAR_TIME;
    } catch (const hydrodyn::negative_radicand_error&) {
        return HYDRO_ERR_NEGATIVE_RADICAND;
    } catch (const hydrodyn::convergence_error&) {
        return HYDRO_ERR_NO_CONVERGENCE;
    } catch (const std::domain_error&) {
        return HYDRO_ERR_DOMAIN;
    } catch (const std::invalid_argument&) {
        return HYDRO_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        return HYDRO_ERR_INTERNAL;
    } catch (const std::exception&) {
        return HYDRO_ERR_INTERNAL;
    }
}

hydro_status to_variant(hydro_frequency_variant in,
                        hydrodyn::schrodinger::FrequencyVariant* out) {
    switch (in) {
        case HYDRO_FREQUENCY_FULL:
            *out = hydrodyn::schrodinger::FrequencyVariant::full;
            return HYDRO_OK;
        case HYDRO_FREQUENCY_MECHANICAL:
            *out = hydrodyn::schrodinger::FrequencyVariant::mechanical;
            return HYDRO_OK;
    }
    return HYDRO_ERR_INVALID_ARGUMENT;
}

hydrodyn::emission::DecayConfig to_core(const hydro_decay_config& cfg) {
    return hydrodyn::emission::DecayConfig{cfg.n, cfg.m, cfg.tau_eps, cfg.decay_rate};
}

}  // namespace

struct hydro_model {
    hydrodyn::dynamic::CalibratedModel core;
};

struct hydro_decay_trace {
    hydrodyn::emission::DecayTrace core;
};

extern "C" {

const char* hydro_status_message(hydro_status status) {
    switch (status) {
        case HYDRO_OK: return "ok";
        case HYDRO_ERR_NULL_POINTER: return "null pointer argument";
        case HYDRO_ERR_INVALID_ARGUMENT: return "invalid argument";
        case HYDRO_ERR_DOMAIN: return "coordinate outside the allowed domain";
        case HYDRO_ERR_SINGULAR_TIME: return "time lies in the cosine guard band";
        case HYDRO_ERR_NEGATIVE_RADICAND: return "no real velocity (negative radicand)";
        case HYDRO_ERR_NO_CONVERGENCE: return "integrator did not converge";
        case HYDRO_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

hydro_status hydro_constants_get(hydro_constants* out) {
    if (!out) return HYDRO_ERR_NULL_POINTER;
    const auto& k = consts();
    *out = hydro_constants{k.hbar, k.h,   k.m_e, k.m_p,     k.e,
                           k.eps0, k.k_b, k.c,   k.gamma_g, k.ev};
    return HYDRO_OK;
}

hydro_status hydro_gaussian_charge_squared(double* out) {
    if (!out) return HYDRO_ERR_NULL_POINTER;
    return guarded([&] { *out = hydrodyn::gaussian_charge_squared(consts()); });
}

hydro_status hydro_energy_convert(double x, hydro_energy_direction direction, double* out) {
    if (!out) return HYDRO_ERR_NULL_POINTER;
    if (direction != HYDRO_EV_TO_JOULE && direction != HYDRO_JOULE_TO_EV)
        return HYDRO_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = hydrodyn::energy_convert(x,
                                        direction == HYDRO_EV_TO_JOULE
                                            ? hydrodyn::EnergyDirection::ev_to_joule
                                            : hydrodyn::EnergyDirection::joule_to_ev,
                                        consts());
    });
}

hydro_status hydro_model_create(double e0_ev, hydro_model** out) {
    if (!out) return HYDRO_ERR_NULL_POINTER;
    *out = nullptr;
    return guarded([&] {
        *out = new hydro_model{hydrodyn::dynamic::calibrate(e0_ev, consts())};
    });
}

void hydro_model_destroy(hydro_model* model) { delete model; }

hydro_status hydro_model_calibration(const hydro_model* model, hydro_calibration* out) {
    if (!model || !out) return HYDRO_ERR_NULL_POINTER;
    const auto& m = model->core;
    *out = hydro_calibration{m.e0, m.v0, m.r0, m.nu0, m.omega0, m.tau0, m.rho_el0};
    return HYDRO_OK;
}

hydro_status hydro_radial_mode_get(const hydro_model* model, int n, hydro_radial_mode* out) {
    if (!model || !out) return HYDRO_ERR_NULL_POINTER;
    return guarded([&] {
        const auto mode = hydrodyn::dynamic::radial_mode(model->core, n, consts());
        *out = hydro_radial_mode{mode.n,      mode.u_n,      mode.k_n,
                                 mode.lambda_n, mode.nu_n,     mode.w_total,
                                 mode.w_kinetic, mode.w_interaction};
    });
}

hydro_status hydro_density(const hydro_model* model, int n, double r, double* out) {
    if (!model || !out) return HYDRO_ERR_NULL_POINTER;
    return guarded([&] { *out = hydrodyn::dynamic::density_profile(model->core, n, r); });
}

hydro_status hydro_momentum(const hydro_model* model, int n, double r, double t, double* out) {
    if (!model || !out) return HYDRO_ERR_NULL_POINTER;
    return guarded([&] { *out = hydrodyn::dynamic::momentum_field(model->core, n, r, t); });
}

hydro_status hydro_potential_balance(const hydro_model* model, int n, double r, double t,
                                     hydro_field_sample* out) {
    if (!model || !out) return HYDRO_ERR_NULL_POINTER;
    return guarded([&] {
        const auto f = hydrodyn::dynamic::potential_balance(model->core, n, r, t, consts());
        *out = hydro_field_sample{f.r,         f.t,          f.p_r,         f.phi_total,
                                  f.phi_photon, f.phi_intrinsic, f.phi_external};
    });
}

hydro_status hydro_retarded_time(double t, double r, double r_nuc, hydro_retarded_branch branch,
                                 double* out) {
    if (!out) return HYDRO_ERR_NULL_POINTER;
    if (branch != HYDRO_RETARDED_INWARD && branch != HYDRO_RETARDED_OUTWARD)
        return HYDRO_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = hydrodyn::dynamic::retarded_time(t, r, r_nuc, consts(),
                                                branch == HYDRO_RETARDED_INWARD
                                                    ? hydrodyn::dynamic::RetardedBranch::inward
                                                    : hydrodyn::dynamic::RetardedBranch::outward);
    });
}

hydro_status hydro_nuclear_model_make(const hydro_model* model, int n, double r_nuc,
                                      hydro_nuclear_model* out) {
    if (!model || !out) return HYDRO_ERR_NULL_POINTER;
    return guarded([&] {
        const double radius = r_nuc > 0.0 ? r_nuc : hydrodyn::dynamic::kDefaultNuclearRadius;
        const auto nuc = hydrodyn::dynamic::make_nuclear_model(model->core, n, consts(), radius);
        *out = hydro_nuclear_model{nuc.r_nuc, nuc.rho_nuc0, nuc.coupling_ratio, nuc.amplitude,
                                   nuc.kappa};
    });
}

hydro_status hydro_nuclear_motion(const hydro_model* model, int n,
                                  const hydro_nuclear_model* nuclear, double t, double* u_nuc,
                                  double* radius) {
    if (!model || !nuclear || !u_nuc || !radius) return HYDRO_ERR_NULL_POINTER;
    return guarded([&] {
        const hydrodyn::dynamic::NuclearModel nuc{nuclear->r_nuc, nuclear->rho_nuc0,
                                                  nuclear->coupling_ratio, nuclear->amplitude,
                                                  nuclear->kappa};
        const auto st = hydrodyn::dynamic::nuclear_motion(model->core, n, nuc, t);
        *u_nuc = st.u_nuc;
        *radius = st.radius;
    });
}

hydro_status hydro_nuclear_field_intensity(const hydro_model* model, double* out) {
    if (!model || !out) return HYDRO_ERR_NULL_POINTER;
    return guarded(
        [&] { *out = hydrodyn::dynamic::nuclear_field_intensity(model->core, consts()); });
}

hydro_status hydro_nuclear_radius_estimate(const hydro_model* model, hydro_coupling coupling,
                                           double* k_constant, double* radius) {
    if (!model || !k_constant || !radius) return HYDRO_ERR_NULL_POINTER;
    if (coupling != HYDRO_COUPLING_ELECTROSTATIC && coupling != HYDRO_COUPLING_GRAVITATIONAL)
        return HYDRO_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const auto est = hydrodyn::dynamic::nuclear_radius_estimate(
            model->core,
            coupling == HYDRO_COUPLING_ELECTROSTATIC
                ? hydrodyn::dynamic::Coupling::electrostatic
                : hydrodyn::dynamic::Coupling::gravitational,
            consts());
        *k_constant = est.k_constant;
        *radius = est.radius;
    });
}

hydro_status hydro_bulk_volume(const hydro_model* model, hydro_phase phase, double mass_g,
                               hydro_bulk_report* out) {
    if (!model || !out) return HYDRO_ERR_NULL_POINTER;
    if (phase != HYDRO_PHASE_GAS && phase != HYDRO_PHASE_LIQUID)
        return HYDRO_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const auto rep = hydrodyn::dynamic::bulk_volume_check(
            model->core,
            phase == HYDRO_PHASE_GAS ? hydrodyn::dynamic::Phase::gas
                                     : hydrodyn::dynamic::Phase::liquid,
            mass_g, consts());
        *out = hydro_bulk_report{rep.atom_count, rep.occupied_volume_l, rep.reference_volume_l,
                                 rep.ratio_to_reference};
    });
}

hydro_status hydro_bohr_radius(double* out) {
    if (!out) return HYDRO_ERR_NULL_POINTER;
    return guarded([&] { *out = hydrodyn::schrodinger::bohr_radius(consts()); });
}

hydro_status hydro_energy_level(int n, double* out) {
    if (!out) return HYDRO_ERR_NULL_POINTER;
    return guarded([&] { *out = hydrodyn::schrodinger::energy_level(n, consts()); });
}

hydro_status hydro_radial_series(int n_prime, int l, double x, double* out) {
    if (!out) return HYDRO_ERR_NULL_POINTER;
    return guarded([&] { *out = hydrodyn::schrodinger::radial_series(n_prime, l, x); });
}

hydro_status hydro_wavefunction(int state_label, double r, double theta, double t,
                                double* out_re, double* out_im) {
    if (!out_re || !out_im) return HYDRO_ERR_NULL_POINTER;
    return guarded([&] {
        const auto state = hydrodyn::schrodinger::bound_state_from_label(state_label);
        const auto amp = hydrodyn::schrodinger::eval_wavefunction(state, r, theta, t, consts());
        *out_re = amp.real();
        *out_im = amp.imag();
    });
}

hydro_status hydro_local_frequency(double r, hydro_frequency_variant variant, double* out) {
    if (!out) return HYDRO_ERR_NULL_POINTER;
    hydrodyn::schrodinger::FrequencyVariant v;
    if (const auto st = to_variant(variant, &v); st != HYDRO_OK) return st;
    return guarded([&] { *out = hydrodyn::schrodinger::local_frequency(r, v, consts()); });
}

hydro_status hydro_frequency_zero_radius(hydro_frequency_variant variant, double* out) {
    if (!out) return HYDRO_ERR_NULL_POINTER;
    hydrodyn::schrodinger::FrequencyVariant v;
    if (const auto st = to_variant(variant, &v); st != HYDRO_OK) return st;
    return guarded([&] { *out = hydrodyn::schrodinger::frequency_zero_radius(v, consts()); });
}

hydro_status hydro_emission_line_get(const hydro_model* model, int n, int m,
                                     hydro_emission_line* out) {
    if (!model || !out) return HYDRO_ERR_NULL_POINTER;
    return guarded([&] {
        const auto line = hydrodyn::emission::line_frequency(model->core, n, m, consts());
        *out = hydro_emission_line{line.lower, line.upper, line.frequency, line.energy,
                                   line.wavelength};
    });
}

hydro_status hydro_emission_prefactor(const hydro_model* model, double* out) {
    if (!model || !out) return HYDRO_ERR_NULL_POINTER;
    return guarded(
        [&] { *out = hydrodyn::emission::emission_prefactor(model->core, consts()); });
}

hydro_status hydro_energy_difference(const hydro_model* model, int n, int m, double* out) {
    if (!model || !out) return HYDRO_ERR_NULL_POINTER;
    return guarded(
        [&] { *out = hydrodyn::emission::energy_difference(model->core, n, m, consts()); });
}

hydro_status hydro_decay_config_make(int n, int m, double tau_eps, hydro_decay_config* out) {
    if (!out) return HYDRO_ERR_NULL_POINTER;
    return guarded([&] {
        const auto cfg = hydrodyn::emission::decay_config(n, m, tau_eps);
        *out = hydro_decay_config{cfg.n, cfg.m, cfg.tau_eps, cfg.decay_rate};
    });
}

hydro_status hydro_analytic_velocity_sq(const hydro_model* model,
                                        const hydro_decay_config* config, double t,
                                        double probe_r, double* out) {
    if (!model || !config || !out) return HYDRO_ERR_NULL_POINTER;
    return guarded([&] {
        *out = hydrodyn::emission::analytic_velocity_sq(model->core, to_core(*config), t,
                                                        probe_r);
    });
}

hydro_status hydro_velocity_sq_product(const hydro_model* model,
                                       const hydro_decay_config* config, double t, double* out) {
    if (!model || !config || !out) return HYDRO_ERR_NULL_POINTER;
    return guarded([&] {
        *out = hydrodyn::emission::velocity_sq_product(model->core, to_core(*config), t);
    });
}

hydro_status hydro_photon_rate(const hydro_model* model, const hydro_decay_config* config,
                               double probe_r, double* out) {
    if (!model || !config || !out) return HYDRO_ERR_NULL_POINTER;
    return guarded([&] {
        *out = hydrodyn::emission::photon_rate(model->core, to_core(*config), probe_r);
    });
}

hydro_status hydro_emission_potential(const hydro_model* model, const hydro_decay_config* config,
                                      double x, double probe_r, double* out) {
    if (!model || !config || !out) return HYDRO_ERR_NULL_POINTER;
    return guarded([&] {
        *out = hydrodyn::emission::emission_potential_profile(model->core, to_core(*config), x,
                                                              probe_r);
    });
}

hydro_status hydro_emission_interval_ratio(int n, int m1, int m2, double* out) {
    if (!out) return HYDRO_ERR_NULL_POINTER;
    return guarded([&] { *out = hydrodyn::emission::emission_interval_ratio(n, m1, m2); });
}

hydro_status hydro_decay_trace_run(const hydro_model* model, const hydro_decay_config* config,
                                   double probe_r, long steps, hydro_decay_trace** out) {
    if (!model || !config || !out) return HYDRO_ERR_NULL_POINTER;
    *out = nullptr;
    return guarded([&] {
        auto trace = hydrodyn::emission::numeric_decay_oracle(model->core, to_core(*config),
                                                              probe_r, steps);
        *out = new hydro_decay_trace{std::move(trace)};
    });
}

void hydro_decay_trace_destroy(hydro_decay_trace* trace) { delete trace; }

size_t hydro_decay_trace_size(const hydro_decay_trace* trace) {
    return trace ? trace->core.times.size() : 0;
}

const double* hydro_decay_trace_times(const hydro_decay_trace* trace) {
    return trace ? trace->core.times.data() : nullptr;
}

const double* hydro_decay_trace_u_squared(const hydro_decay_trace* trace) {
    return trace ? trace->core.u_squared.data() : nullptr;
}

const double* hydro_decay_trace_phi_el(const hydro_decay_trace* trace) {
    return trace ? trace->core.phi_el.data() : nullptr;
}

const double* hydro_decay_trace_phi_nuc(const hydro_decay_trace* trace) {
    return trace ? trace->core.phi_nuc.data() : nullptr;
}

double hydro_decay_trace_photon_rate(const hydro_decay_trace* trace) {
    return trace ? trace->core.photon_rate : 0.0;
}

double hydro_decay_trace_endpoint_residual(const hydro_decay_trace* trace) {
    return trace ? trace->core.endpoint_residual : 0.0;
}

hydro_status hydro_excitation_probability(const hydro_model* model, int n, double temperature_k,
                                          double* out) {
    if (!model || !out) return HYDRO_ERR_NULL_POINTER;
    return guarded([&] {
        *out = hydrodyn::thermo::excitation_probability(model->core, n, temperature_k, consts());
    });
}

hydro_status hydro_transition_band(const hydro_model* model, double temperature_k, double lo,
                                   double hi, int* n_lo, int* n_hi) {
    if (!model || !n_lo || !n_hi) return HYDRO_ERR_NULL_POINTER;
    return guarded([&] {
        const auto band =
            hydrodyn::thermo::transition_band(model->core, temperature_k, lo, hi, consts());
        *n_lo = band.n_lo;
        *n_hi = band.n_hi;
    });
}

} /* extern "C" */
