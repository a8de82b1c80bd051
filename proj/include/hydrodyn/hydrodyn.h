/* hydrodyn - dual-model hydrogen calculator.
 *
 * C interface of the shared library. All functions return a hydro_status;
 * results are written through out-parameters. Handles created by *_create /
 * *_run functions are owned by the caller and released with the matching
 * *_destroy. All numeric values are SI unless a name says otherwise.
 *
 * Thread safety: models and traces are immutable after creation; concurrent
 * reads are safe. Creation/destruction of distinct objects may run
 * concurrently.
 */

#ifndef HYDRODYN_H
#define HYDRODYN_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(HYDRODYN_BUILD)
#define HYDRO_API __declspec(dllexport)
#else
#define HYDRO_API __declspec(dllimport)
#endif
#else
#define HYDRO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hydro_status {
    HYDRO_OK = 0,
    HYDRO_ERR_NULL_POINTER = 1,
    HYDRO_ERR_INVALID_ARGUMENT = 2,  /* precondition violated */
    HYDRO_ERR_DOMAIN = 3,            /* coordinate outside the allowed range */
    HYDRO_ERR_SINGULAR_TIME = 4,     /* inside the cos(omega0 t) guard band */
    HYDRO_ERR_NEGATIVE_RADICAND = 5, /* no real velocity at this time */
    HYDRO_ERR_NO_CONVERGENCE = 6,    /* integrator failed its endpoint check */
    HYDRO_ERR_INTERNAL = 7
} hydro_status;

/* Static description of a status code; never NULL. */
HYDRO_API const char* hydro_status_message(hydro_status status);

/* ------------------------------------------------------------------ */
/* Constants and unit conversion                                       */

typedef struct hydro_constants {
    double hbar;    /* J s */
    double h;       /* J s */
    double m_e;     /* kg */
    double m_p;     /* kg */
    double e;       /* C */
    double eps0;    /* C^2/(J m) */
    double k_b;     /* J/K */
    double c;       /* m/s */
    double gamma_g; /* m^3/(kg s^2) */
    double ev;      /* J */
} hydro_constants;

HYDRO_API hydro_status hydro_constants_get(hydro_constants* out);

/* e^2/(4 pi eps0) [J m] */
HYDRO_API hydro_status hydro_gaussian_charge_squared(double* out);

typedef enum hydro_energy_direction {
    HYDRO_EV_TO_JOULE = 0,
    HYDRO_JOULE_TO_EV = 1
} hydro_energy_direction;

HYDRO_API hydro_status hydro_energy_convert(double x, hydro_energy_direction direction,
                                            double* out);

/* ------------------------------------------------------------------ */
/* Calibrated dynamic model                                            */

typedef struct hydro_model hydro_model; /* opaque */

/* e0_ev is the ionization energy magnitude in eV (> 0). */
HYDRO_API hydro_status hydro_model_create(double e0_ev, hydro_model** out);
HYDRO_API void hydro_model_destroy(hydro_model* model);

typedef struct hydro_calibration {
    double e0;      /* J, stored negative */
    double v0;      /* nu0*R0, m/s */
    double r0;      /* m */
    double nu0;     /* Hz */
    double omega0;  /* rad/s */
    double tau0;    /* s */
    double rho_el0; /* kg/m */
} hydro_calibration;

HYDRO_API hydro_status hydro_model_calibration(const hydro_model* model, hydro_calibration* out);

typedef struct hydro_radial_mode {
    int n;
    double u_n;           /* m/s */
    double k_n;           /* 1/m */
    double lambda_n;      /* m */
    double nu_n;          /* Hz */
    double w_total;       /* J */
    double w_kinetic;     /* J */
    double w_interaction; /* J */
} hydro_radial_mode;

HYDRO_API hydro_status hydro_radial_mode_get(const hydro_model* model, int n,
                                             hydro_radial_mode* out);

/* rho(r) [kg/m^3] on (0, R0] */
HYDRO_API hydro_status hydro_density(const hydro_model* model, int n, double r, double* out);

/* p(r,t) [kg/(m^2 s)] */
HYDRO_API hydro_status hydro_momentum(const hydro_model* model, int n, double r, double t,
                                      double* out);

typedef struct hydro_field_sample {
    double r;
    double t;
    double p_r;
    double phi_total;
    double phi_photon;
    double phi_intrinsic;
    double phi_external;
} hydro_field_sample;

HYDRO_API hydro_status hydro_potential_balance(const hydro_model* model, int n, double r,
                                               double t, hydro_field_sample* out);

typedef enum hydro_retarded_branch {
    HYDRO_RETARDED_INWARD = 0,
    HYDRO_RETARDED_OUTWARD = 1
} hydro_retarded_branch;

HYDRO_API hydro_status hydro_retarded_time(double t, double r, double r_nuc,
                                           hydro_retarded_branch branch, double* out);

typedef struct hydro_nuclear_model {
    double r_nuc;          /* m */
    double rho_nuc0;       /* kg/m */
    double coupling_ratio; /* dimensionless */
    double amplitude;      /* m */
    double kappa;          /* kg/(m^3 s^2) */
} hydro_nuclear_model;

/* Pass r_nuc <= 0 to use the default proton-radius scale 0.88e-15 m. */
HYDRO_API hydro_status hydro_nuclear_model_make(const hydro_model* model, int n, double r_nuc,
                                                hydro_nuclear_model* out);

HYDRO_API hydro_status hydro_nuclear_motion(const hydro_model* model, int n,
                                            const hydro_nuclear_model* nuclear, double t,
                                            double* u_nuc, double* radius);

/* (phi_N^0)^2 / R_N^3 [kg^2/(m s^2)] */
HYDRO_API hydro_status hydro_nuclear_field_intensity(const hydro_model* model, double* out);

typedef enum hydro_coupling {
    HYDRO_COUPLING_ELECTROSTATIC = 0,
    HYDRO_COUPLING_GRAVITATIONAL = 1
} hydro_coupling;

HYDRO_API hydro_status hydro_nuclear_radius_estimate(const hydro_model* model,
                                                     hydro_coupling coupling, double* k_constant,
                                                     double* radius);

typedef enum hydro_phase { HYDRO_PHASE_GAS = 0, HYDRO_PHASE_LIQUID = 1 } hydro_phase;

typedef struct hydro_bulk_report {
    double atom_count;
    double occupied_volume_l;
    double reference_volume_l;
    double ratio_to_reference;
} hydro_bulk_report;

HYDRO_API hydro_status hydro_bulk_volume(const hydro_model* model, hydro_phase phase,
                                         double mass_g, hydro_bulk_report* out);

/* ------------------------------------------------------------------ */
/* Standard-solution baseline                                          */

HYDRO_API hydro_status hydro_bohr_radius(double* out);

/* Standard level energy E_n [J] (negative). */
HYDRO_API hydro_status hydro_energy_level(int n, double* out);

HYDRO_API hydro_status hydro_radial_series(int n_prime, int l, double x, double* out);

/* state_label is 100, 200 or 210; writes Re/Im of the amplitude [m^-3/2]. */
HYDRO_API hydro_status hydro_wavefunction(int state_label, double r, double theta, double t,
                                          double* out_re, double* out_im);

typedef enum hydro_frequency_variant {
    HYDRO_FREQUENCY_FULL = 0,
    HYDRO_FREQUENCY_MECHANICAL = 1
} hydro_frequency_variant;

/* hbar*omega(r) [J] */
HYDRO_API hydro_status hydro_local_frequency(double r, hydro_frequency_variant variant,
                                             double* out);

HYDRO_API hydro_status hydro_frequency_zero_radius(hydro_frequency_variant variant, double* out);

/* ------------------------------------------------------------------ */
/* Emission                                                            */

typedef struct hydro_emission_line {
    int lower;
    int upper;
    double frequency;  /* Hz */
    double energy;     /* J */
    double wavelength; /* m */
} hydro_emission_line;

HYDRO_API hydro_status hydro_emission_line_get(const hydro_model* model, int n, int m,
                                               hydro_emission_line* out);

/* Series prefactor nu_em0 [Hz]. */
HYDRO_API hydro_status hydro_emission_prefactor(const hydro_model* model, double* out);

HYDRO_API hydro_status hydro_energy_difference(const hydro_model* model, int n, int m,
                                               double* out);

typedef struct hydro_decay_config {
    int n;
    int m;
    double tau_eps;    /* s */
    double decay_rate; /* 1/s */
} hydro_decay_config;

HYDRO_API hydro_status hydro_decay_config_make(int n, int m, double tau_eps,
                                               hydro_decay_config* out);

HYDRO_API hydro_status hydro_analytic_velocity_sq(const hydro_model* model,
                                                  const hydro_decay_config* config, double t,
                                                  double probe_r, double* out);

/* Smooth product u^2(t) cos^2(omega0 t); defined at every t in the interval. */
HYDRO_API hydro_status hydro_velocity_sq_product(const hydro_model* model,
                                                 const hydro_decay_config* config, double t,
                                                 double* out);

HYDRO_API hydro_status hydro_photon_rate(const hydro_model* model,
                                         const hydro_decay_config* config, double probe_r,
                                         double* out);

HYDRO_API hydro_status hydro_emission_potential(const hydro_model* model,
                                                const hydro_decay_config* config, double x,
                                                double probe_r, double* out);

HYDRO_API hydro_status hydro_emission_interval_ratio(int n, int m1, int m2, double* out);

typedef struct hydro_decay_trace hydro_decay_trace; /* opaque */

HYDRO_API hydro_status hydro_decay_trace_run(const hydro_model* model,
                                             const hydro_decay_config* config, double probe_r,
                                             long steps, hydro_decay_trace** out);
HYDRO_API void hydro_decay_trace_destroy(hydro_decay_trace* trace);

/* Number of grid points (steps actually used + 1). */
HYDRO_API size_t hydro_decay_trace_size(const hydro_decay_trace* trace);

/* Borrowed pointers, valid until the trace is destroyed. */
HYDRO_API const double* hydro_decay_trace_times(const hydro_decay_trace* trace);
HYDRO_API const double* hydro_decay_trace_u_squared(const hydro_decay_trace* trace);
HYDRO_API const double* hydro_decay_trace_phi_el(const hydro_decay_trace* trace);
HYDRO_API const double* hydro_decay_trace_phi_nuc(const hydro_decay_trace* trace);

HYDRO_API double hydro_decay_trace_photon_rate(const hydro_decay_trace* trace);

/* NaN when tau_eps is not an integer number of periods. */
HYDRO_API double hydro_decay_trace_endpoint_residual(const hydro_decay_trace* trace);

/* ------------------------------------------------------------------ */
/* Thermal statistics                                                  */

HYDRO_API hydro_status hydro_excitation_probability(const hydro_model* model, int n,
                                                    double temperature_k, double* out);

HYDRO_API hydro_status hydro_transition_band(const hydro_model* model, double temperature_k,
                                             double lo, double hi, int* n_lo, int* n_hi);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HYDRODYN_H */
