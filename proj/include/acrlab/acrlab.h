/* Copyright (C) 2026 acrlab contributors */
/* SPDX-License-Identifier: Apache-2.0 */
#ifndef ACRLAB_ACRLAB_H
#define ACRLAB_ACRLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(ACRLAB_BUILDING)
#define ACRLAB_API __attribute__((visibility("default")))
#else
#define ACRLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum acrlab_status {
  ACRLAB_OK = 0,
  ACRLAB_ERR_PARSE = 1,
  ACRLAB_ERR_DOMAIN = 2,
  ACRLAB_ERR_ARGUMENT = 3,
  ACRLAB_ERR_NUMERIC = 4,
  ACRLAB_ERR_INTERNAL = 5
} acrlab_status;

typedef struct acrlab_network acrlab_network;
typedef struct acrlab_report acrlab_report;

/* Message of the last failed call on this thread; never NULL. */
ACRLAB_API const char* acrlab_last_error(void);
/* Frees strings returned through char** out-parameters. */
ACRLAB_API void acrlab_string_free(char* s);
ACRLAB_API const char* acrlab_version(void);

/* Networks */
ACRLAB_API acrlab_status acrlab_network_parse(const char* text, acrlab_network** out);
ACRLAB_API acrlab_status acrlab_network_from_json(const char* json, acrlab_network** out);
ACRLAB_API void acrlab_network_free(acrlab_network* net);
ACRLAB_API size_t acrlab_network_species_count(const acrlab_network* net);
ACRLAB_API size_t acrlab_network_reaction_count(const acrlab_network* net);
/* Borrowed pointer, valid while the network lives. NULL when out of range. */
ACRLAB_API const char* acrlab_network_species_name(const acrlab_network* net, size_t index);
/* Copy of the network with rate constants replaced; n must equal the reaction count. */
ACRLAB_API acrlab_status acrlab_network_with_rates(const acrlab_network* net, const double* rates, size_t n,
                                                   acrlab_network** out);
ACRLAB_API acrlab_status acrlab_network_to_json(const acrlab_network* net, char** out);
ACRLAB_API acrlab_status acrlab_network_to_text(const acrlab_network* net, char** out);

/* Classification */
typedef struct acrlab_form {
  int static_acr;
  int strong_static;
  int weak_dynamic;
  int dynamic;
} acrlab_form;

ACRLAB_API acrlab_status acrlab_classify(const acrlab_network* net, acrlab_report** out);
ACRLAB_API void acrlab_report_free(acrlab_report* report);
ACRLAB_API acrlab_form acrlab_report_form(const acrlab_report* report);
/* -1 when no species carries an ACR flag. */
ACRLAB_API long acrlab_report_acr_species(const acrlab_report* report);
/* ACRLAB_ERR_DOMAIN when the report has no ACR value. */
ACRLAB_API acrlab_status acrlab_report_acr_value(const acrlab_report* report, double* out);
/* Borrowed strings, valid while the report lives. */
ACRLAB_API const char* acrlab_report_basin(const acrlab_report* report);
ACRLAB_API const char* acrlab_report_width(const acrlab_report* report);
ACRLAB_API size_t acrlab_report_lattice_violations(const acrlab_report* report);
ACRLAB_API acrlab_status acrlab_report_to_json(const acrlab_report* report, char** out);

/* Atlas */
typedef enum acrlab_atlas_set { ACRLAB_ATLAS_STATIC = 0, ACRLAB_ATLAS_WEAK = 1, ACRLAB_ATLAS_ALL = 2 } acrlab_atlas_set;
typedef enum acrlab_format { ACRLAB_FORMAT_JSON = 0, ACRLAB_FORMAT_CSV = 1, ACRLAB_FORMAT_SVG = 2 } acrlab_format;

ACRLAB_API acrlab_status acrlab_atlas(acrlab_atlas_set set, acrlab_format format, char** out);

/* Simulation */
typedef struct acrlab_sim_config {
  double abs_tol;
  double rel_tol;
  double boundary_eps;
  double blowup_bound;
  double t_max;
  double convergence_tol;
  double dwell;
  double steady_tol;
  uint64_t seed;
  int rescale;
} acrlab_sim_config;

ACRLAB_API acrlab_sim_config acrlab_sim_config_default(void);
/* Defaults used for verification campaigns: rescaled time, long horizon. */
ACRLAB_API acrlab_sim_config acrlab_sim_config_verification(void);

/* Integrates from x0. target_species < 0 uses the classified hyperplane when
   there is one. Either output may be NULL. */
ACRLAB_API acrlab_status acrlab_simulate(const acrlab_network* net, const double* x0, size_t n,
                                         const acrlab_sim_config* cfg, long target_species, double target_value,
                                         char** csv, char** summary_json);
ACRLAB_API acrlab_status acrlab_verify_json(const acrlab_network* net, size_t samples, const acrlab_sim_config* cfg,
                                            char** out);
/* Grid of verdicts over [lo, hi]^n. target_value NAN uses the classified
   hyperplane. format is CSV or SVG. */
ACRLAB_API acrlab_status acrlab_basin_map(const acrlab_network* net, size_t grid, double lo, double hi,
                                          size_t target_species, double target_value, const acrlab_sim_config* cfg,
                                          acrlab_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
