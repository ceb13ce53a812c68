#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tbl/graph.hpp"

namespace tbl {

// Edge-probability model on k vertices. Derived mode follows the dense
// small-world regime p(k) = sqrt(C log(k) / k) with C > 2; log is natural by
// default (a base-2 switch exists for sensitivity analysis only).
struct ErdosRenyiSpec {
    int k = 0;
    double p = 0.0;
    double C = 0.0;   // 0 when constructed directly from p
    bool log_base2 = false;

    static ErdosRenyiSpec direct(int k, double p);
    static ErdosRenyiSpec derived(int k, double C, bool log_base2 = false);
};

// One Bernoulli draw per unordered pair in canonical (i < j) order from the
// seeded stream, so realizations are bit-reproducible.
Graph sample_er(const ErdosRenyiSpec& spec, std::uint64_t seed);

struct AdmissibilityVerdict {
    bool diam_le_2 = false;
    int deg_min = 0;
    double c_k = 0.0;
    bool admissible = false;
    std::string details;
};

// Exact check: diameter at most 2 (every non-adjacent pair shares a
// neighbour) and minimum degree at least c_k.
AdmissibilityVerdict check_admissible(const Graph& g, double c_k);

// Analytic lower bounds on the probabilities of the degree window and the
// diameter event for the derived-mode model. The degree-event bound sums the
// two one-sided tail terms k exp(-sqrt(C k log k) delta^2 / (2 + delta)) and
// k exp(-sqrt(C k log k) delta^2 / 2); the looser single-exponent variant
// (with exponent sqrt(C) k sqrt(log k) delta^2 / 2 inside one 2k-term) is
// reported alongside because the two disagree and only the summed form is
// derivable from the tail bounds.
struct ErEventBounds {
    double p_degree_event = 0.0;
    double p_diam_event = 0.0;
    double degree_lo = 0.0;     // c1 (1-delta) sqrt(k log k), c1 = sqrt(C)/2
    double degree_hi = 0.0;     // c2 (1+delta) sqrt(k log k), c2 = sqrt(C)
    double p_degree_single_exponent = 0.0;
};

ErEventBounds er_event_bounds(int k, double C, double delta, bool log_base2 = false);

// Default admissibility floor c_k = (sqrt(C)/2)(1-delta) sqrt(k log k).
double default_degree_floor(int k, double C, double delta, bool log_base2 = false);

struct ErSampleRow {
    int index = 0;
    std::string diam;  // "1", "2", or ">2"
    int deg_min = 0;
    int deg_max = 0;
    bool in_degree_window = false;
    bool admissible = false;
};

struct ErEventStudy {
    double freq_diam = 0.0;
    double freq_degree_window = 0.0;
    double freq_admissible = 0.0;
    double c_k = 0.0;
    ErEventBounds bounds;
    std::vector<ErSampleRow> rows;
};

// Seeded Monte Carlo frequencies of the diameter event, the degree window,
// and joint admissibility, next to the analytic lower bounds.
ErEventStudy er_event_study(const ErdosRenyiSpec& spec, double delta, double c_k, int samples,
                            std::uint64_t seed);

std::string er_study_csv(const ErEventStudy& study);

}  // namespace tbl
