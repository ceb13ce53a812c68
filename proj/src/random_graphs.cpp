#include "tbl/random_graphs.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tbl/errors.hpp"
#include "tbl/parallel.hpp"
#include "tbl/rng.hpp"

namespace tbl {

namespace {

double logk(int k, bool base2) {
    return base2 ? std::log2(static_cast<double>(k)) : std::log(static_cast<double>(k));
}

// Adjacency rows as packed bit words; fast common-neighbour tests.
struct BitAdjacency {
    int k = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> bits;

    explicit BitAdjacency(const Graph& g)
        : k(g.vertex_count()), words((g.vertex_count() + 63) / 64),
          bits(static_cast<std::size_t>(g.vertex_count()) * words, 0) {
        for (const auto& [u, v] : g.edges()) {
            bits[u * words + v / 64] |= 1ULL << (v % 64);
            bits[v * words + u / 64] |= 1ULL << (u % 64);
        }
    }

    bool adjacent(int u, int v) const { return bits[u * words + v / 64] >> (v % 64) & 1ULL; }

    bool share_neighbour(int u, int v) const {
        const std::uint64_t* a = &bits[u * words];
        const std::uint64_t* b = &bits[v * words];
        for (std::size_t w = 0; w < words; ++w)
            if (a[w] & b[w]) return true;
        return false;
    }
};

bool diameter_le_2(const BitAdjacency& adj) {
    for (int i = 0; i < adj.k; ++i)
        for (int j = i + 1; j < adj.k; ++j)
            if (!adj.adjacent(i, j) && !adj.share_neighbour(i, j)) return false;
    return true;
}

}  // namespace

ErdosRenyiSpec ErdosRenyiSpec::direct(int k, double p) {
    if (k < 1 || !(p >= 0.0 && p <= 1.0))
        throw DomainError(errc::bad_params, "need k >= 1 and p in [0, 1]");
    ErdosRenyiSpec s;
    s.k = k;
    s.p = p;
    return s;
}

ErdosRenyiSpec ErdosRenyiSpec::derived(int k, double C, bool log_base2) {
    if (k < 3 || !(C > 2.0))
        throw DomainError(errc::bad_params, "derived mode needs k >= 3 and C > 2");
    const double p = std::sqrt(C * logk(k, log_base2) / k);
    if (!(p > 0.0 && p <= 1.0))
        throw DomainError(errc::bad_params, "derived p(k) leaves (0, 1]; k too small for this C");
    ErdosRenyiSpec s;
    s.k = k;
    s.p = p;
    s.C = C;
    s.log_base2 = log_base2;
    return s;
}

Graph sample_er(const ErdosRenyiSpec& spec, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < spec.k; ++i)
        for (int j = i + 1; j < spec.k; ++j)
            if (rng.bernoulli(spec.p)) edges.emplace_back(i, j);
    return Graph(spec.k, std::move(edges));
}

AdmissibilityVerdict check_admissible(const Graph& g, double c_k) {
    AdmissibilityVerdict verdict;
    verdict.c_k = c_k;
    const BitAdjacency adj(g);
    verdict.diam_le_2 = g.vertex_count() >= 2 ? diameter_le_2(adj) : true;
    verdict.deg_min = degree_stats(g).deg_min;
    verdict.admissible = verdict.diam_le_2 && verdict.deg_min >= c_k;
    std::ostringstream d;
    d << "diam_le_2=" << (verdict.diam_le_2 ? "yes" : "no") << " deg_min=" << verdict.deg_min
      << " c_k=" << c_k;
    verdict.details = d.str();
    return verdict;
}

ErEventBounds er_event_bounds(int k, double C, double delta, bool log_base2) {
    if (k < 3 || !(C > 2.0) || !(delta > 0.0))
        throw DomainError(errc::bad_params, "need k >= 3, C > 2, delta > 0");
    ErEventBounds b;
    const double kl = static_cast<double>(k) * logk(k, log_base2);
    const double mean_scale = std::sqrt(C * kl);
    b.degree_lo = 0.5 * std::sqrt(C) * (1.0 - delta) * std::sqrt(kl);
    b.degree_hi = std::sqrt(C) * (1.0 + delta) * std::sqrt(kl);

    const double tail_hi = k * std::exp(-mean_scale * delta * delta / (2.0 + delta));
    const double tail_lo = k * std::exp(-mean_scale * delta * delta / 2.0);
    b.p_degree_event = std::clamp(1.0 - tail_hi - tail_lo, 0.0, 1.0);
    b.p_degree_single_exponent = std::clamp(
        1.0 - 2.0 * k * std::exp(-C * k * std::sqrt(logk(k, log_base2)) * delta * delta / 2.0),
        0.0, 1.0);
    b.p_diam_event = std::clamp(
        1.0 - static_cast<double>(k) * k * std::exp(-C * (k - 2) * logk(k, log_base2) / k), 0.0,
        1.0);
    return b;
}

double default_degree_floor(int k, double C, double delta, bool log_base2) {
    return 0.5 * std::sqrt(C) * (1.0 - delta) *
           std::sqrt(static_cast<double>(k) * logk(k, log_base2));
}

ErEventStudy er_event_study(const ErdosRenyiSpec& spec, double delta, double c_k, int samples,
                            std::uint64_t seed) {
    if (samples < 1) throw DomainError(errc::bad_params, "samples must be >= 1");
    if (spec.C <= 2.0)
        throw DomainError(errc::bad_params, "event study needs the derived-mode model (C > 2)");

    ErEventStudy study;
    study.c_k = c_k;
    study.bounds = er_event_bounds(spec.k, spec.C, delta, spec.log_base2);
    study.rows.assign(samples, {});

    const long long complete_edges =
        static_cast<long long>(spec.k) * (spec.k - 1) / 2;
    parallel_for(static_cast<std::size_t>(samples), [&](std::size_t i) {
        const Graph g = sample_er(spec, mix_seed(seed, i));
        const auto verdict = check_admissible(g, c_k);
        const auto stats = degree_stats(g);
        ErSampleRow row;
        row.index = static_cast<int>(i);
        row.diam = !verdict.diam_le_2 ? ">2" : (g.edge_count() == complete_edges ? "1" : "2");
        row.deg_min = stats.deg_min;
        row.deg_max = stats.deg_max;
        row.in_degree_window = stats.deg_min >= study.bounds.degree_lo &&
                               stats.deg_max <= study.bounds.degree_hi;
        row.admissible = verdict.admissible;
        study.rows[i] = row;
    });

    int diam_ok = 0, window_ok = 0, admissible_ok = 0;
    for (const auto& row : study.rows) {
        if (row.diam != ">2") ++diam_ok;
        if (row.in_degree_window) ++window_ok;
        if (row.admissible) ++admissible_ok;
    }
    study.freq_diam = static_cast<double>(diam_ok) / samples;
    study.freq_degree_window = static_cast<double>(window_ok) / samples;
    study.freq_admissible = static_cast<double>(admissible_ok) / samples;
    return study;
}

std::string er_study_csv(const ErEventStudy& study) {
    std::ostringstream out;
    out << "sample,diam,deg_min,deg_max,in_degree_window,admissible\n";
    for (const auto& r : study.rows)
        out << r.index << ',' << r.diam << ',' << r.deg_min << ',' << r.deg_max << ','
            << (r.in_degree_window ? 1 : 0) << ',' << (r.admissible ? 1 : 0) << "\n";
    return out.str();
}

}  // namespace tbl
