#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tbl/gcn.hpp"
#include "tbl/graph.hpp"
#include "tbl/matrix.hpp"
#include "tbl/measure.hpp"

namespace tbl {

enum class LossKind { absolute, squared_clipped, huber };

// Loss with a declared Lipschitz constant B_l in the sense
// |l(y,z) - l(y',z')| <= B_l * max(|y-y'|, |z-z'|); risks use its square root.
class LossSpec {
public:
    static LossSpec absolute();
    static LossSpec squared_clipped(double clip);
    static LossSpec huber(double threshold);

    double operator()(double y, double z) const;
    double lipschitz() const { return lipschitz_; }
    LossKind kind() const { return kind_; }
    const char* name() const;
    double parameter() const { return param_; }

    static LossSpec from_name(const std::string& name, double param = 1.0);

private:
    LossSpec(LossKind kind, double lipschitz, double param)
        : kind_(kind), lipschitz_(lipschitz), param_(param) {}

    LossKind kind_;
    double lipschitz_;
    double param_;
};

// One labelled-node prediction problem: a teacher network defines the labels
// Y_v on a fixed (graph, features) pair, nodes are sampled i.i.d. from
// node_measure, and hypotheses are scored by the square-rooted loss.
struct TransductiveTask {
    Graph graph;
    Matrix features;  // d_in x k
    GcnSpec teacher;
    DiscreteMeasure node_measure;
    LossSpec loss;
    int sample_size = 0;

    std::vector<double> labels() const;  // teacher outputs per node
};

double empirical_risk(const TransductiveTask& task, const GcnSpec& hypothesis,
                      std::span<const int> sample);
double true_risk(const TransductiveTask& task, const GcnSpec& hypothesis);

// Same risks evaluated from precomputed per-node outputs (used by the Monte
// Carlo loop, where network outputs are fixed across trials).
double empirical_risk_from_outputs(std::span<const double> outputs, std::span<const double> labels,
                                   const LossSpec& loss, std::span<const int> sample);
double true_risk_from_outputs(std::span<const double> outputs, std::span<const double> labels,
                              const LossSpec& loss, const DiscreteMeasure& node_measure);

// Uniform generalization-gap bound, all intermediate constants retained:
// bound = sqrt(2 B_l C) * (sqrt(diam_sum) * min(4 r1, 48 r2) + t_dev), with
// r2 and t_dev built from the same diam_sum. In fixed-graph mode diam_sum =
// diam(G) + diam(E_out); in common-noise mode diam_sum = 2 + D.
struct BoundReport {
    std::string mode;               // "t31", "c31", "t32", "c32"
    double lipschitz_const = 0.0;   // B or D
    double loss_lipschitz = 0.0;
    double diam_graph = 0.0;
    double diam_out = 0.0;
    double diam_sum = 0.0;
    double r1 = 0.0;
    double r2 = 0.0;
    double t_dev = 0.0;
    std::string min_branch;         // "4r1" or "48r2"
    double bound = 0.0;
    double delta = 0.0;
    double confidence = 0.0;        // 1 - delta (fixed graph) or 1 - 2 delta
    int k = 0;
    int n = 0;
};

// Fixed-graph bound with a caller-supplied class constant B.
BoundReport gap_bound_fixed_graph(int k, int n, double diam_graph, double diam_out,
                                  double loss_lipschitz, double B, double delta);

// Fixed-graph bound with B derived from the GCN class shape (mode "c31").
BoundReport gap_bound_gcn(const GcnSpec& spec, const Graph& g, int n, double diam_out,
                          double loss_lipschitz, double delta);

// Common-noise bound with D from the class shape, degree floor c_k and
// feature bound m_feat; valid for delta in (0, 1/2), confidence 1 - 2 delta.
BoundReport gap_bound_common_noise(const GcnSpec& spec, int k, int n, double c_k, double m_feat,
                                   double loss_lipschitz, double delta);

// Exact output range of a set of networks on fixed inputs; the default
// diam(E_out) for fixed-graph bounds.
double output_range(const std::vector<const GcnSpec*>& networks, const Graph& g,
                    const Matrix& features);

struct CoverageResult {
    double coverage = 0.0;           // fraction of trials with max pool gap <= bound
    double bound = 0.0;
    std::vector<double> max_gaps;    // one per trial
};

// Monte Carlo falsification harness: draws `trials` node samples of size
// task.sample_size and checks that the worst |true - empirical| risk over
// the finite hypothesis pool stays below the bound. The pool approximates
// the full class from below, so violations falsify the bound while passes
// are a necessary-condition check only.
CoverageResult validate_bound_montecarlo(const TransductiveTask& task,
                                         const std::vector<GcnSpec>& pool, double bound,
                                         int trials, std::uint64_t seed);

}  // namespace tbl
