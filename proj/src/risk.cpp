#include "tbl/risk.hpp"

#include <algorithm>
#include <cmath>

#include "tbl/errors.hpp"
#include "tbl/metric.hpp"
#include "tbl/parallel.hpp"
#include "tbl/rng.hpp"

namespace tbl {

// The max-form modulus pays a factor 2: |l(y,z)-l(y',z')| can reach
// |y-y'| + |z-z'|, so the tight constant for |y-z| is 2.
LossSpec LossSpec::absolute() { return LossSpec(LossKind::absolute, 2.0, 0.0); }

LossSpec LossSpec::squared_clipped(double clip) {
    if (!(clip > 0.0)) throw DomainError(errc::bad_params, "clip must be positive");
    // slope of s -> min(s^2, clip) is at most 2 sqrt(clip); the max over the
    // two arguments contributes another factor of 2.
    return LossSpec(LossKind::squared_clipped, 4.0 * std::sqrt(clip), clip);
}

LossSpec LossSpec::huber(double threshold) {
    if (!(threshold > 0.0)) throw DomainError(errc::bad_params, "threshold must be positive");
    return LossSpec(LossKind::huber, 2.0 * threshold, threshold);
}

double LossSpec::operator()(double y, double z) const {
    const double d = std::abs(y - z);
    switch (kind_) {
        case LossKind::absolute: return d;
        case LossKind::squared_clipped: return std::min(d * d, param_);
        case LossKind::huber:
            return d <= param_ ? 0.5 * d * d : param_ * (d - 0.5 * param_);
    }
    return d;
}

const char* LossSpec::name() const {
    switch (kind_) {
        case LossKind::absolute: return "absolute";
        case LossKind::squared_clipped: return "squared_clipped";
        case LossKind::huber: return "huber";
    }
    return "?";
}

LossSpec LossSpec::from_name(const std::string& name, double param) {
    if (name == "absolute") return absolute();
    if (name == "squared_clipped") return squared_clipped(param);
    if (name == "huber") return huber(param);
    throw DomainError(errc::invalid_spec, "unknown loss '" + name + "'");
}

std::vector<double> TransductiveTask::labels() const {
    return gcn_forward(teacher, graph, features);
}

double empirical_risk_from_outputs(std::span<const double> outputs, std::span<const double> labels,
                                   const LossSpec& loss, std::span<const int> sample) {
    if (sample.empty()) throw DomainError(errc::empty_sample, "empty node sample");
    double total = 0.0;
    for (int v : sample) total += std::sqrt(loss(outputs[v], labels[v]));
    return total / static_cast<double>(sample.size());
}

double true_risk_from_outputs(std::span<const double> outputs, std::span<const double> labels,
                              const LossSpec& loss, const DiscreteMeasure& node_measure) {
    double total = 0.0;
    for (int v = 0; v < node_measure.size(); ++v)
        total += node_measure.weight(v) * std::sqrt(loss(outputs[v], labels[v]));
    return total;
}

double empirical_risk(const TransductiveTask& task, const GcnSpec& hypothesis,
                      std::span<const int> sample) {
    const auto outputs = gcn_forward(hypothesis, task.graph, task.features);
    const auto labels = task.labels();
    return empirical_risk_from_outputs(outputs, labels, task.loss, sample);
}

double true_risk(const TransductiveTask& task, const GcnSpec& hypothesis) {
    if (task.node_measure.size() != task.graph.vertex_count())
        throw DomainError(errc::marginal_mismatch, "node measure must cover all vertices");
    const auto outputs = gcn_forward(hypothesis, task.graph, task.features);
    const auto labels = task.labels();
    return true_risk_from_outputs(outputs, labels, task.loss, task.node_measure);
}

namespace {

BoundReport assemble(const std::string& mode, int k, int n, double diam_graph, double diam_out,
                     double diam_sum, double loss_lipschitz, double class_const, double delta,
                     double confidence) {
    if (k < 2 || n < 4) throw DomainError(errc::bad_params, "need k >= 2 and n >= 4");
    BoundReport r;
    r.mode = mode;
    r.k = k;
    r.n = n;
    r.lipschitz_const = class_const;
    r.loss_lipschitz = loss_lipschitz;
    r.diam_graph = diam_graph;
    r.diam_out = diam_out;
    r.diam_sum = diam_sum;
    r.delta = delta;
    r.confidence = confidence;
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    r.r1 = std::log2(static_cast<double>(n)) / sqrt_n;
    r.r2 = k * std::sqrt(diam_sum) / sqrt_n;
    r.t_dev = std::sqrt(3.0 * std::log2(2.0 / delta) * diam_sum) / sqrt_n;
    const double branch1 = 4.0 * r.r1;
    const double branch2 = 48.0 * r.r2;
    r.min_branch = branch1 <= branch2 ? "4r1" : "48r2";
    r.bound = std::sqrt(2.0 * loss_lipschitz * class_const) *
              (std::sqrt(diam_sum) * std::min(branch1, branch2) + r.t_dev);
    return r;
}

}  // namespace

BoundReport gap_bound_fixed_graph(int k, int n, double diam_graph, double diam_out,
                                  double loss_lipschitz, double B, double delta) {
    if (!(delta > 0.0 && delta < 1.0))
        throw DomainError(errc::bad_params, "delta must lie in (0, 1)");
    if (std::isinf(diam_graph)) throw DomainError(errc::disconnected, "graph diameter infinite");
    return assemble("t31", k, n, diam_graph, diam_out, diam_graph + diam_out, loss_lipschitz, B,
                    delta, 1.0 - delta);
}

BoundReport gap_bound_gcn(const GcnSpec& spec, const Graph& g, int n, double diam_out,
                          double loss_lipschitz, double delta) {
    const double diam_graph = shortest_path_metric(g).diameter();
    BoundReport r = gap_bound_fixed_graph(g.vertex_count(), n, diam_graph, diam_out,
                                          loss_lipschitz, lipschitz_B(spec, g, diam_out), delta);
    r.mode = "c31";
    return r;
}

BoundReport gap_bound_common_noise(const GcnSpec& spec, int k, int n, double c_k, double m_feat,
                                   double loss_lipschitz, double delta) {
    if (!(delta > 0.0 && delta < 0.5))
        throw DomainError(errc::bad_params, "delta must lie in (0, 1/2)");
    const double D = lipschitz_D(spec, k, c_k, m_feat);
    BoundReport r = assemble("t32", k, n, 2.0, D, 2.0 + D, loss_lipschitz, D, delta,
                             1.0 - 2.0 * delta);
    // diam_graph/diam_out here are the admissible-regime stand-ins (2 and D).
    return r;
}

double output_range(const std::vector<const GcnSpec*>& networks, const Graph& g,
                    const Matrix& features) {
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (const GcnSpec* spec : networks) {
        for (double v : gcn_forward(*spec, g, features)) {
            if (first) {
                lo = hi = v;
                first = false;
            } else {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        }
    }
    return hi - lo;
}

CoverageResult validate_bound_montecarlo(const TransductiveTask& task,
                                         const std::vector<GcnSpec>& pool, double bound,
                                         int trials, std::uint64_t seed) {
    if (pool.empty()) throw DomainError(errc::bad_params, "empty hypothesis pool");
    if (trials < 1) throw DomainError(errc::bad_params, "trials must be >= 1");
    if (task.sample_size < 1) throw DomainError(errc::bad_params, "sample size must be >= 1");
    if (task.node_measure.size() != task.graph.vertex_count())
        throw DomainError(errc::marginal_mismatch, "node measure must cover all vertices");

    const auto labels = task.labels();
    std::vector<std::vector<double>> outputs;
    std::vector<double> true_risks;
    outputs.reserve(pool.size());
    for (const auto& member : pool) {
        outputs.push_back(gcn_forward(member, task.graph, task.features));
        true_risks.push_back(
            true_risk_from_outputs(outputs.back(), labels, task.loss, task.node_measure));
    }

    CoverageResult result;
    result.bound = bound;
    result.max_gaps.assign(trials, 0.0);
    parallel_for(static_cast<std::size_t>(trials), [&](std::size_t trial) {
        Rng rng = Rng::substream(seed, trial);
        std::vector<int> sample(task.sample_size);
        for (int& v : sample)
            v = static_cast<int>(rng.discrete(task.node_measure.weights()));
        double worst = 0.0;
        for (std::size_t p = 0; p < pool.size(); ++p) {
            const double emp =
                empirical_risk_from_outputs(outputs[p], labels, task.loss, sample);
            worst = std::max(worst, std::abs(true_risks[p] - emp));
        }
        result.max_gaps[trial] = worst;
    });

    int covered = 0;
    for (double gap : result.max_gaps)
        if (gap <= bound) ++covered;
    result.coverage = static_cast<double>(covered) / trials;
    return result;
}

}  // namespace tbl
