#include "tbl/gcn.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tbl/errors.hpp"
#include "tbl/metric.hpp"
#include "tbl/rng.hpp"
#include "tbl/spectral.hpp"

namespace tbl {

using nlohmann::json;

Activation activation_from_name(const std::string& name) {
    if (name == "relu") return Activation::relu;
    if (name == "tanh") return Activation::tanh;
    if (name == "identity") return Activation::identity;
    if (name == "abs") return Activation::abs;
    throw DomainError(errc::invalid_spec, "unknown activation '" + name + "'");
}

const char* activation_name(Activation a) {
    switch (a) {
        case Activation::relu: return "relu";
        case Activation::tanh: return "tanh";
        case Activation::identity: return "identity";
        case Activation::abs: return "abs";
    }
    return "?";
}

namespace {

double apply_activation(Activation a, double x) {
    switch (a) {
        case Activation::relu: return x > 0.0 ? x : 0.0;
        case Activation::tanh: return std::tanh(x);
        case Activation::identity: return x;
        case Activation::abs: return std::abs(x);
    }
    return x;
}

}  // namespace

GcnSpec::GcnSpec(int hop_count, std::vector<int> dims, std::vector<Matrix> weights,
                 std::vector<double> betas, Activation activation)
    : hops_(hop_count),
      dims_(std::move(dims)),
      weights_(std::move(weights)),
      betas_(std::move(betas)),
      activation_(activation) {
    const int L = static_cast<int>(weights_.size());
    if (L < 1 || hops_ < 1) throw DomainError(errc::invalid_spec, "need L >= 1 and t >= 1");
    if (static_cast<int>(dims_.size()) != L + 1)
        throw DomainError(errc::invalid_spec, "dims must list d_0..d_L");
    if (dims_.back() != 1) throw DomainError(errc::invalid_spec, "output width d_L must be 1");
    if (static_cast<int>(betas_.size()) != L)
        throw DomainError(errc::invalid_spec, "one norm budget per layer required");
    for (int l = 0; l < L; ++l) {
        if (dims_[l] < 1) throw DomainError(errc::invalid_spec, "layer widths must be >= 1");
        if (weights_[l].rows() != dims_[l + 1] || weights_[l].cols() != dims_[l])
            throw DomainError(errc::shape_mismatch, "weight " + std::to_string(l + 1) +
                                                        " must map width d_" + std::to_string(l) +
                                                        " to d_" + std::to_string(l + 1));
        if (betas_[l] < 0.0) throw DomainError(errc::invalid_spec, "negative norm budget");
        if (operator_norm_rect(weights_[l]) > betas_[l] + 1e-9)
            throw DomainError(errc::invalid_spec,
                              "operator norm of weight " + std::to_string(l + 1) +
                                  " exceeds its budget");
    }
}

double GcnSpec::beta_product() const {
    double p = 1.0;
    for (double b : betas_) p *= b;
    return p;
}

GcnSpec GcnSpec::from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad GCN spec JSON: ") + e.what());
    }
    try {
        const int L = doc.at("L").get<int>();
        const int t = doc.at("t").get<int>();
        const auto dims = doc.at("dims").get<std::vector<int>>();
        const auto betas = doc.at("betas").get<std::vector<double>>();
        const auto act = activation_from_name(doc.at("activation").get<std::string>());
        const auto raw = doc.at("weights").get<std::vector<std::vector<double>>>();
        if (static_cast<int>(raw.size()) != L || static_cast<int>(dims.size()) != L + 1)
            throw ParseError("GCN spec: L, dims, and weights disagree");
        std::vector<Matrix> weights;
        weights.reserve(L);
        for (int l = 0; l < L; ++l) {
            const int rows = dims[l + 1], cols = dims[l];
            if (static_cast<int>(raw[l].size()) != rows * cols)
                throw ParseError("GCN spec: weight " + std::to_string(l + 1) +
                                 " has wrong entry count");
            Matrix w(rows, cols);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) w(i, j) = raw[l][static_cast<std::size_t>(i) * cols + j];
            weights.push_back(std::move(w));
        }
        return GcnSpec(t, dims, std::move(weights), betas, act);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad GCN spec JSON: ") + e.what());
    }
}

GcnSpec GcnSpec::load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open GCN spec: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

std::string GcnSpec::to_json_text() const {
    json doc;
    doc["L"] = layer_count();
    doc["t"] = hops_;
    doc["dims"] = dims_;
    doc["activation"] = activation_name(activation_);
    doc["betas"] = betas_;
    json rows = json::array();
    for (const auto& w : weights_) rows.push_back(w.data());
    doc["weights"] = rows;
    return doc.dump(2) + "\n";
}

std::vector<double> gcn_forward(const GcnSpec& spec, const Graph& g, const Matrix& features) {
    if (features.rows() != spec.input_dim() || features.cols() != g.vertex_count())
        throw DomainError(errc::shape_mismatch, "features must be d_in x k");
    const int L = spec.layer_count();

    Matrix h = features;
    if (L > 1) {
        const Matrix diffusion = matrix_power(normalized_laplacian(g), spec.hop_count());
        for (int l = 0; l < L - 1; ++l) {
            h = multiply(spec.weights()[l], multiply(h, diffusion));
            for (double& v : h.data()) v = apply_activation(spec.activation(), v);
        }
    }
    h = multiply(spec.weights()[L - 1], h);

    std::vector<double> out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) out[v] = h(0, v);
    return out;
}

double feature_lipschitz_bound(const GcnSpec& spec, const Graph& g) {
    const int k = g.vertex_count();
    if (k < 2) throw DomainError(errc::bad_params, "k >= 2 required");
    const auto stats = degree_stats(g);
    if (stats.deg_min < 1) throw DomainError(errc::isolated_vertex, "deg_min >= 1 required");
    const double base = 1.0 + std::sqrt(static_cast<double>(k - 1)) /
                                  std::sqrt(static_cast<double>(stats.deg_min));
    return std::sqrt(static_cast<double>(spec.input_dim())) *
           std::pow(base, static_cast<double>(spec.hop_count()) * spec.layer_count()) *
           spec.beta_product();
}

double lipschitz_B(const GcnSpec& spec, const Graph& g, double diam_out) {
    return std::max(feature_lipschitz_bound(spec, g), diam_out);
}

double lipschitz_D(const GcnSpec& spec, int k, double c_k, double m_feat) {
    if (!(c_k > 0.0) || m_feat < 0.5 || k < 2)
        throw DomainError(errc::bad_params, "need c_k > 0, m_feat >= 1/2, k >= 2");
    const double base = 1.0 + std::sqrt(static_cast<double>(k - 1)) / std::sqrt(c_k);
    return 2.0 * m_feat * std::sqrt(static_cast<double>(spec.input_dim())) *
           std::pow(base, static_cast<double>(spec.hop_count()) * spec.layer_count()) *
           spec.beta_product();
}

double lipschitz_D_degree_rule(const GcnSpec& spec, int k, double c_abs, double m_feat) {
    if (!(c_abs > 0.0) || m_feat < 0.5 || k < 3)
        throw DomainError(errc::bad_params, "need c > 0, m_feat >= 1/2, k >= 3");
    const double base =
        1.0 + std::sqrt(c_abs * (k - 1) / (k * std::log(static_cast<double>(k))));
    return 2.0 * m_feat * std::sqrt(static_cast<double>(spec.input_dim())) *
           std::pow(base, static_cast<double>(spec.hop_count()) * spec.layer_count()) *
           spec.beta_product();
}

double certify_feature_lipschitz(const GcnSpec& spec, const Graph& g, int trials,
                                 std::uint64_t seed, double m_feat) {
    if (trials < 1) throw DomainError(errc::bad_params, "trials must be >= 1");
    const int k = g.vertex_count();
    const int d = spec.input_dim();
    Rng rng(seed);
    double worst = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        Matrix x(d, k), y(d, k);
        for (double& v : x.data()) v = rng.uniform(-m_feat, m_feat);
        for (double& v : y.data()) v = rng.uniform(-m_feat, m_feat);
        const double denom = max_abs_diff(x, y);
        if (denom == 0.0) continue;
        const auto fx = gcn_forward(spec, g, x);
        const auto fy = gcn_forward(spec, g, y);
        double num = 0.0;
        for (int v = 0; v < k; ++v) num = std::max(num, std::abs(fx[v] - fy[v]));
        worst = std::max(worst, num / denom);
    }
    return worst;
}

double certify_node_lipschitz(const GcnSpec& spec, const Graph& g, const Matrix& features) {
    if (!is_connected(g)) throw DomainError(errc::disconnected, "connected graph required");
    const auto out = gcn_forward(spec, g, features);
    const FiniteMetric metric = shortest_path_metric(g);
    double worst = 0.0;
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j)
            worst = std::max(worst, std::abs(out[i] - out[j]) / metric.dist(i, j));
    return worst;
}

GcnSpec random_gcn(int hop_count, const std::vector<int>& dims, const std::vector<double>& betas,
                   Activation activation, std::uint64_t seed) {
    if (dims.size() < 2 || betas.size() + 1 != dims.size())
        throw DomainError(errc::invalid_spec, "dims must list d_0..d_L with one beta per layer");
    Rng rng(seed);
    std::vector<Matrix> weights;
    weights.reserve(betas.size());
    for (std::size_t l = 0; l < betas.size(); ++l) {
        Matrix w(dims[l + 1], dims[l]);
        for (double& v : w.data()) v = rng.uniform(-1.0, 1.0);
        const double norm = operator_norm_rect(w);
        // Scale into (roughly half to full) budget; keeps pools heterogeneous.
        const double target = betas[l] * rng.uniform(0.5, 0.999);
        if (norm > 0.0)
            for (double& v : w.data()) v *= target / norm;
        weights.push_back(std::move(w));
    }
    return GcnSpec(hop_count, dims, std::move(weights), betas, activation);
}

}  // namespace tbl
