#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tbl/graph.hpp"
#include "tbl/matrix.hpp"

namespace tbl {

enum class Activation { relu, tanh, identity, abs };

Activation activation_from_name(const std::string& name);
const char* activation_name(Activation a);

// Generalized graph convolutional network: layers 1..L-1 apply t-hop
// diffusion by the t-th power of the normalized Laplacian, then a linear map
// and an entrywise 1-Lipschitz activation; the final layer applies only its
// linear map. Weight l maps width dims[l-1] to dims[l] (the only
// shape-consistent reading of the layer composition; see README).
class GcnSpec {
public:
    GcnSpec(int hop_count, std::vector<int> dims, std::vector<Matrix> weights,
            std::vector<double> betas, Activation activation);

    int layer_count() const { return static_cast<int>(weights_.size()); }
    int hop_count() const { return hops_; }
    int input_dim() const { return dims_.front(); }
    const std::vector<int>& dims() const { return dims_; }
    const std::vector<Matrix>& weights() const { return weights_; }
    const std::vector<double>& betas() const { return betas_; }
    Activation activation() const { return activation_; }

    double beta_product() const;

    static GcnSpec from_json_text(const std::string& text);
    static GcnSpec load_json(const std::string& path);
    std::string to_json_text() const;

private:
    int hops_;
    std::vector<int> dims_;
    std::vector<Matrix> weights_;
    std::vector<double> betas_;
    Activation activation_;
};

// Network outputs, one value per node. Features are d_in x k.
std::vector<double> gcn_forward(const GcnSpec& spec, const Graph& g, const Matrix& features);

// sqrt(d_in) * (1 + sqrt(k-1)/sqrt(deg_min))^{tL} * prod(beta): Lipschitz
// constant of the network in the features under entrywise sup norms.
double feature_lipschitz_bound(const GcnSpec& spec, const Graph& g);

// max(feature_lipschitz_bound, diam_out): the hypothesis-class constant.
double lipschitz_B(const GcnSpec& spec, const Graph& g, double diam_out);

// 2 * m_feat * sqrt(d_in) * (1 + sqrt(k-1)/sqrt(c_k))^{tL} * prod(beta):
// the class constant under a degree floor c_k and bounded features.
double lipschitz_D(const GcnSpec& spec, int k, double c_k, double m_feat);

// Variant with the degree floor folded in as (1 + sqrt(c (k-1)/(k log k)))^{tL};
// not algebraically identical to lipschitz_D under the c_k = (sqrt(C)/2)
// (k log k)^{1/2} rule, so both are reported side by side where relevant.
double lipschitz_D_degree_rule(const GcnSpec& spec, int k, double c_abs, double m_feat);

// Max observed output/input ratio over seeded random feature pairs with
// entries in [-m_feat, m_feat]; never exceeds feature_lipschitz_bound.
double certify_feature_lipschitz(const GcnSpec& spec, const Graph& g, int trials,
                                 std::uint64_t seed, double m_feat = 1.0);

// max over node pairs of |out_i - out_j| / d_G(i, j); requires connectivity.
double certify_node_lipschitz(const GcnSpec& spec, const Graph& g, const Matrix& features);

// Deterministic random GCN with the given shape and norm budgets: weights
// are drawn entrywise uniform and rescaled so ||W_l|| <= beta_l.
GcnSpec random_gcn(int hop_count, const std::vector<int>& dims, const std::vector<double>& betas,
                   Activation activation, std::uint64_t seed);

}  // namespace tbl
