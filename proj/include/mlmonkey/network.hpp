#pragma once

#include <cstdint>
#include <vector>

#include "mlmonkey/matrix.hpp"

namespace mlmonkey {

struct DenseLayer {
    Matrix weights;               // in x out
    std::vector<double> biases;   // out
};

// Feed-forward 5-5-3-2 network: two sigmoid dense layers, softmax output.
struct NetworkParameters {
    std::vector<DenseLayer> layers;

    static const std::vector<std::size_t>& layer_sizes();  // {5, 5, 3, 2}
    bool shapes_valid() const;
    bool all_finite() const;
    bool operator==(const NetworkParameters&) const;
};

// Xavier init: weights ~ N(0, 2 / (n_in + n_out)) per layer, biases zero.
// Deterministic per seed.
NetworkParameters init_network(std::uint64_t seed);

// Batched inference: inputs n x 5 (already normalized) -> probabilities n x 2,
// each row summing to 1.
Matrix forward(const NetworkParameters& params, const Matrix& inputs);

struct ForwardTrace {
    std::vector<Matrix> activations;  // input, hidden outputs, probabilities
};
Matrix forward_with_trace(const NetworkParameters& params, const Matrix& inputs,
                          ForwardTrace& trace);

struct ClassWeights {
    double w0 = 0.8;
    double w1 = 1.2;
    double of(int label) const { return label == 1 ? w1 : w0; }
};

// Mean over rows of -w_label * log(p_label) plus (l2/2) * sum of squared
// weights (biases are not penalized).
double loss(const Matrix& probabilities, const std::vector<int>& labels, ClassWeights weights,
            const NetworkParameters& params, double l2);

// Plain mean cross-entropy: no class weights, no L2. Early-stopping score.
double mean_cross_entropy(const Matrix& probabilities, const std::vector<int>& labels);

// Same shapes as the parameters they differentiate.
using GradientSet = NetworkParameters;

// Analytic backpropagation gradients of loss(), including the L2 term.
GradientSet gradients(const NetworkParameters& params, const Matrix& batch,
                      const std::vector<int>& labels, ClassWeights weights, double l2);

struct RmsPropConfig {
    double learning_rate = 1e-3;
    double decay = 0.95;
    double epsilon = 1e-8;
};

struct RmsPropState {
    std::vector<DenseLayer> cache;  // running average of squared gradients

    static RmsPropState zeros_like(const NetworkParameters& params);
};

// cache <- rho*cache + (1-rho)*g^2;  theta <- theta - lr * g / (sqrt(cache) + eps)
void rmsprop_step(NetworkParameters& params, const GradientSet& grads, RmsPropState& state,
                  const RmsPropConfig& config);

// Per-column mean/std fitted on the training split only. Constant columns
// store std = 1 so they pass through unchanged.
struct NormalizerStats {
    std::vector<double> mean;
    std::vector<double> stddev;
};

NormalizerStats fit_normalizer(const Matrix& train_inputs);
void normalize(const NormalizerStats& stats, Matrix& inputs);

}  // namespace mlmonkey
