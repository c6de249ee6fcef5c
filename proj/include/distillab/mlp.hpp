#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "distillab/matrix.hpp"

namespace distillab {

enum class Activation { relu, tanh };

std::string to_string(Activation a);
Activation activation_from_string(const std::string& s);

/// Architecture of a dense classifier: input width, hidden widths, number
/// of classes and the hidden activation.
struct MlpSpec {
    std::size_t input_dim = 0;
    std::vector<std::size_t> hidden_dims;
    std::size_t output_dim = 0;
    Activation activation = Activation::relu;

    /// Layer widths [input, hidden..., output].
    std::vector<std::size_t> dims() const;

    /// Throws DomainError unless all dims >= 1 and output_dim >= 2.
    void validate() const;

    std::size_t param_count() const;

    bool operator==(const MlpSpec&) const = default;
};

/// Dense network parameters. weights[k] is dims[k] x dims[k+1]; biases[k]
/// is a 1 x dims[k+1] row vector.
struct MlpModel {
    MlpSpec spec;
    std::vector<Matrix> weights;
    std::vector<Matrix> biases;

    std::size_t param_count() const { return spec.param_count(); }

    /// Parameters flattened in layer order, weights row-major then bias.
    std::vector<double> flatten() const;
    void unflatten(const std::vector<double>& flat);
};

/// Parameter gradients, same shapes as the model they belong to.
struct Gradients {
    std::vector<Matrix> weights;
    std::vector<Matrix> biases;

    static Gradients zeros_like(const MlpModel& model);
    double global_norm() const;
};

/// Activations retained by forward() for the matching backward() call.
struct ForwardCache {
    std::vector<std::size_t> dims;        // layer widths of the model forwarded
    std::vector<Matrix> layer_inputs;     // layer_inputs[k] feeds weights[k]
    std::vector<Matrix> pre_activations;  // pre_activations[k] = inputs*W+b at layer k
};

/// Glorot-uniform weights, zero biases. The same (spec, seed) pair yields a
/// bit-identical model.
MlpModel init_model(const MlpSpec& spec, std::uint64_t seed);

/// Logits for a batch, plus the cache backward() needs.
struct ForwardResult {
    Matrix logits;
    ForwardCache cache;
};

ForwardResult forward(const MlpModel& model, const Matrix& x);

/// Logits only; skips building the cache.
Matrix forward_logits(const MlpModel& model, const Matrix& x);

/// Reverse-mode gradients of whatever scalar produced dlogits. Throws
/// ContractError when the cache does not belong to this model/batch.
Gradients backward(const MlpModel& model, const ForwardCache& cache, const Matrix& dlogits);

}  // namespace distillab
