#include "distillab/mlp.hpp"

#include <cmath>

#include "distillab/errors.hpp"
#include "distillab/rng.hpp"

namespace distillab {

std::string to_string(Activation a) {
    return a == Activation::relu ? "relu" : "tanh";
}

Activation activation_from_string(const std::string& s) {
    if (s == "relu") return Activation::relu;
    if (s == "tanh") return Activation::tanh;
    throw DomainError("unknown activation '" + s + "' (expected relu or tanh)");
}

std::vector<std::size_t> MlpSpec::dims() const {
    std::vector<std::size_t> d;
    d.reserve(hidden_dims.size() + 2);
    d.push_back(input_dim);
    d.insert(d.end(), hidden_dims.begin(), hidden_dims.end());
    d.push_back(output_dim);
    return d;
}

void MlpSpec::validate() const {
    if (input_dim < 1) throw DomainError("MlpSpec: input_dim must be >= 1");
    for (std::size_t h : hidden_dims) {
        if (h < 1) throw DomainError("MlpSpec: hidden dims must be >= 1");
    }
    if (output_dim < 2) throw DomainError("MlpSpec: output_dim must be >= 2");
}

std::size_t MlpSpec::param_count() const {
    const auto d = dims();
    std::size_t n = 0;
    for (std::size_t k = 0; k + 1 < d.size(); ++k) {
        n += d[k] * d[k + 1] + d[k + 1];
    }
    return n;
}

std::vector<double> MlpModel::flatten() const {
    std::vector<double> flat;
    flat.reserve(param_count());
    for (std::size_t k = 0; k < weights.size(); ++k) {
        flat.insert(flat.end(), weights[k].data().begin(), weights[k].data().end());
        flat.insert(flat.end(), biases[k].data().begin(), biases[k].data().end());
    }
    return flat;
}

void MlpModel::unflatten(const std::vector<double>& flat) {
    if (flat.size() != param_count()) {
        throw ShapeError("MlpModel::unflatten: " + std::to_string(flat.size()) +
                         " values for " + std::to_string(param_count()) + " parameters");
    }
    std::size_t pos = 0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        for (double& v : weights[k].data()) v = flat[pos++];
        for (double& v : biases[k].data()) v = flat[pos++];
    }
}

Gradients Gradients::zeros_like(const MlpModel& model) {
    Gradients g;
    for (std::size_t k = 0; k < model.weights.size(); ++k) {
        g.weights.emplace_back(model.weights[k].rows(), model.weights[k].cols());
        g.biases.emplace_back(model.biases[k].rows(), model.biases[k].cols());
    }
    return g;
}

double Gradients::global_norm() const {
    double s = 0.0;
    for (const auto& w : weights) {
        for (double v : w.data()) s += v * v;
    }
    for (const auto& b : biases) {
        for (double v : b.data()) s += v * v;
    }
    return std::sqrt(s);
}

MlpModel init_model(const MlpSpec& spec, std::uint64_t seed) {
    spec.validate();
    MlpModel model;
    model.spec = spec;
    Rng rng(seed);
    const auto d = spec.dims();
    for (std::size_t k = 0; k + 1 < d.size(); ++k) {
        const double bound = std::sqrt(6.0 / static_cast<double>(d[k] + d[k + 1]));
        Matrix w(d[k], d[k + 1]);
        for (double& v : w.data()) v = rng.uniform(-bound, bound);
        model.weights.push_back(std::move(w));
        model.biases.emplace_back(1, d[k + 1]);  // zero biases
    }
    return model;
}

namespace {

Matrix affine(const Matrix& x, const Matrix& w, const Matrix& b) {
    Matrix out = matmul(x, w);
    for (std::size_t r = 0; r < out.rows(); ++r) {
        auto row = out.row(r);
        for (std::size_t j = 0; j < out.cols(); ++j) row[j] += b(0, j);
    }
    return out;
}

void apply_activation(Matrix& m, Activation a) {
    if (a == Activation::relu) {
        for (double& v : m.data()) v = v > 0.0 ? v : 0.0;
    } else {
        for (double& v : m.data()) v = std::tanh(v);
    }
}

}  // namespace

ForwardResult forward(const MlpModel& model, const Matrix& x) {
    if (x.cols() != model.spec.input_dim) {
        throw ShapeError("forward: input has " + std::to_string(x.cols()) +
                         " features, model expects " + std::to_string(model.spec.input_dim));
    }
    ForwardResult res;
    res.cache.dims = model.spec.dims();
    Matrix cur = x;
    const std::size_t n_layers = model.weights.size();
    for (std::size_t k = 0; k < n_layers; ++k) {
        res.cache.layer_inputs.push_back(cur);
        Matrix z = affine(cur, model.weights[k], model.biases[k]);
        res.cache.pre_activations.push_back(z);
        if (k + 1 < n_layers) {
            apply_activation(z, model.spec.activation);
        }
        cur = std::move(z);
    }
    res.logits = std::move(cur);
    return res;
}

Matrix forward_logits(const MlpModel& model, const Matrix& x) {
    if (x.cols() != model.spec.input_dim) {
        throw ShapeError("forward: input has " + std::to_string(x.cols()) +
                         " features, model expects " + std::to_string(model.spec.input_dim));
    }
    Matrix cur = x;
    const std::size_t n_layers = model.weights.size();
    for (std::size_t k = 0; k < n_layers; ++k) {
        Matrix z = affine(cur, model.weights[k], model.biases[k]);
        if (k + 1 < n_layers) {
            apply_activation(z, model.spec.activation);
        }
        cur = std::move(z);
    }
    return cur;
}

Gradients backward(const MlpModel& model, const ForwardCache& cache, const Matrix& dlogits) {
    if (cache.dims != model.spec.dims() || cache.layer_inputs.size() != model.weights.size()) {
        throw ContractError("backward: cache does not match this model");
    }
    const std::size_t batch = cache.layer_inputs.front().rows();
    if (dlogits.rows() != batch || dlogits.cols() != model.spec.output_dim) {
        throw ContractError("backward: dlogits shape " + dlogits.shape_str() +
                            " does not match cached batch of " + std::to_string(batch));
    }
    Gradients grads = Gradients::zeros_like(model);
    Matrix delta = dlogits;
    for (std::size_t k = model.weights.size(); k-- > 0;) {
        grads.weights[k] = matmul(transpose(cache.layer_inputs[k]), delta);
        for (std::size_t r = 0; r < delta.rows(); ++r) {
            for (std::size_t j = 0; j < delta.cols(); ++j) {
                grads.biases[k](0, j) += delta(r, j);
            }
        }
        if (k == 0) break;
        Matrix upstream = matmul(delta, transpose(model.weights[k]));
        const Matrix& z = cache.pre_activations[k - 1];
        if (model.spec.activation == Activation::relu) {
            for (std::size_t i = 0; i < upstream.data().size(); ++i) {
                if (z.data()[i] <= 0.0) upstream.data()[i] = 0.0;
            }
        } else {
            for (std::size_t i = 0; i < upstream.data().size(); ++i) {
                const double t = std::tanh(z.data()[i]);
                upstream.data()[i] *= 1.0 - t * t;
            }
        }
        delta = std::move(upstream);
    }
    return grads;
}

}  // namespace distillab
