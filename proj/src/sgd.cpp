#include "distillab/sgd.hpp"

#include <string>

#include "distillab/errors.hpp"

namespace distillab {

void SgdConfig::validate() const {
    if (!(learning_rate > 0.0)) {
        throw DomainError("SgdConfig: learning_rate must be > 0");
    }
    if (grad_clip && !(*grad_clip > 0.0)) {
        throw DomainError("SgdConfig: grad_clip must be > 0 when set");
    }
    if (momentum < 0.0 || momentum >= 1.0) {
        throw DomainError("SgdConfig: momentum must lie in [0, 1)");
    }
}

void SgdOptimizer::step(MlpModel& model, Gradients grads) {
    if (grads.weights.size() != model.weights.size()) {
        throw ShapeError("SgdOptimizer::step: gradient layer count " +
                         std::to_string(grads.weights.size()) + " vs model " +
                         std::to_string(model.weights.size()));
    }
    for (std::size_t k = 0; k < grads.weights.size(); ++k) {
        require_same_shape(grads.weights[k], model.weights[k], "SgdOptimizer::step");
        require_same_shape(grads.biases[k], model.biases[k], "SgdOptimizer::step");
    }

    if (cfg_.grad_clip) {
        const double norm = grads.global_norm();
        if (norm > *cfg_.grad_clip) {
            const double scale = *cfg_.grad_clip / norm;
            for (auto& w : grads.weights) w *= scale;
            for (auto& b : grads.biases) b *= scale;
        }
    }

    if (cfg_.momentum != 0.0) {
        if (!velocity_) velocity_ = Gradients::zeros_like(model);
        for (std::size_t k = 0; k < grads.weights.size(); ++k) {
            velocity_->weights[k] *= cfg_.momentum;
            velocity_->weights[k] += grads.weights[k];
            velocity_->biases[k] *= cfg_.momentum;
            velocity_->biases[k] += grads.biases[k];
        }
    } else {
        velocity_ = std::move(grads);
    }

    const double lr = cfg_.learning_rate;
    for (std::size_t k = 0; k < model.weights.size(); ++k) {
        auto& w = model.weights[k].data();
        const auto& vw = velocity_->weights[k].data();
        for (std::size_t i = 0; i < w.size(); ++i) w[i] -= lr * vw[i];
        auto& b = model.biases[k].data();
        const auto& vb = velocity_->biases[k].data();
        for (std::size_t i = 0; i < b.size(); ++i) b[i] -= lr * vb[i];
    }
}

}  // namespace distillab
