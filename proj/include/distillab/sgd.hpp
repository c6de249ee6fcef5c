#pragma once

#include <optional>

#include "distillab/mlp.hpp"

namespace distillab {

struct SgdConfig {
    double learning_rate = 0.1;
    std::optional<double> grad_clip;  // global l2-norm clip
    double momentum = 0.0;

    void validate() const;
};

/// Plain SGD with optional global-norm gradient clipping and classical
/// momentum. Owns the velocity buffers between steps.
class SgdOptimizer {
public:
    explicit SgdOptimizer(SgdConfig cfg) : cfg_(cfg) { cfg_.validate(); }

    /// Clip (if configured), update velocity, apply theta -= lr * v.
    void step(MlpModel& model, Gradients grads);

    const SgdConfig& config() const { return cfg_; }

private:
    SgdConfig cfg_;
    std::optional<Gradients> velocity_;
};

}  // namespace distillab
