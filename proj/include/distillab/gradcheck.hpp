#pragma once

#include <functional>
#include <vector>

namespace distillab {

/// Central-difference gradient oracle. Evaluates loss_fn at params +/- step
/// along every coordinate and returns the maximum over coordinates of
/// |fd - analytic| / max(|fd|, |analytic|, 1e-8). loss_fn must be
/// deterministic; step must be > 0.
double finite_difference_check(const std::function<double(const std::vector<double>&)>& loss_fn,
                               const std::vector<double>& params,
                               const std::vector<double>& analytic_grad,
                               double step);

}  // namespace distillab
