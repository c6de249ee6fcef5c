#include "distillab/gradcheck.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "distillab/errors.hpp"

namespace distillab {

double finite_difference_check(const std::function<double(const std::vector<double>&)>& loss_fn,
                               const std::vector<double>& params,
                               const std::vector<double>& analytic_grad,
                               double step) {
    if (!(step > 0.0)) {
        throw DomainError("finite_difference_check: step must be > 0, got " +
                          std::to_string(step));
    }
    if (params.size() != analytic_grad.size()) {
        throw ShapeError("finite_difference_check: " + std::to_string(params.size()) +
                         " params vs " + std::to_string(analytic_grad.size()) + " gradients");
    }
    std::vector<double> probe = params;
    double worst = 0.0;
    for (std::size_t i = 0; i < params.size(); ++i) {
        probe[i] = params[i] + step;
        const double hi = loss_fn(probe);
        probe[i] = params[i] - step;
        const double lo = loss_fn(probe);
        probe[i] = params[i];
        const double fd = (hi - lo) / (2.0 * step);
        const double an = analytic_grad[i];
        const double denom = std::max({std::fabs(fd), std::fabs(an), 1e-8});
        worst = std::max(worst, std::fabs(fd - an) / denom);
    }
    return worst;
}

}  // namespace distillab
