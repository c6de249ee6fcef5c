#pragma once

#include "distillab/matrix.hpp"

namespace distillab {

/// Scalar loss value plus its gradient with respect to the first argument.
struct LossValue {
    double value = 0.0;
    Matrix grad;
};

/// Row-wise softmax of logits/temperature, computed with max-subtraction.
/// Throws DomainError for temperature <= 0.
Matrix softmax(const Matrix& logits, double temperature = 1.0);

/// Mean negative log-likelihood over rows. `labels` is one-hot, `probs` a
/// probability matrix whose rows sum to 1 within 1e-9. The gradient is taken
/// with respect to the logits that produced `probs` through softmax(., 1):
/// (probs - labels) / batch.
LossValue cross_entropy(const Matrix& labels, const Matrix& probs);

/// Mean over rows of sum_k p_k ln(p_k/q_k). Entries are clipped at 1e-300
/// before the logs.
double kl_divergence(const Matrix& p, const Matrix& q);

/// Mean over the batch of the squared 2-norm of (z_s - target) rows.
/// Gradient w.r.t. z_s is 2 (z_s - target) / batch.
LossValue mse_logits(const Matrix& z_s, const Matrix& target);

/// Fraction of rows whose argmax logit matches the integer label.
double accuracy(const Matrix& logits, const std::vector<int>& labels);

/// One-hot encode integer class labels.
Matrix one_hot(const std::vector<int>& labels, std::size_t n_classes);

/// Probability floor applied before logarithms.
inline constexpr double kProbFloor = 1e-300;

}  // namespace distillab
