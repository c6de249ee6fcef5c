#include "distillab/losses.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "distillab/errors.hpp"

namespace distillab {

Matrix softmax(const Matrix& logits, double temperature) {
    if (!(temperature > 0.0)) {
        throw DomainError("softmax: temperature must be > 0, got " + std::to_string(temperature));
    }
    Matrix out(logits.rows(), logits.cols());
    for (std::size_t r = 0; r < logits.rows(); ++r) {
        const auto in = logits.row(r);
        auto o = out.row(r);
        double mx = -std::numeric_limits<double>::infinity();
        for (double v : in) mx = std::max(mx, v / temperature);
        double sum = 0.0;
        for (std::size_t j = 0; j < in.size(); ++j) {
            o[j] = std::exp(in[j] / temperature - mx);
            sum += o[j];
        }
        for (std::size_t j = 0; j < in.size(); ++j) o[j] /= sum;
    }
    return out;
}

namespace {

void require_prob_rows(const Matrix& probs, const char* op) {
    for (std::size_t r = 0; r < probs.rows(); ++r) {
        double sum = 0.0;
        for (double v : probs.row(r)) sum += v;
        if (std::fabs(sum - 1.0) > 1e-9) {
            throw DomainError(std::string(op) + ": row " + std::to_string(r) +
                              " sums to " + std::to_string(sum) + ", not 1");
        }
    }
}

}  // namespace

LossValue cross_entropy(const Matrix& labels, const Matrix& probs) {
    require_same_shape(labels, probs, "cross_entropy");
    require_prob_rows(probs, "cross_entropy");
    const double batch = static_cast<double>(labels.rows());
    double total = 0.0;
    Matrix grad(labels.rows(), labels.cols());
    for (std::size_t i = 0; i < labels.data().size(); ++i) {
        const double y = labels.data()[i];
        const double p = probs.data()[i];
        if (y != 0.0) {
            total -= y * std::log(std::max(p, kProbFloor));
        }
        grad.data()[i] = (p - y) / batch;
    }
    return {total / batch, std::move(grad)};
}

double kl_divergence(const Matrix& p, const Matrix& q) {
    require_same_shape(p, q, "kl_divergence");
    double total = 0.0;
    for (std::size_t i = 0; i < p.data().size(); ++i) {
        const double pi = p.data()[i];
        if (pi <= 0.0) continue;  // 0 log 0 = 0
        const double qi = std::max(q.data()[i], kProbFloor);
        total += pi * std::log(std::max(pi, kProbFloor) / qi);
    }
    return total / static_cast<double>(p.rows());
}

LossValue mse_logits(const Matrix& z_s, const Matrix& target) {
    require_same_shape(z_s, target, "mse_logits");
    const double batch = static_cast<double>(z_s.rows());
    double total = 0.0;
    Matrix grad(z_s.rows(), z_s.cols());
    for (std::size_t i = 0; i < z_s.data().size(); ++i) {
        const double d = z_s.data()[i] - target.data()[i];
        total += d * d;
        grad.data()[i] = 2.0 * d / batch;
    }
    return {total / batch, std::move(grad)};
}

double accuracy(const Matrix& logits, const std::vector<int>& labels) {
    if (logits.rows() != labels.size()) {
        throw ShapeError("accuracy: " + std::to_string(logits.rows()) + " logit rows vs " +
                         std::to_string(labels.size()) + " labels");
    }
    if (logits.rows() == 0) return 0.0;
    std::size_t hits = 0;
    for (std::size_t r = 0; r < logits.rows(); ++r) {
        const auto row = logits.row(r);
        std::size_t best = 0;
        for (std::size_t j = 1; j < row.size(); ++j) {
            if (row[j] > row[best]) best = j;
        }
        if (static_cast<int>(best) == labels[r]) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(logits.rows());
}

Matrix one_hot(const std::vector<int>& labels, std::size_t n_classes) {
    Matrix out(labels.size(), n_classes);
    for (std::size_t r = 0; r < labels.size(); ++r) {
        const int c = labels[r];
        if (c < 0 || static_cast<std::size_t>(c) >= n_classes) {
            throw DomainError("one_hot: label " + std::to_string(c) + " outside [0, " +
                              std::to_string(n_classes) + ")");
        }
        out(r, static_cast<std::size_t>(c)) = 1.0;
    }
    return out;
}

}  // namespace distillab
