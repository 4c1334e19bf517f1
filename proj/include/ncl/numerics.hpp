// numerics.hpp - scalar/vector kernels and the two-component 1-D Gaussian
// mixture used for loss-based sample dividing.
#pragma once

#include <array>
#include <span>
#include <vector>

#include "ncl/common.hpp"

namespace ncl {

// Clamp applied before every log or probability division.
inline constexpr double kLogClamp = 1e-12;
// Lower bound on fitted mixture variances (squared value units).
inline constexpr double kVarianceFloor = 1e-8;
inline constexpr int kGmmMaxIters = 100;
inline constexpr double kGmmTol = 1e-6;

// Probability vector on the simplex: length >= 2, entries >= 0, sum within
// 1e-9 of one. Construction validates; operations may then assume it.
class ProbVector {
  public:
    explicit ProbVector(std::vector<double> values);

    const std::vector<double>& values() const { return v_; }
    double operator[](size_t k) const { return v_[k]; }
    size_t size() const { return v_.size(); }

    bool operator==(const ProbVector&) const = default;

  private:
    std::vector<double> v_;
};

ProbVector softmax(std::span<const double> logits);
double cross_entropy(size_t hard_label, const ProbVector& p);
double kl_divergence(const ProbVector& p, const ProbVector& q);
double cosine_similarity(std::span<const double> u, std::span<const double> v);
double entropy(const ProbVector& p);

// Index of the largest entry; ties resolve to the lowest index.
size_t argmax_lowest(std::span<const double> v);

// Two-component univariate Gaussian mixture, components sorted so that
// mean[0] <= mean[1].
struct Gmm1D {
    std::array<double, 2> mean{};
    std::array<double, 2> variance{};
    std::array<double, 2> weight{};
};

// Fits by EM with deterministic quartile initialization. All-identical
// inputs return the degenerate mixture (equal means, floored variances,
// weights 0.5/0.5). If `log_likelihood_trace` is given, the observed-data
// log-likelihood at the start of each iteration is appended to it.
Gmm1D gmm2_fit_em(std::span<const double> values, int max_iters = kGmmMaxIters,
                  double tol = kGmmTol, std::vector<double>* log_likelihood_trace = nullptr);

// Responsibility of the low-mean component at `value`, in [0, 1].
double gmm2_posterior_low_mean(const Gmm1D& gmm, double value);

}  // namespace ncl
