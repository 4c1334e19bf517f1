#include "ncl/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace ncl {

ProbVector::ProbVector(std::vector<double> values) : v_(std::move(values)) {
    if (v_.size() < 2) throw invalid_input("ProbVector needs length >= 2");
    double sum = 0.0;
    for (double x : v_) {
        if (!std::isfinite(x) || x < 0.0) throw invalid_input("ProbVector entries must be finite and >= 0");
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw invalid_input("ProbVector entries must sum to 1");
}

ProbVector softmax(std::span<const double> logits) {
    if (logits.size() < 2) throw invalid_input("softmax needs length >= 2");
    double mx = -std::numeric_limits<double>::infinity();
    for (double x : logits) {
        if (!std::isfinite(x)) throw invalid_input("softmax input must be finite");
        mx = std::max(mx, x);
    }
    std::vector<double> out(logits.size());
    double sum = 0.0;
    for (size_t k = 0; k < logits.size(); ++k) {
        out[k] = std::exp(logits[k] - mx);
        sum += out[k];
    }
    for (double& x : out) x /= sum;
    return ProbVector(std::move(out));
}

double cross_entropy(size_t hard_label, const ProbVector& p) {
    if (hard_label >= p.size()) throw invalid_input("cross_entropy label out of range");
    return -std::log(std::max(p[hard_label], kLogClamp));
}

double kl_divergence(const ProbVector& p, const ProbVector& q) {
    if (p.size() != q.size()) throw invalid_input("kl_divergence length mismatch");
    double kl = 0.0;
    for (size_t k = 0; k < p.size(); ++k) {
        double pk = std::max(p[k], kLogClamp);
        double qk = std::max(q[k], kLogClamp);
        kl += pk * std::log(pk / qk);
    }
    return kl;
}

double cosine_similarity(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size()) throw invalid_input("cosine_similarity length mismatch");
    double dot = 0.0, nu = 0.0, nv = 0.0;
    for (size_t i = 0; i < u.size(); ++i) {
        dot += u[i] * v[i];
        nu += u[i] * u[i];
        nv += v[i] * v[i];
    }
    nu = std::sqrt(nu);
    nv = std::sqrt(nv);
    if (nu < 1e-12 || nv < 1e-12) return 0.0;  // a zero vector carries no direction
    return std::clamp(dot / (nu * nv), -1.0, 1.0);
}

double entropy(const ProbVector& p) {
    double h = 0.0;
    for (size_t k = 0; k < p.size(); ++k) h -= p[k] * std::log(std::max(p[k], kLogClamp));
    return h;
}

size_t argmax_lowest(std::span<const double> v) {
    if (v.empty()) throw invalid_input("argmax of empty vector");
    size_t best = 0;
    for (size_t k = 1; k < v.size(); ++k)
        if (v[k] > v[best]) best = k;
    return best;
}

namespace {

double mean_of(std::span<const double> xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

double variance_of(std::span<const double> xs, double mean) {
    double s = 0.0;
    for (double x : xs) s += (x - mean) * (x - mean);
    return s / static_cast<double>(xs.size());
}

double log_normal_pdf(double x, double mean, double var) {
    double d = x - mean;
    return -0.5 * std::log(2.0 * 3.14159265358979323846 * var) - d * d / (2.0 * var);
}

}  // namespace

Gmm1D gmm2_fit_em(std::span<const double> values, int max_iters, double tol,
                  std::vector<double>* log_likelihood_trace) {
    size_t n = values.size();
    if (n < 2) throw invalid_input("gmm2_fit_em needs at least 2 values");
    for (double x : values)
        if (!std::isfinite(x)) throw invalid_input("gmm2_fit_em values must be finite");

    bool all_equal = std::all_of(values.begin(), values.end(),
                                 [&](double x) { return x == values[0]; });
    if (all_equal) {
        Gmm1D g;
        g.mean = {values[0], values[0]};
        g.variance = {kVarianceFloor, kVarianceFloor};
        g.weight = {0.5, 0.5};
        return g;
    }

    // Quartile initialization: the low-loss mode seeds component 0.
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    size_t q = std::max<size_t>(1, n / 4);
    Gmm1D g;
    g.mean[0] = mean_of(std::span(sorted).first(q));
    g.mean[1] = mean_of(std::span(sorted).last(q));
    g.variance[0] = std::max(variance_of(std::span(sorted).first(q), g.mean[0]), kVarianceFloor);
    g.variance[1] = std::max(variance_of(std::span(sorted).last(q), g.mean[1]), kVarianceFloor);
    g.weight = {0.5, 0.5};

    std::vector<double> resp0(n);
    double prev_ll = -std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < max_iters; ++iter) {
        // E-step in log space.
        double ll = 0.0;
        for (size_t i = 0; i < n; ++i) {
            double l0 = std::log(std::max(g.weight[0], kLogClamp)) +
                        log_normal_pdf(values[i], g.mean[0], g.variance[0]);
            double l1 = std::log(std::max(g.weight[1], kLogClamp)) +
                        log_normal_pdf(values[i], g.mean[1], g.variance[1]);
            double mx = std::max(l0, l1);
            double lse = mx + std::log(std::exp(l0 - mx) + std::exp(l1 - mx));
            resp0[i] = std::exp(l0 - lse);
            ll += lse;
        }
        if (log_likelihood_trace) log_likelihood_trace->push_back(ll);
        if (std::abs(ll - prev_ll) < tol) break;
        prev_ll = ll;

        // M-step.
        double n0 = 0.0, sum0 = 0.0, sum1 = 0.0;
        for (size_t i = 0; i < n; ++i) {
            n0 += resp0[i];
            sum0 += resp0[i] * values[i];
            sum1 += (1.0 - resp0[i]) * values[i];
        }
        double n1 = static_cast<double>(n) - n0;
        if (n0 > 1e-12) g.mean[0] = sum0 / n0;
        if (n1 > 1e-12) g.mean[1] = sum1 / n1;
        double v0 = 0.0, v1 = 0.0;
        for (size_t i = 0; i < n; ++i) {
            double d0 = values[i] - g.mean[0];
            double d1 = values[i] - g.mean[1];
            v0 += resp0[i] * d0 * d0;
            v1 += (1.0 - resp0[i]) * d1 * d1;
        }
        if (n0 > 1e-12) g.variance[0] = std::max(v0 / n0, kVarianceFloor);
        if (n1 > 1e-12) g.variance[1] = std::max(v1 / n1, kVarianceFloor);
        g.weight[0] = n0 / static_cast<double>(n);
        g.weight[1] = n1 / static_cast<double>(n);
    }

    if (g.mean[0] > g.mean[1]) {
        std::swap(g.mean[0], g.mean[1]);
        std::swap(g.variance[0], g.variance[1]);
        std::swap(g.weight[0], g.weight[1]);
    }
    return g;
}

double gmm2_posterior_low_mean(const Gmm1D& gmm, double value) {
    double l0 = std::log(std::max(gmm.weight[0], kLogClamp)) +
                log_normal_pdf(value, gmm.mean[0], gmm.variance[0]);
    double l1 = std::log(std::max(gmm.weight[1], kLogClamp)) +
                log_normal_pdf(value, gmm.mean[1], gmm.variance[1]);
    if (!std::isfinite(l0) && !std::isfinite(l1)) return gmm.weight[0];
    double mx = std::max(l0, l1);
    double r0 = std::exp(l0 - mx);
    double r1 = std::exp(l1 - mx);
    return r0 / (r0 + r1);
}

}  // namespace ncl
