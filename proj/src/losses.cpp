#include "ncl/losses.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ncl {

namespace {

double hinge(double x) { return x > 0.0 ? x : 0.0; }

void require_square(const Matrix& sims) {
    if (sims.rows != sims.cols || sims.rows < 1)
        throw invalid_input("similarity matrix must be square and non-empty");
}

}  // namespace

TripletResult triplet_hardest(const Matrix& sims, std::span<const double> margins) {
    require_square(sims);
    int b = sims.rows;
    if (static_cast<int>(margins.size()) != b)
        throw invalid_input("triplet_hardest margin count must match batch size");

    TripletResult r;
    r.per_sample.assign(b, 0.0);
    for (int i = 0; i < b; ++i) {
        double hardest_text = -std::numeric_limits<double>::infinity();
        double hardest_image = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < b; ++j) {
            if (j == i) continue;
            hardest_text = std::max(hardest_text, sims(i, j));
            hardest_image = std::max(hardest_image, sims(j, i));
        }
        if (b > 1) {
            r.per_sample[i] = hinge(margins[i] - sims(i, i) + hardest_text) +
                              hinge(margins[i] - sims(i, i) + hardest_image);
        }
        r.total += r.per_sample[i];
    }
    return r;
}

std::vector<double> per_sample_division_loss(const Matrix& sims, double alpha) {
    require_square(sims);
    int b = sims.rows;
    std::vector<double> l(b, 0.0);
    for (int i = 0; i < b; ++i) {
        for (int j = 0; j < b; ++j) {
            if (j == i) continue;
            l[i] += hinge(alpha - sims(i, i) + sims(i, j));
            l[i] += hinge(alpha - sims(i, i) + sims(j, i));
        }
    }
    return l;
}

double pseudo_classification_loss(const std::vector<ProbVector>& p_img,
                                  const std::vector<ProbVector>& q_text) {
    if (p_img.size() != q_text.size() || p_img.empty())
        throw invalid_input("pseudo_classification_loss batch mismatch");
    double sum = 0.0;
    for (size_t i = 0; i < p_img.size(); ++i) {
        if (p_img[i].size() != q_text[i].size())
            throw invalid_input("pseudo_classification_loss class-count mismatch");
        size_t label = argmax_lowest(q_text[i].values());
        sum += cross_entropy(label, p_img[i]);
    }
    return sum / static_cast<double>(p_img.size());
}

double entropy_regularizer(const std::vector<ProbVector>& p_img) {
    if (p_img.empty()) throw invalid_input("entropy_regularizer needs a non-empty batch");
    size_t k = p_img[0].size();
    std::vector<double> mean(k, 0.0);
    for (const auto& p : p_img) {
        if (p.size() != k) throw invalid_input("entropy_regularizer class-count mismatch");
        for (size_t c = 0; c < k; ++c) mean[c] += p[c];
    }
    double out = 0.0;
    for (size_t c = 0; c < k; ++c) {
        double m = mean[c] / static_cast<double>(p_img.size());
        out += m * std::log(std::max(m, kLogClamp));
    }
    return out;
}

namespace {

double margin_curve(double exponent, const MarginParams& mp) {
    return (std::pow(mp.curve, exponent) - 1.0) / (mp.curve - 1.0) * mp.base;
}

}  // namespace

double noisy_margin(double s_p, const MarginParams& mp) {
    return margin_curve(std::clamp(s_p, 0.0, 1.0), mp);
}

double clean_margin(double w_c, double w_o, bool has_history, double tau,
                    const MarginParams& mp) {
    double indicator = (has_history && w_o >= tau) ? 1.0 : 0.0;
    double exponent = w_c + (1.0 - w_c) * indicator * w_o;
    return margin_curve(exponent, mp);
}

double total_loss(double l_c, double l_n, double l_pse, double l_ent, const LossWeights& w) {
    return l_c + w.noisy * l_n + w.pseudo * l_pse + w.entropy * l_ent;
}

}  // namespace ncl
