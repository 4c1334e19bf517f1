// losses.hpp - triplet ranking losses, pseudo-classification losses, and the
// adaptive margin schedules.
#pragma once

#include <span>
#include <vector>

#include "ncl/common.hpp"
#include "ncl/numerics.hpp"

namespace ncl {

// Base margin `base` (> 0) and curve parameter `curve` (> 1) of the margin
// schedule (curve^x - 1) / (curve - 1) * base, which maps a correspondence
// score in [0, 1] to a margin in [0, base].
struct MarginParams {
    double base = 0.2;
    double curve = 10.0;
};

struct LossWeights {
    double noisy = 1.0;
    double pseudo = 1.0;
    double entropy = 10.0;
};

struct TripletResult {
    double total = 0.0;
    std::vector<double> per_sample;
};

// Hardest-negative triplet ranking loss over a square similarity matrix
// (s[i][j] = similarity of image i and text j). Per sample i, both retrieval
// directions contribute a hinge against the strongest in-batch negative:
//   [margin[i] - s[i][i] + max_{j!=i} s[i][j]]_+ +
//   [margin[i] - s[i][i] + max_{j!=i} s[j][i]]_+
// A batch of one has no negatives and scores zero.
TripletResult triplet_hardest(const Matrix& sims, std::span<const double> margins);

// Per-sample loss summed over *all* in-batch negatives (both directions),
// used for dividing the data by loss level.
std::vector<double> per_sample_division_loss(const Matrix& sims, double alpha);

// Mean cross-entropy between each image prediction and the hard label
// derived from the paired text prediction (argmax, ties to lowest index).
double pseudo_classification_loss(const std::vector<ProbVector>& p_img,
                                  const std::vector<ProbVector>& q_text);

// Negative entropy of the batch-mean image prediction. Minimized exactly
// when the mean prediction is uniform, so adding it to the objective spreads
// predictions across classes instead of collapsing onto one.
double entropy_regularizer(const std::vector<ProbVector>& p_img);

// Margin for a pseudo-captioned pair, driven by the prediction similarity
// s_p (clamped to [0, 1] first).
double noisy_margin(double s_p, const MarginParams& mp);

// Margin for a clean pair. The exponent starts from the loss-based clean
// probability w_c and, when a previous-epoch prediction exists and the
// oscillation-based probability w_o clears tau, is topped up by
// (1 - w_c) * w_o.
double clean_margin(double w_c, double w_o, bool has_history, double tau,
                    const MarginParams& mp);

double total_loss(double l_c, double l_n, double l_pse, double l_ent, const LossWeights& w);

}  // namespace ncl
