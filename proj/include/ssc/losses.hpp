#pragma once

#include <cstdint>
#include <vector>

#include "ssc/matrix.hpp"

namespace ssc {

/// One contrastive batch: embeddings, labels, per-anchor weights and an anchor
/// mask. Masked-out rows never act as anchors but still appear in every other
/// anchor's denominator, and they still receive gradient as negatives.
struct ContrastiveBatch {
  Matrix z;                          // n x d
  LabelVector y;                     // n
  std::vector<double> lambda;        // n, >= 0
  std::vector<std::uint8_t> anchor_mask;  // n, 1 = row may act as anchor

  static ContrastiveBatch uniform(Matrix z, LabelVector y);
};

/// Forward value plus the unconstrained gradient w.r.t. every embedding row.
/// Re-normalization onto the unit sphere is the caller's projection step.
/// per_anchor[i] holds the anchor's own unweighted term; value equals the
/// lambda-weighted mean of per_anchor over anchors with a nonempty positive
/// set.
struct LossOutput {
  double value = 0.0;
  Matrix grad_z;
  std::vector<double> per_anchor;
};

/// Supervised contrastive loss. Anchors with an empty positive set are
/// excluded from both the sum and the normalizing count; their rows remain in
/// every denominator.
LossOutput supcon_loss(const Matrix& z, const LabelVector& y, double temperature);

/// Weighted semi-supervised contrastive loss:
///   (1/sum_k lambda_k) sum_i (-lambda_i/|P(i)|) sum_p log(exp(z_i.z_p/T) / sum_{j!=i} exp(z_i.z_j/T))
/// where i ranges over masked-in anchors with at least one positive, the
/// normalizer ranges over the same anchors, and denominators range over all
/// rows. The value is invariant to scaling all lambda by c > 0.
LossOutput ssc_loss(const ContrastiveBatch& batch, double temperature);

/// Self-supervised InfoNCE over two stacked strong views: identical to
/// supcon_loss under sibling labels [0..mu_b) repeated twice.
LossOutput self_loss(const Matrix& z_u, std::size_t mu_b, double temperature);

/// The sibling label layout used by self_loss.
LabelVector sibling_labels(std::size_t mu_b);

/// Cross-entropy of the bias-free prototype head at unit temperature:
///   (1/B) sum_i -log(exp(z_i.c_{y_i}) / sum_k exp(z_i.c_k))
/// grad_z stacks the gradient w.r.t. the B example rows followed by the K
/// prototype rows ((B+K) x d); per_anchor holds the B per-example terms
/// followed by K zeros.
LossOutput ce_prototype_loss(const Matrix& z_x, const LabelVector& y, const Matrix& prototypes);

/// Mean over ALL rows of (mask indicator x per-row cross-entropy) on raw
/// logits, i.e. (1/n) sum_i H_i 1(mask_i).
double cross_entropy_masked(const Matrix& logits, const LabelVector& targets,
                            const std::vector<std::uint8_t>& mask);

/// Masked prototype-head cross-entropy with gradients; shared machinery behind
/// ce_prototype_loss and the cross-entropy training baselines.
/// value = (1/n) sum_i mask_i * H(softmax(z_i.C^T / temperature), t_i).
struct PrototypeCeOutput {
  double value = 0.0;
  Matrix grad_z;            // n x d
  Matrix grad_prototypes;   // K x d
  std::vector<double> per_example;  // n, 0 where masked out
};
PrototypeCeOutput prototype_ce(const Matrix& z, const LabelVector& targets,
                               const std::vector<std::uint8_t>& mask, const Matrix& prototypes,
                               double temperature);

}  // namespace ssc
