#include "ssc/losses.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace ssc {

namespace {

// Shared evaluator for every SupCon-family loss. Works on raw dot products so
// gradient checks may probe slightly off-sphere points; unit norms are the
// assembling caller's contract.
LossOutput ssc_core(const Matrix& z, const LabelVector& y, const std::vector<double>& lambda,
                    const std::vector<std::uint8_t>& anchor_mask, double temperature) {
  if (!(temperature > 0.0)) throw NonPositiveTemperature(temperature);
  const std::size_t n = z.rows();
  const std::size_t d = z.cols();
  if (y.size() != n || lambda.size() != n || anchor_mask.size() != n)
    throw DimensionMismatch("ssc_loss: y/lambda/mask lengths must equal row count");
  for (double l : lambda)
    if (!(l >= 0.0)) throw Error("ssc_loss: lambda entries must be >= 0");
  if (n < 2) throw NoValidAnchor();

  const Matrix sims = matmul_nt(z, z);

  std::vector<std::size_t> pos_count(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && y[j] == y[i]) ++pos_count[i];

  LossOutput out;
  out.per_anchor.assign(n, 0.0);
  std::vector<double> log_denom(n, 0.0);
  std::vector<std::uint8_t> valid(n, 0);

  double lambda_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    // Row-wise log-sum-exp over j != i; T = 0.01 makes raw exponentials of
    // s/T overflow-prone, so the row max is subtracted first.
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) hi = std::max(hi, sims(i, j) / temperature);
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) sum += std::exp(sims(i, j) / temperature - hi);
    log_denom[i] = hi + std::log(sum);

    if (!anchor_mask[i] || pos_count[i] == 0) continue;
    valid[i] = 1;
    lambda_sum += lambda[i];

    double mean_pos = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && y[j] == y[i]) mean_pos += sims(i, j) / temperature;
    mean_pos /= static_cast<double>(pos_count[i]);
    out.per_anchor[i] = log_denom[i] - mean_pos;
  }

  if (lambda_sum <= 0.0) throw NoValidAnchor();

  double value = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    if (valid[i]) value += lambda[i] * out.per_anchor[i];
  out.value = value / lambda_sum;

  // grad = (G + G^T) z with G_ij = w_i (q_ij - pos_ij/|P(i)|) / T, where
  // q_ij = softmax over j != i of s_ij/T and w_i = lambda_i / sum(lambda).
  Matrix g(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!valid[i] || lambda[i] == 0.0) continue;
    const double w = lambda[i] / lambda_sum;
    const double inv_pos = 1.0 / static_cast<double>(pos_count[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double q = std::exp(sims(i, j) / temperature - log_denom[i]);
      const double p = (y[j] == y[i]) ? inv_pos : 0.0;
      g(i, j) = w * (q - p) / temperature;
    }
  }
  Matrix gsym(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gsym(i, j) = g(i, j) + g(j, i);
  out.grad_z = matmul_nn(gsym, z);
  if (out.grad_z.rows() != n || out.grad_z.cols() != d)
    throw DimensionMismatch("ssc_loss: internal gradient shape");
  return out;
}

}  // namespace

ContrastiveBatch ContrastiveBatch::uniform(Matrix z, LabelVector y) {
  ContrastiveBatch b;
  const std::size_t n = z.rows();
  b.z = std::move(z);
  b.y = std::move(y);
  b.lambda.assign(n, 1.0);
  b.anchor_mask.assign(n, 1);
  return b;
}

LossOutput supcon_loss(const Matrix& z, const LabelVector& y, double temperature) {
  const std::size_t n = z.rows();
  return ssc_core(z, y, std::vector<double>(n, 1.0), std::vector<std::uint8_t>(n, 1), temperature);
}

LossOutput ssc_loss(const ContrastiveBatch& batch, double temperature) {
  return ssc_core(batch.z, batch.y, batch.lambda, batch.anchor_mask, temperature);
}

LabelVector sibling_labels(std::size_t mu_b) {
  LabelVector y(2 * mu_b);
  for (std::size_t i = 0; i < mu_b; ++i) {
    y[i] = static_cast<int>(i);
    y[i + mu_b] = static_cast<int>(i);
  }
  return y;
}

LossOutput self_loss(const Matrix& z_u, std::size_t mu_b, double temperature) {
  if (z_u.rows() != 2 * mu_b)
    throw OddRowCount("self_loss: expected " + std::to_string(2 * mu_b) + " rows, got " +
                      std::to_string(z_u.rows()));
  return supcon_loss(z_u, sibling_labels(mu_b), temperature);
}

PrototypeCeOutput prototype_ce(const Matrix& z, const LabelVector& targets,
                               const std::vector<std::uint8_t>& mask, const Matrix& prototypes,
                               double temperature) {
  if (!(temperature > 0.0)) throw NonPositiveTemperature(temperature);
  const std::size_t n = z.rows();
  const std::size_t k = prototypes.rows();
  if (z.cols() != prototypes.cols())
    throw DimensionMismatch("prototype_ce: embedding/prototype dims differ");
  if (targets.size() != n || mask.size() != n)
    throw DimensionMismatch("prototype_ce: target/mask lengths must equal row count");
  for (int t : targets)
    if (t < 0 || static_cast<std::size_t>(t) >= k)
      throw LabelOutOfRange("prototype_ce: target " + std::to_string(t) + " outside [0, " +
                            std::to_string(k) + ")");

  PrototypeCeOutput out;
  out.per_example.assign(n, 0.0);
  out.grad_z = Matrix(n, z.cols(), 0.0);
  out.grad_prototypes = Matrix(k, z.cols(), 0.0);
  if (n == 0) return out;

  const Matrix logits = matmul_nt(z, prototypes);  // n x k, pre-temperature
  Matrix dlogits(n, k, 0.0);                       // d value / d (logits/T)
  double total = 0.0;
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ls = log_softmax(logits.row(i), temperature);
    const double h = -ls[static_cast<std::size_t>(targets[i])];
    if (mask[i]) {
      total += h;
      out.per_example[i] = h;
      for (std::size_t c = 0; c < k; ++c)
        dlogits(i, c) = inv_n * (std::exp(ls[c]) - (static_cast<int>(c) == targets[i] ? 1.0 : 0.0));
    }
  }
  out.value = total * inv_n;

  const double inv_t = 1.0 / temperature;
  Matrix gz = matmul_nn(dlogits, prototypes);
  Matrix gc = matmul_tn(dlogits, z);
  for (double& v : gz.data()) v *= inv_t;
  for (double& v : gc.data()) v *= inv_t;
  out.grad_z = std::move(gz);
  out.grad_prototypes = std::move(gc);
  return out;
}

LossOutput ce_prototype_loss(const Matrix& z_x, const LabelVector& y, const Matrix& prototypes) {
  const std::size_t b = z_x.rows();
  const std::size_t k = prototypes.rows();
  const auto ce = prototype_ce(z_x, y, std::vector<std::uint8_t>(b, 1), prototypes, 1.0);

  LossOutput out;
  out.value = ce.value;
  out.grad_z = vcat({ce.grad_z, ce.grad_prototypes});
  out.per_anchor.assign(b + k, 0.0);
  for (std::size_t i = 0; i < b; ++i) out.per_anchor[i] = ce.per_example[i];
  return out;
}

double cross_entropy_masked(const Matrix& logits, const LabelVector& targets,
                            const std::vector<std::uint8_t>& mask) {
  const std::size_t n = logits.rows();
  const std::size_t k = logits.cols();
  if (targets.size() != n || mask.size() != n)
    throw DimensionMismatch("cross_entropy_masked: target/mask lengths must equal row count");
  for (int t : targets)
    if (t < 0 || static_cast<std::size_t>(t) >= k)
      throw LabelOutOfRange("cross_entropy_masked: target " + std::to_string(t) +
                            " outside [0, " + std::to_string(k) + ")");
  if (n == 0) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!mask[i]) continue;
    const auto ls = log_softmax(logits.row(i), 1.0);
    total -= ls[static_cast<std::size_t>(targets[i])];
  }
  return total / static_cast<double>(n);
}

}  // namespace ssc
