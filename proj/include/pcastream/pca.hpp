#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace pcastream {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Low-rank PCA model: affine subspace spanned by the top components around
// the running mean. Immutable after construction; fitting operations return
// new models.
struct PcaModel {
  Vector mean;             // length d
  Matrix components;       // d x n_components, orthonormal columns
  Vector singular_values;  // length n_components, non-negative, non-increasing
  std::int64_t n_samples = 0;
  Eigen::Index n_components = 0;

  Eigen::Index dim() const { return mean.size(); }
};

// A model with no samples yet; partial_fit on it behaves like batch_fit with
// the stored component target.
PcaModel empty_model(Eigen::Index dim, Eigen::Index n_components);

// Fits mean + top-n_components right singular vectors of the row-centered X.
// Requires 1 <= n_components <= min(rows, cols) and finite input.
PcaModel batch_fit(const Matrix& X, Eigen::Index n_components);

// Folds a batch into the model via the mean-corrected incremental SVD: the
// batch is centered on its own mean, a scaled mean-difference column restores
// the cross term, and the augmented columns are merged with the existing
// factorization through a small SVD. Exact (up to rounding) when nothing is
// truncated. The pooled mean is updated exactly.
PcaModel partial_fit(const PcaModel& model, const Matrix& batch);

// Projection of x onto the model subspace, mapped back to feature space.
Vector reconstruct(const PcaModel& model, const Vector& x);

// Per-feature reconstruction error: reconstruct(x) - x.
Vector reconstruction_error_vector(const PcaModel& model, const Vector& x);

// Euclidean norm of the per-feature errors.
double reconstruction_error(const PcaModel& model, const Vector& x);

// Versioned flat text persistence, 17 significant digits per value; the
// round trip is bit-exact. load_model validates orthonormality and singular
// value ordering.
void save_model(const PcaModel& model, std::ostream& out);
PcaModel load_model(std::istream& in);
void save_model_file(const PcaModel& model, const std::string& path);
PcaModel load_model_file(const std::string& path);

namespace detail {
// Forces the largest-magnitude entry of each column positive (first index on
// ties) so component signs are reproducible across runs.
void fix_component_signs(Matrix& components);
}  // namespace detail

}  // namespace pcastream
