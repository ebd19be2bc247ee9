#include "pcastream/pca.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "pcastream/util.hpp"

namespace pcastream {

namespace {

constexpr const char* kModelHeader = "pcastream-model v1";

void require_finite_rows(const Matrix& X, const char* what) {
  for (Eigen::Index r = 0; r < X.rows(); ++r) {
    if (!X.row(r).allFinite())
      throw std::invalid_argument(std::string(what) + ": non-finite value in row " +
                                  std::to_string(r));
  }
}

void check_vector_input(const PcaModel& model, const Vector& x) {
  if (x.size() != model.dim())
    throw std::invalid_argument("sample dimension " + std::to_string(x.size()) +
                                " does not match model dimension " + std::to_string(model.dim()));
  if (!x.allFinite()) throw std::invalid_argument("sample contains non-finite values");
}

}  // namespace

namespace detail {

void fix_component_signs(Matrix& components) {
  for (Eigen::Index c = 0; c < components.cols(); ++c) {
    Eigen::Index imax = 0;
    double vmax = 0.0;
    for (Eigen::Index r = 0; r < components.rows(); ++r) {
      double a = std::abs(components(r, c));
      if (a > vmax) {
        vmax = a;
        imax = r;
      }
    }
    if (components(imax, c) < 0.0) components.col(c) = -components.col(c);
  }
}

}  // namespace detail

PcaModel empty_model(Eigen::Index dim, Eigen::Index n_components) {
  if (dim < 1) throw std::invalid_argument("model dimension must be positive");
  if (n_components < 1 || n_components > dim)
    throw std::invalid_argument("n_components must be in [1, dim]");
  PcaModel m;
  m.mean = Vector::Zero(dim);
  m.components = Matrix::Zero(dim, 0);
  m.singular_values = Vector::Zero(0);
  m.n_samples = 0;
  m.n_components = n_components;
  return m;
}

PcaModel batch_fit(const Matrix& X, Eigen::Index n_components) {
  const Eigen::Index s = X.rows();
  const Eigen::Index d = X.cols();
  if (s < 1 || d < 1) throw std::invalid_argument("batch_fit: empty input matrix");
  if (n_components < 1 || n_components > std::min(s, d))
    throw std::invalid_argument("batch_fit: n_components must be in [1, min(rows, cols)]");
  require_finite_rows(X, "batch_fit");

  PcaModel m;
  m.mean = X.colwise().mean();
  Matrix centered = X.rowwise() - m.mean.transpose();
  Eigen::JacobiSVD<Matrix> svd(centered, Eigen::ComputeThinV);
  m.components = svd.matrixV().leftCols(n_components);
  m.singular_values = svd.singularValues().head(n_components);
  detail::fix_component_signs(m.components);
  m.n_samples = s;
  m.n_components = n_components;
  return m;
}

PcaModel partial_fit(const PcaModel& model, const Matrix& batch) {
  const Eigen::Index m = batch.rows();
  const Eigen::Index d = batch.cols();
  if (m < 1) throw std::invalid_argument("partial_fit: empty batch");
  if (d != model.dim())
    throw std::invalid_argument("partial_fit: batch has " + std::to_string(d) +
                                " columns, model dimension is " + std::to_string(model.dim()));
  require_finite_rows(batch, "partial_fit");

  if (model.n_samples == 0) return batch_fit(batch, model.n_components);

  const std::int64_t n = model.n_samples;
  const Eigen::Index k = model.components.cols();

  Vector batch_mean = batch.colwise().mean();
  Vector pooled_mean =
      (static_cast<double>(n) * model.mean + static_cast<double>(m) * batch_mean) /
      static_cast<double>(n + m);

  // Columns: batch rows centered on the batch mean, plus one mean-correction
  // column carrying the between-means scatter.
  Matrix augmented(d, m + 1);
  augmented.leftCols(m) = (batch.rowwise() - batch_mean.transpose()).transpose();
  const double w = std::sqrt(static_cast<double>(n) * static_cast<double>(m) /
                             static_cast<double>(n + m));
  augmented.col(m) = w * (model.mean - batch_mean);

  Matrix proj = model.components.transpose() * augmented;              // k x (m+1)
  Matrix residual = augmented - model.components * proj;               // d x (m+1)
  residual -= model.components * (model.components.transpose() * residual);

  Eigen::ColPivHouseholderQR<Matrix> qr(residual);
  qr.setThreshold(1e-12);
  const Eigen::Index q = std::min(qr.rank(), std::min(d, m + 1));
  Matrix basis(d, q);
  if (q > 0) {
    basis = Matrix(qr.householderQ()) .leftCols(q);
    Matrix res_coeff = basis.transpose() * residual;                   // q x (m+1)

    Matrix small = Matrix::Zero(k + q, k + m + 1);
    small.topLeftCorner(k, k) = Matrix(model.singular_values.asDiagonal());
    small.topRightCorner(k, m + 1) = proj;
    small.bottomRightCorner(q, m + 1) = res_coeff;

    Eigen::JacobiSVD<Matrix> svd(small, Eigen::ComputeThinU);
    const Eigen::Index keep = std::min<Eigen::Index>(model.n_components, svd.singularValues().size());
    Matrix joint(d, k + q);
    joint.leftCols(k) = model.components;
    joint.rightCols(q) = basis;

    PcaModel out;
    out.mean = pooled_mean;
    out.components = joint * svd.matrixU().leftCols(keep);
    out.singular_values = svd.singularValues().head(keep);
    detail::fix_component_signs(out.components);
    out.n_samples = n + m;
    out.n_components = model.n_components;
    return out;
  }

  // Batch lies in the current subspace: the basis cannot grow, only rotate.
  Matrix small(k, k + m + 1);
  small.leftCols(k) = Matrix(model.singular_values.asDiagonal());
  small.rightCols(m + 1) = proj;
  Eigen::JacobiSVD<Matrix> svd(small, Eigen::ComputeThinU);
  const Eigen::Index keep = std::min<Eigen::Index>(model.n_components, svd.singularValues().size());

  PcaModel out;
  out.mean = pooled_mean;
  out.components = model.components * svd.matrixU().leftCols(keep);
  out.singular_values = svd.singularValues().head(keep);
  detail::fix_component_signs(out.components);
  out.n_samples = n + m;
  out.n_components = model.n_components;
  return out;
}

Vector reconstruct(const PcaModel& model, const Vector& x) {
  check_vector_input(model, x);
  return model.components * (model.components.transpose() * (x - model.mean)) + model.mean;
}

Vector reconstruction_error_vector(const PcaModel& model, const Vector& x) {
  return reconstruct(model, x) - x;
}

double reconstruction_error(const PcaModel& model, const Vector& x) {
  return reconstruction_error_vector(model, x).norm();
}

void save_model(const PcaModel& model, std::ostream& out) {
  out << kModelHeader << "\n";
  out << "d " << model.dim() << "\n";
  out << "n_components " << model.n_components << "\n";
  out << "n_samples " << model.n_samples << "\n";
  out << "mean";
  for (Eigen::Index i = 0; i < model.mean.size(); ++i) out << ' ' << format_double(model.mean(i));
  out << "\nsingular_values";
  for (Eigen::Index i = 0; i < model.singular_values.size(); ++i)
    out << ' ' << format_double(model.singular_values(i));
  out << "\n";
  for (Eigen::Index c = 0; c < model.components.cols(); ++c) {
    out << "component";
    for (Eigen::Index r = 0; r < model.components.rows(); ++r)
      out << ' ' << format_double(model.components(r, c));
    out << "\n";
  }
  if (!out) throw std::runtime_error("save_model: write failure");
}

namespace {

std::string read_line_or_fail(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(std::string("load_model: truncated file, expected ") + what);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::int64_t parse_header_int(const std::string& line, const std::string& key) {
  auto fields = split(line, ' ');
  if (fields.size() != 2 || fields[0] != key)
    throw std::runtime_error("load_model: expected '" + key + " <value>', got '" + line + "'");
  return std::strtoll(fields[1].c_str(), nullptr, 10);
}

Vector parse_value_row(const std::string& line, const std::string& key, Eigen::Index expected) {
  auto fields = split(line, ' ');
  if (fields.empty() || fields[0] != key)
    throw std::runtime_error("load_model: expected '" + key + "' row, got '" + line + "'");
  if (static_cast<Eigen::Index>(fields.size()) - 1 != expected)
    throw std::runtime_error("load_model: '" + key + "' row has " +
                             std::to_string(fields.size() - 1) + " values, expected " +
                             std::to_string(expected));
  Vector v(expected);
  for (Eigen::Index i = 0; i < expected; ++i) v(i) = parse_double(fields[i + 1], "load_model " + key);
  return v;
}

}  // namespace

PcaModel load_model(std::istream& in) {
  std::string header = read_line_or_fail(in, "header");
  if (header != kModelHeader)
    throw std::runtime_error("load_model: unsupported header '" + header + "'");
  const Eigen::Index d = parse_header_int(read_line_or_fail(in, "d"), "d");
  const Eigen::Index k = parse_header_int(read_line_or_fail(in, "n_components"), "n_components");
  const std::int64_t n_samples = parse_header_int(read_line_or_fail(in, "n_samples"), "n_samples");
  if (d < 1 || k < 0 || k > d || n_samples < 0)
    throw std::runtime_error("load_model: invalid dimensions in header");

  PcaModel m;
  m.mean = parse_value_row(read_line_or_fail(in, "mean"), "mean", d);
  m.singular_values =
      parse_value_row(read_line_or_fail(in, "singular_values"), "singular_values", k);
  m.components.resize(d, k);
  for (Eigen::Index c = 0; c < k; ++c)
    m.components.col(c) = parse_value_row(read_line_or_fail(in, "component"), "component", d);
  m.n_samples = n_samples;
  m.n_components = k;

  Matrix gram = m.components.transpose() * m.components;
  if ((gram - Matrix::Identity(k, k)).cwiseAbs().maxCoeff() > 1e-10)
    throw std::runtime_error("load_model: component basis is not orthonormal");
  for (Eigen::Index i = 0; i < k; ++i) {
    if (m.singular_values(i) < 0.0)
      throw std::runtime_error("load_model: negative singular value");
    if (i > 0 && m.singular_values(i) > m.singular_values(i - 1))
      throw std::runtime_error("load_model: singular values not non-increasing");
  }
  return m;
}

void save_model_file(const PcaModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  save_model(model, out);
}

PcaModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return load_model(in);
}

}  // namespace pcastream
