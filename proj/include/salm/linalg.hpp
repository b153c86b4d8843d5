#ifndef SALM_LINALG_HPP
#define SALM_LINALG_HPP

#include <span>
#include <vector>

namespace salm {

// Row-major dense matrix of doubles. All clustering/alignment math runs in
// 64-bit floats.
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {}

  double* row(int r) { return data.data() + static_cast<size_t>(r) * cols; }
  const double* row(int r) const { return data.data() + static_cast<size_t>(r) * cols; }
  std::span<const double> row_span(int r) const { return {row(r), static_cast<size_t>(cols)}; }
  std::span<double> row_span(int r) { return {row(r), static_cast<size_t>(cols)}; }

  double& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  double at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

  static DenseMatrix identity(int n);

  bool same_shape(const DenseMatrix& o) const { return rows == o.rows && cols == o.cols; }
  bool operator==(const DenseMatrix& o) const = default;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);

// a·b / (|a||b|), clamped to [-1,1]. A zero-norm input yields 0 and sets
// *degenerate so freshly zero-initialized states never crash selection.
double cosine_similarity(std::span<const double> a, std::span<const double> b,
                         bool* degenerate = nullptr);

// y = M^T x for row-major M (rows x cols), x of length rows -> y of length cols.
void project_vector(std::span<const double> x, const DenseMatrix& m, std::span<double> out);

// Symmetric eigendecomposition by cyclic Jacobi rotations. Eigenvalues are
// returned in descending order with matching eigenvector columns.
void symmetric_eig(const DenseMatrix& sym, std::vector<double>& eigenvalues,
                   DenseMatrix& eigenvectors);

struct PcaResult {
  DenseMatrix components;           // d x out_dim, orthonormal columns
  std::vector<double> eigenvalues;  // all d eigenvalues, descending
  std::vector<double> mean;         // column means of the samples
  bool low_rank = false;            // sample rank < out_dim; tail columns are a
                                    // deterministic orthonormal complement
};

// Leading principal components of mean-centered samples (rows = observations).
// Sign convention: the first coordinate of each column with magnitude > 1e-12
// is made positive.
PcaResult pca_components(const DenseMatrix& samples, int out_dim);

// W minimizing sum_i |W a_i - b_i|^2 + ridge * |W|_F^2 over row pairs of A, B.
// Throws ConfigError when the normal matrix is singular and ridge == 0.
DenseMatrix least_squares(const DenseMatrix& a, const DenseMatrix& b, double ridge);

struct ProcrustesResult {
  DenseMatrix w;           // orthogonal, W^T W = I
  bool degenerate = false; // cross-covariance was rank deficient
};

// Orthogonal W maximizing trace alignment of the row pairs (scale invariant).
ProcrustesResult orthogonal_procrustes(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace salm

#endif  // SALM_LINALG_HPP
