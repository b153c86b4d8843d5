#include "salm/kernels.hpp"

#include <cmath>

#include "salm/util.hpp"

namespace salm::kernels {

void gather_logits(const DenseMatrix& h, const DenseMatrix& w,
                   const std::vector<int>& idx, DenseMatrix& z) {
  const int n = h.rows;
  const int k = static_cast<int>(idx.size());
  const int d = h.cols;
  if (w.cols != d) throw InvariantError("gather_logits: width mismatch");
  z = DenseMatrix(n, k);
#pragma omp parallel for schedule(static)
  for (int r = 0; r < n; ++r) {
    const double* hr = h.row(r);
    double* zr = z.row(r);
    for (int j = 0; j < k; ++j) {
      const double* wr = w.row(idx[j]);
      double acc = 0.0;
      for (int c = 0; c < d; ++c) acc += hr[c] * wr[c];
      zr[j] = acc;
    }
  }
}

void row_logsumexp(const DenseMatrix& z, std::vector<double>& lse) {
  const int n = z.rows;
  const int k = z.cols;
  lse.assign(n, 0.0);
#pragma omp parallel for schedule(static)
  for (int r = 0; r < n; ++r) {
    const double* zr = z.row(r);
    double m = zr[0];
    for (int j = 1; j < k; ++j) m = std::max(m, zr[j]);
    double acc = 0.0;
    for (int j = 0; j < k; ++j) acc += std::exp(zr[j] - m);
    lse[r] = m + std::log(acc);
  }
}

void softmax_coef(const DenseMatrix& z, const std::vector<double>& lse,
                  const std::vector<double>& scale, DenseMatrix& coef) {
  const int n = z.rows;
  const int k = z.cols;
  coef = DenseMatrix(n, k);
#pragma omp parallel for schedule(static)
  for (int r = 0; r < n; ++r) {
    const double* zr = z.row(r);
    double* cr = coef.row(r);
    const double s = scale[r];
    const double l = lse[r];
    for (int j = 0; j < k; ++j) cr[j] = std::exp(zr[j] - l) * s;
  }
}

void accumulate_rows_t(const DenseMatrix& coef, const DenseMatrix& h, DenseMatrix& out) {
  const int n = coef.rows;
  const int k = coef.cols;
  const int d = h.cols;
  out = DenseMatrix(k, d);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < k; ++j) {
    double* oj = out.row(j);
    for (int r = 0; r < n; ++r) {
      const double c = coef.at(r, j);
      if (c == 0.0) continue;
      const double* hr = h.row(r);
      for (int x = 0; x < d; ++x) oj[x] += c * hr[x];
    }
  }
}

void combine_rows(const DenseMatrix& coef, const DenseMatrix& w,
                  const std::vector<int>& idx, DenseMatrix& out) {
  const int n = coef.rows;
  const int k = coef.cols;
  const int d = w.cols;
  out = DenseMatrix(n, d);
#pragma omp parallel for schedule(static)
  for (int r = 0; r < n; ++r) {
    const double* cr = coef.row(r);
    double* orow = out.row(r);
    for (int j = 0; j < k; ++j) {
      const double c = cr[j];
      if (c == 0.0) continue;
      const double* wr = w.row(idx[j]);
      for (int x = 0; x < d; ++x) orow[x] += c * wr[x];
    }
  }
}

void covariance(const DenseMatrix& x, std::vector<double>& mean, DenseMatrix& cov) {
  const int n = x.rows;
  const int d = x.cols;
  if (n < 1) throw InvariantError("covariance: no samples");
  mean.assign(d, 0.0);
#pragma omp parallel for schedule(static)
  for (int c = 0; c < d; ++c) {
    double acc = 0.0;
    for (int r = 0; r < n; ++r) acc += x.at(r, c);
    mean[c] = acc / n;
  }
  cov = DenseMatrix(d, d);
  const double denom = n > 1 ? static_cast<double>(n - 1) : 1.0;
  // upper triangle as a flat list of (i, j) entries
  const int pairs = d * (d + 1) / 2;
#pragma omp parallel for schedule(static)
  for (int p = 0; p < pairs; ++p) {
    // invert p -> (i, j), i <= j
    int i = 0;
    int rem = p;
    while (rem >= d - i) {
      rem -= d - i;
      ++i;
    }
    const int j = i + rem;
    double acc = 0.0;
    for (int r = 0; r < n; ++r) {
      acc += (x.at(r, i) - mean[i]) * (x.at(r, j) - mean[j]);
    }
    cov.at(i, j) = acc / denom;
    cov.at(j, i) = acc / denom;
  }
}

}  // namespace salm::kernels
