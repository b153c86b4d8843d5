#ifndef SALM_KERNELS_HPP
#define SALM_KERNELS_HPP

#include <vector>

#include "salm/linalg.hpp"

namespace salm::kernels {

// Hot inner loops, parallelized with OpenMP. Every kernel decomposes over
// independent output elements (rows or matrix entries), so results are
// bit-identical to the serial reference below for any thread count.

// z[r][j] = dot(h.row(r), w.row(idx[j]))
void gather_logits(const DenseMatrix& h, const DenseMatrix& w,
                   const std::vector<int>& idx, DenseMatrix& z);

// lse[r] = log sum_j exp(z[r][j]), computed with max subtraction
void row_logsumexp(const DenseMatrix& z, std::vector<double>& lse);

// coef[r][j] = exp(z[r][j] - lse[r]) * scale[r]
void softmax_coef(const DenseMatrix& z, const std::vector<double>& lse,
                  const std::vector<double>& scale, DenseMatrix& coef);

// out.row(j) = sum_r coef[r][j] * h.row(r); out is coef.cols x h.cols
void accumulate_rows_t(const DenseMatrix& coef, const DenseMatrix& h, DenseMatrix& out);

// out.row(r) = sum_j coef[r][j] * w.row(idx[j])
void combine_rows(const DenseMatrix& coef, const DenseMatrix& w,
                  const std::vector<int>& idx, DenseMatrix& out);

// Column means and unbiased sample covariance of the mean-centered rows.
void covariance(const DenseMatrix& x, std::vector<double>& mean, DenseMatrix& cov);

namespace serial {

// Reference implementations kept for testing and benchmarking.
void gather_logits(const DenseMatrix& h, const DenseMatrix& w,
                   const std::vector<int>& idx, DenseMatrix& z);
void row_logsumexp(const DenseMatrix& z, std::vector<double>& lse);
void softmax_coef(const DenseMatrix& z, const std::vector<double>& lse,
                  const std::vector<double>& scale, DenseMatrix& coef);
void accumulate_rows_t(const DenseMatrix& coef, const DenseMatrix& h, DenseMatrix& out);
void combine_rows(const DenseMatrix& coef, const DenseMatrix& w,
                  const std::vector<int>& idx, DenseMatrix& out);
void covariance(const DenseMatrix& x, std::vector<double>& mean, DenseMatrix& cov);

}  // namespace serial

}  // namespace salm::kernels

#endif  // SALM_KERNELS_HPP
