#pragma once

// Sums of elementary tensor products of factor matrices, applied to
// vectors without materializing the Kronecker product.  Slot dimensions
// may differ (the dilation construction enlarges one slot).  An operator
// with zero slots acts on a one-dimensional space and is just a scalar.

#include <numeric>
#include <stdexcept>
#include <vector>

#include "qmb/fock.hpp"

namespace qmb {

struct TensorTerm {
  cplx coeff;
  std::vector<FactorMatrix> factors;  // one per slot
};

class TensorOperator {
 public:
  TensorOperator() = default;
  explicit TensorOperator(std::vector<int> slot_dims) : dims_(std::move(slot_dims)) {
    for (int d : dims_)
      if (d < 1) throw std::invalid_argument("TensorOperator: slot dims must be >= 1");
  }

  static TensorOperator zero(std::vector<int> dims) { return TensorOperator(std::move(dims)); }
  static TensorOperator identity(std::vector<int> dims) {
    TensorOperator t(std::move(dims));
    std::vector<FactorMatrix> f;
    f.reserve(t.dims_.size());
    for (int d : t.dims_) f.push_back(fm_identity(d));
    t.terms_.push_back({cplx(1.0, 0.0), std::move(f)});
    return t;
  }

  const std::vector<int>& slot_dims() const { return dims_; }
  const std::vector<TensorTerm>& terms() const { return terms_; }
  long total_dim() const {
    long d = 1;
    for (int n : dims_) d *= n;
    return d;
  }

  void add_term(cplx coeff, std::vector<FactorMatrix> factors) {
    if (factors.size() != dims_.size())
      throw std::invalid_argument("TensorOperator: slot count mismatch");
    for (size_t j = 0; j < factors.size(); ++j)
      if (factors[j].dim() != dims_[j])
        throw std::invalid_argument("TensorOperator: slot dimension mismatch");
    if (coeff != cplx(0.0, 0.0)) terms_.push_back({coeff, std::move(factors)});
  }

  Vec apply(const Vec& v) const {
    if (v.size() != total_dim()) throw std::invalid_argument("TensorOperator: vector size");
    Vec acc = Vec::Zero(v.size());
    Vec buf;
    for (const auto& term : terms_) {
      buf = v;
      for (size_t j = 0; j < dims_.size(); ++j)
        if (!term.factors[j].identity) apply_slot(buf, term.factors[j].mat, int(j));
      acc.noalias() += term.coeff * buf;
    }
    return acc;
  }

  TensorOperator adjoint() const {
    TensorOperator out(dims_);
    for (const auto& term : terms_) {
      std::vector<FactorMatrix> f;
      f.reserve(term.factors.size());
      for (const auto& fm : term.factors) f.push_back(fm.adjointed());
      out.terms_.push_back({std::conj(term.coeff), std::move(f)});
    }
    return out;
  }

  // Operator product: (this ∘ other), slot-wise matrix products.
  TensorOperator compose(const TensorOperator& other) const {
    if (dims_ != other.dims_) throw std::invalid_argument("TensorOperator: dims mismatch");
    TensorOperator out(dims_);
    for (const auto& a : terms_)
      for (const auto& b : other.terms_) {
        std::vector<FactorMatrix> f;
        f.reserve(dims_.size());
        for (size_t j = 0; j < dims_.size(); ++j) f.push_back(a.factors[j].times(b.factors[j]));
        out.terms_.push_back({a.coeff * b.coeff, std::move(f)});
      }
    return out;
  }

  friend TensorOperator operator+(const TensorOperator& a, const TensorOperator& b) {
    if (a.dims_ != b.dims_) throw std::invalid_argument("TensorOperator: dims mismatch");
    TensorOperator out = a;
    out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
    return out;
  }

  TensorOperator scaled(cplx s) const {
    TensorOperator out = *this;
    if (s == cplx(0.0, 0.0)) {
      out.terms_.clear();
      return out;
    }
    for (auto& t : out.terms_) t.coeff *= s;
    return out;
  }

  Mat materialize() const {
    const long D = total_dim();
    Mat acc = Mat::Zero(D, D);
    for (const auto& term : terms_) {
      Mat m = Mat::Identity(1, 1);
      for (const auto& f : term.factors) {
        Mat next(m.rows() * f.dim(), m.cols() * f.dim());
        for (Eigen::Index i = 0; i < m.rows(); ++i)
          for (Eigen::Index j = 0; j < m.cols(); ++j)
            next.block(i * f.dim(), j * f.dim(), f.dim(), f.dim()) = m(i, j) * f.mat;
        m = std::move(next);
      }
      acc += term.coeff * m;
    }
    return acc;
  }

 private:
  // Apply A to slot j of v viewed as a tensor with the first slot slowest.
  void apply_slot(Vec& v, const Mat& A, int j) const {
    long left = 1, right = 1;
    for (int k = 0; k < j; ++k) left *= dims_[k];
    for (size_t k = j + 1; k < dims_.size(); ++k) right *= dims_[k];
    const int nj = dims_[j];
    using RowMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    for (long l = 0; l < left; ++l) {
      Eigen::Map<RowMat> block(v.data() + l * nj * right, nj, right);
      block = A * block;
    }
  }

  std::vector<int> dims_;
  std::vector<TensorTerm> terms_;
};

// n x n matrix of tensor operators acting block-wise on stacked vectors;
// this is how matrix-level norms are computed.
class BlockOperator {
 public:
  BlockOperator(int n, std::vector<TensorOperator> blocks) : n_(n), blocks_(std::move(blocks)) {
    if (int(blocks_.size()) != n_ * n_)
      throw std::invalid_argument("BlockOperator: need n*n blocks");
    for (const auto& b : blocks_)
      if (b.slot_dims() != blocks_[0].slot_dims())
        throw std::invalid_argument("BlockOperator: block dims mismatch");
  }

  int n() const { return n_; }
  long block_dim() const { return blocks_[0].total_dim(); }
  long total_dim() const { return n_ * block_dim(); }
  const TensorOperator& block(int i, int j) const { return blocks_[i * n_ + j]; }

  Vec apply(const Vec& v) const {
    const long D = block_dim();
    if (v.size() != total_dim()) throw std::invalid_argument("BlockOperator: vector size");
    Vec out = Vec::Zero(v.size());
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        const Vec vj = v.segment(j * D, D);
        out.segment(i * D, D) += block(i, j).apply(vj);
      }
    return out;
  }

  BlockOperator adjoint() const {
    std::vector<TensorOperator> blocks;
    blocks.reserve(blocks_.size());
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) blocks.push_back(block(j, i).adjoint());
    return BlockOperator(n_, std::move(blocks));
  }

  Mat materialize() const {
    const long D = block_dim();
    Mat m = Mat::Zero(total_dim(), total_dim());
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) m.block(i * D, j * D, D, D) = block(i, j).materialize();
    return m;
  }

 private:
  int n_;
  std::vector<TensorOperator> blocks_;  // row-major
};

}  // namespace qmb
