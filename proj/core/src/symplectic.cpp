#include "maslovkit/symplectic.hpp"

#include <stdexcept>
#include <utility>

namespace maslovkit {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  ExactMatrix p(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const Rational& xik = x.at(i, k);
      if (xik == 0) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) p.at(i, j) += xik * y.at(k, j);
    }
  return p;
}

ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
    throw std::invalid_argument("matrix sum dimension mismatch");
  ExactMatrix s = x;
  for (std::size_t i = 0; i < s.a_.size(); ++i) s.a_[i] += y.a_[i];
  return s;
}

ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
    throw std::invalid_argument("matrix difference dimension mismatch");
  ExactMatrix d = x;
  for (std::size_t i = 0; i < d.a_.size(); ++i) d.a_[i] -= y.a_[i];
  return d;
}

bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
  return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
}

ExactMatrix standard_j(int n) {
  if (n != 1 && n != 2) throw std::invalid_argument("standard_j: n must be 1 or 2");
  const std::size_t d = static_cast<std::size_t>(2 * n);
  ExactMatrix j(d, d);
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    j.at(i, i + n) = -1;
    j.at(i + n, i) = 1;
  }
  return j;
}

bool is_symplectic(const ExactMatrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0)
    throw std::invalid_argument("is_symplectic: matrix must be square of even dimension");
  const ExactMatrix j = standard_j(static_cast<int>(m.rows() / 2));
  return m.transpose() * j * m == j;
}

ExactMatrix diamond(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2)
    throw std::invalid_argument("diamond: blocks must be 2x2");
  if (!is_symplectic(a) || !is_symplectic(b))
    throw std::invalid_argument("diamond: blocks must be symplectic (determinant 1)");
  ExactMatrix m(4, 4);
  // a on coordinates (1,3), b on (2,4); 0-based: (0,2) and (1,3).
  m.at(0, 0) = a.at(0, 0); m.at(0, 2) = a.at(0, 1);
  m.at(2, 0) = a.at(1, 0); m.at(2, 2) = a.at(1, 1);
  m.at(1, 1) = b.at(0, 0); m.at(1, 3) = b.at(0, 1);
  m.at(3, 1) = b.at(1, 0); m.at(3, 3) = b.at(1, 1);
  return m;
}

ExactMatrix matrix_power(const ExactMatrix& m, long long k) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_power: matrix must be square");
  if (k < 0) throw std::invalid_argument("matrix_power: exponent must be >= 0");
  ExactMatrix result = ExactMatrix::identity(m.rows());
  ExactMatrix base = m;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::size_t matrix_rank(ExactMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m.at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = col; j < cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    const Rational p = m.at(rank, col);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m.at(i, col) == 0) continue;
      const Rational f = m.at(i, col) / p;
      for (std::size_t j = col; j < cols; ++j) m.at(i, j) -= f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::size_t kernel_dimension(const ExactMatrix& m) { return m.cols() - matrix_rank(m); }

NormalFormBlock NormalFormBlock::shear(int eigenvalue, int b) {
  if (eigenvalue != 1 && eigenvalue != -1)
    throw std::invalid_argument("shear block eigenvalue must be +1 or -1");
  if (b < -1 || b > 1) throw std::invalid_argument("shear block b must be -1, 0, or 1");
  NormalFormBlock blk;
  blk.kind = Kind::Shear;
  blk.eigenvalue = eigenvalue;
  blk.b = b;
  return blk;
}

NormalFormBlock NormalFormBlock::rotation_block(const Rational& theta_over_pi) {
  if (theta_over_pi <= 0 || theta_over_pi >= 2 || theta_over_pi == 1)
    throw std::invalid_argument("rotation angle theta/pi must lie in (0,2) and differ from 1");
  NormalFormBlock blk;
  blk.kind = Kind::Rotation;
  blk.rotation = theta_over_pi;
  return blk;
}

std::string block_to_string(const NormalFormBlock& blk) {
  if (blk.kind == NormalFormBlock::Kind::Shear)
    return "N1(" + std::to_string(blk.eigenvalue) + "," + std::to_string(blk.b) + ")";
  return "R(" + rational_to_string(blk.rotation) + "*pi)";
}

std::optional<Rational> rational_two_cos(const Rational& theta_over_pi) {
  const Integer p = numerator(theta_over_pi);
  const Integer q = denominator(theta_over_pi);
  // cos(p*pi/q) rational only for q <= 3 (Niven); values cycle mod 2q.
  if (q == 1) return Rational(p % 2 == 0 ? 2 : -2);
  if (q == 2) return Rational(0);  // p odd: cos(+-pi/2) = 0
  if (q == 3) {
    const Integer r = p % 6;  // p coprime to 3, so r in {1,2,4,5}
    return (r == 1 || r == 5) ? Rational(1) : Rational(-1);
  }
  return std::nullopt;
}

ExactMatrix block_matrix(const NormalFormBlock& blk) {
  ExactMatrix m(2, 2);
  if (blk.kind == NormalFormBlock::Kind::Shear) {
    m.at(0, 0) = blk.eigenvalue;
    m.at(0, 1) = blk.b;
    m.at(1, 1) = blk.eigenvalue;
    return m;
  }
  const auto c = rational_two_cos(blk.rotation);
  if (!c)
    throw std::domain_error("rotation " + block_to_string(blk) +
                            " has irrational 2cos(theta); no exact matrix form");
  m.at(0, 1) = -1;
  m.at(1, 0) = 1;
  m.at(1, 1) = *c;
  return m;
}

int block_unit_eigenspace_dim(const NormalFormBlock& blk, long long m) {
  if (m < 1) throw std::invalid_argument("iterate count m must be >= 1");
  if (blk.kind == NormalFormBlock::Kind::Shear) {
    const ExactMatrix p = matrix_power(block_matrix(blk), m);
    return static_cast<int>(kernel_dimension(p - ExactMatrix::identity(2)));
  }
  // R(m theta) = I iff m theta is a multiple of 2 pi; otherwise a
  // nontrivial rotation, which has no real eigenvector.
  const Integer p = numerator(blk.rotation);
  const Integer q = denominator(blk.rotation);
  return (Integer(m) * p) % (2 * q) == 0 ? 2 : 0;
}

int nullity_oracle(const NormalFormBlock& a, const NormalFormBlock& b, long long m) {
  if (m < 1) throw std::invalid_argument("iterate count m must be >= 1");
  const bool a_repr = a.kind == NormalFormBlock::Kind::Shear || rational_two_cos(a.rotation).has_value();
  const bool b_repr = b.kind == NormalFormBlock::Kind::Shear || rational_two_cos(b.rotation).has_value();
  if (a_repr && b_repr) {
    const ExactMatrix g = diamond(block_matrix(a), block_matrix(b));
    const ExactMatrix p = matrix_power(g, m);
    return static_cast<int>(kernel_dimension(p - ExactMatrix::identity(4)));
  }
  return block_unit_eigenspace_dim(a, m) + block_unit_eigenspace_dim(b, m);
}

}  // namespace maslovkit
