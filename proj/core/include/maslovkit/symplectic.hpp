#pragma once

#include "maslovkit/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace maslovkit {

// Dense matrix over Q, row-major.  Sized for 2x2 and 4x4 monodromy work;
// all operations are exact.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols);
  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  ExactMatrix transpose() const;

  friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y);
  friend ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y);
  friend ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y);
  friend bool operator==(const ExactMatrix& x, const ExactMatrix& y);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> a_;
};

// J = [[0, -I_n], [I_n, 0]] for n in {1, 2}.
ExactMatrix standard_j(int n);

// M^T J M == J; requires a square matrix of even dimension (2 or 4).
bool is_symplectic(const ExactMatrix& m);

// Interleaved symplectic direct sum of two 2x2 blocks: a acts on
// coordinates (1,3), b on (2,4), so the result is symplectic w.r.t.
// standard_j(2).  Eigenvalues of the product are the union of the
// blocks' eigenvalues.
ExactMatrix diamond(const ExactMatrix& a, const ExactMatrix& b);

// M^k by repeated squaring; k >= 0.
ExactMatrix matrix_power(const ExactMatrix& m, long long k);

// Exact rank via fraction-free Gaussian elimination.
std::size_t matrix_rank(ExactMatrix m);

// dim ker M = cols - rank.
std::size_t kernel_dimension(const ExactMatrix& m);

// A 2x2 symplectic normal-form block: either a shear
//   N1(lambda, b) = [[lambda, b], [0, lambda]],  lambda in {1, -1},
// or a rotation R(theta) with theta/pi = p/q rational in lowest terms,
// 0 < p/q < 2, p/q != 1.
struct NormalFormBlock {
  enum class Kind { Shear, Rotation };

  Kind kind = Kind::Shear;
  int eigenvalue = 1;    // shear only: +1 or -1
  int b = 0;             // shear only: -1, 0, or 1
  Rational rotation = 0; // rotation only: theta/pi

  static NormalFormBlock shear(int eigenvalue, int b);
  static NormalFormBlock rotation_block(const Rational& theta_over_pi);

  friend bool operator==(const NormalFormBlock&, const NormalFormBlock&) = default;
};

std::string block_to_string(const NormalFormBlock& blk);

// 2*cos(theta) when rational.  By Niven's theorem this happens exactly
// for q <= 3 (cos theta in {0, +-1/2, +-1}); nullopt otherwise.
std::optional<Rational> rational_two_cos(const Rational& theta_over_pi);

// The block as an exact 2x2 matrix.  Shears directly; rotations via the
// conjugate companion form [[0, -1], [1, 2cos theta]] (same eigenvalues,
// trace, and powers' unit-eigenspace dimensions), which exists iff
// 2cos(theta) is rational.  Throws std::domain_error otherwise.
ExactMatrix block_matrix(const NormalFormBlock& blk);

// dim ker(B^m - I), exact for every block: by matrix power when the block
// is representable, by order arithmetic for irrational rotations
// (R(theta)^m = I iff m p = 0 mod 2q; a rotation != I has no eigenvalue 1).
int block_unit_eigenspace_dim(const NormalFormBlock& blk, long long m);

// Nullity of the m-th iterate of a ⋄-product monodromy:
// dim ker((A ⋄ B)^m - I).  Uses the exact 4x4 power whenever both blocks
// are representable, and the per-block decomposition otherwise; m >= 1.
int nullity_oracle(const NormalFormBlock& a, const NormalFormBlock& b, long long m);

}  // namespace maslovkit
