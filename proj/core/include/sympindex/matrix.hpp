#pragma once

#include <vector>

#include "sympindex/blocks.hpp"
#include "sympindex/rational.hpp"

namespace sympindex {

/* Dense exact-rational matrices, sized for normal-form work (dimensions in
 * the tens), not for bulk numerics. */
class RatMat {
 public:
  RatMat() = default;
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Rat(0)) {}

  static RatMat identity(int n);
  static RatMat standard_J(int n);  // 2n x 2n block form [[0,-I],[I,0]]

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  RatMat operator*(const RatMat& o) const;
  RatMat operator+(const RatMat& o) const;
  RatMat operator-(const RatMat& o) const;
  RatMat scaled(const Rat& c) const;
  RatMat transpose() const;
  RatMat pow(const Int& m) const;

  bool operator==(const RatMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  int rank() const;
  int kernel_dimension() const { return cols_ - rank(); }
  std::vector<std::vector<Rat>> kernel_basis() const;
  Rat det() const;

  /* coefficients of det(xI - A), degree n down to 0 */
  std::vector<Rat> charpoly() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

/* M^T J M = J, exactly. */
bool is_symplectic(const RatMat& M);

/* An exact symplectic matrix of size 2d x 2d. */
struct SymplecticMatrix {
  RatMat M;
  int d() const { return M.rows() / 2; }
  void validate() const;  // throws NotSymplectic / InputError
};

/* Representative matrices over the rationals, for the kernel-based nullity
 * oracle and validation. Rotation-type blocks are representable only at the
 * quarter turns; representable(b) says whether a block qualifies. */
bool representable_over_Q(const NormalFormBlock& b);
RatMat representative_matrix(const NormalFormBlock& b);
RatMat representative_matrix(const NormalFormDecomposition& dec);

}  // namespace sympindex
