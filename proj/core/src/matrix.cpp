#include "sympindex/matrix.hpp"

#include "sympindex/errors.hpp"

namespace sympindex {

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::standard_J(int n) {
  RatMat j(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    j.at(i, n + i) = -1;
    j.at(n + i, i) = 1;
  }
  return j;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (cols_ != o.rows_) throw InputError("matrix shape mismatch");
  RatMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (o.at(k, j) != 0) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

RatMat RatMat::operator+(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch");
  RatMat r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch");
  RatMat r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

RatMat RatMat::scaled(const Rat& c) const {
  RatMat r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

RatMat RatMat::transpose() const {
  RatMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

RatMat RatMat::pow(const Int& m) const {
  if (rows_ != cols_) throw InputError("pow needs a square matrix");
  if (m < 0) throw InputError("pow needs m >= 0");
  RatMat base = *this, acc = identity(rows_);
  Int e = m;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

namespace {
/* row echelon; returns rank, optionally keeps the reduced matrix */
int echelon(std::vector<Rat>& a, int rows, int cols) {
  int rank = 0;
  auto at = [&](int i, int j) -> Rat& { return a[static_cast<std::size_t>(i) * cols + j]; };
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (at(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
    Rat inv = Rat(1) / at(rank, col);
    for (int j = col; j < cols; ++j) at(rank, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == rank || at(i, col) == 0) continue;
      Rat f = at(i, col);
      for (int j = col; j < cols; ++j) at(i, j) -= f * at(rank, j);
    }
    ++rank;
  }
  return rank;
}
}  // namespace

int RatMat::rank() const {
  auto work = a_;
  return echelon(work, rows_, cols_);
}

std::vector<std::vector<Rat>> RatMat::kernel_basis() const {
  auto work = a_;
  int rk = echelon(work, rows_, cols_);
  auto at = [&](int i, int j) -> const Rat& {
    return work[static_cast<std::size_t>(i) * cols_ + j];
  };
  std::vector<int> pivot_col(rk, -1);
  std::vector<bool> is_pivot(cols_, false);
  for (int i = 0, col = 0; i < rk; ++i) {
    while (col < cols_ && at(i, col) == 0) ++col;
    pivot_col[i] = col;
    if (col < cols_) is_pivot[col] = true;
  }
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols_, Rat(0));
    v[free] = 1;
    for (int i = 0; i < rk; ++i)
      if (pivot_col[i] >= 0 && pivot_col[i] < cols_) v[pivot_col[i]] = -at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rat RatMat::det() const {
  if (rows_ != cols_) throw InputError("det needs a square matrix");
  auto a = a_;
  int n = rows_;
  auto at = [&](int i, int j) -> Rat& { return a[static_cast<std::size_t>(i) * n + j]; };
  Rat d(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (at(i, col) != 0) { piv = i; break; }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(col, j));
      d = -d;
    }
    d *= at(col, col);
    Rat inv = Rat(1) / at(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (at(i, col) == 0) continue;
      Rat f = at(i, col) * inv;
      for (int j = col; j < n; ++j) at(i, j) -= f * at(col, j);
    }
  }
  return d;
}

std::vector<Rat> RatMat::charpoly() const {
  /* Faddeev-LeVerrier */
  if (rows_ != cols_) throw InputError("charpoly needs a square matrix");
  int n = rows_;
  std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1;
  RatMat Mk(n, n);  // zero
  RatMat I = identity(n);
  for (int k = 1; k <= n; ++k) {
    Mk = (*this) * Mk + I.scaled(c[static_cast<std::size_t>(k) - 1]);
    RatMat AM = (*this) * Mk;
    Rat tr(0);
    for (int i = 0; i < n; ++i) tr += AM.at(i, i);
    c[static_cast<std::size_t>(k)] = -tr / k;
  }
  return c;  // x^n + c1 x^{n-1} + ... + cn
}

bool is_symplectic(const RatMat& M) {
  if (M.rows() != M.cols() || M.rows() % 2 != 0) return false;
  RatMat J = RatMat::standard_J(M.rows() / 2);
  return M.transpose() * J * M == J;
}

void SymplecticMatrix::validate() const {
  if (M.rows() == 0 || M.rows() != M.cols() || M.rows() % 2 != 0)
    throw InputError("symplectic matrix must be square of even size");
  if (!is_symplectic(M))
    throw NotSymplectic("matrix fails M^T J M = J");
}

bool representable_over_Q(const NormalFormBlock& b) {
  /* N2 blocks carry the perturbation data B in a parametrization that is not
   * itself a matrix entry, so no canonical rational representative exists. */
  if (b.kind == BlockKind::N2Star || b.kind == BlockKind::N2Zero) return false;
  if (!b.has_angle()) return true;
  const Angle& a = b.ang();
  if (!a.is_rational()) return false;
  const Rat& v = a.rat();
  return v == Rat(1, 4) || v == Rat(3, 4);
}

namespace {
/* cos/sin of a quarter-turn multiple */
void quarter_cs(const Rat& a, Rat& c, Rat& s) {
  if (a == Rat(1, 4)) { c = 0; s = 1; }
  else if (a == Rat(3, 4)) { c = 0; s = -1; }
  else throw InputError("only quarter-turn rotations are rational");
}

}  // namespace

RatMat representative_matrix(const NormalFormBlock& b) {
  switch (b.kind) {
    case BlockKind::E_minus:
    case BlockKind::E_id:
    case BlockKind::E_plus: {
      RatMat m = RatMat::identity(2);
      if (b.kind == BlockKind::E_minus) m.at(0, 1) = 1;
      if (b.kind == BlockKind::E_plus) m.at(0, 1) = -1;
      return m;
    }
    case BlockKind::F_minus:
    case BlockKind::F_id:
    case BlockKind::F_plus: {
      RatMat m = RatMat::identity(2).scaled(Rat(-1));
      if (b.kind == BlockKind::F_minus) m.at(0, 1) = 1;
      if (b.kind == BlockKind::F_plus) m.at(0, 1) = -1;
      return m;
    }
    case BlockKind::Rot: {
      Rat c, s;
      quarter_cs(b.ang().rat(), c, s);
      RatMat m(2, 2);
      m.at(0, 0) = c; m.at(0, 1) = -s;
      m.at(1, 0) = s; m.at(1, 1) = c;
      return m;
    }
    case BlockKind::N2Star:
    case BlockKind::N2Zero:
      throw InputError("N2 blocks have no canonical rational representative");
    case BlockKind::Hyp2k: {
      /* first k coordinates are the q side, last k the p side */
      RatMat m(2 * b.k, 2 * b.k);
      for (int i = 0; i < b.k; ++i) {
        m.at(i, i) = 2;
        m.at(b.k + i, b.k + i) = Rat(1, 2);
      }
      return m;
    }
  }
  throw InputError("unknown block kind");
}

namespace {
/* direct sum that keeps the (q, p) splitting symplectic: interleave the
 * first and second halves of each summand */
RatMat symplectic_direct_sum(const std::vector<RatMat>& parts) {
  int total = 0;
  for (const auto& p : parts) total += p.rows();
  int n = total / 2;
  RatMat out(total, total);
  int offset = 0;
  for (const auto& p : parts) {
    int half = p.rows() / 2;
    for (int i = 0; i < p.rows(); ++i)
      for (int j = 0; j < p.rows(); ++j) {
        if (p.at(i, j) == 0) continue;
        int gi = i < half ? offset + i : n + offset + (i - half);
        int gj = j < half ? offset + j : n + offset + (j - half);
        out.at(gi, gj) = p.at(i, j);
      }
    offset += half;
  }
  return out;
}
}  // namespace

RatMat representative_matrix(const NormalFormDecomposition& dec) {
  std::vector<RatMat> parts;
  parts.reserve(dec.blocks.size());
  for (const auto& b : dec.blocks) {
    if (!representable_over_Q(b))
      throw InputError("block has no rational representative matrix");
    parts.push_back(representative_matrix(b));
  }
  if (parts.empty()) return RatMat(0, 0);
  return symplectic_direct_sum(parts);
}

}  // namespace sympindex
