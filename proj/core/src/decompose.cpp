#include "sympindex/decompose.hpp"

#include <mpfr.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "sympindex/errors.hpp"

namespace sympindex {

namespace {

/* ---- dense rational polynomials, ascending coefficients ---- */

using Poly = std::vector<Rat>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Rat eval(const Poly& p, const Rat& x) {
  Rat acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly deriv(const Poly& p) {
  Poly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(Rat(i) * p[i]);
  return out;
}

Poly add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

Poly scale(const Poly& a, const Rat& c) {
  if (c == 0) return {};
  Poly out = a;
  for (auto& x : out) x *= c;
  return out;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

/* quotient and remainder of a by b, b nonzero */
void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
  rem = a;
  trim(rem);
  quo.assign(rem.size() > b.size() ? rem.size() - b.size() + 1 : 1, Rat(0));
  while (static_cast<int>(rem.size()) >= static_cast<int>(b.size()) &&
         !rem.empty()) {
    Rat c = rem.back() / b.back();
    std::size_t shift = rem.size() - b.size();
    quo[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
    trim(rem);
  }
  trim(quo);
}

/* divide out a known root: p / (x - x0), remainder must vanish */
Poly deflate(const Poly& p, const Rat& x0) {
  Poly out(p.size() - 1, Rat(0));
  Rat carry = 0;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry * x0;
    out[i - 1] = carry;
  }
  return out;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

/* ---- Sturm machinery ---- */

std::vector<Poly> sturm_chain(const Poly& q) {
  std::vector<Poly> chain{q, deriv(q)};
  trim(chain[1]);
  while (!chain.back().empty() && deg(chain.back()) > 0) {
    Poly quo, rem;
    divmod(chain[chain.size() - 2], chain.back(), quo, rem);
    for (auto& c : rem) c = -c;
    trim(rem);
    if (rem.empty()) break;
    chain.push_back(std::move(rem));
  }
  return chain;
}

int variations(const std::vector<Poly>& chain, const Rat& x) {
  int count = 0, last = 0;
  for (const auto& p : chain) {
    Rat v = eval(p, x);
    int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

/* distinct roots in (a, b] */
int roots_in(const std::vector<Poly>& chain, const Rat& a, const Rat& b) {
  return variations(chain, a) - variations(chain, b);
}

/* a split point strictly inside (lo, hi) avoiding the zero set of q */
Rat pick_split(const Poly& q, const Rat& lo, const Rat& hi) {
  int n = deg(q) + 2;
  for (int step = 0; step <= n; ++step) {
    /* walk outward from the middle of the (1..n-1)/n grid */
    int j = (n / 2) + (step % 2 ? (step + 1) / 2 : -(step / 2));
    if (j <= 0 || j >= n) continue;
    Rat c = lo + (hi - lo) * Rat(j, n);
    c.canonicalize();
    if (eval(q, c) != 0) return c;
  }
  throw PrecisionExhausted("no admissible split point found");
}

struct RootBox {
  Rat lo, hi;  // q has exactly one root in (lo, hi], q(lo) != 0, q(hi) != 0
};

void bisect_once(const Poly& q, const std::vector<Poly>& chain, RootBox& box) {
  Rat c = pick_split(q, box.lo, box.hi);
  if (roots_in(chain, box.lo, c) == 1)
    box.hi = c;
  else
    box.lo = c;
}

void refine_below(const Poly& q, const std::vector<Poly>& chain, RootBox& box,
                  const Rat& width) {
  while (box.hi - box.lo > width) bisect_once(q, chain, box);
}

std::vector<RootBox> isolate_roots(const Poly& q) {
  std::vector<RootBox> out;
  if (deg(q) < 1) return out;
  const auto chain = sturm_chain(q);
  /* Cauchy bound, nudged off the zero set */
  Rat bound = 1;
  for (std::size_t i = 0; i + 1 < q.size(); ++i) {
    Rat m = q[i] / q.back();
    if (m < 0) m = -m;
    bound = std::max(bound, Rat(m + 1));
  }
  while (eval(q, bound) == 0) bound += 1;
  while (eval(q, -bound) == 0) bound += 1;
  std::vector<RootBox> work{{-bound, bound}};
  while (!work.empty()) {
    RootBox b = work.back();
    work.pop_back();
    int k = roots_in(chain, b.lo, b.hi);
    if (k == 0) continue;
    if (k == 1) {
      out.push_back(b);
      continue;
    }
    Rat c = pick_split(q, b.lo, b.hi);
    work.push_back({b.lo, c});
    work.push_back({c, b.hi});
  }
  std::sort(out.begin(), out.end(),
            [](const RootBox& a, const RootBox& b) { return a.lo < b.lo; });
  return out;
}

/* interval Horner evaluation over [lo, hi] */
std::pair<Rat, Rat> ieval(const Poly& p, const Rat& lo, const Rat& hi) {
  Rat L = 0, H = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    Rat a = L * lo, b = L * hi, c = H * lo, d = H * hi;
    Rat nl = std::min(std::min(a, b), std::min(c, d));
    Rat nh = std::max(std::max(a, b), std::max(c, d));
    L = nl + *it;
    H = nh + *it;
  }
  return {L, H};
}

/* ---- exact linear algebra helpers ---- */

/* one solution w of A w = rhs; empty when inconsistent */
std::vector<Rat> solve(RatMat A, std::vector<Rat> rhs) {
  const int n = A.rows(), m = A.cols();
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < m && row < n; ++col) {
    int p = -1;
    for (int i = row; i < n; ++i)
      if (A.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row) {
      for (int j = 0; j < m; ++j) std::swap(A.at(p, j), A.at(row, j));
      std::swap(rhs[p], rhs[row]);
    }
    Rat inv = 1 / A.at(row, col);
    for (int j = 0; j < m; ++j) A.at(row, j) *= inv;
    rhs[row] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == row || A.at(i, col) == 0) continue;
      Rat f = A.at(i, col);
      for (int j = 0; j < m; ++j) A.at(i, j) -= f * A.at(row, j);
      rhs[i] -= f * rhs[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < n; ++i)
    if (rhs[i] != 0) return {};
  std::vector<Rat> w(m, Rat(0));
  for (int i = 0; i < row; ++i) w[pivot_col[i]] = rhs[i];
  return w;
}

std::vector<Rat> mat_vec(const RatMat& A, const std::vector<Rat>& v) {
  std::vector<Rat> out(A.rows(), Rat(0));
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) out[i] += A.at(i, j) * v[j];
  return out;
}

/* omega(u, v) = u^T J v for the standard form */
Rat omega(const std::vector<Rat>& u, const std::vector<Rat>& v) {
  const int d = static_cast<int>(u.size()) / 2;
  Rat acc = 0;
  for (int i = 0; i < d; ++i) acc += u[d + i] * v[i] - u[i] * v[d + i];
  return acc;
}

RatMat shifted(const RatMat& M, const Rat& c) {
  RatMat out = M;
  for (int i = 0; i < M.rows(); ++i) out.at(i, i) += c;
  return out;
}

/* ---- Krein sign at an isolated elliptic root of the trace variable ---- */

/* For the root y0 of A (simple there), f(y) = A(y)/(y - y0) maps any basis
 * vector into ker(Y - y0), the invariant plane of the pair.  Writing the
 * division symbolically in the unknown root makes
 *   t(z) = omega(f_z(Y) w, M f_z(Y) w)
 * an exact rational polynomial; the Krein sign is sign(t(y0)), decided by
 * shrinking the root box until the interval evaluation clears zero. */
int krein_sign(const RatMat& M, const RatMat& Y, const Poly& A, const Poly& q,
               const std::vector<Poly>& chain, RootBox& box) {
  const int m = deg(A);
  const int dim = M.rows();
  /* c_k(z): quotient coefficients of A(y) / (y - z) */
  std::vector<Poly> c(m);
  c[m - 1] = {A[m]};
  for (int k = m - 1; k >= 1; --k) {
    Poly shiftedc(c[k].size() + 1, Rat(0));
    for (std::size_t i = 0; i < c[k].size(); ++i) shiftedc[i + 1] = c[k][i];
    c[k - 1] = add({A[k]}, shiftedc);
  }
  for (int w0 = 0; w0 < dim; ++w0) {
    /* powers Y^k e_{w0} */
    std::vector<std::vector<Rat>> pw(m);
    pw[0].assign(dim, Rat(0));
    pw[0][w0] = 1;
    for (int k = 1; k < m; ++k) pw[k] = mat_vec(Y, pw[k - 1]);
    /* v_i(z) and u = M v */
    std::vector<Poly> v(dim), u(dim);
    for (int k = 0; k < m; ++k)
      for (int i = 0; i < dim; ++i)
        if (pw[k][i] != 0) v[i] = add(v[i], scale(c[k], pw[k][i]));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (M.at(i, j) != 0) u[i] = add(u[i], scale(v[j], M.at(i, j)));
    Poly t;
    const int half = dim / 2;
    for (int i = 0; i < half; ++i)
      t = add(t, add(mul(v[half + i], u[i]), scale(mul(v[i], u[half + i]), Rat(-1))));
    trim(t);
    if (t.empty()) continue;
    for (int iter = 0; iter < 160; ++iter) {
      auto [lo, hi] = ieval(t, box.lo, box.hi);
      if (lo > 0) return 1;
      if (hi < 0) return -1;
      bisect_once(q, chain, box);
    }
  }
  throw PrecisionExhausted(
      "Krein sign undecidable within the precision budget");
}

/* ---- angle construction through certified acos intervals ---- */

Rat mpfr_to_rat(mpfr_t x, mpfr_rnd_t rnd) {
  mpf_t f;
  mpf_init2(f, mpfr_get_prec(x) + 8);
  mpfr_get_f(f, x, rnd);
  Rat out = Rat(mpf_class(f));
  mpf_clear(f);
  return out;
}

/* the rotation parameter acos(y0/2)/(2 pi) in (0, 1/2), certified from a
 * rational enclosure [lo, hi] of y0 */
Angle elliptic_angle(const Rat& lo, const Rat& hi, int digits) {
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 4 + 128);
  mpfr_t c, acosv, pi2, a;
  mpfr_inits2(prec, c, acosv, pi2, a, static_cast<mpfr_ptr>(nullptr));

  /* lower bound: acos is decreasing, dividing by a larger 2*pi shrinks */
  mpfr_set_q(c, Rat(hi / 2).get_mpq_t(), MPFR_RNDU);
  mpfr_acos(acosv, c, MPFR_RNDD);
  mpfr_const_pi(pi2, MPFR_RNDU);
  mpfr_mul_ui(pi2, pi2, 2, MPFR_RNDU);
  mpfr_div(a, acosv, pi2, MPFR_RNDD);
  Rat a_lo = mpfr_to_rat(a, MPFR_RNDD);

  mpfr_set_q(c, Rat(lo / 2).get_mpq_t(), MPFR_RNDD);
  mpfr_acos(acosv, c, MPFR_RNDU);
  mpfr_const_pi(pi2, MPFR_RNDD);
  mpfr_mul_ui(pi2, pi2, 2, MPFR_RNDD);
  mpfr_div(a, acosv, pi2, MPFR_RNDU);
  Rat a_hi = mpfr_to_rat(a, MPFR_RNDU);

  mpfr_clears(c, acosv, pi2, a, static_cast<mpfr_ptr>(nullptr));

  Rat approx = (a_lo + a_hi) / 2;
  Rat gap = (a_hi - a_lo) * 4;
  approx.canonicalize();
  gap.canonicalize();
  return Angle::irrational_exactish(approx, gap);
}

NormalFormBlock simple_block(BlockKind k) {
  NormalFormBlock b;
  b.kind = k;
  return b;
}

NormalFormBlock rot_block(const Angle& a) {
  NormalFormBlock b;
  b.kind = BlockKind::Rot;
  b.angle = a;
  return b;
}

NormalFormBlock hyp_block(int k) {
  NormalFormBlock b;
  b.kind = BlockKind::Hyp2k;
  b.k = k;
  return b;
}

/* E/F block list at eigenvalue +-1 with total algebraic multiplicity a */
void unit_eigen_blocks(const RatMat& M, const Rat& eigen, const Int& a,
                       std::vector<NormalFormBlock>& out) {
  if (a == 0) return;
  if (mpz_even_p(a.get_mpz_t()) == 0)
    throw NonGenericSpectrum("odd multiplicity at an eigenvalue of modulus 1");
  RatMat K = shifted(M, -eigen);
  Int g = K.kernel_dimension();
  const bool plus_one = eigen > 0;
  if (g == a) {
    for (Int i = 0; i < a / 2; ++i)
      out.push_back(simple_block(plus_one ? BlockKind::E_id : BlockKind::F_id));
    return;
  }
  if (a != 2)
    throw NonGenericSpectrum(
        "eigenvalue +-1 with multiplicity above two and a nontrivial Jordan "
        "part needs symbolic input");
  /* one 2x2 Jordan cell: (M - eigen) w = u, the sign of omega(u, w) picks
   * the normalized off-diagonal sign (calibrated on the representatives) */
  auto basis = K.kernel_basis();
  if (basis.size() != 1)
    throw NonGenericSpectrum("unexpected kernel at eigenvalue +-1");
  std::vector<Rat> w = solve(K, basis.front());
  if (w.empty())
    throw NonGenericSpectrum("eigenvalue +-1 Jordan cell is not 2x2");
  Rat s = omega(basis.front(), w);
  if (s == 0) throw NonGenericSpectrum("degenerate pairing at eigenvalue +-1");
  if (plus_one)
    out.push_back(simple_block(s < 0 ? BlockKind::E_minus : BlockKind::E_plus));
  else
    out.push_back(simple_block(s < 0 ? BlockKind::F_minus : BlockKind::F_plus));
}

}  // namespace

NormalFormDecomposition decompose_numeric(const SymplecticMatrix& Msym,
                                          int precision_digits) {
  if (precision_digits < 8 || precision_digits > 100000)
    throw InputError("precision must lie in [8, 100000] digits");
  Msym.validate();
  const RatMat& M = Msym.M;
  const int d = Msym.d();

  /* characteristic polynomial, ascending */
  std::vector<Rat> cp = M.charpoly();
  Poly p(cp.rbegin(), cp.rend());

  Int a1 = 0, am1 = 0;
  while (eval(p, Rat(1)) == 0) {
    p = deflate(p, Rat(1));
    ++a1;
  }
  while (eval(p, Rat(-1)) == 0) {
    p = deflate(p, Rat(-1));
    ++am1;
  }

  NormalFormDecomposition dec;
  unit_eigen_blocks(M, Rat(1), a1, dec.blocks);
  unit_eigen_blocks(M, Rat(-1), am1, dec.blocks);

  /* remaining spectrum through the trace variable y = x + 1/x: the reduced
   * polynomial is self-reciprocal of even degree 2d', so it equals
   * x^{d'} q(y) with q built from the x^k + x^{-k} recursion */
  const int d2 = deg(p);
  if (d2 % 2 != 0) throw NonGenericSpectrum("spectrum is not self-reciprocal");
  const int dprime = d2 / 2;
  for (int i = 0; i <= d2; ++i)
    if (p[i] != p[d2 - i])
      throw NotSymplectic("characteristic polynomial is not self-reciprocal");
  Poly q;
  if (dprime > 0) {
    Poly C_prev{Rat(2)}, C_cur{Rat(0), Rat(1)};  // x^k + x^-k in y
    q = scale(C_prev, p[dprime] / 2);
    for (int k = 1; k <= dprime; ++k) {
      q = add(q, scale(C_cur, p[dprime + k]));
      Poly C_next = add(mul({Rat(0), Rat(1)}, C_cur), scale(C_prev, Rat(-1)));
      C_prev = std::move(C_cur);
      C_cur = std::move(C_next);
    }
    trim(q);
  }

  if (deg(q) >= 1) {
    Poly g = poly_gcd(q, deriv(q));
    if (deg(g) >= 1)
      throw NonGenericSpectrum(
          "a repeated eigenvalue class (N2-type or duplicated pair) needs "
          "symbolic input");
  }

  /* constructible elliptic roots give rational angles */
  struct RationalTurn {
    Rat y;
    Rat angle;
  };
  const RationalTurn turns[] = {
      {Rat(0), Rat(1, 4)}, {Rat(1), Rat(1, 6)}, {Rat(-1), Rat(1, 3)}};
  RatMat Minv = RatMat::standard_J(d).scaled(Rat(-1)) * M.transpose() *
                RatMat::standard_J(d);
  for (const auto& turn : turns) {
    if (deg(q) < 1 || eval(q, turn.y) != 0) continue;
    q = deflate(q, turn.y);
    RatMat K = (M * M) - M.scaled(turn.y) + RatMat::identity(2 * d);
    auto basis = K.kernel_basis();
    if (basis.empty())
      throw NonGenericSpectrum("elliptic pair without a rational plane");
    Rat s = omega(basis.front(), mat_vec(M, basis.front()));
    if (s == 0) throw NonGenericSpectrum("vanishing pairing on elliptic plane");
    Angle a = Angle::rational(s < 0 ? turn.angle : Rat(1) - turn.angle);
    dec.blocks.push_back(rot_block(a));
  }

  if (deg(q) >= 1) {
    /* annihilator of Y = M + M^-1 with the current roots simple */
    RatMat Y = M + Minv;
    Poly A = q;
    if (a1 > 0) A = mul(A, Poly{Rat(-2), Rat(1)});
    if (am1 > 0) A = mul(A, Poly{Rat(2), Rat(1)});

    const auto chain = sturm_chain(q);
    auto boxes = isolate_roots(q);
    int real_roots = static_cast<int>(boxes.size());
    for (auto& box : boxes) {
      /* separate from the double points y = +-2 first */
      while ((box.lo < 2 && box.hi > 2) || (box.lo < -2 && box.hi > -2))
        bisect_once(q, chain, box);
      if (box.lo >= 2 || box.hi <= -2) {
        dec.blocks.push_back(hyp_block(1));
        continue;
      }
      int krein = krein_sign(M, Y, A, q, chain, box);
      Rat width = Rat(1, 10);
      for (int i = 0; i < precision_digits + 8; ++i) width /= 10;
      refine_below(q, chain, box, width);
      Angle a = elliptic_angle(box.lo, box.hi, precision_digits);
      dec.blocks.push_back(rot_block(krein < 0 ? a : a.conjugate()));
    }
    int complex_pairs = (deg(q) - real_roots) / 2;
    for (int i = 0; i < complex_pairs; ++i) dec.blocks.push_back(hyp_block(2));
  }

  dec.validate();
  if (dec.d() != d)
    throw NonGenericSpectrum("block units do not add up to the dimension");
  return dec;
}

NormalFormDecomposition decompose_numeric(const SymplecticMatrix& M) {
  return decompose_numeric(M, 60);
}

}  // namespace sympindex
