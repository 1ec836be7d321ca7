#include "sympindex/index_iteration.hpp"

#include "sympindex/errors.hpp"
#include "sympindex/matrix.hpp"

namespace sympindex {

namespace {

bool is_even(const Int& m) { return mpz_even_p(m.get_mpz_t()) != 0; }

/* ceil(m*a) for an angle a, decided exactly */
Int ceil_times(const Angle& a, const Int& m) {
  if (a.is_rational()) return ceil_rat(m * a.rat());
  return a.times(m).ceil_decide();
}

/* phi(m*a) = 0 if m*a integral else 1 */
Int phi_times(const Angle& a, const Int& m) {
  if (a.is_rational()) return phi_rat(m * a.rat());
  return 1;  // integer multiples of a flagged-irrational angle are never integral
}

bool resonant(const Angle& a, const Int& m) {
  if (a.is_rational()) return is_integer(m * a.rat());
  return false;
}

/* B_m = sum_{k=0}^{m-1} R(-k*theta) B R(k*theta) at a resonant iterate
 * (m*theta a full-turn multiple, theta not a half turn).  The mixed
 * components rotate by 2*k*theta and cancel over the full sum, leaving
 *   B_m = m * ( (tr B / 2) I + (B - B^T)/2 ),
 * which is exact rational data even for non-constructible angles. */
RatMat resonant_b_sum(const NormalFormBlock& b, const Int& m) {
  auto e = b.b_matrix();
  Rat half_tr = (e[0] + e[3]) / 2;
  Rat anti = (e[1] - e[2]) / 2;
  Rat mm(m);
  RatMat out(2, 2);
  out.at(0, 0) = mm * half_tr;
  out.at(1, 1) = mm * half_tr;
  out.at(0, 1) = mm * anti;
  out.at(1, 0) = -mm * anti;
  return out;
}

}  // namespace

Int mu_minus_iter(const IndexProfile& p, const Int& m) {
  if (m < 1) throw InputError("iterate count must be positive");
  const auto& dec = p.dec;
  Int p_deg = dec.p_minus() + dec.p_zero();
  Int r = dec.r();
  Int out = m * (p.base_index + p_deg - r);
  for (const auto& a : dec.rot_angles()) out += 2 * ceil_times(a, m);
  out -= r + p_deg;
  if (is_even(m)) out -= dec.q_zero() + dec.q_plus();
  for (const auto& a : dec.n2star_angles()) out += 2 * phi_times(a, m);
  out -= 2 * dec.r_star();
  return out;
}

Int nu_iter(const IndexProfile& p, const Int& m) {
  if (m < 1) throw InputError("iterate count must be positive");
  Int nu = 0;
  for (const auto& b : p.dec.blocks) {
    switch (b.kind) {
      case BlockKind::E_minus:
      case BlockKind::E_plus:
        nu += 1;
        break;
      case BlockKind::E_id:
        nu += 2;
        break;
      case BlockKind::F_minus:
      case BlockKind::F_plus:
        if (is_even(m)) nu += 1;
        break;
      case BlockKind::F_id:
        if (is_even(m)) nu += 2;
        break;
      case BlockKind::Rot:
        if (resonant(b.ang(), m)) nu += 2;
        break;
      case BlockKind::N2Star:
      case BlockKind::N2Zero:
        if (resonant(b.ang(), m)) nu += 4 - resonant_b_sum(b, m).rank();
        break;
      case BlockKind::Hyp2k:
        break;
    }
  }
  return nu;
}

Int mu_plus_iter(const IndexProfile& p, const Int& m) {
  return mu_minus_iter(p, m) + nu_iter(p, m);
}

ApproxRat mean_index(const IndexProfile& p) {
  const auto& dec = p.dec;
  ApproxRat out{Rat(p.base_index + dec.p_minus() + dec.p_zero() - dec.r())};
  for (const auto& a : dec.rot_angles()) out = out + a.value().scaled(2);
  return out;
}

bool mean_index_is_exact(const IndexProfile& p) {
  for (const auto& a : p.dec.rot_angles())
    if (!a.is_rational()) return false;
  return true;
}

GapCheckResult check_gap_inequality(const IndexProfile& p, const Int& m_max) {
  if (m_max < 1) throw InputError("m_max must be positive");
  GapCheckResult res;
  Int e = p.dec.total_elliptic_multiplicity();
  Int mu1 = mu_minus_iter(p, 1);
  /* left side is mu_minus(1) - e/2; compare doubled to stay integral */
  Int lhs2 = 2 * mu1 - e;
  for (Int m = 1; m <= m_max; ++m) {
    Int rhs2 = 2 * (mu_minus_iter(p, m + 1) - mu_plus_iter(p, m));
    if (lhs2 > rhs2) {
      res.ok = false;
      res.first_violation_m = m;
      break;
    }
  }
  res.corollary_applies = mu1 >= Int(p.dec.d());
  return res;
}

ConvexityVerdict certify_dynamical_convexity(const IndexProfile& p, int ambient_n) {
  if (ambient_n < 2) throw InputError("ambient dimension parameter must be >= 2");
  if (p.dec.d() != ambient_n - 1)
    throw InputError("profile dimension must be ambient_n - 1");
  ConvexityVerdict v;
  ApproxRat mean = mean_index(p);
  if (mean.compare(Rat(0)) <= 0) {
    v.pass = false;
    v.reason = "MeanIndexNonpositive";
    return v;
  }
  Int d(p.dec.d());
  Int bound(ambient_n - 1);
  /* least m with m*mean >= bound + d; a lower bound for mean keeps the
   * horizon sound when the mean is only known to interval precision */
  Rat mean_low = mean.val - mean.err;
  if (mean_low <= 0)
    throw PrecisionExhausted("mean index positive but too close to zero to bound the horizon");
  v.m_star = ceil_rat(Rat(bound + d) / mean_low);
  if (v.m_star < 1) v.m_star = 1;
  for (Int m = 1; m <= v.m_star; ++m) {
    if (mu_minus_iter(p, m) < bound) {
      v.pass = false;
      v.violating_m = m;
      v.reason = "IndexBelowBound";
      return v;
    }
  }
  v.pass = true;
  return v;
}

}  // namespace sympindex
