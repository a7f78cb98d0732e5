#pragma once
/*
 * Strong 2-incompressibility certificates. The sufficient criterion is
 * that s_X/n_X is odd, i.e. v_2(s_X) = v_2(n_X); only v_2 of the index
 * is consumed, so models with unknown index but known 2-adic index data
 * (involution varieties) certify fine. The criterion is one-directional:
 * a failure is reported as inconclusive, never as "compressible".
 *
 * Family reports recompute every Segre number along independent routes
 * (binomial closed forms, Kummer carry counting) and flag mismatches.
 */

#include <segre/varieties.hpp>

#include <vector>

namespace segre {

enum class Conclusion { strongly_2_incompressible, inconclusive };

inline const char* to_string(Conclusion c) {
  return c == Conclusion::strongly_2_incompressible
             ? "strongly_2_incompressible"
             : "inconclusive";
}

struct Certificate {
  VarietyModel variety;
  Int segre;
  Valuation v2_segre;
  unsigned v2_index;
  bool criterion_odd_quotient;
  Conclusion conclusion;
};

inline Certificate certify(const VarietyModel& x) {
  if (!x.complete || !x.integral)
    throw std::invalid_argument(
        "certify: model must be complete and integral");
  std::optional<unsigned> v2n = x.index_two_adic;
  if (!v2n && x.index)
    v2n = static_cast<unsigned>(vp(*x.index, 2).value());
  if (!v2n)
    throw std::invalid_argument("certify: 2-adic index data unknown");

  Int segre = segre_number(x);
  Valuation v2_segre = vp(segre, 2);
  // the index divides the segre number, so v_2(n_X) <= v_2(s_X)
  if (!v2_segre.is_infinite() && v2_segre.value() < *v2n)
    throw std::logic_error(
        "certify: v_2(index) exceeds v_2(segre); the model is inconsistent");
  bool criterion = v2_segre == Valuation::finite(*v2n);
  return Certificate{x,
                     std::move(segre),
                     v2_segre,
                     *v2n,
                     criterion,
                     criterion ? Conclusion::strongly_2_incompressible
                               : Conclusion::inconclusive};
}

enum class Family { severi_brauer, quadric, involution };

struct FamilyRow {
  unsigned n;
  unsigned dim;
  Certificate certificate;
  Int closed_form;             // binomial-formula value of the number
  unsigned long v2_by_carries;  // Kummer route to v_2 of the number
  bool closed_form_match;
  bool valuation_match;
};

namespace detail {

// The carry route uses the ultrametric rule v(a + b) = min(v(a), v(b))
// for v(a) != v(b), so the two term valuations must stay distinct.
inline unsigned long min_distinct(unsigned long v1, unsigned long v2) {
  if (v1 == v2)
    throw std::logic_error("family_row: carry valuations collide");
  return std::min(v1, v2);
}

inline FamilyRow family_row(Family family, unsigned n) {
  const long two_n = 1l << n;
  Certificate cert = [&] {
    switch (family) {
      case Family::severi_brauer:
        return certify(severi_brauer(n));
      case Family::quadric:
        return certify(quadric((1u << n) - 1, true));
      default:
        return certify(involution_variety(n));
    }
  }();
  Int closed = 0;
  unsigned long carries = 0;
  switch (family) {
    case Family::severi_brauer:
      // s = -binom(2^{n+1}-2, 2^n-1)
      closed = -binomial(Int(2 * two_n - 2), two_n - 1);
      carries = vp_binomial_kummer(two_n - 1, two_n - 1, 2);
      break;
    case Family::quadric:
      // s = -2 binom(2^{n+1}-1, 2^n-1) + 4 binom(2^{n+1}-2, 2^n-2);
      // its residue mod 4 is that of the first term alone, namely 2.
      closed = -2 * binomial(Int(2 * two_n - 1), two_n - 1) +
               4 * binomial(Int(2 * two_n - 2), two_n - 2);
      carries = min_distinct(1 + vp_binomial_kummer(two_n - 1, two_n, 2),
                             2 + vp_binomial_kummer(two_n - 2, two_n, 2));
      break;
    case Family::involution:
      // s = 2 binom(2^{n+1}-3, 2^n-2) - 4 binom(2^{n+1}-4, 2^n-3)
      closed = 2 * binomial(Int(2 * two_n - 3), two_n - 2) -
               4 * binomial(Int(2 * two_n - 4), two_n - 3);
      carries =
          min_distinct(1 + vp_binomial_kummer(two_n - 2, two_n - 1, 2),
                       2 + vp_binomial_kummer(two_n - 3, two_n - 1, 2));
      break;
  }
  bool closed_match = cert.segre == closed;
  bool valuation_match = cert.v2_segre == Valuation::finite(carries) &&
                         vp(closed, 2) == cert.v2_segre;
  unsigned dim = cert.variety.dim;
  return FamilyRow{n,      dim,          std::move(cert), std::move(closed),
                   carries, closed_match, valuation_match};
}

}  // namespace detail

/// First n for which the family's closed form is defined.
inline unsigned family_first_n(Family family) {
  return family == Family::involution ? 2u : 1u;
}

/// Per-n certificates with closed-form and carry-counting cross-checks.
/// Rows with closed_form_match or valuation_match false indicate an
/// internal inconsistency; callers treat them as hard failures.
inline std::vector<FamilyRow> family_report(Family family, unsigned n_max) {
  if (n_max < 1)
    throw std::invalid_argument("family_report: n_max must be >= 1");
  std::vector<FamilyRow> rows;
  for (unsigned n = family_first_n(family); n <= n_max; ++n)
    rows.push_back(detail::family_row(family, n));
  return rows;
}

/// Largest guaranteed bound on the first Witt index of a non-degenerate
/// anisotropic quadratic form of dimension d >= 3: d - 2^n for the
/// largest n with 2^n <= d - 1.
inline unsigned witt_index_bound(unsigned d) {
  if (d < 3)
    throw std::invalid_argument("witt_index_bound: d must be >= 3");
  unsigned n = 1;
  while ((1u << (n + 1)) <= d - 1) ++n;
  return d - (1u << n);
}

}  // namespace segre
