#pragma once
/*
 * Morphism data and the mod-2 degree-formula checker:
 *
 *   (n_Y/n_X) (s_Y/n_Y) = deg f * (s_X/n_X)   in Z/2
 *
 * for a morphism Y -> X with a degree between complete equidimensional
 * models. A morphism datum carries only its degree; divisibility
 * failures (n_X | n_Y, n | s) mark the verdict inapplicable rather than
 * throwing, since they falsify the model, not the formula.
 */

#include <segre/varieties.hpp>

namespace segre {

struct MorphismDatum {
  VarietyModel source;  // Y
  VarietyModel target;  // X
  std::optional<Int> degree;
};

inline MorphismDatum make_morphism(VarietyModel source, VarietyModel target,
                                   std::optional<Int> degree) {
  if (degree) {
    if (source.dim > target.dim && *degree != 0)
      throw std::invalid_argument(
          "make_morphism: a map from higher pure dimension has degree 0");
    if (source.dim == 0 && target.dim == 0 && *degree < 0)
      throw std::invalid_argument(
          "make_morphism: degrees of maps between point models are >= 0");
  }
  return {std::move(source), std::move(target), std::move(degree)};
}

struct FormulaVerdict {
  int lhs_mod2 = 0;
  int rhs_mod2 = 0;
  Int n_ratio = 0;      // n_Y / n_X
  Int sY_over_nY = 0;
  Int sX_over_nX = 0;
  bool holds = false;
  bool applicable = false;
  std::string reason;   // why the check was inapplicable
};

inline FormulaVerdict check_degree_formula(const MorphismDatum& m) {
  const VarietyModel& src = m.source;
  const VarietyModel& dst = m.target;
  if (!src.complete || !dst.complete)
    throw std::invalid_argument(
        "check_degree_formula: both models must be complete");
  if (!m.degree)
    throw std::invalid_argument("check_degree_formula: degree is undefined");
  if (!src.index || !dst.index)
    throw std::invalid_argument("check_degree_formula: index unknown");

  FormulaVerdict v;
  const Int nY = *src.index, nX = *dst.index;
  auto inapplicable = [&](const char* why) {
    v.reason = why;
    return v;
  };
  if (nY % nX != 0) return inapplicable("n_X does not divide n_Y");
  const Int sY = segre_number(src), sX = segre_number(dst);
  if (sY % nY != 0) return inapplicable("n_Y does not divide s_Y");
  if (sX % nX != 0) return inapplicable("n_X does not divide s_X");

  v.applicable = true;
  v.n_ratio = nY / nX;
  v.sY_over_nY = sY / nY;
  v.sX_over_nX = sX / nX;
  v.lhs_mod2 = mod2(v.n_ratio * v.sY_over_nY);
  v.rhs_mod2 = mod2(*m.degree * v.sX_over_nX);
  v.holds = v.lhs_mod2 == v.rhs_mod2;
  return v;
}

/// f1 x f2 has degree (deg f1)(deg f2).
inline MorphismDatum product_morphism(const MorphismDatum& a,
                                      const MorphismDatum& b) {
  if (!a.degree || !b.degree)
    throw std::invalid_argument("product_morphism: factor degree undefined");
  return make_morphism(product(a.source, b.source),
                       product(a.target, b.target), *a.degree * *b.degree);
}

/// s_X is even for every complete integral model of positive dimension;
/// a false return signals a bug in the model, not a theorem failure.
inline bool evenness_check(const VarietyModel& x) {
  if (!x.complete)
    throw std::invalid_argument("evenness_check: model is not complete");
  if (!x.integral)
    throw std::invalid_argument("evenness_check: model is not integral");
  if (x.dim < 1)
    throw std::invalid_argument("evenness_check: dimension must be >= 1");
  return mod2(segre_number(x)) == 0;
}

}  // namespace segre
