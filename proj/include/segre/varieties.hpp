#pragma once
/*
 * The catalogue of formal variety models: projective spaces,
 * Severi-Brauer varieties, quadrics (split and anisotropic), involution
 * varieties, and products. A model carries its dimension, the ring model
 * of its Chow ring with the degree functional, the total Chern class of
 * the tangent bundle, index data and flags.
 *
 * Twisted forms (Severi-Brauer, anisotropic quadrics, involution
 * varieties) use the split Chow ring: characteristic numbers are
 * computed after base change to a splitting field, so only the degree
 * functional differs between the split and anisotropic variants.
 */

#include <segre/chern.hpp>

#include <optional>
#include <string>

namespace segre {

struct VarietyModel {
  std::string name;
  unsigned dim = 0;
  RingSpecPtr ring;
  TotalClass chern_tangent;
  std::optional<Int> index;               // n_X when known exactly
  std::optional<unsigned> index_two_adic;  // v_2(n_X) when known
  bool complete = true;
  bool smooth = true;
  bool integral = true;
  bool has_rational_point = false;
};

namespace detail {

inline void validate_model(const VarietyModel& m) {
  if (!m.ring || m.ring->truncation_dim() != m.dim)
    throw std::logic_error("VarietyModel: ring truncation must equal dim");
  if (!same_spec(m.chern_tangent.spec(), m.ring))
    throw std::logic_error("VarietyModel: tangent class lives elsewhere");
  if (m.index) {
    if (*m.index <= 0)
      throw std::logic_error("VarietyModel: index must be positive");
    if (m.has_rational_point && *m.index != 1)
      throw std::logic_error(
          "VarietyModel: a rational point forces index 1");
    if (m.index_two_adic && vp(*m.index, 2) != *m.index_two_adic)
      throw std::logic_error(
          "VarietyModel: index and its recorded 2-adic valuation disagree");
  }
}

inline RingSpecPtr hyperplane_ring(unsigned dim, Int top_degree) {
  if (dim == 0) return RingSpec::make({}, 0, {{{}, std::move(top_degree)}});
  return RingSpec::make({{"h", 1}}, dim,
                        {{Monomial{dim}, std::move(top_degree)}});
}

inline unsigned pow2_dim(unsigned n, const char* who) {
  if (n >= 26)
    throw std::invalid_argument(std::string(who) +
                                ": parameter too large (n < 26)");
  return 1u << n;
}

}  // namespace detail

/// Sq(X) = c(-T_X) [X], defined for smooth models.
inline RingElement sq_class(const VarietyModel& x) {
  if (!x.smooth)
    throw std::invalid_argument("sq_class: model is not smooth");
  return negate_class(x.chern_tangent).value() * RingElement::unit(x.ring);
}

/// The Segre number s_X = deg c_{dim X}(-T_X).
inline Int segre_number(const VarietyModel& x) {
  if (!x.complete)
    throw std::invalid_argument("segre_number: model is not complete");
  return sq_class(x).degree_eval();
}

inline VarietyModel projective_space(unsigned n) {
  auto ring = detail::hyperplane_ring(n, 1);
  VarietyModel m{.name = "P(" + std::to_string(n) + ")",
                 .dim = n,
                 .ring = ring,
                 .chern_tangent = chern_tangent_projective(n, ring),
                 .index = Int(1),
                 .index_two_adic = 0,
                 .has_rational_point = true};
  detail::validate_model(m);
  return m;
}

/// Severi-Brauer variety of a central division algebra of degree 2^n:
/// the split model is P^{2^n - 1}, the index is 2^n, and there is no
/// rational point.
inline VarietyModel severi_brauer(unsigned n) {
  if (n == 0)
    throw std::invalid_argument("severi_brauer: n must be >= 1");
  unsigned dim = detail::pow2_dim(n, "severi_brauer") - 1;
  auto ring = detail::hyperplane_ring(dim, 1);
  VarietyModel m{.name = "SB(" + std::to_string(n) + ")",
                 .dim = dim,
                 .ring = ring,
                 .chern_tangent = chern_tangent_projective(dim, ring),
                 .index = Int(1) << n,
                 .index_two_adic = n,
                 .has_rational_point = false};
  detail::validate_model(m);
  return m;
}

/// Smooth projective quadric of dimension d. Both variants share the
/// split ring model with deg(h^d) = 2; anisotropic quadrics have index 2
/// (Springer) and no rational point. d = 0 is the degenerate point-pair
/// model.
inline VarietyModel quadric(unsigned d, bool anisotropic) {
  auto ring = detail::hyperplane_ring(d, 2);
  VarietyModel m{.name = "Q(" + std::to_string(d) +
                         (anisotropic ? ",aniso)" : ",split)"),
                 .dim = d,
                 .ring = ring,
                 .chern_tangent = chern_tangent_quadric(d, ring),
                 .index = anisotropic ? Int(2) : Int(1),
                 .index_two_adic = anisotropic ? 1u : 0u,
                 .integral = d >= 1 || anisotropic,
                 .has_rational_point = !anisotropic};
  detail::validate_model(m);
  return m;
}

/// Involution variety of a division algebra of degree 2^n with a
/// quadratic pair: splits to a quadric of dimension 2^n - 2. Only
/// v_2(n_X) = n is recorded; the exact index stays unknown.
inline VarietyModel involution_variety(unsigned n) {
  if (n == 0)
    throw std::invalid_argument("involution_variety: n must be >= 1");
  unsigned dim = detail::pow2_dim(n, "involution_variety") - 2;
  auto ring = detail::hyperplane_ring(dim, 2);
  VarietyModel m{.name = "Inv(" + std::to_string(n) + ")",
                 .dim = dim,
                 .ring = ring,
                 .chern_tangent = chern_tangent_quadric(dim, ring),
                 .index = std::nullopt,
                 .index_two_adic = n,
                 .has_rational_point = false};
  detail::validate_model(m);
  return m;
}

/// Product model: tensor ring, product tangent class, summed dimension.
/// The index is only known when one factor has a rational point (then it
/// equals the other factor's); otherwise it is left unknown.
inline VarietyModel product(const VarietyModel& x, const VarietyModel& y) {
  auto ring = tensor(x.ring, y.ring);
  size_t offset = x.ring->variables().size();
  RingElement ct = embed(x.chern_tangent.value(), ring, 0) *
                   embed(y.chern_tangent.value(), ring, offset);
  std::optional<Int> index;
  std::optional<unsigned> two_adic;
  if (y.has_rational_point) {
    index = x.index;
    two_adic = x.index_two_adic;
  } else if (x.has_rational_point) {
    index = y.index;
    two_adic = y.index_two_adic;
  }
  VarietyModel m{.name = x.name + " * " + y.name,
                 .dim = x.dim + y.dim,
                 .ring = ring,
                 .chern_tangent = TotalClass(std::move(ct)),
                 .index = std::move(index),
                 .index_two_adic = two_adic,
                 .complete = x.complete && y.complete,
                 .smooth = x.smooth && y.smooth,
                 .integral = x.integral && y.integral,
                 .has_rational_point =
                     x.has_rational_point && y.has_rational_point};
  detail::validate_model(m);
  return m;
}

/// Every base catalogue model of dimension between min_dim and max_dim:
/// P^n, both quadric variants, SB(n), Inv(n).
inline std::vector<VarietyModel> catalogue_base_models(unsigned min_dim,
                                                       unsigned max_dim) {
  std::vector<VarietyModel> out;
  auto keep = [&](VarietyModel m) {
    if (m.dim >= min_dim && m.dim <= max_dim) out.push_back(std::move(m));
  };
  for (unsigned n = min_dim; n <= max_dim; ++n) keep(projective_space(n));
  for (unsigned d = std::max(1u, min_dim); d <= max_dim; ++d) {
    keep(quadric(d, true));
    keep(quadric(d, false));
  }
  for (unsigned n = 1; (1u << n) - 1 <= max_dim; ++n) keep(severi_brauer(n));
  for (unsigned n = 2; (1u << n) - 2 <= max_dim; ++n)
    keep(involution_variety(n));
  return out;
}

}  // namespace segre
