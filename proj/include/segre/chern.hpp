#pragma once
/*
 * Total Chern class calculus on ring models. A total class is a ring
 * element with constant term 1; the class of an opposite bundle is the
 * multiplicative inverse (Whitney: c(E) c(-E) = 1). Tangent classes of
 * projective spaces and quadrics come from the standard Euler sequences:
 * c(T_P^n) = (1+h)^{n+1} and c(T_Q) = (1+h)^{d+2} / (1+2h) for a
 * dimension-d quadric.
 */

#include <segre/graded_ring.hpp>

namespace segre {

class TotalClass {
public:
  explicit TotalClass(RingElement value) : value_(std::move(value)) {
    if (value_.constant_term() != 1)
      throw std::invalid_argument("TotalClass: constant term must be 1");
  }

  static TotalClass one(RingSpecPtr spec) {
    return TotalClass(RingElement::unit(std::move(spec)));
  }

  const RingElement& value() const { return value_; }
  const RingSpecPtr& spec() const { return value_.spec(); }

  bool operator==(const TotalClass&) const = default;

private:
  RingElement value_;
};

/// c(-E): the series inverse of c(E).
inline TotalClass negate_class(const TotalClass& c) {
  return TotalClass(c.value().invert_unit());
}

namespace detail {

inline RingElement one_plus_generator(const RingSpecPtr& ring, Int scale) {
  RingElement one = RingElement::unit(ring);
  if (ring->variables().empty()) return one;
  return one + RingElement::generator(ring, 0) * std::move(scale);
}

}  // namespace detail

/// c(T_{P^n}) = (1+h)^{n+1} in the P^n ring model.
inline TotalClass chern_tangent_projective(unsigned n,
                                           const RingSpecPtr& ring) {
  if (ring->truncation_dim() != n)
    throw std::invalid_argument(
        "chern_tangent_projective: ring truncation does not match n");
  return TotalClass(
      detail::one_plus_generator(ring, 1).power(static_cast<long>(n) + 1));
}

/// c(T_Q) = (1+h)^{d+2} / (1+2h) for a dimension-d quadric model.
inline TotalClass chern_tangent_quadric(unsigned d, const RingSpecPtr& ring) {
  if (ring->truncation_dim() != d)
    throw std::invalid_argument(
        "chern_tangent_quadric: ring truncation does not match d");
  if (d == 0) return TotalClass::one(ring);
  RingElement numerator =
      detail::one_plus_generator(ring, 1).power(static_cast<long>(d) + 2);
  RingElement inv_denominator =
      detail::one_plus_generator(ring, 2).invert_unit();
  return TotalClass(numerator * inv_denominator);
}

/// Class of a regularly embedded fixed locus with normal bundle N:
/// c(-N) times the fundamental class of the fixed-locus model.
inline RingElement segre_fixed(const TotalClass& normal_bundle) {
  return negate_class(normal_bundle).value() *
         RingElement::unit(normal_bundle.spec());
}

}  // namespace segre
