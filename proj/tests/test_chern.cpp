#include <catch2/catch_amalgamated.hpp>
#include <segre/varieties.hpp>

using namespace segre;

namespace {

RingSpecPtr pn_ring(unsigned n) { return detail::hyperplane_ring(n, 1); }

RingElement poly(const RingSpecPtr& spec, std::vector<long> coeffs) {
  RingElement r = RingElement::zero(spec);
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0)
      r += RingElement(spec, {{Monomial{static_cast<unsigned>(i)},
                               Int(coeffs[i])}});
  return r;
}

}  // namespace

TEST_CASE("chern_tangent_projective: worked examples") {
  CHECK(chern_tangent_projective(1, pn_ring(1)).value() ==
        poly(pn_ring(1), {1, 2}));
  CHECK(chern_tangent_projective(0, pn_ring(0)).value() ==
        RingElement::unit(pn_ring(0)));
  CHECK(chern_tangent_projective(3, pn_ring(3)).value() ==
        poly(pn_ring(3), {1, 4, 6, 4}));
  CHECK_THROWS_AS(chern_tangent_projective(2, pn_ring(3)),
                  std::invalid_argument);
}

TEST_CASE("chern_tangent_quadric: worked examples") {
  auto q1 = detail::hyperplane_ring(1, 2);
  CHECK(chern_tangent_quadric(1, q1).value() == poly(q1, {1, 1}));

  auto q0 = detail::hyperplane_ring(0, 2);
  CHECK(chern_tangent_quadric(0, q0).value() == RingElement::unit(q0));

  auto q2 = detail::hyperplane_ring(2, 2);
  CHECK(chern_tangent_quadric(2, q2).value() == poly(q2, {1, 2, 2}));
}

TEST_CASE("negate_class: worked examples") {
  SECTION("negate(1+2h) in the P^1 model") {
    auto ring = pn_ring(1);
    CHECK(negate_class(TotalClass(poly(ring, {1, 2}))).value() ==
          poly(ring, {1, -2}));
  }
  SECTION("negate(1) = 1") {
    auto ring = pn_ring(4);
    CHECK(negate_class(TotalClass::one(ring)).value() ==
          RingElement::unit(ring));
  }
  SECTION("negate(c(T_Q)) = (1+2h)/(1+h)^{2^n} for involution dimensions") {
    for (unsigned n : {2u, 3u}) {
      unsigned d = (1u << n) - 2;
      auto ring = detail::hyperplane_ring(d, 2);
      auto lhs = negate_class(chern_tangent_quadric(d, ring)).value();
      auto rhs = poly(ring, {1, 2}) *
                 poly(ring, {1, 1}).power(-static_cast<long>(1u << n));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("TotalClass rejects non-unit constant terms") {
  auto ring = pn_ring(2);
  CHECK_THROWS_AS(TotalClass(poly(ring, {2, 1})), std::invalid_argument);
  CHECK_THROWS_AS(TotalClass(poly(ring, {0, 1})), std::invalid_argument);
}

TEST_CASE("sq_class: worked examples") {
  CHECK(sq_class(projective_space(1)) == poly(pn_ring(1), {1, -2}));
  CHECK(sq_class(projective_space(0)) ==
        RingElement::unit(projective_space(0).ring));
  auto conic = quadric(1, true);
  CHECK(sq_class(conic) == poly(conic.ring, {1, -1}));

  auto broken = projective_space(2);
  broken.smooth = false;
  CHECK_THROWS_AS(sq_class(broken), std::invalid_argument);
}

TEST_CASE("segre_fixed: worked examples") {
  SECTION("diagonal of P^1 x P^1 with normal bundle T_{P^1}") {
    auto p1 = projective_space(1);
    CHECK(segre_fixed(p1.chern_tangent) == sq_class(p1));
    CHECK(segre_fixed(p1.chern_tangent) == poly(p1.ring, {1, -2}));
  }
  SECTION("rank-0 normal bundle") {
    auto ring = pn_ring(3);
    CHECK(segre_fixed(TotalClass::one(ring)) == RingElement::unit(ring));
  }
  SECTION("N = 1+3h on the P^2 model") {
    auto ring = pn_ring(2);
    CHECK(segre_fixed(TotalClass(poly(ring, {1, 3}))) ==
          poly(ring, {1, -3, 9}));
  }
}

TEST_CASE("segre_number: worked examples") {
  CHECK(segre_number(projective_space(1)) == -2);
  CHECK(segre_number(projective_space(0)) == 1);
  CHECK(segre_number(quadric(3, true)) == -10);

  auto open = projective_space(1);
  open.complete = false;
  CHECK_THROWS_AS(segre_number(open), std::invalid_argument);
}

TEST_CASE("property: Whitney inverse on every catalogue tangent class") {
  for (const auto& m : catalogue_base_models(0, 8)) {
    auto product_class =
        m.chern_tangent.value() * negate_class(m.chern_tangent).value();
    CHECK(product_class == RingElement::unit(m.ring));
  }
}

TEST_CASE("property: Segre numbers multiply over products") {
  auto models = catalogue_base_models(0, 6);
  for (const auto& x : models)
    for (const auto& y : models) {
      if (x.dim + y.dim > 6) continue;
      CHECK(segre_number(product(x, y)) ==
            segre_number(x) * segre_number(y));
    }
}

TEST_CASE("property: segre_fixed specializes to sq_class on the diagonal") {
  for (const auto& x : catalogue_base_models(0, 8))
    CHECK(segre_fixed(x.chern_tangent) == sq_class(x));
  // product models, same statement
  auto p12 = product(projective_space(1), projective_space(2));
  CHECK(segre_fixed(p12.chern_tangent) == sq_class(p12));
  auto mixed = product(quadric(2, true), severi_brauer(1));
  CHECK(segre_fixed(mixed.chern_tangent) == sq_class(mixed));
}
