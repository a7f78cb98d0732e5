#include <catch2/catch_amalgamated.hpp>
#include <segre/incompressibility.hpp>

using namespace segre;

TEST_CASE("certify: worked examples") {
  SECTION("Severi-Brauer varieties certify for every n") {
    for (unsigned n = 1; n <= 6; ++n) {
      auto cert = certify(severi_brauer(n));
      CHECK(cert.conclusion == Conclusion::strongly_2_incompressible);
      CHECK(cert.criterion_odd_quotient);
      CHECK(cert.v2_segre == Valuation::finite(n));
      CHECK(cert.v2_index == n);
    }
  }
  SECTION("anisotropic quadrics of dimension 2^n - 1") {
    for (unsigned n = 1; n <= 6; ++n) {
      auto cert = certify(quadric((1u << n) - 1, true));
      CHECK(cert.v2_segre == Valuation::finite(1));
      CHECK(cert.v2_index == 1);
      CHECK(cert.conclusion == Conclusion::strongly_2_incompressible);
    }
  }
  SECTION("P^n has an even quotient: inconclusive, never 'compressible'") {
    for (unsigned n = 1; n <= 6; ++n) {
      auto cert = certify(projective_space(n));
      CHECK(cert.v2_index == 0);
      CHECK_FALSE(cert.criterion_odd_quotient);
      CHECK(cert.conclusion == Conclusion::inconclusive);
    }
  }
  SECTION("the quaternion involution variety (dim 0)") {
    auto cert = certify(involution_variety(1));
    CHECK(cert.segre == 2);
    CHECK(cert.conclusion == Conclusion::strongly_2_incompressible);
  }
}

TEST_CASE("certify: error paths") {
  SECTION("unknown 2-adic index data") {
    auto m = projective_space(1);
    m.index.reset();
    m.index_two_adic.reset();
    m.has_rational_point = false;
    CHECK_THROWS_AS(certify(m), std::invalid_argument);
  }
  SECTION("non-integral model") {
    CHECK_THROWS_AS(certify(quadric(0, false)), std::invalid_argument);
  }
  SECTION("valuation inconsistency is a model bug") {
    auto m = severi_brauer(2);  // v2(segre) = 2
    m.index.reset();
    m.index_two_adic = 5;
    CHECK_THROWS_AS(certify(m), std::logic_error);
  }
}

TEST_CASE("family_report: Severi-Brauer rows cross-check") {
  auto rows = family_report(Family::severi_brauer, 3);
  REQUIRE(rows.size() == 3);
  for (unsigned i = 0; i < 3; ++i) {
    const auto& row = rows[i];
    CHECK(row.n == i + 1);
    CHECK(row.closed_form_match);
    CHECK(row.valuation_match);
    CHECK(row.certificate.v2_segre == Valuation::finite(row.n));
    CHECK(row.v2_by_carries == row.n);
  }
  CHECK(rows[1].certificate.segre == -20);
  CHECK(rows[1].closed_form == -20);
}

TEST_CASE("family_report: quadric rows are 2 mod 4") {
  auto rows = family_report(Family::quadric, 3);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].certificate.segre == -2);
  CHECK(rows[0].dim == 1);
  for (const auto& row : rows) {
    CHECK(row.closed_form_match);
    CHECK(row.valuation_match);
    CHECK(mod4(row.certificate.segre) == 2);
    CHECK(row.certificate.v2_segre == Valuation::finite(1));
  }
}

TEST_CASE("family_report: involution rows start at n = 2") {
  auto rows = family_report(Family::involution, 3);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n == 2);
  CHECK(rows[0].dim == 2);
  CHECK(rows[0].certificate.segre == 4);
  CHECK(rows[1].certificate.segre == 264);
  for (const auto& row : rows) {
    CHECK(row.closed_form_match);
    CHECK(row.valuation_match);
    CHECK(row.certificate.v2_segre == Valuation::finite(row.n));
  }
}

TEST_CASE("family_report: n_max must be positive") {
  CHECK_THROWS_AS(family_report(Family::severi_brauer, 0),
                  std::invalid_argument);
}

TEST_CASE("witt_index_bound: worked examples") {
  for (unsigned n = 1; n <= 10; ++n)
    CHECK(witt_index_bound((1u << n) + 1) == 1);
  CHECK(witt_index_bound(5) == 1);
  CHECK(witt_index_bound(7) == 3);
  CHECK(witt_index_bound(3) == 1);
  CHECK(witt_index_bound(9) == 1);
  CHECK_THROWS_AS(witt_index_bound(2), std::invalid_argument);
  CHECK_THROWS_AS(witt_index_bound(0), std::invalid_argument);
}

TEST_CASE("certificates expose no 'compressible' verdict") {
  // the criterion is sufficient only; inconclusive is the only negative
  for (const auto& m : catalogue_base_models(0, 6)) {
    if (!m.integral || (!m.index && !m.index_two_adic)) continue;
    auto cert = certify(m);
    bool known = cert.conclusion == Conclusion::strongly_2_incompressible ||
                 cert.conclusion == Conclusion::inconclusive;
    CHECK(known);
    CHECK(cert.criterion_odd_quotient ==
          (cert.conclusion == Conclusion::strongly_2_incompressible));
  }
}
