#include <catch2/catch_amalgamated.hpp>
#include <segre/arith.hpp>

#include <map>
#include <random>
#include <utility>

using segre::binomial;
using segre::Int;
using segre::Valuation;
using segre::vp;
using segre::vp_binomial_kummer;

namespace {

// Independent oracle: a(a-1)...(a-k+1) as a plain product, divided by
// GMP's own factorial. Deliberately avoids the incremental-division
// scheme used by the implementation.
Int binomial_oracle(long a, unsigned long k) {
  Int num = 1;
  for (unsigned long i = 0; i < k; ++i) num *= Int(a) - i;
  Int fact;
  mpz_fac_ui(fact.get_mpz_t(), k);
  Int q = num / fact;
  REQUIRE(q * fact == num);  // the quotient must be exact
  return q;
}

// Independent oracle: valuation by literal repeated division.
unsigned long vp_oracle(Int n, unsigned long p) {
  REQUIRE(n != 0);
  if (n < 0) n = -n;
  unsigned long e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

}  // namespace

TEST_CASE("binomial: worked examples") {
  CHECK(binomial(-4, 1) == -4);
  CHECK(binomial(-5, 3) == -35);  // oracle: (-5)(-6)(-7)/6
  CHECK(binomial(-5, 3) == binomial_oracle(-5, 3));
  CHECK(binomial(-2, 1) == -2);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(2, 5) == 0);

  for (long a : {-7L, -1L, 0L, 1L, 4L, 100L}) CHECK(binomial(a, 0) == 1);
}

TEST_CASE("binomial: agrees with product-over-factorial oracle") {
  for (long a = -20; a <= 20; ++a)
    for (unsigned long k = 0; k <= 12; ++k)
      CHECK(binomial(a, k) == binomial_oracle(a, k));
}

TEST_CASE("binomial: reflection identity for negative upper index") {
  for (unsigned long m = 1; m <= 64; ++m)
    for (unsigned long k = 1; k <= 64; ++k) {
      Int lhs = binomial(-static_cast<long>(m), k);
      Int rhs = binomial(Int(m + k - 1), k);
      if (k % 2 == 1) rhs = -rhs;
      CHECK(lhs == rhs);
    }
}

TEST_CASE("binomial: Pascal's rule across positive and negative a") {
  for (long a = -64; a <= 64; ++a)
    for (unsigned long k = 1; k <= 64; ++k)
      CHECK(binomial(a, k) == binomial(a - 1, k - 1) + binomial(a - 1, k));
}

TEST_CASE("vp: worked examples") {
  CHECK(vp(-3432, 2) == 3);  // 3432 = 2^3 * 429
  CHECK(vp(Int(-3432), 2).value() == vp_oracle(-3432, 2));
  CHECK(vp(1, 2) == 0);
  CHECK(vp(-1, 7) == 0);
  CHECK(vp(0, 5).is_infinite());
}

TEST_CASE("vp: rejects non-prime base") {
  CHECK_THROWS_AS(vp(10, 4), std::invalid_argument);
  CHECK_THROWS_AS(vp(10, 1), std::invalid_argument);
  CHECK_THROWS_AS(vp(10, 0), std::invalid_argument);
  CHECK_THROWS_AS(vp_binomial_kummer(3, 4, 6), std::invalid_argument);
}

TEST_CASE("vp: additive on products") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> d(-5000, 5000);
  for (int trial = 0; trial < 2000; ++trial) {
    long a = d(rng), b = d(rng);
    if (a == 0 || b == 0) continue;
    for (unsigned long p : {2ul, 3ul, 5ul})
      CHECK(vp(Int(a) * b, p) == vp(a, p) + vp(b, p));
  }
}

TEST_CASE("Valuation: infinity is absorbing, never a number") {
  Valuation inf = Valuation::infinite();
  CHECK((inf + Valuation::finite(3)).is_infinite());
  CHECK_THROWS_AS(inf.value(), std::logic_error);
  CHECK(inf.str() == "inf");
  CHECK(Valuation::finite(4).str() == "4");
}

TEST_CASE("Kummer carries: worked examples") {
  CHECK(vp_binomial_kummer(7, 7, 2) == 3);  // 111+111 carries thrice
  CHECK(vp(binomial(14, 7), 2) == 3);       // binom(14,7) = 3432
  CHECK(vp_binomial_kummer(3, 1, 2) == 2);  // 11+01 carries twice
  CHECK(binomial(4, 1) == 4);

  for (long b : {0L, 1L, 9L, 125L})
    for (unsigned long p : {2ul, 3ul, 5ul})
      CHECK(vp_binomial_kummer(0, b, p) == 0);
}

TEST_CASE("Kummer carries: negative input rejected") {
  CHECK_THROWS_AS(vp_binomial_kummer(-1, 3, 2), std::invalid_argument);
}

TEST_CASE("Kummer carries equal valuation of the binomial, a,b <= 200") {
  std::map<std::pair<long, long>, Int> memo;
  for (long a = 0; a <= 200; ++a)
    for (long b = 0; b <= 200; ++b) {
      auto key = std::minmax(a, b);
      auto it = memo.find(key);
      if (it == memo.end())
        it = memo.emplace(key, binomial(Int(a + b), a)).first;
      const Int& binom = it->second;
      for (unsigned long p : {2ul, 3ul, 5ul})
        CHECK(vp(binom, p) == vp_binomial_kummer(a, b, p));
    }
}
