#pragma once
/*
 * Exact integer utilities on top of GMP: generalized binomial
 * coefficients (negative upper index allowed) and p-adic valuations,
 * with Kummer's carry-counting theorem as an independent second route
 * to valuations of binomials.
 */

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace segre {

using Int = mpz_class;

/// p-adic valuation result. v_p(0) is a distinguished infinite state,
/// never a sentinel integer, so nothing can silently compute with it.
class Valuation {
public:
  static Valuation infinite() { return Valuation(true, 0); }
  static Valuation finite(unsigned long v) { return Valuation(false, v); }

  bool is_infinite() const { return infinite_; }

  unsigned long value() const {
    if (infinite_)
      throw std::logic_error("Valuation::value: valuation is infinite");
    return v_;
  }

  Valuation operator+(const Valuation& o) const {
    if (infinite_ || o.infinite_) return infinite();
    return finite(v_ + o.v_);
  }

  bool operator==(const Valuation&) const = default;
  bool operator==(unsigned long v) const { return !infinite_ && v_ == v; }

  std::string str() const { return infinite_ ? "inf" : std::to_string(v_); }

private:
  Valuation(bool inf, unsigned long v) : infinite_(inf), v_(v) {}
  bool infinite_;
  unsigned long v_;
};

/// Trial-division primality check, adequate for the small primes used
/// as valuation bases.
inline bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void require_prime(unsigned long p, const char* where) {
  if (!is_prime(p))
    throw std::invalid_argument(std::string(where) + ": " + std::to_string(p) +
                                " is not prime");
}

namespace detail {

// binom(a, k) for a >= 0. The running value after step i equals
// binom(a-k+i, i), so every division is exact.
inline Int binomial_nonneg(const Int& a, unsigned long k) {
  if (a < k) return 0;
  Int r = 1;
  for (unsigned long i = 1; i <= k; ++i) {
    r *= a - k + i;
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), i);
  }
  return r;
}

}  // namespace detail

/// Generalized binomial coefficient a(a-1)...(a-k+1) / k!, exact.
/// For a < 0 this equals (-1)^k binom(-a+k-1, k).
inline Int binomial(const Int& a, unsigned long k) {
  if (k == 0) return 1;
  if (a >= 0) return detail::binomial_nonneg(a, k);
  Int r = detail::binomial_nonneg(-a + static_cast<long>(k) - 1, k);
  if (k % 2 == 1) r = -r;
  return r;
}

inline Int binomial(long a, unsigned long k) { return binomial(Int(a), k); }

/// Largest e with p^e | n; infinite for n = 0.
inline Valuation vp(const Int& n, unsigned long p) {
  require_prime(p, "vp");
  if (n == 0) return Valuation::infinite();
  Int reduced;
  unsigned long e =
      mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), Int(p).get_mpz_t());
  return Valuation::finite(e);
}

/// Number of carries when adding a and b in base p. By Kummer's theorem
/// this equals vp(binom(a+b, a), p); the two are kept as independent
/// computation paths and cross-checked in the test suites.
inline unsigned long vp_binomial_kummer(Int a, Int b, unsigned long p) {
  require_prime(p, "vp_binomial_kummer");
  if (a < 0 || b < 0)
    throw std::invalid_argument("vp_binomial_kummer: arguments must be >= 0");
  unsigned long carries = 0;
  unsigned long carry = 0;
  while (a != 0 || b != 0) {
    unsigned long da = mpz_fdiv_q_ui(a.get_mpz_t(), a.get_mpz_t(), p);
    unsigned long db = mpz_fdiv_q_ui(b.get_mpz_t(), b.get_mpz_t(), p);
    carry = (da + db + carry >= p) ? 1 : 0;
    carries += carry;
  }
  return carries;
}

/// Residue of x in {0, 1} (mathematical mod 2, sign-safe).
inline int mod2(const Int& x) { return mpz_odd_p(x.get_mpz_t()) ? 1 : 0; }

/// Residue of x in {0, 1, 2, 3} (mathematical mod 4, sign-safe).
inline int mod4(const Int& x) {
  Int r = x % 4;
  if (r < 0) r += 4;
  return static_cast<int>(r.get_si());
}

}  // namespace segre
