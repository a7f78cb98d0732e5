#pragma once
/*
 * Truncated multigraded commutative rings over Z with an explicit degree
 * functional. An element is a sparse integer combination of monomials in
 * the ring variables; every monomial of weighted codimension above the
 * truncation bound is zero. The degree functional maps top-codimension
 * monomials to integers and is total data supplied at construction.
 *
 * Multiplication of large dense univariate elements is routed through
 * Kronecker substitution (one GMP integer product); everything else uses
 * sparse convolution. Series inversion picks Newton doubling or the
 * degree-by-degree recursion on the same size criterion. The two routes
 * are cross-checked against each other in the test suites.
 */

#include <segre/arith.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace segre {

using Monomial = std::vector<unsigned>;  // one exponent per ring variable

struct Variable {
  std::string name;
  unsigned codim = 1;
  bool operator==(const Variable&) const = default;
};

namespace detail {

inline void enumerate_monomials(const std::vector<Variable>& vars, size_t i,
                                unsigned remaining, Monomial& cur,
                                std::vector<Monomial>& out) {
  if (i == vars.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  if (i + 1 == vars.size()) {
    // last variable must absorb the remainder exactly
    if (remaining % vars[i].codim == 0) {
      cur[i] = remaining / vars[i].codim;
      out.push_back(cur);
      cur[i] = 0;
    }
    return;
  }
  for (unsigned e = 0; e * vars[i].codim <= remaining; ++e) {
    cur[i] = e;
    enumerate_monomials(vars, i + 1, remaining - e * vars[i].codim, cur, out);
  }
  cur[i] = 0;
}

/// All exponent vectors over `vars` of weighted codimension `target`.
inline std::vector<Monomial> monomials_of_codim(
    const std::vector<Variable>& vars, unsigned target) {
  std::vector<Monomial> out;
  Monomial cur(vars.size(), 0);
  enumerate_monomials(vars, 0, target, cur, out);
  return out;
}

}  // namespace detail

class RingSpec;
using RingSpecPtr = std::shared_ptr<const RingSpec>;

class RingSpec {
public:
  static RingSpecPtr make(std::vector<Variable> variables,
                          unsigned truncation_dim,
                          std::map<Monomial, Int> degree_functional) {
    return std::make_shared<const RingSpec>(
        std::move(variables), truncation_dim, std::move(degree_functional));
  }

  RingSpec(std::vector<Variable> variables, unsigned truncation_dim,
           std::map<Monomial, Int> degree_functional)
      : vars_(std::move(variables)),
        trunc_(truncation_dim),
        degree_(std::move(degree_functional)) {
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i].codim == 0)
        throw std::invalid_argument("RingSpec: variable codim must be >= 1");
      if (vars_[i].name.empty())
        throw std::invalid_argument("RingSpec: empty variable name");
      for (size_t j = i + 1; j < vars_.size(); ++j)
        if (vars_[i].name == vars_[j].name)
          throw std::invalid_argument("RingSpec: duplicate variable name " +
                                      vars_[i].name);
    }
    for (const auto& [mono, value] : degree_) {
      (void)value;
      if (mono.size() != vars_.size() || codim(mono) != trunc_)
        throw std::invalid_argument(
            "RingSpec: degree functional key is not a top-codimension "
            "monomial");
    }
    // The functional must be explicit on every top-codimension monomial.
    for (const Monomial& m : monomials_of_codim(trunc_))
      if (!degree_.count(m))
        throw std::invalid_argument(
            "RingSpec: degree functional is missing a top-codimension "
            "monomial");
  }

  const std::vector<Variable>& variables() const { return vars_; }
  unsigned truncation_dim() const { return trunc_; }
  const std::map<Monomial, Int>& degree_functional() const { return degree_; }

  unsigned codim(const Monomial& m) const {
    unsigned long c = 0;
    for (size_t i = 0; i < m.size(); ++i)
      c += static_cast<unsigned long>(m[i]) * vars_[i].codim;
    return static_cast<unsigned>(c);
  }

  /// All exponent vectors of weighted codimension exactly `target`.
  std::vector<Monomial> monomials_of_codim(unsigned target) const {
    return detail::monomials_of_codim(vars_, target);
  }

  bool operator==(const RingSpec& o) const {
    return vars_ == o.vars_ && trunc_ == o.trunc_ && degree_ == o.degree_;
  }

private:
  std::vector<Variable> vars_;
  unsigned trunc_;
  std::map<Monomial, Int> degree_;
};

inline bool same_spec(const RingSpecPtr& a, const RingSpecPtr& b) {
  return a == b || (a && b && *a == *b);
}

namespace detail {

inline size_t max_bit_size(const std::vector<Int>& v) {
  size_t b = 1;
  for (const Int& c : v)
    if (c != 0) b = std::max(b, mpz_sizeinbase(c.get_mpz_t(), 2));
  return b;
}

inline size_t ceil_log2(size_t n) {
  size_t b = 0;
  while ((size_t{1} << b) < n) ++b;
  return b;
}

// Pack nonnegative coefficients into one integer, one slot of `slot_bits`
// bits per exponent (evaluation at 2^slot_bits).
inline Int kronecker_pack(const std::vector<Int>& v, size_t slot_bits) {
  std::vector<uint64_t> buf((v.size() * slot_bits) / 64 + 4, 0);
  std::vector<uint64_t> tmp;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    size_t words = (mpz_sizeinbase(v[i].get_mpz_t(), 2) + 63) / 64;
    tmp.assign(words, 0);
    size_t exported = 0;
    mpz_export(tmp.data(), &exported, -1, 8, 0, 0, v[i].get_mpz_t());
    size_t bitoff = i * slot_bits;
    size_t w = bitoff / 64;
    unsigned sh = bitoff % 64;
    uint64_t carry = 0;
    for (size_t j = 0; j < exported; ++j) {
      buf[w + j] |= (sh ? (tmp[j] << sh) : tmp[j]) | carry;
      carry = sh ? (tmp[j] >> (64 - sh)) : 0;
    }
    buf[w + exported] |= carry;
  }
  Int r;
  mpz_import(r.get_mpz_t(), buf.size(), -1, 8, 0, 0, buf.data());
  return r;
}

// Read `count` nonnegative slots of `slot_bits` bits back out.
inline std::vector<Int> kronecker_unpack(const Int& packed, size_t slot_bits,
                                         size_t count) {
  std::vector<Int> out(count);
  if (packed == 0) return out;
  size_t words = (mpz_sizeinbase(packed.get_mpz_t(), 2) + 63) / 64;
  std::vector<uint64_t> buf(words + 2, 0);
  size_t exported = 0;
  mpz_export(buf.data(), &exported, -1, 8, 0, 0, packed.get_mpz_t());
  std::vector<uint64_t> tmp;
  for (size_t k = 0; k < count; ++k) {
    size_t bitoff = k * slot_bits;
    size_t w = bitoff / 64;
    if (w >= exported) break;
    unsigned sh = bitoff % 64;
    size_t need = (slot_bits + sh + 63) / 64;
    tmp.assign(need, 0);
    for (size_t j = 0; j < need && w + j < exported; ++j) tmp[j] = buf[w + j];
    Int t;
    mpz_import(t.get_mpz_t(), tmp.size(), -1, 8, 0, 0, tmp.data());
    mpz_tdiv_q_2exp(t.get_mpz_t(), t.get_mpz_t(), sh);
    mpz_tdiv_r_2exp(t.get_mpz_t(), t.get_mpz_t(), slot_bits);
    out[k] = std::move(t);
  }
  return out;
}

/// Dense univariate product, coefficients exact, output truncated to
/// `max_len` coefficients. Signed inputs are split into nonnegative
/// parts so the packed slots never interact.
inline std::vector<Int> mul_dense_kronecker(const std::vector<Int>& a,
                                            const std::vector<Int>& b,
                                            size_t max_len) {
  size_t out_len = std::min(max_len, a.size() + b.size() - 1);
  size_t slot = max_bit_size(a) + max_bit_size(b) +
                ceil_log2(std::min(a.size(), b.size())) + 2;
  std::vector<Int> ap(a.size()), an(a.size()), bp(b.size()), bn(b.size());
  for (size_t i = 0; i < a.size(); ++i) (a[i] >= 0 ? ap : an)[i] = abs(a[i]);
  for (size_t i = 0; i < b.size(); ++i) (b[i] >= 0 ? bp : bn)[i] = abs(b[i]);
  Int app = kronecker_pack(ap, slot), ann = kronecker_pack(an, slot);
  Int bpp = kronecker_pack(bp, slot), bnn = kronecker_pack(bn, slot);
  Int pos = app * bpp + ann * bnn;
  Int neg = app * bnn + ann * bpp;
  std::vector<Int> vp = kronecker_unpack(pos, slot, out_len);
  std::vector<Int> vn = kronecker_unpack(neg, slot, out_len);
  for (size_t k = 0; k < out_len; ++k) vp[k] -= vn[k];
  return vp;
}

inline std::vector<Int> mul_dense_schoolbook(const std::vector<Int>& a,
                                             const std::vector<Int>& b,
                                             size_t max_len) {
  size_t out_len = std::min(max_len, a.size() + b.size() - 1);
  std::vector<Int> out(out_len);
  for (size_t i = 0; i < a.size() && i < out_len; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size() && i + j < out_len; ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// Kronecker pays off once the schoolbook pair count is large; both
// operands must be reasonably dense for the slot packing to be worth it.
inline bool prefer_kronecker(size_t terms_a, size_t len_a, size_t terms_b,
                             size_t len_b) {
  return terms_a * terms_b >= 4096 && 4 * terms_a >= len_a &&
         4 * terms_b >= len_b;
}

inline std::vector<Int> mul_dense(const std::vector<Int>& a,
                                  const std::vector<Int>& b, size_t max_len) {
  size_t ta = 0, tb = 0;
  for (const Int& c : a) ta += (c != 0);
  for (const Int& c : b) tb += (c != 0);
  if (ta == 0 || tb == 0) return std::vector<Int>();
  if (prefer_kronecker(ta, a.size(), tb, b.size()))
    return mul_dense_kronecker(a, b, max_len);
  return mul_dense_schoolbook(a, b, max_len);
}

}  // namespace detail

class RingElement {
public:
  explicit RingElement(RingSpecPtr spec) : spec_(std::move(spec)) {
    require_spec();
  }

  RingElement(RingSpecPtr spec, std::map<Monomial, Int> coeffs)
      : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
    require_spec();
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
      if (it->first.size() != spec_->variables().size())
        throw std::invalid_argument("RingElement: exponent vector length");
      if (spec_->codim(it->first) > spec_->truncation_dim() ||
          it->second == 0)
        it = coeffs_.erase(it);
      else
        ++it;
    }
  }

  static RingElement zero(RingSpecPtr spec) {
    return RingElement(std::move(spec));
  }

  static RingElement constant(RingSpecPtr spec, Int c) {
    RingElement r(std::move(spec));
    if (c != 0) r.coeffs_[Monomial(r.spec_->variables().size(), 0)] = std::move(c);
    return r;
  }

  static RingElement unit(RingSpecPtr spec) {
    return constant(std::move(spec), 1);
  }

  /// The i-th ring variable as an element (zero if truncated away).
  static RingElement generator(RingSpecPtr spec, size_t index) {
    if (index >= spec->variables().size())
      throw std::invalid_argument("RingElement::generator: no such variable");
    Monomial m(spec->variables().size(), 0);
    m[index] = 1;
    return RingElement(std::move(spec), {{m, 1}});
  }

  const RingSpecPtr& spec() const { return spec_; }
  const std::map<Monomial, Int>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  size_t term_count() const { return coeffs_.size(); }

  Int coefficient(const Monomial& m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? Int(0) : it->second;
  }

  Int constant_term() const {
    return coefficient(Monomial(spec_->variables().size(), 0));
  }

  bool operator==(const RingElement& o) const {
    return same_spec(spec_, o.spec_) && coeffs_ == o.coeffs_;
  }

  RingElement operator-() const {
    RingElement r(spec_);
    for (const auto& [m, c] : coeffs_) r.coeffs_.emplace(m, -c);
    return r;
  }

  RingElement& operator+=(const RingElement& o) {
    check_same("add", o);
    for (const auto& [m, c] : o.coeffs_) {
      auto [it, inserted] = coeffs_.try_emplace(m, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
      }
    }
    return *this;
  }

  friend RingElement operator+(RingElement a, const RingElement& b) {
    a += b;
    return a;
  }

  friend RingElement operator-(RingElement a, const RingElement& b) {
    a += -b;
    return a;
  }

  friend RingElement operator*(const RingElement& a, const Int& s) {
    RingElement r(a.spec_);
    if (s != 0)
      for (const auto& [m, c] : a.coeffs_) r.coeffs_.emplace(m, c * s);
    return r;
  }

  friend RingElement operator*(const Int& s, const RingElement& a) {
    return a * s;
  }

  friend RingElement operator*(const RingElement& a, const RingElement& b) {
    a.check_same("mul", b);
    const RingSpec& spec = *a.spec_;
    if (spec.variables().size() == 1) {
      size_t la = 0, lb = 0;
      for (const auto& kv : a.coeffs_) la = std::max<size_t>(la, kv.first[0] + 1);
      for (const auto& kv : b.coeffs_) lb = std::max<size_t>(lb, kv.first[0] + 1);
      if (detail::prefer_kronecker(a.coeffs_.size(), la, b.coeffs_.size(),
                                   lb)) {
        unsigned c = spec.variables()[0].codim;
        size_t max_len = spec.truncation_dim() / c + 1;
        auto out = detail::mul_dense(a.dense(la), b.dense(lb), max_len);
        return from_dense(a.spec_, out);
      }
    }
    return mul_sparse(a, b);
  }

  /// Multiplicative inverse of an element whose constant term is +1 or
  /// -1, exact in the truncated ring.
  RingElement invert_unit() const {
    Int c0 = constant_term();
    if (c0 != 1 && c0 != -1)
      throw std::invalid_argument(
          "invert_unit: constant term must be +1 or -1");
    const RingSpec& spec = *spec_;
    if (spec.variables().size() == 1 &&
        spec.truncation_dim() / spec.variables()[0].codim >= 128)
      return invert_newton(c0);
    return invert_graded(c0);
  }

  /// x^e; negative e inverts first (constant term must then be a unit).
  RingElement power(long e) const {
    if (e == 0) return unit(spec_);
    RingElement base = e > 0 ? *this : invert_unit();
    unsigned long k = e > 0 ? static_cast<unsigned long>(e)
                            : static_cast<unsigned long>(-(e + 1)) + 1;
    RingElement acc = unit(spec_);
    while (k) {
      if (k & 1) acc = acc * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return acc;
  }

  /// Degree functional applied to the top-codimension component; lower
  /// components contribute nothing.
  Int degree_eval() const {
    const unsigned top = spec_->truncation_dim();
    Int total = 0;
    for (const auto& [m, c] : coeffs_) {
      if (spec_->codim(m) != top) continue;
      auto it = spec_->degree_functional().find(m);
      if (it == spec_->degree_functional().end())
        throw std::logic_error("degree_eval: functional missing a monomial");
      total += c * it->second;
    }
    return total;
  }

  /// Homogeneous part of the given codimension.
  RingElement component(unsigned codim) const {
    RingElement r(spec_);
    for (const auto& [m, c] : coeffs_)
      if (spec_->codim(m) == codim) r.coeffs_.emplace(m, c);
    return r;
  }

  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : coeffs_) {
      Int a = c;
      if (first) {
        if (a < 0) os << "-", a = -a;
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      bool any_var = false;
      std::ostringstream vars;
      for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (any_var) vars << ' ';
        any_var = true;
        vars << spec_->variables()[i].name;
        if (m[i] > 1) vars << '^' << m[i];
      }
      if (!any_var) {
        os << a.get_str();
      } else {
        if (a != 1) os << a.get_str() << ' ';
        os << vars.str();
      }
    }
    return os.str();
  }

private:
  void require_spec() const {
    if (!spec_) throw std::invalid_argument("RingElement: null spec");
  }

  void check_same(const char* op, const RingElement& o) const {
    if (!same_spec(spec_, o.spec_))
      throw std::invalid_argument(std::string(op) +
                                  ": elements live in different rings");
  }

  std::vector<Int> dense(size_t len) const {
    std::vector<Int> v(len);
    for (const auto& [m, c] : coeffs_)
      if (m[0] < len) v[m[0]] = c;
    return v;
  }

  static RingElement from_dense(const RingSpecPtr& spec,
                                const std::vector<Int>& v) {
    RingElement r(spec);
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) r.coeffs_.emplace(Monomial{static_cast<unsigned>(i)}, v[i]);
    return r;
  }

  static RingElement mul_sparse(const RingElement& a, const RingElement& b) {
    const RingSpec& spec = *a.spec_;
    const unsigned top = spec.truncation_dim();
    struct Term {
      const Monomial* m;
      unsigned codim;
      const Int* c;
    };
    std::vector<Term> ta, tb;
    ta.reserve(a.coeffs_.size());
    tb.reserve(b.coeffs_.size());
    for (const auto& [m, c] : a.coeffs_) ta.push_back({&m, spec.codim(m), &c});
    for (const auto& [m, c] : b.coeffs_) tb.push_back({&m, spec.codim(m), &c});
    RingElement r(a.spec_);
    Monomial key(spec.variables().size());
    for (const Term& x : ta)
      for (const Term& y : tb) {
        if (x.codim + y.codim > top) continue;
        for (size_t i = 0; i < key.size(); ++i)
          key[i] = (*x.m)[i] + (*y.m)[i];
        auto [it, inserted] = r.coeffs_.try_emplace(key, 0);
        it->second += *x.c * *y.c;
        if (it->second == 0) r.coeffs_.erase(it);
      }
    return r;
  }

  // y_d = -c0 * sum_{i=1..d} x_i y_{d-i}, one homogeneous slice at a time.
  RingElement invert_graded(const Int& c0) const {
    const unsigned top = spec_->truncation_dim();
    std::vector<RingElement> xc, yc;
    xc.reserve(top + 1);
    yc.reserve(top + 1);
    for (unsigned d = 0; d <= top; ++d) xc.push_back(component(d));
    yc.push_back(constant(spec_, c0));
    RingElement result = yc[0];
    for (unsigned d = 1; d <= top; ++d) {
      RingElement acc(spec_);
      for (unsigned i = 1; i <= d; ++i) {
        if (xc[i].is_zero() || yc[d - i].is_zero()) continue;
        acc += xc[i] * yc[d - i];
      }
      yc.push_back(acc * (-c0));
      result += yc.back();
    }
    return result;
  }

  // Newton doubling: y <- y(2 - xy), exact on truncated power series.
  RingElement invert_newton(const Int& c0) const {
    unsigned var_codim = spec_->variables()[0].codim;
    size_t cap = spec_->truncation_dim() / var_codim + 1;
    std::vector<Int> x = dense(cap);
    std::vector<Int> y{c0};
    size_t m = 1;
    while (m < cap) {
      size_t m2 = std::min(2 * m, cap);
      std::vector<Int> xt(x.begin(), x.begin() + std::min(m2, x.size()));
      std::vector<Int> t = detail::mul_dense(xt, y, m2);
      t.resize(m2);
      for (Int& c : t) c = -c;
      t[0] += 2;
      y = detail::mul_dense(y, t, m2);
      y.resize(m2);
      m = m2;
    }
    return from_dense(spec_, y);
  }

  RingSpecPtr spec_;
  std::map<Monomial, Int> coeffs_;
};

inline RingElement invert_unit(const RingElement& x) {
  return x.invert_unit();
}

inline RingElement power(const RingElement& x, long e) { return x.power(e); }

inline Int degree_eval(const RingElement& x) { return x.degree_eval(); }

/// Tensor product of ring models: variables concatenated (renamed on
/// collision), truncations added, and the degree functional of a
/// top (x) top monomial is the product of the factor functionals while
/// every mixed-bidegree top monomial maps to zero.
inline RingSpecPtr tensor(const RingSpecPtr& a, const RingSpecPtr& b) {
  const auto& va = a->variables();
  const auto& vb = b->variables();
  auto taken = [&](const std::string& n, const std::vector<Variable>& out) {
    for (const auto& v : out)
      if (v.name == n) return true;
    return false;
  };
  auto collides = [&](const std::string& n) {
    bool in_a = false, in_b = false;
    for (const auto& v : va) in_a |= (v.name == n);
    for (const auto& v : vb) in_b |= (v.name == n);
    return in_a && in_b;
  };
  std::vector<Variable> vars;
  vars.reserve(va.size() + vb.size());
  for (size_t side = 0; side < 2; ++side) {
    const auto& src = side == 0 ? va : vb;
    for (const auto& v : src) {
      std::string name = v.name;
      if (collides(name)) name += (side == 0 ? "1" : "2");
      while (taken(name, vars)) name += "_";
      vars.push_back({name, v.codim});
    }
  }
  unsigned trunc = a->truncation_dim() + b->truncation_dim();
  std::map<Monomial, Int> degree;
  for (const Monomial& m : detail::monomials_of_codim(vars, trunc)) {
    Monomial ma(m.begin(), m.begin() + va.size());
    Monomial mb(m.begin() + va.size(), m.end());
    Int value = 0;
    if (a->codim(ma) == a->truncation_dim() &&
        b->codim(mb) == b->truncation_dim())
      value = a->degree_functional().at(ma) * b->degree_functional().at(mb);
    degree.emplace(m, std::move(value));
  }
  return RingSpec::make(std::move(vars), trunc, std::move(degree));
}

/// Image of x under the inclusion of its ring as the variable block
/// [offset, offset + #vars) of the product ring.
inline RingElement embed(const RingElement& x, const RingSpecPtr& into,
                         size_t offset) {
  const size_t n_from = x.spec()->variables().size();
  const size_t n_to = into->variables().size();
  if (offset + n_from > n_to)
    throw std::invalid_argument("embed: variable block out of range");
  for (size_t i = 0; i < n_from; ++i)
    if (into->variables()[offset + i].codim !=
        x.spec()->variables()[i].codim)
      throw std::invalid_argument("embed: variable codims do not match");
  std::map<Monomial, Int> out;
  for (const auto& [m, c] : x.coefficients()) {
    Monomial key(n_to, 0);
    std::copy(m.begin(), m.end(), key.begin() + offset);
    out.emplace(std::move(key), c);
  }
  return RingElement(into, std::move(out));
}

}  // namespace segre
