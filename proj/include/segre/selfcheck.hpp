#pragma once
/*
 * Named invariant suites over all modules, shared by the `verify` CLI
 * subcommand, the unit tests and the acceptance runner. Each suite
 * returns structured results; a suite fails on its first broken
 * assertion and reports what broke.
 */

#include <segre/degree_formula.hpp>
#include <segre/incompressibility.hpp>
#include <segre/spec_parser.hpp>

#include <functional>
#include <random>

namespace segre {

struct CheckResult {
  std::string name;
  bool passed = true;
  long checks = 0;
  std::string detail;  // first failure
};

class Checker {
public:
  explicit Checker(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, std::string what) {
    ++result_.checks;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = std::move(what);
    }
  }

  /// Variant with a lazily built message, for hot loops.
  template <class Describe>
    requires std::invocable<Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.checks;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = describe();
    }
  }

  const CheckResult& result() const { return result_; }

private:
  CheckResult result_;
};

namespace selfcheck {

// ---- arith ---------------------------------------------------------

inline CheckResult binomial_identities() {
  Checker c("binomial reflection and Pascal identities");
  for (long m = 1; m <= 64; ++m)
    for (unsigned long k = 1; k <= 64; ++k) {
      Int rhs = binomial(Int(m) + k - 1, k);
      if (k % 2 == 1) rhs = -rhs;
      c.expect(binomial(-m, k) == rhs, [&] {
        return "reflection failed at m=" + std::to_string(m) +
               " k=" + std::to_string(k);
      });
    }
  for (long a = -64; a <= 64; ++a)
    for (unsigned long k = 1; k <= 64; ++k)
      c.expect(
          binomial(a, k) == binomial(a - 1, k - 1) + binomial(a - 1, k),
          [&] {
            return "Pascal failed at a=" + std::to_string(a) +
                   " k=" + std::to_string(k);
          });
  return c.result();
}

inline CheckResult kummer_agreement() {
  Checker c("Kummer carries match valuations of binomials, a,b <= 200");
  for (long a = 0; a <= 200; ++a)
    for (long b = a; b <= 200; ++b) {
      Int binom = binomial(Int(a + b), a);
      for (unsigned long p : {2ul, 3ul, 5ul})
        c.expect(vp(binom, p) == vp_binomial_kummer(a, b, p) &&
                     vp(binom, p) == vp_binomial_kummer(b, a, p),
                 [&] {
                   return "mismatch at a=" + std::to_string(a) +
                          " b=" + std::to_string(b) +
                          " p=" + std::to_string(p);
                 });
    }
  return c.result();
}

// ---- graded ring ---------------------------------------------------

inline RingElement random_series(const RingSpecPtr& spec,
                                 std::mt19937_64& rng, bool unit_constant) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::map<Monomial, Int> m;
  for (unsigned d = 0; d <= spec->truncation_dim(); ++d)
    for (const Monomial& mono : spec->monomials_of_codim(d)) {
      int v = coeff(rng);
      if (v != 0) m.emplace(mono, v);
    }
  RingElement r(spec, std::move(m));
  if (unit_constant) {
    Int want = (rng() & 1) ? 1 : -1;
    r += RingElement::constant(spec, want - r.constant_term());
  }
  return r;
}

inline RingSpecPtr random_ring(std::mt19937_64& rng) {
  unsigned nvars = 1 + rng() % 3;
  unsigned trunc = 1 + rng() % 12;
  std::vector<Variable> vars;
  for (unsigned i = 0; i < nvars; ++i)
    vars.push_back({"v" + std::to_string(i), 1});
  std::map<Monomial, Int> degrees;
  for (const Monomial& m : detail::monomials_of_codim(vars, trunc))
    degrees.emplace(m, 1);
  return RingSpec::make(std::move(vars), trunc, std::move(degrees));
}

inline CheckResult series_inverse_roundtrip(int trials = 1000) {
  Checker c("series inverse: x * invert_unit(x) = 1 on random series");
  std::mt19937_64 rng(0x5e9e);
  for (int i = 0; i < trials; ++i) {
    auto spec = random_ring(rng);
    auto x = random_series(spec, rng, true);
    c.expect(x * x.invert_unit() == RingElement::unit(spec),
             [&] { return "inverse round-trip failed for " + x.str(); });
  }
  return c.result();
}

inline CheckResult ring_axioms() {
  Checker c("ring axioms on random triples");
  std::mt19937_64 rng(0xa71);
  for (int i = 0; i < 150; ++i) {
    auto spec = random_ring(rng);
    auto x = random_series(spec, rng, false);
    auto y = random_series(spec, rng, false);
    auto z = random_series(spec, rng, false);
    c.expect(x * y == y * x, "commutativity failed");
    c.expect((x * y) * z == x * (y * z), "associativity failed");
    c.expect(x * (y + z) == x * y + x * z, "distributivity failed");
  }
  return c.result();
}

inline CheckResult kunneth_degrees() {
  Checker c("degree functional is multiplicative on tensor top classes");
  std::mt19937_64 rng(0xbeef);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int i = 0; i < 100; ++i) {
    unsigned da = 1 + rng() % 4, db = 1 + rng() % 4;
    auto a = detail::hyperplane_ring(da, 1 + rng() % 3);
    auto b = detail::hyperplane_ring(db, 1 + rng() % 3);
    auto t = tensor(a, b);
    RingElement x(a, {{Monomial{da}, Int(coeff(rng))}});
    RingElement y(b, {{Monomial{db}, Int(coeff(rng))}});
    c.expect((embed(x, t, 0) * embed(y, t, 1)).degree_eval() ==
                 x.degree_eval() * y.degree_eval(),
             "tensor degree not multiplicative");
  }
  return c.result();
}

// ---- chern ---------------------------------------------------------

using Inverter = std::function<RingElement(const RingElement&)>;

/// Whitney check c(T) * c(-T) = 1 over the catalogue, with a pluggable
/// inverter so fault-injection tests can verify the detector itself.
inline CheckResult whitney_inverse(const Inverter& inverter = {}) {
  Checker c("Whitney inverse c(T) c(-T) = 1 on catalogue models");
  Inverter inv = inverter ? inverter : [](const RingElement& x) {
    return x.invert_unit();
  };
  for (const auto& m : catalogue_base_models(0, 8))
    c.expect(m.chern_tangent.value() * inv(m.chern_tangent.value()) ==
                 RingElement::unit(m.ring),
             "Whitney failed for " + m.name);
  return c.result();
}

inline CheckResult class_construction_consistency() {
  Checker c("fixed-locus class with N = c(T) equals sq_class");
  std::vector<VarietyModel> models = catalogue_base_models(0, 8);
  auto base = catalogue_base_models(0, 4);
  for (const auto& x : base)
    for (const auto& y : base)
      if (x.dim + y.dim <= 8) models.push_back(product(x, y));
  for (const auto& m : models)
    c.expect(segre_fixed(m.chern_tangent) == sq_class(m),
             "construction mismatch for " + m.name);
  return c.result();
}

inline CheckResult segre_multiplicativity(unsigned max_total_dim = 8) {
  Checker c("Segre numbers multiply over products");
  auto models = catalogue_base_models(0, max_total_dim);
  for (const auto& x : models)
    for (const auto& y : models) {
      if (x.dim + y.dim > max_total_dim) continue;
      c.expect(segre_number(product(x, y)) ==
                   segre_number(x) * segre_number(y),
               "multiplicativity failed for " + x.name + " x " + y.name);
    }
  return c.result();
}

// ---- varieties / degree formula ------------------------------------

inline CheckResult catalogue_evenness() {
  Checker c("evenness of Segre numbers on complete integral models");
  for (const auto& m : catalogue_base_models(1, 12))
    c.expect(evenness_check(m), "odd Segre number for " + m.name);
  auto base = catalogue_base_models(1, 7);
  for (const auto& x : base)
    for (const auto& y : base)
      if (x.dim + y.dim <= 8)
        c.expect(evenness_check(product(x, y)),
                 "odd Segre number for " + x.name + " x " + y.name);
  return c.result();
}

/// Morphism data realizable by actual morphisms of the catalogue
/// varieties, so the degree formula is guaranteed on them: identities,
/// constant maps to targets with a rational point, finite self-maps of
/// P^1 and P^n, transfers along the split-conic isomorphism Q(1,split)
/// = P^1, products, and graph factorizations.
inline std::vector<MorphismDatum> realizable_morphism_data() {
  std::vector<MorphismDatum> data;
  auto p1 = projective_space(1);
  auto q1s = quadric(1, false);

  std::vector<VarietyModel> pool = catalogue_base_models(0, 5);
  pool.push_back(product(p1, p1));
  pool.push_back(product(p1, quadric(1, true)));
  pool.push_back(product(severi_brauer(1), projective_space(2)));
  pool.push_back(product(q1s, quadric(2, true)));

  // identities
  for (const auto& m : pool)
    if (m.index) data.push_back(make_morphism(m, m, Int(1)));

  // constant maps: need a rational point on the target, and either a
  // drop in dimension or positive-dimensional equal source
  for (const auto& src : pool) {
    if (!src.index) continue;
    for (const auto& dst : pool) {
      if (!dst.has_rational_point || !dst.index) continue;
      if (dst.dim < src.dim || (dst.dim == src.dim && src.dim >= 1))
        data.push_back(make_morphism(src, dst, Int(0)));
    }
  }

  // finite self-maps of P^1 (z -> z^d has degree d)
  for (long d = 0; d <= 5; ++d)
    data.push_back(make_morphism(p1, p1, Int(d)));

  // coordinate-power self-maps of P^n have degree d^n
  for (unsigned n = 1; n <= 3; ++n) {
    auto pn = projective_space(n);
    for (long d = 1; d <= 3; ++d) {
      Int deg = 1;
      for (unsigned i = 0; i < n; ++i) deg *= d;
      data.push_back(make_morphism(pn, pn, deg));
    }
  }

  // transfers across the isomorphism Q(1,split) = P^1, any degree
  for (long d = 0; d <= 4; ++d) {
    data.push_back(make_morphism(p1, q1s, Int(d)));
    data.push_back(make_morphism(q1s, p1, Int(d)));
  }

  // products of morphisms (kept to factors whose product has a known
  // index: one side of each product needs a rational point)
  std::vector<MorphismDatum> small;
  for (const auto& m : data)
    if (m.source.dim + m.target.dim <= 3) small.push_back(m);
  size_t base_count = data.size();
  for (size_t i = 0; i < small.size(); ++i)
    for (size_t j = i; j < small.size() && data.size() < base_count + 120;
         ++j) {
      auto candidate = product_morphism(small[i], small[j]);
      if (candidate.source.index && candidate.target.index)
        data.push_back(std::move(candidate));
    }

  // graph factorizations: a rational map Y -> X of degree d gives the
  // pair (graph -> Y, degree 1) and (graph -> X, degree d), with the
  // graph isomorphic to Y for an actual morphism
  for (long d : {1l, 2l, 3l}) {
    data.push_back(make_morphism(p1, p1, Int(1)));
    data.push_back(make_morphism(p1, q1s, Int(d)));
  }
  return data;
}

inline CheckResult degree_formula_on_legal_data() {
  Checker c("degree formula holds on generated realizable data");
  auto data = realizable_morphism_data();
  c.expect(data.size() >= 200,
           "generator produced only " + std::to_string(data.size()));
  for (const auto& m : data) {
    c.expect(*m.source.index % *m.target.index == 0,
             "generator emitted data with n_X not dividing n_Y");
    auto verdict = check_degree_formula(m);
    c.expect(verdict.applicable && verdict.holds,
             "formula failed for " + m.source.name + " -> " + m.target.name +
                 " deg " + m.degree->get_str() +
                 (verdict.applicable ? "" : " (" + verdict.reason + ")"));
  }
  return c.result();
}

inline CheckResult degree_formula_product_consistency() {
  Checker c("verdicts of product morphisms multiply mod 2");
  auto models = catalogue_base_models(0, 3);
  std::vector<MorphismDatum> data;
  for (const auto& x : models)
    if (x.index)
      for (long d : {0l, 1l, 2l, 3l}) {
        if (d != 1 && x.dim == 0) continue;
        if (d == 0 && !x.has_rational_point) continue;
        data.push_back(make_morphism(x, x, Int(d)));
      }
  for (const auto& a : data)
    for (const auto& b : data) {
      auto prod = product_morphism(a, b);
      if (!prod.source.index || !prod.target.index) continue;
      auto va = check_degree_formula(a);
      auto vb = check_degree_formula(b);
      auto vp_ = check_degree_formula(prod);
      if (!(va.applicable && vb.applicable && vp_.applicable)) continue;
      c.expect(vp_.lhs_mod2 == (va.lhs_mod2 * vb.lhs_mod2) % 2,
               "product lhs inconsistent");
      c.expect(vp_.rhs_mod2 == (va.rhs_mod2 * vb.rhs_mod2) % 2,
               "product rhs inconsistent");
    }
  return c.result();
}

inline CheckResult degree_formula_composition_closure() {
  Checker c("formula verdicts compose along morphism chains");
  auto data = realizable_morphism_data();
  auto same_model = [](const VarietyModel& a, const VarietyModel& b) {
    return a.name == b.name && a.dim == b.dim && a.index == b.index;
  };
  long found = 0;
  for (const auto& first : data)
    for (const auto& second : data) {
      if (!same_model(first.target, second.source)) continue;
      if (++found > 4000) return c.result();
      auto composed = make_morphism(first.source, second.target,
                                    *first.degree * *second.degree);
      auto v = check_degree_formula(composed);
      c.expect(v.applicable && v.holds,
               "composition failed: " + first.source.name + " -> " +
                   second.target.name);
    }
  return c.result();
}

// ---- incompressibility families -------------------------------------

inline CheckResult family_invariants(Family family, unsigned n_max) {
  const char* label = family == Family::severi_brauer ? "Severi-Brauer"
                      : family == Family::quadric     ? "quadric"
                                                      : "involution";
  Checker c(std::string("family cross-checks: ") + label +
            " up to n=" + std::to_string(n_max));
  for (const auto& row : family_report(family, n_max)) {
    c.expect(row.closed_form_match,
             "closed form mismatch at n=" + std::to_string(row.n));
    c.expect(row.valuation_match,
             "valuation mismatch at n=" + std::to_string(row.n));
    c.expect(row.certificate.conclusion ==
                 Conclusion::strongly_2_incompressible,
             "family member not certified at n=" + std::to_string(row.n));
    switch (family) {
      case Family::severi_brauer:
      case Family::involution:
        c.expect(row.certificate.v2_segre == Valuation::finite(row.n),
                 "v2 != n at n=" + std::to_string(row.n));
        break;
      case Family::quadric:
        c.expect(mod4(row.certificate.segre) == 2,
                 "segre != 2 mod 4 at n=" + std::to_string(row.n));
        break;
    }
  }
  return c.result();
}

// ---- parser ---------------------------------------------------------

inline AstPtr random_ast(std::mt19937_64& rng, int depth) {
  using Kind = VarietySpecAST::Kind;
  if (depth > 0 && rng() % 100 < 45)
    return make_product(random_ast(rng, depth - 1),
                        random_ast(rng, depth - 1));
  switch (rng() % 4) {
    case 0:
      return make_leaf(Kind::P, rng() % 65);
    case 1:
      return make_leaf(Kind::Q, rng() % 65, rng() & 1);
    case 2:
      return make_leaf(Kind::SB, 1 + rng() % 20);
    default:
      return make_leaf(Kind::Inv, 1 + rng() % 20);
  }
}

inline CheckResult parser_roundtrip(int trials = 1000) {
  Checker c("parser round-trip on fuzzed spec trees");
  std::mt19937_64 rng(0x9a53);
  for (int i = 0; i < trials; ++i) {
    AstPtr ast = random_ast(rng, 5);
    AstPtr reparsed = parse_variety_spec(to_string(ast));
    c.expect(ast_equal(ast, reparsed),
             "round-trip failed for " + to_string(ast));
  }
  return c.result();
}

}  // namespace selfcheck

struct Suite {
  std::string name;
  std::function<std::vector<CheckResult>()> run;
};

inline const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites = {
      {"arith",
       [] {
         return std::vector<CheckResult>{
             selfcheck::binomial_identities(), selfcheck::kummer_agreement()};
       }},
      {"ring",
       [] {
         return std::vector<CheckResult>{selfcheck::series_inverse_roundtrip(),
                                         selfcheck::ring_axioms(),
                                         selfcheck::kunneth_degrees()};
       }},
      {"chern",
       [] {
         return std::vector<CheckResult>{
             selfcheck::whitney_inverse(),
             selfcheck::class_construction_consistency(),
             selfcheck::segre_multiplicativity()};
       }},
      {"varieties",
       [] {
         return std::vector<CheckResult>{selfcheck::catalogue_evenness()};
       }},
      {"degree-formula",
       [] {
         return std::vector<CheckResult>{
             selfcheck::degree_formula_on_legal_data(),
             selfcheck::degree_formula_product_consistency(),
             selfcheck::degree_formula_composition_closure()};
       }},
      {"families",
       [] {
         return std::vector<CheckResult>{
             selfcheck::family_invariants(Family::severi_brauer, 12),
             selfcheck::family_invariants(Family::quadric, 12),
             selfcheck::family_invariants(Family::involution, 12)};
       }},
      {"parser",
       [] {
         return std::vector<CheckResult>{selfcheck::parser_roundtrip()};
       }},
  };
  return suites;
}

}  // namespace segre
