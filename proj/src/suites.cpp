// Copyright 2026 The ppforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Theorem-versus-oracle grids. Each field's grid is cut into independent
// work units; units run on a small thread pool and their partial results
// are merged in unit order, so the report does not depend on scheduling.

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <memory>
#include <numeric>
#include <string>
#include <thread>

#include "ppforge/additive.hpp"
#include "ppforge/cyclotomic.hpp"
#include "ppforge/oracle.hpp"
#include "ppforge/poly_text.hpp"
#include "ppforge/sampling.hpp"

namespace ppforge {

namespace {

struct Partial {
  std::uint64_t cases = 0;
  std::vector<Disagreement> disagreements;
};

using Unit = std::function<Partial()>;

class Tally {
 public:
  explicit Tally(const Field& field) : field_(field.designation()) {}

  void count() { ++partial_.cases; }

  template <typename Describe>
  void expect(std::string_view construction, bool theorem, bool oracle, Describe&& describe) {
    if (theorem != oracle) {
      partial_.disagreements.push_back({field_, std::string(construction), describe(), theorem, oracle});
    }
  }

  Partial take() { return std::move(partial_); }

 private:
  std::string field_;
  Partial partial_;
};

std::string num(std::uint64_t v) { return std::to_string(v); }

struct Context {
  Field field;
  std::uint64_t seed;
  std::uint64_t max_q;
};

// --- lemma -----------------------------------------------------------------

void lemma_units(const Context& ctx, std::vector<Unit>& units) {
  const std::uint64_t q = ctx.field.q();
  for (std::uint64_t d : divisors(q - 1)) {
    auto hs = std::make_shared<const std::vector<FqPoly>>(lemma_h_samples(ctx.field, d, ctx.seed));
    for (std::uint64_t u = 1; u < q; ++u) {
      units.push_back([ctx, hs, d, u] {
        Tally tally(ctx.field);
        for (const auto& h : *hs) {
          const CyclotomicForm cf{u, d, h};
          const bool verdict = lemma_check(ctx.field, cf).verdict();
          const bool oracle = is_permutation(ctx.field, expand_cyclotomic(ctx.field, cf), ctx.max_q);
          tally.count();
          tally.expect("lemma", verdict, oracle,
                       [&] { return "d=" + num(d) + " u=" + num(u) + " h=" + format_poly(h); });
        }
        return tally.take();
      });
    }
  }
}

// --- four-condition criterion ------------------------------------------

std::vector<std::uint64_t> theorem1_degrees(const Field& field) {
  std::vector<std::uint64_t> out;
  for (auto d : divisors(field.q() - 1)) {
    if (d > 2) out.push_back(d);
  }
  return out;
}

std::string describe(const Theorem1Params& p) {
  return "d=" + num(p.d) + " u=" + num(p.u) + " k=" + num(p.k) + " b=" + num(p.b.index) + " g0=" + format_poly(p.g0);
}

void theorem1_units(const Context& ctx, std::vector<Unit>& units) {
  const std::uint64_t q = ctx.field.q();
  for (std::uint64_t d : theorem1_degrees(ctx.field)) {
    auto g0s = std::make_shared<const std::vector<FqPoly>>(theorem1_cofactors(ctx.field, d, ctx.seed));
    for (std::uint64_t u = 1; u < q; ++u) {
      units.push_back([ctx, g0s, d, u] {
        Tally tally(ctx.field);
        for (std::uint64_t k = 0; k < d; ++k) {
          for (std::uint64_t b = 0; b < ctx.field.q(); ++b) {
            for (const auto& g0 : *g0s) {
              const Theorem1Params params{d, u, k, Fq{b}, g0};
              const bool verdict = theorem1_check(ctx.field, params).verdict();
              const bool oracle = is_permutation(ctx.field, theorem1_polynomial(ctx.field, params), ctx.max_q);
              tally.count();
              tally.expect("theorem1", verdict, oracle, [&] { return describe(params); });
            }
          }
        }
        return tally.take();
      });
    }
  }
}

// --- proposition / corollaries --------------------------------------------

std::string describe(const Field& field, const AdditiveTriple& tr) {
  return "A=" + format_additive(field, tr.A) + " B=" + format_additive(field, tr.B) + " g=" + format_poly(tr.g);
}

void additive_units(const Context& ctx, bool commuting_only, std::vector<Unit>& units) {
  auto pairs = std::make_shared<const std::vector<std::pair<AdditivePoly, AdditivePoly>>>(
      additive_pairs(ctx.field, ctx.seed));
  auto gs = std::make_shared<const std::vector<FqPoly>>(additive_g_samples(ctx.field, ctx.seed));
  constexpr std::size_t kChunk = 8;
  for (std::size_t start = 0; start < pairs->size(); start += kChunk) {
    units.push_back([ctx, pairs, gs, start, commuting_only] {
      Tally tally(ctx.field);
      const std::size_t stop = std::min(start + kChunk, pairs->size());
      for (std::size_t i = start; i < stop; ++i) {
        const auto& [A, B] = (*pairs)[i];
        const bool commute = additive_commutes(ctx.field, A, B);
        if (commuting_only && !commute) continue;
        const SubgroupData least = subgroup_data(ctx.field, A, B, PreimageChoice::least);
        const SubgroupData greatest = subgroup_data(ctx.field, A, B, PreimageChoice::greatest);
        for (const auto& g : *gs) {
          const AdditiveTriple tr{A, B, g};
          const bool oracle = is_permutation(ctx.field, triple_polynomial(ctx.field, tr), ctx.max_q);
          const auto text = [&] { return describe(ctx.field, tr); };
          tally.count();
          if (commuting_only) {
            tally.expect("corollary2", commuting_criterion_check(ctx.field, tr, least).verdict(), oracle, text);
            continue;
          }
          const bool verdict = proposition_check(ctx.field, tr, least).verdict();
          tally.expect("proposition", verdict, oracle, text);
          tally.expect("right_inverse_swap", verdict, proposition_check(ctx.field, tr, greatest).verdict(), text);
          // Necessity only: a permutation must satisfy both conditions.
          if (oracle) tally.expect("corollary1", necessary_conditions_check(ctx.field, tr, least).verdict(), true, text);
        }
      }
      return tally.take();
    });
  }
}

// --- trace theorem ---------------------------------------------------------

void trace_units(const Context& ctx, std::vector<Unit>& units) {
  auto hs = std::make_shared<const std::vector<FqPoly>>(prime_field_polys(ctx.field, 2));
  auto gs = std::make_shared<const std::vector<FqPoly>>(trace_g_samples(ctx.field, ctx.seed));
  for (const auto& A : prime_field_additive(ctx.field, 3)) {
    units.push_back([ctx, hs, gs, A] {
      Tally tally(ctx.field);
      for (const auto& h : *hs) {
        std::vector<FqPoly> g_values = *gs;
        // g = gamma h + delta with gamma = t, delta = 1.
        g_values.push_back(add(ctx.field, scale(ctx.field, h, ctx.field.generator()), FqPoly::constant(ctx.field.one())));
        for (const auto& g : g_values) {
          const TraceTheoremParams tp{g, A, h};
          const bool verdict = trace_theorem_check(ctx.field, tp).verdict();
          const bool oracle = is_permutation(ctx.field, trace_theorem_polynomial(ctx.field, tp), ctx.max_q);
          tally.count();
          tally.expect("trace_theorem", verdict, oracle, [&] {
            return "A=" + format_additive(ctx.field, A) + " h=" + format_poly(h) + " g=" + format_poly(g);
          });
        }
      }
      return tally.take();
    });
  }
}

// --- hermite ---------------------------------------------------------------

void hermite_units(const Context& ctx, std::vector<Unit>& units) {
  const Field& field = ctx.field;
  const std::uint64_t q = field.q();
  if (q % 2 == 0) return;
  const Fq two = field.embed(2);
  std::vector<Fq> coeffs;  // a with 2a a nonzero square
  for (std::uint64_t a = 1; a < q; ++a) {
    if (field.is_square(field.mul(two, Fq{a}))) coeffs.push_back(Fq{a});
  }
  std::vector<std::uint64_t> exps;
  for (std::uint64_t i = 1; i < q; ++i) {
    if (std::gcd(i, q - 1) == 1) exps.push_back(i);
  }
  for (Fq a : coeffs) {
    units.push_back([ctx, coeffs, exps, a] {
      Tally tally(ctx.field);
      for (Fq b : coeffs) {
        for (auto i : exps) {
          for (auto j : exps) {
            const HermiteParams hp{a, b, i, j};
            const auto family = hermite_family(ctx.field, hp);
            const bool oracle = is_permutation(ctx.field, family.polynomial, ctx.max_q);
            const auto text = [&] {
              return "a=" + num(a.index) + " b=" + num(b.index) + " i=" + num(i) + " j=" + num(j);
            };
            tally.count();
            tally.expect("hermite", family.sufficient.verdict(), true, text);
            tally.expect("hermite", true, oracle, text);
            bool pointwise = true;
            for (std::uint64_t x = 1; x < ctx.field.q() && pointwise; ++x) {
              pointwise = eval(ctx.field, family.polynomial, Fq{x}) == hermite_piecewise(ctx.field, hp, Fq{x});
            }
            tally.expect("hermite_piecewise", true, pointwise, text);
          }
        }
      }
      return tally.take();
    });
  }
}

// --- example family --------------------------------------------------------

void example_units(const Context& ctx, std::vector<Unit>& units) {
  units.push_back([ctx] {
    Tally tally(ctx.field);
    const Field& field = ctx.field;
    const std::uint64_t p = field.p();
    if (field.n() != 2 || p == 2) return tally.take();
    const std::vector<FqPoly> hs{
        FqPoly::monomial(field.one(), 2), FqPoly(),
        FqPoly::x(),
        FqPoly::monomial(field.one(), 3),
        FqPoly({field.one(), field.zero(), field.one()}),
        FqPoly({field.one(), field.one(), field.embed(2)}),
    };
    for (const auto& h : hs) {
      const auto family = example_family(field, h);
      tally.count();
      const auto text = [&] { return "h=" + format_poly(h) + " gamma=" + num(family.gamma.index); };
      tally.expect("example_family", true, is_permutation(field, family.polynomial, ctx.max_q), text);
      if (h.degree() == 2 && h.term_count() == 1) {
        tally.expect("example_family_degree", true, family.degree == static_cast<std::int64_t>(2 * p), text);
      }
    }
    return tally.take();
  });
}

// --- structural invariants -------------------------------------------------

void structural_units(const Context& ctx, std::vector<Unit>& units) {
  const Field& field = ctx.field;
  const std::uint64_t q = field.q();

  // |ker B| * |im B| = q.
  units.push_back([ctx] {
    Tally tally(ctx.field);
    for (const auto& B : additive_samples(ctx.field, ctx.seed)) {
      const auto data = subgroup_data(ctx.field, AdditivePoly::identity(), B);
      tally.count();
      tally.expect("rank_nullity", true, data.kernel.size() * data.image.size() == ctx.field.q(),
                   [&] { return "B=" + format_additive(ctx.field, B); });
    }
    return tally.take();
  });

  // h_d vanishes on mu_d \ {1} and h_d(1) = d.
  units.push_back([ctx] {
    Tally tally(ctx.field);
    for (auto d : divisors(ctx.field.q() - 1)) {
      const FqPoly hd = h_d_poly(d);
      for (Fq z : ctx.field.roots_of_unity(d)) {
        const Fq want = z == ctx.field.one() ? ctx.field.embed(static_cast<std::int64_t>(d % ctx.field.p()))
                                             : ctx.field.zero();
        tally.count();
        tally.expect("h_d_on_mu_d", true, eval(ctx.field, hd, z) == want,
                     [&] { return "d=" + num(d) + " zeta=" + num(z.index); });
      }
    }
    return tally.take();
  });

  // fhat on mu_d \ {1} is b^e z^(u + k e); when (1)-(3) hold but (4) fails,
  // fhat(mu_d \ {1}) = mu_d \ {b^e} and fhat(1) != b^e.
  for (std::uint64_t d : theorem1_degrees(field)) {
    auto g0s = std::make_shared<const std::vector<FqPoly>>(theorem1_cofactors(field, d, ctx.seed));
    for (std::uint64_t u = 1; u < q; ++u) {
      units.push_back([ctx, g0s, d, u] {
        Tally tally(ctx.field);
        const Field& f = ctx.field;
        const std::uint64_t e = (f.q() - 1) / d;
        const auto mu = f.roots_of_unity(d);
        for (std::uint64_t k = 0; k < d; ++k) {
          for (std::uint64_t b = 1; b < f.q(); ++b) {
            const Fq be = f.pow(Fq{b}, e);
            for (const auto& g0 : *g0s) {
              const Theorem1Params params{d, u, k, Fq{b}, g0};
              const auto table = fhat_on_mu_d(f, params);
              bool law = true;
              for (const auto& [z, v] : table) {
                if (z != f.one() && v != f.mul(be, f.pow(z, u + k * e))) law = false;
              }
              tally.count();
              tally.expect("fhat_monomial_law", true, law, [&] { return describe(params); });

              const auto report = theorem1_check(f, params);
              if (report[0].holds && report[1].holds && report[2].holds && !report[3].holds) {
                std::vector<Fq> rest, expected;
                Fq at_one{};
                for (const auto& [z, v] : table) {
                  if (z == f.one()) {
                    at_one = v;
                  } else {
                    rest.push_back(v);
                  }
                }
                for (Fq z : mu) {
                  if (z != be) expected.push_back(z);
                }
                std::sort(rest.begin(), rest.end());
                std::sort(expected.begin(), expected.end());
                tally.expect("fhat_condition4_failure", true, rest == expected && at_one != be,
                             [&] { return describe(params); });
              }
            }
          }
        }
        return tally.take();
      });
    }
  }

  // q = q0^2, d = q0 - 1: mu_d is the set of nonzero x with x^q0 = x.
  if (field.n() % 2 == 0) {
    units.push_back([ctx] {
      Tally tally(ctx.field);
      const Field& f = ctx.field;
      std::uint64_t q0 = 1;
      for (unsigned i = 0; i < f.n() / 2; ++i) q0 *= f.p();
      auto mu = f.roots_of_unity(q0 - 1);
      std::sort(mu.begin(), mu.end());
      std::vector<Fq> fixed;
      for (std::uint64_t x = 1; x < f.q(); ++x) {
        if (f.pow(Fq{x}, q0) == Fq{x}) fixed.push_back(Fq{x});
      }
      tally.count();
      tally.expect("subfield_roots_of_unity", true, mu == fixed, [&] { return "q0=" + num(q0); });
      return tally.take();
    });
  }

  // For h over F_p without roots in F_p, h(T(a)) lies in F_p \ {0}.
  units.push_back([ctx] {
    Tally tally(ctx.field);
    const Field& f = ctx.field;
    const AdditivePoly T = trace_poly(f);
    for (const auto& h : prime_field_polys(f, 2)) {
      bool rootless = true;
      for (std::uint64_t c = 0; c < f.p(); ++c) rootless = rootless && eval(f, h, Fq{c}).index != 0;
      if (!rootless) continue;
      bool inside = true;
      for (std::uint64_t a = 0; a < f.q(); ++a) {
        const Fq v = eval(f, h, additive_eval(f, T, Fq{a}));
        inside = inside && v.index != 0 && f.in_prime_subfield(v);
      }
      tally.count();
      tally.expect("trace_h_nonvanishing", true, inside, [&] { return "h=" + format_poly(h); });
    }
    return tally.take();
  });

  // f(a + k) = f(a) + A(k) for k in ker B.
  units.push_back([ctx] {
    Tally tally(ctx.field);
    const Field& f = ctx.field;
    const auto samples = additive_samples(f, ctx.seed);
    const auto gs = additive_g_samples(f, ctx.seed);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const AdditiveTriple tr{samples[(i * 7 + 3) % samples.size()], samples[i], gs[i % gs.size()]};
      const FqPoly poly = triple_polynomial(f, tr);
      const auto data = subgroup_data(f, tr.A, tr.B);
      bool law = true;
      for (std::uint64_t a = 0; a < f.q() && law; ++a) {
        for (Fq k : data.kernel) {
          const Fq lhs = eval(f, poly, f.add(Fq{a}, k));
          const Fq rhs = f.add(eval(f, poly, Fq{a}), additive_eval(f, tr.A, k));
          if (lhs != rhs) law = false;
        }
      }
      tally.count();
      tally.expect("additive_coset_law", true, law, [&] { return describe(f, tr); });
    }
    return tally.take();
  });
}

void run_units(const std::vector<Unit>& units, unsigned threads, std::vector<Partial>& results) {
  results.assign(units.size(), {});
  std::vector<std::exception_ptr> errors(units.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < units.size();) {
      try {
        results[i] = units[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(units.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

EquivalenceReport run_equivalence_suite(const SuitePlan& plan) {
  const auto start = std::chrono::steady_clock::now();
  EquivalenceReport report;
  report.suite = std::string(suite_name(plan.suite));

  std::vector<Unit> units;
  for (const auto& name : plan.fields) {
    const Field field = Field::parse(name);
    report.fields.push_back(field.designation());
    if (field.q() > plan.max_q) {
      report.skipped_fields.push_back(field.designation());
      continue;
    }
    const Context ctx{field, plan.seed, plan.max_q};
    switch (plan.suite) {
      case Suite::lemma: lemma_units(ctx, units); break;
      case Suite::theorem1: theorem1_units(ctx, units); break;
      case Suite::proposition: additive_units(ctx, false, units); break;
      case Suite::corollary2: additive_units(ctx, true, units); break;
      case Suite::trace_theorem: trace_units(ctx, units); break;
      case Suite::hermite: hermite_units(ctx, units); break;
      case Suite::example_family: example_units(ctx, units); break;
      case Suite::structural: structural_units(ctx, units); break;
    }
  }

  const unsigned threads = plan.threads != 0 ? plan.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<Partial> results;
  run_units(units, threads, results);
  for (auto& partial : results) {
    report.cases_run += partial.cases;
    for (auto& d : partial.disagreements) report.disagreements.push_back(std::move(d));
  }
  std::sort(report.disagreements.begin(), report.disagreements.end());
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace ppforge
