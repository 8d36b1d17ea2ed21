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

// ppforge: construct, check and brute-force permutation polynomials.
//
// Exit status: 0 on success, 2 for usage, parse and scope errors, 3 when a
// verdict disagrees with the oracle or with --expect.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ppforge/additive.hpp"
#include "ppforge/cyclotomic.hpp"
#include "ppforge/error.hpp"
#include "ppforge/oracle.hpp"
#include "ppforge/poly_text.hpp"
#include "ppforge/record.hpp"

namespace {

using namespace ppforge;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

struct Globals {
  bool pretty = false;
  std::optional<std::uint64_t> max_q_flag;

  std::uint64_t max_q() const {
    if (max_q_flag) return *max_q_flag;
    if (const char* env = std::getenv("PPFORGE_MAX_Q"); env != nullptr && *env != '\0') {
      try {
        std::size_t used = 0;
        const auto v = std::stoull(env, &used);
        if (used == std::string_view(env).size()) return v;
      } catch (const std::exception&) {
      }
      throw ppforge::ParseError(std::string("PPFORGE_MAX_Q is not a number: '") + env + "'");
    }
    return kDefaultMaxQ;
  }
};

void emit(const Globals& g, const OutputRecord& r) {
  std::cout << (g.pretty ? to_pretty(r) : to_json_line(r) + '\n');
}

// Exit code for a record that carries an oracle answer.
int consistency(const OutputRecord& r) {
  if (r.oracle == OracleStatus::skipped) return kExitOk;
  return (r.oracle == OracleStatus::confirmed) == r.verdict ? kExitOk : kExitMismatch;
}

OracleStatus maybe_oracle(bool wanted, const Field& field, const FqPoly& f, std::uint64_t max_q) {
  return wanted ? oracle_status(field, f, max_q) : OracleStatus::skipped;
}

// --- check -----------------------------------------------------------------

struct CheckArgs {
  std::string field;
  bool oracle = false;
  // lemma
  std::uint64_t u = 1;
  std::uint64_t d = 3;
  std::string h = "1";
  // theorem1
  std::uint64_t k = 0;
  std::uint64_t b = 0;
  std::string g0 = "1";
  std::optional<std::string> g;
  // additive
  std::string A = "x";
  std::string B = "x";
  std::string right_inverse = "least";
  // hermite
  std::uint64_t a = 1;
  std::uint64_t i = 1;
  std::uint64_t j = 1;
};

int check_lemma(const Globals& gl, const CheckArgs& c) {
  const Field field = Field::parse(c.field);
  const CyclotomicForm cf{c.u, c.d, parse_poly(field, c.h)};
  const FqPoly f = expand_cyclotomic(field, cf);
  OutputRecord r{field.designation(), "lemma", {{"u", c.u}, {"d", c.d}, {"h", format_poly(cf.h)}}, {}, false,
                 format_poly(f), maybe_oracle(c.oracle, field, f, gl.max_q())};
  const auto report = lemma_check(field, cf);
  r.conditions = report.conditions();
  r.verdict = report.verdict();
  emit(gl, r);
  return consistency(r);
}

int check_theorem1(const Globals& gl, const CheckArgs& c) {
  const Field field = Field::parse(c.field);
  const Fq b = field.element(c.b);
  Theorem1Params params{c.d, c.u, c.k, b, parse_poly(field, c.g0)};
  if (c.g) params = Theorem1Params::from_g(field, c.d, c.u, c.k, b, parse_poly(field, *c.g));
  const auto report = theorem1_check(field, params);
  const FqPoly f = theorem1_polynomial(field, params);
  OutputRecord r{field.designation(),
                 "theorem1",
                 {{"d", params.d},
                  {"u", params.u},
                  {"k", params.k},
                  {"b", params.b.index},
                  {"g0", format_poly(params.g0)},
                  {"g", format_poly(theorem1_g(field, params))}},
                 report.conditions(),
                 report.verdict(),
                 format_poly(f),
                 maybe_oracle(c.oracle, field, f, gl.max_q())};
  emit(gl, r);
  return consistency(r);
}

int check_additive(const Globals& gl, const CheckArgs& c, bool commuting) {
  const Field field = Field::parse(c.field);
  const AdditiveTriple tr{parse_additive(field, c.A), parse_additive(field, c.B), parse_poly(field, c.g.value_or("0"))};
  const FqPoly f = triple_polynomial(field, tr);
  std::vector<std::pair<std::string, ParamValue>> params{
      {"A", format_additive(field, tr.A)}, {"B", format_additive(field, tr.B)}, {"g", format_poly(tr.g)}};
  ConditionReport report;
  if (commuting) {
    report = commuting_criterion_check(field, tr);
  } else {
    const auto choice = c.right_inverse == "greatest" ? PreimageChoice::greatest : PreimageChoice::least;
    params.emplace_back("right_inverse", c.right_inverse);
    report = proposition_check(field, tr, choice);
  }
  OutputRecord r{field.designation(), commuting ? "corollary2" : "proposition", std::move(params),
                 report.conditions(), report.verdict(), format_poly(f),
                 maybe_oracle(c.oracle, field, f, gl.max_q())};
  emit(gl, r);
  return consistency(r);
}

int check_trace(const Globals& gl, const CheckArgs& c) {
  const Field field = Field::parse(c.field);
  const TraceTheoremParams tp{parse_poly(field, c.g.value_or("0")), parse_additive(field, c.A), parse_poly(field, c.h)};
  const auto report = trace_theorem_check(field, tp);
  const FqPoly f = trace_theorem_polynomial(field, tp);
  OutputRecord r{field.designation(),
                 "trace_theorem",
                 {{"A", format_additive(field, tp.A)}, {"h", format_poly(tp.h)}, {"g", format_poly(tp.g)}},
                 report.conditions(),
                 report.verdict(),
                 format_poly(f),
                 maybe_oracle(c.oracle, field, f, gl.max_q())};
  emit(gl, r);
  return consistency(r);
}

int check_hermite(const Globals& gl, const CheckArgs& c) {
  const Field field = Field::parse(c.field);
  const HermiteParams hp{field.element(c.a), field.element(c.b), c.i, c.j};
  const auto family = hermite_family(field, hp);
  OutputRecord r{field.designation(),
                 "hermite",
                 {{"a", hp.a.index}, {"b", hp.b.index}, {"i", hp.i}, {"j", hp.j}},
                 family.sufficient.conditions(),
                 family.sufficient.verdict(),
                 format_poly(family.polynomial),
                 maybe_oracle(c.oracle, field, family.polynomial, gl.max_q())};
  emit(gl, r);
  // The conditions are only sufficient: a permutation with failing
  // conditions is not a contradiction.
  return r.verdict && r.oracle == OracleStatus::refuted ? kExitMismatch : kExitOk;
}

// --- generate --------------------------------------------------------------

struct GenerateArgs {
  std::string field;
  std::uint64_t d = 3;
  std::vector<std::uint64_t> u{1};
  std::vector<std::uint64_t> k{0};
  std::vector<std::string> g0{"1"};
  std::string h = "x^2";
  std::optional<std::uint64_t> limit;
  bool no_oracle = false;
};

int generate_theorem1(const Globals& gl, const GenerateArgs& a) {
  const Field field = Field::parse(a.field);
  const std::uint64_t max_q = gl.max_q();
  Theorem1Bounds bounds{a.u, a.k, {}};
  for (const auto& text : a.g0) bounds.g0_values.push_back(parse_poly(field, text));
  int status = kExitOk;
  std::uint64_t emitted = 0;
  if (a.limit && *a.limit == 0) return kExitOk;
  theorem1_generate(field, a.d, bounds, [&](const Theorem1Params& p, const FqPoly& f) {
    const auto report = theorem1_check(field, p);
    OutputRecord r{field.designation(),
                   "theorem1",
                   {{"d", p.d},
                    {"u", p.u},
                    {"k", p.k},
                    {"b", p.b.index},
                    {"g0", format_poly(p.g0)},
                    {"g", format_poly(theorem1_g(field, p))}},
                   report.conditions(),
                   report.verdict(),
                   format_poly(f),
                   maybe_oracle(!a.no_oracle, field, f, max_q)};
    emit(gl, r);
    status = std::max(status, consistency(r));
    return !a.limit || ++emitted < *a.limit;
  });
  return status;
}

int generate_example(const Globals& gl, const GenerateArgs& a) {
  const Field field = Field::parse(a.field);
  if (a.limit && *a.limit == 0) return kExitOk;
  const FqPoly h = parse_poly(field, a.h);
  const auto family = example_family(field, h);
  // x + gamma h(T(x)) is the trace construction with g = gamma h, A = x and
  // a constant multiplier of 1.
  const TraceTheoremParams tp{scale(field, h, family.gamma), AdditivePoly::identity(), FqPoly::constant(field.one())};
  const auto report = trace_theorem_check(field, tp);
  OutputRecord r{field.designation(),
                 "example",
                 {{"h", format_poly(h)},
                  {"gamma", family.gamma.index},
                  {"degree", static_cast<std::uint64_t>(std::max<std::int64_t>(family.degree, 0))}},
                 report.conditions(),
                 report.verdict(),
                 format_poly(family.polynomial),
                 maybe_oracle(!a.no_oracle, field, family.polynomial, gl.max_q())};
  emit(gl, r);
  return consistency(r);
}

// --- selftest --------------------------------------------------------------

struct SelftestArgs {
  std::vector<std::string> suites{"all"};
  std::vector<std::string> fields;
  unsigned threads = 0;
  std::uint64_t seed = kDefaultSeed;
  bool timing = false;
};

int selftest(const Globals& gl, const SelftestArgs& a) {
  std::vector<Suite> suites;
  for (const auto& name : a.suites) {
    if (name == "all") {
      for (auto s : all_suites()) suites.push_back(s);
    } else {
      suites.push_back(parse_suite(name));
    }
  }
  const std::uint64_t max_q = gl.max_q();
  bool passed = true;
  for (Suite s : suites) {
    const SuitePlan plan{s, a.fields.empty() ? default_fields(s) : a.fields, a.seed, a.threads, max_q};
    const auto report = run_equivalence_suite(plan);
    std::cout << (gl.pretty ? to_pretty(report) : to_json_line(report) + '\n') << std::flush;
    if (a.timing) {
      std::cerr << report.suite << ": " << std::chrono::duration<double>(report.elapsed).count() << " s\n";
    }
    passed = passed && report.passed();
  }
  return passed ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ppforge: permutation polynomials over finite fields"};
  app.require_subcommand(1);
  // Single-letter long options such as --h are taken, so help is --help only.
  app.set_help_flag("--help", "Print this help message and exit");
  Globals gl;
  app.add_flag("--pretty", gl.pretty, "Human-readable output instead of JSON lines");
  app.add_option("--max-q", gl.max_q_flag, "Largest field order the brute-force oracle accepts")
      ->check(CLI::PositiveNumber);

  // field-info
  std::string info_field;
  auto* info = app.add_subcommand("field-info", "Modulus and primitive element of F_q");
  info->add_option("field", info_field, "p or p^n")->required();

  // verify
  std::string verify_field, verify_poly;
  std::optional<std::string> expect;
  auto* verify = app.add_subcommand("verify", "Brute-force permutation test");
  verify->add_option("field", verify_field, "p or p^n")->required();
  verify->add_option("polynomial", verify_poly, "e.g. 'x^5+x^3+3*x'")->required();
  verify->add_option("--expect", expect, "Exit 3 unless the verdict matches")
      ->check(CLI::IsMember({"true", "false"}));

  // check <construction>
  CheckArgs ca;
  auto* check = app.add_subcommand("check", "Evaluate a criterion's conditions");
  check->require_subcommand(1);
  const auto common = [&](CLI::App* sub) {
    sub->add_option("field", ca.field, "p or p^n")->required();
    sub->add_flag("--oracle", ca.oracle, "Also run the brute-force oracle");
  };
  auto* c_lemma = check->add_subcommand("lemma", "f = x^u h(x^((q-1)/d))");
  common(c_lemma);
  c_lemma->add_option("--u", ca.u)->required();
  c_lemma->add_option("--d", ca.d)->required();
  c_lemma->add_option("--h", ca.h, "Polynomial h")->required();

  auto* c_t1 = check->add_subcommand("theorem1", "f = x^u (b x^(k(q-1)/d) + g(x^((q-1)/d)))");
  common(c_t1);
  c_t1->add_option("--d", ca.d)->required();
  c_t1->add_option("--u", ca.u)->capture_default_str();
  c_t1->add_option("--k", ca.k)->capture_default_str();
  c_t1->add_option("--b", ca.b, "Element index")->required();
  auto* g0_opt = c_t1->add_option("--g0", ca.g0, "Cofactor with g = h_d g0")->capture_default_str();
  c_t1->add_option("--g", ca.g, "Explicit g, divisible by h_d")->excludes(g0_opt);

  auto* c_prop = check->add_subcommand("proposition", "f = A(x) + g(B(x))");
  auto* c_cor2 = check->add_subcommand("corollary2", "f = A(x) + g(B(x)) with A, B commuting");
  for (auto* sub : {c_prop, c_cor2}) {
    common(sub);
    sub->add_option("--A", ca.A, "Additive polynomial")->required();
    sub->add_option("--B", ca.B, "Additive polynomial")->required();
    sub->add_option("--g", ca.g, "Polynomial g")->required();
  }
  c_prop->add_option("--right-inverse", ca.right_inverse, "Preimage stored for each point of im B")
      ->check(CLI::IsMember({"least", "greatest"}))
      ->capture_default_str();

  auto* c_trace = check->add_subcommand("trace_theorem", "f = g(T(x)) + h(T(x)) A(x)");
  common(c_trace);
  c_trace->add_option("--A", ca.A, "Additive polynomial over F_p")->capture_default_str();
  c_trace->add_option("--h", ca.h, "Polynomial over F_p")->capture_default_str();
  c_trace->add_option("--g", ca.g, "Polynomial g")->required();

  auto* c_herm = check->add_subcommand("hermite", "f = a x^i (x^((q-1)/2)+1) - b x^j (x^((q-1)/2)-1)");
  common(c_herm);
  c_herm->add_option("--a", ca.a, "Element index")->required();
  c_herm->add_option("--b", ca.b, "Element index")->required();
  c_herm->add_option("--i", ca.i)->required();
  c_herm->add_option("--j", ca.j)->required();

  // generate <construction>
  GenerateArgs ga;
  auto* generate = app.add_subcommand("generate", "Enumerate permutation polynomials");
  generate->require_subcommand(1);
  const auto gen_common = [&](CLI::App* sub) {
    sub->add_option("field", ga.field, "p or p^n")->required();
    sub->add_option("--limit", ga.limit, "Stop after N records");
    sub->add_flag("--no-oracle", ga.no_oracle, "Skip the brute-force confirmation");
  };
  auto* g_t1 = generate->add_subcommand("theorem1", "Every passing (u, k, b, g0)");
  gen_common(g_t1);
  g_t1->add_option("--d", ga.d)->required();
  g_t1->add_option("--u", ga.u)->delimiter(',')->capture_default_str();
  g_t1->add_option("--k", ga.k)->delimiter(',')->capture_default_str();
  g_t1->add_option("--g0", ga.g0, "Cofactors, comma separated")->delimiter(',')->capture_default_str();
  auto* g_ex = generate->add_subcommand("example", "x + gamma h(x^p + x) over F_{p^2}");
  gen_common(g_ex);
  g_ex->add_option("--h", ga.h, "Polynomial over F_p")->capture_default_str();

  // selftest
  SelftestArgs sa;
  auto* self = app.add_subcommand("selftest", "Compare every criterion with the oracle");
  self->add_option("suites", sa.suites, "Suite names or 'all'")->capture_default_str();
  self->add_option("--fields", sa.fields, "Override the field list, comma separated")->delimiter(',');
  self->add_option("--threads", sa.threads, "Worker threads, 0 for one per core")->capture_default_str();
  self->add_option("--seed", sa.seed, "Sampling seed")->capture_default_str();
  self->add_flag("--timing", sa.timing, "Print wall-clock time per suite to stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*info) {
      const Field field = Field::parse(info_field);
      std::cout << (gl.pretty ? field_info_pretty(field) : field_info_json(field) + '\n');
      return kExitOk;
    }
    if (*verify) {
      const Field field = Field::parse(verify_field);
      const FqPoly f = parse_poly(field, verify_poly);
      const bool perm = is_permutation(field, f, gl.max_q());
      OutputRecord r{field.designation(), "verify", {{"polynomial", verify_poly}},
                     {{"is a permutation of F_q", perm, std::nullopt}},
                     perm, format_poly(f), perm ? OracleStatus::confirmed : OracleStatus::refuted};
      emit(gl, r);
      if (expect && (*expect == "true") != perm) return kExitMismatch;
      return kExitOk;
    }
    if (*check) {
      if (*c_lemma) return check_lemma(gl, ca);
      if (*c_t1) return check_theorem1(gl, ca);
      if (*c_prop) return check_additive(gl, ca, false);
      if (*c_cor2) return check_additive(gl, ca, true);
      if (*c_trace) return check_trace(gl, ca);
      if (*c_herm) return check_hermite(gl, ca);
    }
    if (*generate) {
      if (*g_t1) return generate_theorem1(gl, ga);
      if (*g_ex) return generate_example(gl, ga);
    }
    if (*self) return selftest(gl, sa);
  } catch (const ppforge::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
