// SPDX-License-Identifier: MIT
#include "cli.hpp"

#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "skewroots/codec.hpp"
#include "skewroots/oracle.hpp"

namespace skewroots::cli {

namespace {

struct Writer {
  std::ostream& out;
  bool kv = false;

  void section(const std::string& name) {
    if (kv)
      out << '[' << name << "]\n";
    else
      out << name << ":\n";
  }
  void item(const std::string& key, const std::string& value) {
    if (kv)
      out << key << " = " << value << '\n';
    else
      out << "  " << key << ": " << value << '\n';
  }
  void item_u(const std::string& key, uint64_t value) {
    item(key, std::to_string(value));
  }
  void item_b(const std::string& key, bool value) {
    item(key, value ? "true" : "false");
  }
};

struct Common {
  std::string field_text;
  std::string output = "text";
  uint64_t size_bound = Field::kDefaultSizeBound;

  void attach(CLI::App* cmd) {
    cmd->add_option("--field", field_text,
                    "field tower, e.g. p=2,m=1,n=5,s=1[,mod=c0,c1,...]")
        ->required();
    cmd->add_option("--output", output, "output format")
        ->check(CLI::IsMember({"text", "kv"}))
        ->capture_default_str();
    cmd->add_option("--size-bound", size_bound,
                    "largest permitted field order")
        ->capture_default_str();
  }
};

uint64_t pow_u64(uint64_t base, unsigned e) {
  uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

void echo_input(Writer& w, const Field& f) {
  w.section("input");
  w.item("field", format_field_params(f));
  w.item("modulus", format_modulus(f));
}

// Returns the polynomial with a zero constant run stripped, reporting the
// normalization in the output so the counts are unambiguous.
LinearizedPoly prepare_poly(Writer& w, const std::shared_ptr<const Field>& spec,
                            const std::string& poly_text,
                            std::optional<unsigned> expect_degree) {
  LinearizedPoly l = parse_poly(spec, poly_text);
  w.item("poly", format_poly(l));
  if (l.is_zero())
    fail(Errc::ZeroPolynomial,
         "the zero polynomial has every element as a root");
  if (expect_degree && *l.degree() != *expect_degree)
    fail(Errc::ParseError,
         "--degree says " + std::to_string(*expect_degree) +
             " but the polynomial has sigma-degree " +
             std::to_string(*l.degree()));
  if (!l.coeff(0).is_zero()) return l;
  LinearizedPoly work = normalize_constant(l);
  w.item_u("stripped_low_zeros", *l.degree() - *work.degree());
  w.item("normalized_poly", format_poly(work));
  return work;
}

void write_profile(Writer& w, const EigenProfile& profile) {
  w.section("profile");
  for (const auto& [enc, mult] : profile.by_eigenvalue)
    w.item("eigenvalue_" + std::to_string(enc),
           "ma=" + std::to_string(mult.algebraic) +
               " mg=" + std::to_string(mult.geometric));
  w.item_u("unresolved_degree", profile.unresolved_degree);
}

int cmd_count(const Common& c, const std::string& poly_text,
              std::optional<unsigned> expect_degree, std::ostream& out) {
  auto spec = make_field(parse_field_params(c.field_text), c.size_bound);
  Writer w{out, c.output == "kv"};
  echo_input(w, *spec);
  LinearizedPoly work = prepare_poly(w, spec, poly_text, expect_degree);

  w.section("counts");
  if (*work.degree() == 0) {
    w.item_u("nullity", 0);
    w.item_u("linear_roots", 1);
    w.item_u("projective_roots", 0);
    return 0;
  }
  RootCountReport rep = root_count_report(work);
  w.item_u("nullity", rep.nullity);
  w.item_u("linear_roots", rep.roots_linear);
  w.item_u("projective_roots", rep.roots_projective);
  w.item_u("projective_roots_gcrc", rep.roots_projective_gcrc);
  w.item_b("methods_agree", rep.methods_agree);

  w.section("kernel");
  w.item("class", to_string(rep.kernel_class.tag()));
  if (rep.kernel_class.lambda)
    w.item("lambda", format_element(*rep.kernel_class.lambda));
  w.item_b("norm_balance_checked", rep.norm_balance_checked);
  if (rep.norm_balance_checked) w.item_b("norm_balance", rep.norm_balance);

  write_profile(w, rep.profile);
  return 0;
}

int cmd_classify(const Common& c, const std::string& poly_text,
                 std::optional<unsigned> expect_degree, std::ostream& out) {
  auto spec = make_field(parse_field_params(c.field_text), c.size_bound);
  Writer w{out, c.output == "kv"};
  echo_input(w, *spec);
  LinearizedPoly work = prepare_poly(w, spec, poly_text, expect_degree);
  const unsigned d = *work.degree();
  const uint64_t q = spec->subfield_order();

  w.section("classification");
  w.item_u("degree", d);
  if (d == 0) {
    w.item_u("linear_nullity", 0);
    w.item_u("linear_roots", 1);
    w.item("linear_case", "degree-zero");
    w.item_u("projective_roots", 0);
    w.item("projective_case", "degree-zero");
    return 0;
  }
  if (d == 2) {
    LinClassification lc = classify_lin_deg2(work);
    ProjClassification pc = classify_proj_deg2(work);
    w.item_u("linear_nullity", lc.nullity);
    w.item_u("linear_roots", pow_u64(q, lc.nullity));
    w.item("linear_case", lc.case_tag);
    w.item_u("projective_roots", pc.count);
    w.item("projective_case", pc.case_tag);
    return 0;
  }
  if (d == 3) {
    LinClassification lc = classify_lin_deg3(work);
    ProjClassification pc = classify_proj_deg3(work);
    w.item_u("linear_nullity", lc.nullity);
    w.item_u("linear_roots", pow_u64(q, lc.nullity));
    w.item("linear_case", lc.case_tag);
    w.item_u("projective_roots", pc.count);
    w.item("projective_case", pc.case_tag);
    return 0;
  }
  RootCountReport rep = root_count_report(work);
  w.item_u("linear_nullity", rep.nullity);
  w.item_u("linear_roots", rep.roots_linear);
  w.item("linear_case", "generic");
  w.item_u("projective_roots", rep.roots_projective);
  w.item("projective_case", "generic");
  w.item("kernel_class", to_string(rep.kernel_class.tag()));
  return 0;
}

int cmd_charpoly(const Common& c, const std::string& poly_text,
                 std::optional<unsigned> expect_degree, std::ostream& out) {
  auto spec = make_field(parse_field_params(c.field_text), c.size_bound);
  Writer w{out, c.output == "kv"};
  echo_input(w, *spec);
  LinearizedPoly work = prepare_poly(w, spec, poly_text, expect_degree);
  const unsigned d = *work.degree();
  if (d == 0)
    fail(Errc::DegreeZero, "a sigma-degree 0 polynomial has no product matrix");

  SqMatrix am = a_matrix(work);
  CharPoly chi = char_poly(am);
  w.section("a_matrix");
  w.item("matrix", format_matrix(am));

  w.section("charpoly");
  std::string coeffs;
  for (size_t i = 0; i < chi.coeffs.size(); ++i) {
    if (i) coeffs += ';';
    coeffs += format_element(chi.coeffs[i]);
  }
  w.item("coeffs", coeffs);
  w.item_b("base_field_certified", chi.base_field_certified());

  if (d == 2 && !work.coeff(1).is_zero()) {
    SqMatrix cf = a_matrix_deg2(work);
    w.section("closed_form");
    w.item("matrix", format_matrix(cf));
    w.item_b("matrix_match", cf == am);
    w.item_b("charpoly_match", chi_deg2(work).coeffs == chi.coeffs);
  } else if (d == 3 && !work.coeff(1).is_zero() &&
             !work.coeff(2).is_zero()) {
    SqMatrix cf = a_matrix_deg3(work);
    w.section("closed_form");
    w.item("matrix", format_matrix(cf));
    w.item_b("matrix_match", cf == am);
    w.item_b("charpoly_match", chi_deg3(work).coeffs == chi.coeffs);
  }
  return 0;
}

int cmd_verify(const Common& c, unsigned degree, const std::string& mode,
               uint64_t samples, uint64_t seed, uint64_t budget,
               std::ostream& out, std::ostream& err) {
  auto spec = make_field(parse_field_params(c.field_text), c.size_bound);
  const bool exhaustive = mode == "exhaustive";
  if (!exhaustive && samples == 0)
    fail(Errc::ParseError, "random mode needs --samples >= 1");

  SweepPlan plan{spec, degree, exhaustive, samples, seed, budget};
  SweepSummary s = run_sweep(plan);

  Writer w{out, c.output == "kv"};
  w.section("plan");
  w.item("field", format_field_params(*spec));
  w.item("modulus", format_modulus(*spec));
  w.item_u("degree", degree);
  w.item("mode", mode);
  if (!exhaustive) {
    w.item_u("samples", samples);
    w.item_u("seed", seed);
  }
  w.item_u("budget", budget);

  w.section("summary");
  w.item_u("tuples", s.tuples);
  w.item_u("disagreements", s.disagreements);

  w.section("cases");
  for (const auto& [tag, count] : s.by_case) w.item_u(tag, count);
  w.section("projective_counts");
  for (const auto& [roots, count] : s.by_proj_count)
    w.item_u("roots_" + std::to_string(roots), count);
  w.section("nullities");
  for (const auto& [nl, count] : s.by_nullity)
    w.item_u("nullity_" + std::to_string(nl), count);
  if (!s.examples.empty()) {
    w.section("examples");
    for (size_t i = 0; i < s.examples.size(); ++i)
      w.item("example_" + std::to_string(i), s.examples[i]);
  }

  // Timing goes to the error stream so the report itself is reproducible.
  err << "elapsed_seconds = " << s.seconds << '\n';
  return s.disagreements == 0 ? 0 : 1;
}

int cmd_search(const Common& c, unsigned degree, uint64_t budget,
               std::ostream& out) {
  auto spec = make_field(parse_field_params(c.field_text), c.size_bound);
  std::vector<LinearizedPoly> hits = search_full_split(spec, degree, budget);

  Writer w{out, c.output == "kv"};
  w.section("search");
  w.item("field", format_field_params(*spec));
  w.item("modulus", format_modulus(*spec));
  w.item_u("degree", degree);
  w.item("criterion", "projective form fully splits (scalar product matrix)");
  w.item_u("hits", hits.size());
  if (hits.empty()) return 4;
  w.section("hits");
  for (size_t i = 0; i < hits.size(); ++i)
    w.item("hit_" + std::to_string(i), format_poly(hits[i]));
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"root counts of sigma-linearized and projective polynomials "
               "over finite field towers"};
  app.require_subcommand(1);

  Common c_count, c_classify, c_charpoly, c_verify, c_search;
  std::string poly_count, poly_classify, poly_charpoly;
  unsigned deg_opt_count = 0, deg_opt_classify = 0, deg_opt_charpoly = 0;
  unsigned deg_verify = 2, deg_search = 2;
  std::string mode = "exhaustive";
  uint64_t samples = 0, seed = 0;
  uint64_t budget_verify = kDefaultBruteBudget, budget_search = kDefaultBruteBudget;

  CLI::App* count = app.add_subcommand(
      "count", "count roots of L and of its projective form");
  c_count.attach(count);
  count->add_option("--poly", poly_count, "coefficients e0;e1;...;ed")
      ->required();
  CLI::Option* dc =
      count->add_option("--degree", deg_opt_count, "expected sigma-degree");

  CLI::App* classify = app.add_subcommand(
      "classify", "classify the root counts through the closed forms");
  c_classify.attach(classify);
  classify->add_option("--poly", poly_classify, "coefficients e0;e1;...;ed")
      ->required();
  CLI::Option* dcl = classify->add_option("--degree", deg_opt_classify,
                                          "expected sigma-degree");

  CLI::App* charpoly = app.add_subcommand(
      "charpoly", "product matrix and its characteristic polynomial");
  c_charpoly.attach(charpoly);
  charpoly->add_option("--poly", poly_charpoly, "coefficients e0;e1;...;ed")
      ->required();
  CLI::Option* dch = charpoly->add_option("--degree", deg_opt_charpoly,
                                          "expected sigma-degree");

  CLI::App* verify = app.add_subcommand(
      "verify", "sweep polynomials and cross-check every counting route");
  c_verify.attach(verify);
  verify->add_option("--degree", deg_verify, "sigma-degree to sweep")
      ->required();
  verify->add_option("--mode", mode, "tuple enumeration")
      ->check(CLI::IsMember({"exhaustive", "random"}))
      ->capture_default_str();
  verify->add_option("--samples", samples, "samples in random mode");
  verify->add_option("--seed", seed, "random seed")->capture_default_str();
  verify->add_option("--budget", budget_verify, "brute-force budget")
      ->capture_default_str();

  CLI::App* search = app.add_subcommand(
      "search-split", "find monic polynomials whose projective form splits");
  c_search.attach(search);
  search->add_option("--degree", deg_search, "sigma-degree to search")
      ->required();
  search->add_option("--budget", budget_search, "brute-force budget")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.get_name() << ": " << e.what() << '\n';
    return 2;
  }

  try {
    if (count->parsed())
      return cmd_count(c_count, poly_count,
                       dc->count() ? std::optional<unsigned>(deg_opt_count)
                                   : std::nullopt,
                       out);
    if (classify->parsed())
      return cmd_classify(c_classify, poly_classify,
                          dcl->count()
                              ? std::optional<unsigned>(deg_opt_classify)
                              : std::nullopt,
                          out);
    if (charpoly->parsed())
      return cmd_charpoly(c_charpoly, poly_charpoly,
                          dch->count()
                              ? std::optional<unsigned>(deg_opt_charpoly)
                              : std::nullopt,
                          out);
    if (verify->parsed())
      return cmd_verify(c_verify, deg_verify, mode, samples, seed,
                        budget_verify, out, err);
    if (search->parsed())
      return cmd_search(c_search, deg_search, budget_search, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::ParseError ? 2 : 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}

}  // namespace skewroots::cli
