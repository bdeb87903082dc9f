// SPDX-License-Identifier: MIT
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("skewroots");
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = skewroots::cli::run(static_cast<int>(argv.size()), argv.data(),
                                 out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    if (text.compare(pos, end - pos, line) == 0) return true;
    pos = end + 1;
  }
  return false;
}

}  // namespace

TEST_CASE("count command reports all routes in kv form") {
  CliResult r = run_cli({"count", "--field", "p=2,n=3,s=1", "--poly", "1;0;1",
                         "--output", "kv"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "[input]"));
  CHECK(has_line(r.out, "field = p=2,m=1,n=3,s=1"));
  CHECK(has_line(r.out, "modulus = 1,1,0,1"));
  CHECK(has_line(r.out, "[counts]"));
  // x + x^(sigma^2) over F_8: kernel F_4 meet F_8 = F_2, projective form
  // y^(sigma+1) = 1 with gcd(3, 7) = 1 solution
  CHECK(has_line(r.out, "nullity = 1"));
  CHECK(has_line(r.out, "linear_roots = 2"));
  CHECK(has_line(r.out, "projective_roots = 1"));
  CHECK(has_line(r.out, "projective_roots_gcrc = 1"));
  CHECK(has_line(r.out, "methods_agree = true"));
  CHECK(has_line(r.out, "[kernel]"));
  CHECK(has_line(r.out, "[profile]"));
}

TEST_CASE("count strips a zero constant run and says so") {
  CliResult r = run_cli({"count", "--field", "p=2,n=3,s=1", "--poly", "0;1;1",
                         "--output", "kv"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "stripped_low_zeros = 1"));
  CHECK(has_line(r.out, "normalized_poly = 1;1"));
}

TEST_CASE("classify pins the corrected branches") {
  // zero trace, non-vanishing tail: one projective root
  CliResult r = run_cli({"classify", "--field", "p=2,n=3,s=1", "--poly",
                         "1;1;3", "--output", "kv"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "projective_roots = 1"));
  CHECK(has_line(r.out, "projective_case = deg2-proj:even-q:repeated:one"));

  // missing middle coefficient over odd q, odd tower height: two roots
  CliResult r2 = run_cli({"classify", "--field", "p=3,n=3,s=1", "--poly",
                          "2;0;1", "--output", "kv"});
  CHECK(r2.code == 0);
  CHECK(has_line(r2.out, "projective_roots = 2"));
  CHECK(has_line(r2.out, "projective_case = deg2-proj:b0:odd-n:two"));
}

TEST_CASE("charpoly emits the product matrix and closed form check") {
  CliResult r = run_cli({"charpoly", "--field", "p=3,n=3,s=1", "--poly",
                         "1;1;1", "--output", "kv"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "[a_matrix]"));
  CHECK(has_line(r.out, "[charpoly]"));
  CHECK(has_line(r.out, "base_field_certified = true"));
  CHECK(has_line(r.out, "[closed_form]"));
  CHECK(has_line(r.out, "matrix_match = true"));
  CHECK(has_line(r.out, "charpoly_match = true"));
}

TEST_CASE("verify sweeps cleanly and reports timing on the error stream") {
  CliResult r = run_cli({"verify", "--field", "p=2,n=3,s=1", "--degree", "2",
                         "--output", "kv"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "[plan]"));
  CHECK(has_line(r.out, "[summary]"));
  CHECK(has_line(r.out, "tuples = 392"));
  CHECK(has_line(r.out, "disagreements = 0"));
  CHECK(has_line(r.out, "[cases]"));
  CHECK(has_line(r.out, "[projective_counts]"));
  CHECK(has_line(r.out, "roots_3 = 49"));
  CHECK(has_line(r.out, "[nullities]"));
  CHECK(r.err.find("elapsed_seconds = ") != std::string::npos);
  CHECK(r.out.find("elapsed_seconds") == std::string::npos);
}

TEST_CASE("verify random mode is seeded and needs a sample count") {
  CliResult r = run_cli({"verify", "--field", "p=3,n=3,s=1", "--degree", "3",
                         "--mode", "random", "--samples", "50", "--seed", "9",
                         "--output", "kv"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "tuples = 50"));
  CHECK(has_line(r.out, "seed = 9"));
  CliResult again = run_cli({"verify", "--field", "p=3,n=3,s=1", "--degree",
                             "3", "--mode", "random", "--samples", "50",
                             "--seed", "9", "--output", "kv"});
  CHECK(again.out == r.out);

  CliResult bad = run_cli({"verify", "--field", "p=3,n=3,s=1", "--degree", "3",
                           "--mode", "random"});
  CHECK(bad.code == 2);
}

TEST_CASE("search finds splits or reports an empty result") {
  CliResult r = run_cli({"search-split", "--field", "p=2,n=3,s=1", "--degree",
                         "2", "--output", "kv"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "[search]"));
  CHECK(has_line(r.out, "[hits]"));
  CHECK(r.out.find("hit_0 = ") != std::string::npos);

  // no sigma-degree 4 polynomial can fully split over a height 3 tower:
  // it would need 15 projective roots and only 7 exist
  CliResult empty = run_cli({"search-split", "--field", "p=2,n=3,s=1",
                             "--degree", "4", "--output", "kv"});
  CHECK(empty.code == 4);
  CHECK(has_line(empty.out, "hits = 0"));
}

TEST_CASE("exit codes separate parse and domain failures") {
  // malformed polynomial text
  CHECK(run_cli({"count", "--field", "p=2,n=3,s=1", "--poly", "1;;2"}).code ==
        2);
  // degree expectation violated
  CHECK(run_cli({"count", "--field", "p=2,n=3,s=1", "--poly", "1;1;1",
                 "--degree", "3"})
            .code == 2);
  // unknown option
  CHECK(run_cli({"count", "--field", "p=2,n=3,s=1", "--poly", "1;1;1",
                 "--frobnicate"})
            .code == 2);
  // no subcommand
  CHECK(run_cli({}).code == 2);
  // invalid field parameters are a domain error
  CHECK(run_cli({"count", "--field", "p=4,n=2,s=1", "--poly", "1;1"}).code ==
        3);
  CHECK(run_cli({"count", "--field", "p=2,n=4,s=2", "--poly", "1;1"}).code ==
        3);
  // the zero polynomial has no meaningful count
  CHECK(run_cli({"count", "--field", "p=2,n=3,s=1", "--poly", "0"}).code == 3);
  // coefficient encoding out of range for the field
  CHECK(run_cli({"count", "--field", "p=2,n=3,s=1", "--poly", "9;1"}).code ==
        2);
  // help succeeds
  CHECK(run_cli({"--help"}).code == 0);
}
