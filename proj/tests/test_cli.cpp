#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "misere/cli.hpp"

using namespace misere;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int const code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Compares --json output with tests/golden/<name>.json, ignoring timing.
// Set MISERE_UPDATE_GOLDEN=1 to rewrite the files.
void check_golden(std::string const& name, std::vector<std::string> args, int want_code) {
  args.insert(args.begin(), "--json");
  Result const r = run(args);
  CHECK(r.code == want_code);
  json doc = json::parse(r.out);
  REQUIRE(doc.contains("duration_ms"));
  doc.erase("duration_ms");
  for (char const* key : {"command", "inputs", "result", "witnesses", "bounds"}) {
    CHECK(doc.contains(key));
  }
  std::string const path = std::string(MISERE_GOLDEN_DIR) + "/" + name + ".json";
  if (std::getenv("MISERE_UPDATE_GOLDEN")) {
    std::ofstream(path) << doc.dump(2) << '\n';
    return;
  }
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
  json const want = json::parse(in);
  CHECK_MESSAGE(doc == want, name << ":\n" << doc.dump(2));
}

}  // namespace

TEST_CASE("outcome") {
  Result const r = run({"outcome", "{.|1}"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "N-\n");
  CHECK(run({"outcome", "*"}).out == "P-\n");
  CHECK(run({"outcome", "*", "--normal"}).out == "N+\n");
  CHECK(run({"outcome", "-1/2"}).out == "L-\n");
}

TEST_CASE("lengths and classify") {
  Result const r = run({"lengths", "-1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("left-length: undefined") != std::string::npos);
  CHECK(r.out.find("right-length: 1") != std::string::npos);
  Result const c = run({"classify", "{{.|1}|.}"});
  CHECK(c.code == kExitOk);
  CHECK(c.out.find("dead-ending: no") != std::string::npos);
}

TEST_CASE("compare") {
  Result const r = run({"compare", "1/2", "3/4", "--closed-form"});
  CHECK(r.code == kExitNegative);
  CHECK(r.out.find("incomparable") != std::string::npos);
  Result const g = run({"compare", "1", "1/2", "--closed-form"});
  CHECK(g.code == kExitOk);
  CHECK(g.out.find("greater") != std::string::npos);
  Result const i = run({"compare", "-1", "0", "--closed-form", "--tests", "dead-end-closure:b2:k2:t2"});
  CHECK(i.code == kExitOk);
  CHECK(i.out.find("greater") != std::string::npos);
  Result const s = run({"compare", "1", "1/2", "--tests", "dead-ending:b2:k2"});
  CHECK(s.code == kExitOk);
  Result const l = run({"compare", "1/2", "1", "--tests", "dead-ending:b2:k2"});
  CHECK(l.code == kExitNegative);
}

TEST_CASE("equiv") {
  Result const r = run({"equiv", "1/2+1/2", "2", "--tests", "numbers:j3:v2:t3"});
  CHECK(r.code == kExitOk);
  Result const d = run({"equiv", "1/2", "1", "--tests", "dead-ending:b2:k2"});
  CHECK(d.code == kExitNegative);
  CHECK(d.out.find("X = ") != std::string::npos);
}

TEST_CASE("universe and monoid") {
  Result const r = run({"universe", "dead-ending:b1:k2", "--count"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find('4') != std::string::npos);
  Result const l = run({"universe", "dead-ending:b1:k2", "--list"});
  CHECK(l.out.find('*') != std::string::npos);
  Result const big = run({"universe", "dead-ending:b3:k2", "--list", "--limit", "100"});
  CHECK(big.code == kExitBudget);
  Result const m = run({"monoid", "--generators", "1;2", "--terms", "2", "--tests",
                        "dead-end-closure:b2:k2:t2"});
  CHECK(m.code == kExitOk);
}

TEST_CASE("verify") {
  Result const r = run({"verify", "lemma:end-sum-outcome", "--b", "4"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("pass") != std::string::npos);
  CHECK(run({"verify", "all", "--budget", "0"}).code == kExitBudget);
  CHECK(run({"verify", "lemma:nope"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"outcome"}).code == kExitUsage);
  CHECK(run({"outcome", "3/6"}).code == kExitUsage);
  Result const r = run({"outcome", "{0|"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("column") != std::string::npos);
  CHECK(r.out.empty());
  CHECK(run({"equiv", "0", "0", "--tests", "bogus"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("golden JSON") {
  check_golden("outcome", {"outcome", "{.|1}"}, kExitOk);
  check_golden("lengths", {"lengths", "3/4"}, kExitOk);
  check_golden("classify", {"classify", "{-1|1}"}, kExitOk);
  check_golden("equiv", {"equiv", "1/2", "1", "--tests", "dead-ending:b2:k2"}, kExitNegative);
  check_golden("compare", {"compare", "1/2", "3/4", "--closed-form"}, kExitNegative);
  check_golden("compare_scan", {"compare", "0", "1", "--tests", "dead-ending:b2:k2"},
               kExitNegative);
  check_golden("universe", {"universe", "dead-ending:b1:k2", "--list"}, kExitOk);
  check_golden("monoid", {"monoid", "--generators", "1;2", "--terms", "2", "--tests",
                          "dead-end-closure:b2:k2:t2"}, kExitOk);
  check_golden("verify", {"verify", "lemma:end-sum-outcome", "--b", "4"}, kExitOk);
}
