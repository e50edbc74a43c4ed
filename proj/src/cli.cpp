#include "misere/cli.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include <CLI11.hpp>
#include <json.hpp>

#include "misere/claims.hpp"
#include "misere/game.hpp"
#include "misere/notation.hpp"
#include "misere/outcome.hpp"
#include "misere/relations.hpp"
#include "misere/scan.hpp"
#include "misere/universe.hpp"

namespace misere {

namespace {

using nlohmann::json;

constexpr char const* kDefaultTests = "dead-ending:b3:k2";

constexpr char const* kHelpFooter = R"(Game notation:
  {A|B}         options separated by commas; "." or nothing for none
  3, -2, 5/8    integers and dyadic numbers in canonical form
  *             star, {0|0}
  lambda(k)     {0|lambda(k-1)}, with lambda(1) = {0|-1}
  G + H         disjunctive sum
  ~G            conjugate (left and right swapped throughout)

Test sets: dead-ending:bB:kK, dead-ends:bB:kK, dead-end-closure:bB:kK:tT,
numbers:jJ:vV:tT.

Exit codes: 0 success or pass; 1 distinguished, refuted or incomparable;
2 usage or parse error; 3 budget exceeded.)";

// Thrown for bad input that the argument parser cannot see.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Session {
  GameStore store;
  OutcomeSolver solver{store};
  json doc = {{"command", ""},
              {"inputs", json::object()},
              {"result", json::object()},
              {"witnesses", json::array()},
              {"bounds", nullptr}};
  std::ostringstream text;
  int code = kExitOk;

  GameId game(std::string const& expr) {
    try {
      return parse_and_elaborate(store, expr);
    } catch (ParseError const& e) {
      throw UsageError("cannot parse '" + expr + "': " + e.what());
    }
  }

  void witness(std::string const& role, Witness const& w) {
    json j = {{"role", role},
              {"game", render(store, w.game)},
              {"lhs", outcome_name(w.lhs)},
              {"rhs", outcome_name(w.rhs)}};
    doc["witnesses"].push_back(j);
    text << "  " << role << ": X = " << render(store, w.game) << ", o(G + X) = "
         << outcome_name(w.lhs) << ", o(H + X) = " << outcome_name(w.rhs) << '\n';
  }
};

Descriptor parse_tests(std::string const& s) {
  try {
    return Descriptor::parse(s);
  } catch (std::invalid_argument const& e) {
    throw UsageError(e.what());
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json length_json(std::optional<unsigned> n) {
  return n ? json(*n) : json("undefined");
}

std::string length_text(std::optional<unsigned> n) {
  return n ? std::to_string(*n) : "undefined";
}

void cmd_outcome(Session& s, std::string const& expr, bool normal) {
  GameId const g = s.game(expr);
  Play const play = normal ? Play::Normal : Play::Misere;
  Outcome const o = s.solver.outcome(g, play);
  s.doc["inputs"] = {{"game", expr}, {"play", normal ? "normal" : "misere"}};
  s.doc["result"] = {{"outcome", outcome_name(o, play)}};
  s.text << outcome_name(o, play) << '\n';
}

void cmd_lengths(Session& s, std::string const& expr) {
  GameId const g = s.game(expr);
  auto const l = s.store.left_length(g), r = s.store.right_length(g);
  s.doc["inputs"] = {{"game", expr}};
  s.doc["result"] = {{"left_length", length_json(l)}, {"right_length", length_json(r)}};
  s.text << "left-length: " << length_text(l) << "\nright-length: " << length_text(r) << '\n';
}

void cmd_classify(Session& s, std::string const& expr) {
  GameId const g = s.game(expr);
  GameStore& st = s.store;
  std::vector<std::pair<std::string, bool>> const flags = {
      {"left_end", st.is_left_end(g)},
      {"right_end", st.is_right_end(g)},
      {"dead_left_end", st.is_dead_left_end(g)},
      {"dead_right_end", st.is_dead_right_end(g)},
      {"dead_end", st.is_dead_end(g)},
      {"dead_ending", st.is_dead_ending(g)},
      {"dicot", st.is_dicot(g)},
  };
  s.doc["inputs"] = {{"game", expr}};
  json result = {{"birthday", st.birthday(g)}, {"canonical", render(st, g)}};
  s.text << "game: " << render(st, g) << "\nbirthday: " << st.birthday(g) << '\n';
  for (auto const& [name, value] : flags) {
    result[name] = value;
    std::string label = name;
    std::replace(label.begin(), label.end(), '_', '-');
    s.text << label << ": " << yes_no(value) << '\n';
  }
  s.doc["result"] = result;
}

void cmd_equiv(Session& s, std::string const& a, std::string const& b,
               std::string const& tests_text) {
  Descriptor const d = parse_tests(tests_text);
  GameId const g = s.game(a), h = s.game(b);
  TestSet const tests = make_test_set(s.store, d);
  Scanner sc(s.solver, tests);
  s.doc["inputs"] = {{"games", {a, b}}};
  s.doc["bounds"] = {{"tests", d.to_string()}, {"members", tests.size()}};
  Verdict const v = equiv_mod(sc, g, h);
  if (auto* dist = std::get_if<Distinguished>(&v)) {
    s.doc["result"] = {{"verdict", "distinguished"}};
    s.text << "distinguished\n";
    s.witness("distinguishing context", dist->witness);
    s.code = kExitNegative;
  } else {
    s.doc["result"] = {{"verdict", "indistinguishable"}, {"up_to", d.to_string()}};
    s.text << "indistinguishable up to " << d.to_string() << '\n';
  }
}

void closed_form(Session& s, std::string const& a, std::string const& b,
                 std::optional<std::string> const& tests_text) {
  GameId const g = s.game(a), h = s.game(b);
  auto const x = as_number(s.store, g), y = as_number(s.store, h);
  if (!x || !y) throw UsageError("--closed-form needs two numbers");
  Comparison c;
  std::string universe;
  if (tests_text && parse_tests(*tests_text).kind == UniverseKind::DeadEndClosure) {
    if (!x->is_integer() || !y->is_integer()) {
      throw UsageError("the dead-end closure form compares integers only");
    }
    c = compare_integers_mod_dead_end_closure(x->numerator(), y->numerator());
    universe = "dead-end closure";
  } else {
    c = compare_numbers_mod_E(*x, *y);
    universe = "dead-ending";
  }
  s.doc["inputs"] = {{"games", {a, b}}, {"closed_form", true}};
  s.doc["result"] = {{"comparison", comparison_name(c)}, {"universe", universe}};
  s.text << comparison_name(c) << '\n';
  if (c == Comparison::Less || c == Comparison::Incomparable) s.code = kExitNegative;
}

void cmd_compare(Session& s, std::string const& a, std::string const& b,
                 std::optional<std::string> const& tests_text, bool closed) {
  if (closed) {
    closed_form(s, a, b, tests_text);
    return;
  }
  Descriptor const d = parse_tests(tests_text.value_or(kDefaultTests));
  GameId const g = s.game(a), h = s.game(b);
  TestSet const tests = make_test_set(s.store, d);
  Scanner sc(s.solver, tests);
  s.doc["inputs"] = {{"games", {a, b}}, {"closed_form", false}};
  s.doc["bounds"] = {{"tests", d.to_string()}, {"members", tests.size()}};
  OrderVerdict const v = geq_mod(sc, g, h);
  std::string verdict;
  if (std::holds_alternative<GeqConsistentUpTo>(v)) {
    OrderVerdict const back = geq_mod(sc, h, g);
    verdict = std::holds_alternative<GeqConsistentUpTo>(back) ? "equivalent" : "greater";
    s.text << verdict << " (consistent up to " << d.to_string() << ")\n";
    if (auto* r = std::get_if<Refuted>(&back)) s.witness("o(H + X) >= o(G + X) fails", r->witness);
  } else if (auto* r = std::get_if<Refuted>(&v)) {
    verdict = "less";
    s.text << "less (consistent up to " << d.to_string() << ")\n";
    s.witness("o(G + X) >= o(H + X) fails", r->witness);
    s.code = kExitNegative;
  } else {
    auto const& iw = std::get<IncomparableWitnessed>(v);
    verdict = "incomparable";
    s.text << "incomparable\n";
    s.witness("o(G + X) >= o(H + X) fails", iw.geq_failure);
    s.witness("o(H + X) >= o(G + X) fails", iw.leq_failure);
    s.code = kExitNegative;
  }
  s.doc["result"] = {{"verdict", verdict}, {"up_to", d.to_string()}};
}

void cmd_universe(Session& s, std::string const& desc, bool count, bool list,
                  std::size_t limit) {
  Descriptor const d = parse_tests(desc);
  TestSet const tests = make_test_set(s.store, d);
  s.doc["inputs"] = {{"descriptor", desc}};
  s.doc["bounds"] = {{"tests", d.to_string()}};
  json result = {{"descriptor", d.to_string()}, {"count", tests.size()}};
  if (list) {
    std::vector<GameId> members;
    try {
      members = tests.materialize(s.store, limit);
    } catch (BudgetExceeded const&) {
      throw BudgetExceeded(d.to_string() + ": " + std::to_string(tests.size()) +
                           " members exceed the listing limit " + std::to_string(limit));
    }
    json names = json::array();
    for (GameId g : members) {
      names.push_back(render(s.store, g));
      s.text << render(s.store, g) << '\n';
    }
    result["members"] = names;
  } else if (count) {
    s.text << tests.size() << '\n';
  } else {
    s.text << d.to_string() << ": " << tests.size() << " members ("
           << tests.base().size() << " materialized, "
           << tests.size() - tests.base().size() << " implicit)\n";
  }
  s.doc["result"] = result;
}

std::vector<std::string> split_generators(std::string const& spec) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : spec) {
    if (c == ';') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  std::erase_if(out, [](std::string const& x) {
    return x.find_first_not_of(" \t") == std::string::npos;
  });
  return out;
}

void cmd_monoid(Session& s, std::string const& spec, unsigned terms,
                std::string const& tests_text) {
  Descriptor const d = parse_tests(tests_text);
  std::vector<GameId> gens;
  std::unordered_set<GameId> seen;
  for (auto const& e : split_generators(spec)) {
    GameId const g = s.game(e);
    for (GameId x : {g, s.store.conjugate(g)}) {
      if (seen.insert(x).second) gens.push_back(x);
    }
  }
  if (gens.empty()) throw UsageError("--generators is empty");
  TestSet const tests = make_test_set(s.store, d);
  Scanner sc(s.solver, tests);
  MonoidReport const m = quotient_monoid(sc, gens, terms);

  auto const name = [&](std::size_t i) {
    auto const& c = m.classes[i];
    return c.label ? "a^" + std::to_string(*c.label) : "c" + std::to_string(i);
  };
  json gj = json::array();
  for (GameId g : gens) gj.push_back(render(s.store, g));
  s.doc["inputs"] = {{"generators", gj}, {"terms", terms}};
  s.doc["bounds"] = {{"tests", d.to_string()}, {"members", tests.size()}};

  json classes = json::array();
  s.text << m.classes.size() << " classes over " << d.to_string() << '\n';
  for (std::size_t i = 0; i < m.classes.size(); ++i) {
    auto const& c = m.classes[i];
    classes.push_back({{"name", name(i)},
                       {"label", c.label ? json(*c.label) : json(nullptr)},
                       {"outcome", outcome_name(c.outcome)},
                       {"representative", render(s.store, c.representative)},
                       {"sums", c.words.size()}});
    s.text << "  " << std::setw(6) << std::left << name(i) << ' ' << outcome_name(c.outcome)
           << "  " << render(s.store, c.representative) << "  (" << c.words.size()
           << " sums)\n";
  }
  json product = json::array(), order = json::array();
  s.text << "product:\n";
  for (std::size_t i = 0; i < m.classes.size(); ++i) {
    json prow = json::array();
    std::string orow;
    s.text << "  ";
    for (std::size_t j = 0; j < m.classes.size(); ++j) {
      std::string cell;
      if (m.product[i][j]) cell = name(*m.product[i][j]);
      else if (m.product_label[i][j]) cell = "a^" + std::to_string(*m.product_label[i][j]);
      else cell = "?";
      prow.push_back(cell);
      orow += m.order[i][j];
      s.text << std::setw(6) << std::left << cell << ' ';
    }
    s.text << '\n';
    product.push_back(prow);
    order.push_back(orow);
  }
  s.text << "order:\n";
  for (auto const& row : order) s.text << "  " << row.get<std::string>() << '\n';
  json inverses = json::array();
  for (auto const& [i, j] : m.inverses) inverses.push_back({name(i), name(j)});
  s.doc["result"] = {{"classes", classes},
                     {"identity", m.identity ? json(name(*m.identity)) : json(nullptr)},
                     {"inverses", inverses},
                     {"product", product},
                     {"order", order}};
}

void cmd_verify(Session& s, std::string const& id, Bounds const& bounds,
                std::optional<double> budget) {
  if (id != "all" && !is_claim(id)) throw UsageError("unknown claim id: " + id);
  std::vector<ClaimReport> const reports =
      run_all(bounds, budget, id == "all" ? std::nullopt : std::optional<std::string_view>(id));
  s.doc["inputs"] = {{"claim", id}};
  s.doc["bounds"] = bounds;
  json rs = json::array();
  bool refuted = false, budget_hit = false;
  for (auto const& r : reports) {
    json rj = r;
    rj.erase("duration_ms");
    rs.push_back(rj);
    refuted = refuted || r.status == ClaimStatus::Refuted;
    budget_hit = budget_hit || r.status == ClaimStatus::Skipped || r.partial;
    s.text << std::setw(8) << std::left << status_name(r.status) << r.id;
    if (r.status != ClaimStatus::Skipped) {
      s.text << "  (" << r.mode << ", " << r.cases << " cases";
      if (r.coverage) s.text << ", coverage " << std::fixed << std::setprecision(3) << *r.coverage;
      s.text << ", " << std::fixed << std::setprecision(1) << r.duration_ms << " ms)";
      s.text.unsetf(std::ios::floatfield);
    }
    if (r.partial) s.text << "  [partial]";
    s.text << '\n';
    for (auto const& n : r.notes) s.text << "    " << n << '\n';
    for (auto const& w : r.witnesses) {
      s.doc["witnesses"].push_back({{"claim", r.id}, {"role", w.role}, {"game", w.notation},
                                    {"lhs", w.lhs}, {"rhs", w.rhs}});
      if (r.status == ClaimStatus::Refuted || reports.size() == 1) {
        s.text << "    " << w.role << ": " << w.notation;
        if (!w.lhs.empty()) s.text << "  [" << w.lhs << (w.rhs.empty() ? "" : " vs " + w.rhs) << ']';
        s.text << '\n';
      }
    }
  }
  std::size_t const passed = static_cast<std::size_t>(std::count_if(
      reports.begin(), reports.end(), [](auto const& r) { return r.status == ClaimStatus::Pass; }));
  s.text << passed << " of " << reports.size() << " claims pass\n";
  s.doc["result"] = {{"reports", rs}, {"passed", passed}, {"total", reports.size()}};
  if (refuted) s.code = kExitNegative;
  else if (budget_hit) s.code = kExitBudget;
}

}  // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Misère partizan games in the dead-ending universe", "misere"};
  app.footer(kHelpFooter);
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  std::uint64_t seed = 1;
  app.add_flag("--json", as_json, "Structured output");
  app.add_option("--seed", seed, "Seed for sampled checks");

  std::string expr_a, expr_b, tests = kDefaultTests, desc, spec, claim;
  std::optional<std::string> compare_tests;
  bool normal = false, closed = false, count = false, list = false;
  std::size_t limit = 1'000'000;
  unsigned terms = 2;
  Bounds bounds;
  std::optional<double> budget;

  auto* outcome = app.add_subcommand("outcome", "Outcome class of a game (misère by default)");
  outcome->add_option("game", expr_a, "Game")->required();
  outcome->add_flag("--normal", normal, "Normal play instead of misère");

  auto* lengths = app.add_subcommand("lengths", "Left- and right-length");
  lengths->add_option("game", expr_a, "Game")->required();

  auto* classify = app.add_subcommand("classify", "End, dead-end, dead-ending and dicot flags");
  classify->add_option("game", expr_a, "Game")->required();

  auto* equiv = app.add_subcommand("equiv", "Equivalence modulo a test set");
  equiv->add_option("first", expr_a, "First game")->required();
  equiv->add_option("second", expr_b, "Second game")->required();
  equiv->add_option("--tests", tests, "Test-set descriptor")->capture_default_str();

  auto* compare = app.add_subcommand("compare", "Order modulo a test set, or by closed form");
  compare->add_option("first", expr_a, "First game")->required();
  compare->add_option("second", expr_b, "Second game")->required();
  compare->add_option("--tests", compare_tests, "Test-set descriptor (default dead-ending:b3:k2)");
  compare->add_flag("--closed-form", closed, "Closed-form comparison of numbers or integers");

  auto* universe = app.add_subcommand("universe", "Generate a test set");
  universe->add_option("descriptor", desc, "Test-set descriptor")->required();
  auto* count_flag = universe->add_flag("--count", count, "Print the member count");
  universe->add_flag("--list", list, "Print every member")->excludes(count_flag);
  universe->add_option("--limit", limit, "Largest set --list will print")->capture_default_str();

  auto* monoid = app.add_subcommand("monoid", "Misère quotient of sums of generators");
  monoid->add_option("--generators", spec, "Generators separated by ';' (conjugates are added)")
      ->required();
  monoid->add_option("--terms", terms, "Most summands per sum")->capture_default_str();
  monoid->add_option("--tests", tests, "Test-set descriptor")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run claim checks");
  verify->add_option("claim", claim, "Claim id, or all")->required();
  verify->add_option("--b", bounds.b, "Birthday cap")->capture_default_str();
  verify->add_option("--k", bounds.k, "Options per side")->capture_default_str();
  verify->add_option("--t", bounds.t, "Summands in closure test sets")->capture_default_str();
  verify->add_option("--j", bounds.j, "Dyadic exponent cap")->capture_default_str();
  verify->add_option("--v", bounds.v, "Dyadic value cap")->capture_default_str();
  verify->add_option("--budget", budget, "Wall-clock budget in seconds");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  bounds.seed = seed;

  Session s;
  auto const t0 = std::chrono::steady_clock::now();
  try {
    if (*outcome) {
      s.doc["command"] = "outcome";
      cmd_outcome(s, expr_a, normal);
    } else if (*lengths) {
      s.doc["command"] = "lengths";
      cmd_lengths(s, expr_a);
    } else if (*classify) {
      s.doc["command"] = "classify";
      cmd_classify(s, expr_a);
    } else if (*equiv) {
      s.doc["command"] = "equiv";
      cmd_equiv(s, expr_a, expr_b, tests);
    } else if (*compare) {
      s.doc["command"] = "compare";
      cmd_compare(s, expr_a, expr_b, compare_tests, closed);
    } else if (*universe) {
      s.doc["command"] = "universe";
      cmd_universe(s, desc, count, list, limit);
    } else if (*monoid) {
      s.doc["command"] = "monoid";
      cmd_monoid(s, spec, terms, tests);
    } else if (*verify) {
      s.doc["command"] = "verify";
      cmd_verify(s, claim, bounds, budget);
    }
  } catch (UsageError const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (BudgetExceeded const& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (std::invalid_argument const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  double const ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (as_json) {
    s.doc["duration_ms"] = ms;
    out << s.doc.dump(2) << '\n';
  } else {
    out << s.text.str();
  }
  return s.code;
}

}  // namespace misere
