#include "misere/claims.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "misere/game.hpp"
#include "misere/notation.hpp"
#include "misere/outcome.hpp"
#include "misere/relations.hpp"
#include "misere/scan.hpp"
#include "misere/universe.hpp"

namespace misere {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::string_view kBounded = "bounded pass";
constexpr std::string_view kExact = "exact within bounds";
constexpr std::size_t kMaxRecorded = 24;

class Run {
 public:
  Run(ClaimReport& report, Deadline deadline)
      : report_(report), deadline_(deadline) {}

  GameStore& store() { return store_; }
  OutcomeSolver& solver() { return solver_; }
  ClaimReport& report() { return report_; }
  Bounds const& bounds() const { return report_.bounds; }

  TestSet const& tests(Descriptor const& d) {
    std::string const key = d.to_string();
    auto it = sets_.find(key);
    if (it == sets_.end()) {
      it = sets_.emplace(key, std::make_unique<TestSet>(make_test_set(store_, d))).first;
      report_.tests.push_back(key);
    }
    return *it->second;
  }

  Scanner& scanner(Descriptor const& d) {
    std::string const key = d.to_string();
    auto it = scanners_.find(key);
    if (it == scanners_.end()) {
      it = scanners_.emplace(key, std::make_unique<Scanner>(solver_, tests(d))).first;
    }
    return *it->second;
  }

  Descriptor dead_ending() const {
    return Descriptor::dead_ending(bounds().b, bounds().k);
  }

  bool expired() {
    if (deadline_ && Clock::now() > *deadline_) report_.partial = true;
    return report_.partial;
  }

  void record(std::string role, GameId g, std::optional<Outcome> lhs = {},
              std::optional<Outcome> rhs = {}) {
    ++report_.witnesses_found;
    if (report_.witnesses.size() >= kMaxRecorded) return;
    ClaimWitness w;
    w.role = std::move(role);
    w.game = g.value;
    w.notation = render(store_, g);
    if (lhs) w.lhs = outcome_name(*lhs);
    if (rhs) w.rhs = outcome_name(*rhs);
    report_.witnesses.push_back(std::move(w));
  }

  void record(std::string role, Witness const& w) {
    record(std::move(role), w.game, w.lhs, w.rhs);
  }

  // A counterexample to the bounded check.
  void refute(std::string role, GameId g, std::optional<Outcome> lhs = {},
              std::optional<Outcome> rhs = {}) {
    report_.status = ClaimStatus::Refuted;
    record(std::move(role), g, lhs, rhs);
  }

  void note(std::string text) { report_.notes.push_back(std::move(text)); }

  std::string show(GameId g) { return render(store_, g); }

 private:
  ClaimReport& report_;
  Deadline deadline_;
  GameStore store_;
  OutcomeSolver solver_{store_};
  std::map<std::string, std::unique_ptr<TestSet>> sets_;
  std::map<std::string, std::unique_ptr<Scanner>> scanners_;
};

std::vector<NumberLiteral> nonzero_dyadics(unsigned j, std::int64_t v) {
  auto all = dyadics_up_to(j, v);
  std::erase(all, NumberLiteral{});
  return all;
}

// Slots of valid top-layer members, row by row.
template <typename F>
void for_each_top_slot(TestSet const& t, F&& f) {
  if (!t.top()) return;
  TopLayer const& top = *t.top();
  for (std::size_t r = 0; r < top.rows(); ++r) {
    for (std::size_t c = 0; c < top.rows(); ++c) {
      std::size_t const slot = t.top_offset() + r * top.stride + c;
      if (t.is_member(slot)) f(slot, r, c);
    }
  }
}

std::optional<std::size_t> empty_choice(TestSet const& t) {
  if (!t.top()) return std::nullopt;
  auto const& ch = t.top()->choices;
  for (std::size_t i = 0; i < ch.size(); ++i) {
    if (ch[i].empty()) return i;
  }
  return std::nullopt;
}

GameId literal_sum(GameStore& store, std::vector<NumberLiteral> const& terms) {
  GameId s = kZero;
  for (auto a : terms) s = store.sum(s, store.dyadic(a));
  return s;
}

std::int64_t signed_length(NumberLiteral a) {
  if (a.sign() >= 0) return *a.left_length();
  return -static_cast<std::int64_t>(*a.right_length());
}

// ---------------------------------------------------------------- universe

void follower_closed(Run& run) {
  run.report().mode = kBounded;
  GameStore& store = run.store();
  TestSet const& t = run.tests(run.dead_ending());
  for (GameId g : t.base()) {
    ++run.report().cases;
    for (GameId f : store.followers(g)) {
      if (!store.is_dead_ending(f)) run.refute("follower that is not dead-ending", f);
    }
  }
  // A top-layer member's proper followers are followers of base members,
  // checked above; the member itself must draw its options from base games
  // that pass the predicate.
  std::vector<char> choice_ok;
  if (t.top()) {
    for (auto const& c : t.top()->choices) {
      bool ok = true;
      for (auto i : c) ok = ok && store.is_dead_ending(t.base()[i]);
      choice_ok.push_back(ok);
    }
  }
  for_each_top_slot(t, [&](std::size_t slot, std::size_t r, std::size_t c) {
    ++run.report().cases;
    if (!choice_ok[r] || !choice_ok[c]) {
      run.refute("member with an option that is not dead-ending", t.member(store, slot));
    }
  });
  // Spot-check generator soundness on interned top members.
  if (t.top() && t.size() > t.base().size()) {
    std::mt19937_64 rng(run.bounds().seed);
    std::uniform_int_distribution<std::size_t> pick(t.top_offset(), t.slot_count() - 1);
    unsigned sampled = 0;
    for (unsigned tries = 0; sampled < run.bounds().samples && tries < 100 * run.bounds().samples; ++tries) {
      std::size_t const slot = pick(rng);
      if (!t.is_member(slot)) continue;
      ++sampled;
      GameId const g = t.member(store, slot);
      if (!store.is_dead_ending(g)) run.refute("generated member that is not dead-ending", g);
    }
    run.note(std::to_string(sampled) + " top-layer members interned and re-checked");
  }
}

void sum_closed(Run& run) {
  run.report().mode = kBounded;
  GameStore& store = run.store();
  TestSet const& t = run.tests(run.dead_ending());
  // G + H is dead-ending iff x + y is a dead left end for all left-end
  // followers x of G and y of H, and likewise for right ends: the
  // followers of G + H are the sums of followers, and such a sum is an end
  // only when both parts are ends of the same side.
  std::set<GameId> left_ends, right_ends;
  for (GameId g : t.base()) {
    for (GameId f : store.followers(g)) {
      if (store.is_left_end(f)) left_ends.insert(f);
      if (store.is_right_end(f)) right_ends.insert(f);
    }
  }
  if (auto e = empty_choice(t)) {
    std::size_t const stride = t.top()->stride;
    for (std::size_t c = 0; c < t.top()->rows(); ++c) {
      std::size_t const as_left = t.top_offset() + *e * stride + c;
      std::size_t const as_right = t.top_offset() + c * stride + *e;
      if (t.is_member(as_left)) left_ends.insert(t.member(store, as_left));
      if (t.is_member(as_right)) right_ends.insert(t.member(store, as_right));
    }
  }
  auto const check_pairs = [&](std::set<GameId> const& ends, bool left) {
    std::vector<GameId> const v(ends.begin(), ends.end());
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i; j < v.size(); ++j) {
        GameId const s = store.sum(v[i], v[j]);
        bool const ok = left ? store.is_dead_left_end(s) : store.is_dead_right_end(s);
        if (!ok) run.refute(left ? "sum of left ends that is not a dead left end"
                                 : "sum of right ends that is not a dead right end", s);
      }
    }
    return v.size() * (v.size() + 1) / 2;
  };
  std::size_t const end_pairs = check_pairs(left_ends, true) + check_pairs(right_ends, false);

  // Direct check, and a check of the reduction itself, on base pairs.
  std::size_t direct = 0;
  auto const& base = t.base();
  for (std::size_t i = 0; i < base.size() && !run.expired(); ++i) {
    for (std::size_t j = i; j < base.size(); ++j) {
      GameId const s = store.sum(base[i], base[j]);
      ++direct;
      if (!store.is_dead_ending(s)) run.refute("sum that is not dead-ending", s);
    }
  }
  std::uint64_t const n = t.size();
  run.report().cases = n * (n + 1) / 2;
  run.note(std::to_string(left_ends.size()) + " left-end and " +
           std::to_string(right_ends.size()) + " right-end followers; " +
           std::to_string(end_pairs) + " end sums checked");
  run.note(std::to_string(direct) + " base pairs summed and checked directly");
}

// ------------------------------------------------------------------- ends

void dead_end_outcome(Run& run) {
  run.report().mode = kBounded;
  GameStore& store = run.store();
  TestSet const& ends = run.tests(Descriptor::dead_ends(run.bounds().b, run.bounds().k));
  for (GameId g : ends.base()) {
    if (g == kZero) continue;
    ++run.report().cases;
    Outcome const o = run.solver().misere(g);
    Outcome const want = store.is_dead_left_end(g) ? Outcome::L : Outcome::R;
    if (o != want) run.refute("dead end with the wrong outcome", g, o, want);
  }
}

void end_sum_outcome(Run& run) {
  run.report().mode = kExact;
  GameStore& store = run.store();
  TestSet const& ends = run.tests(Descriptor::dead_ends(run.bounds().b, run.bounds().k));
  std::vector<GameId> rights, lefts;
  for (GameId g : ends.base()) {
    if (store.is_dead_right_end(g)) rights.push_back(g);
    if (store.is_dead_left_end(g)) lefts.push_back(g);
  }
  for (GameId g : rights) {
    if (run.expired()) break;
    for (GameId h : lefts) {
      ++run.report().cases;
      GameId const s = store.sum(g, h);
      Outcome const o = run.solver().misere(s);
      Outcome const f = dead_end_sum_outcome(store, g, h);
      if (o != f) run.refute("solver and closed form disagree", s, o, f);
    }
  }
}

// Left wins g + X moving first for every left end X of the test set.
void check_left_end_hypothesis(Run& run, GameId g, std::vector<GameId> const& left_ends) {
  GameStore& store = run.store();
  for (GameId x : left_ends) {
    ++run.report().cases;
    GameId const s = store.sum(g, x);
    if (!run.solver().left_first_wins(s)) {
      run.refute("left end X with G + ~G + X outside L and N", s, run.solver().misere(s));
    }
  }
}

void ends_invertible(Run& run) {
  run.report().mode = kBounded;
  GameStore& store = run.store();
  TestSet const& ends = run.tests(Descriptor::dead_ends(run.bounds().b, run.bounds().k));
  Scanner& sc = run.scanner(run.dead_ending());
  auto const left_ends = sc.tests().left_ends(store);
  for (GameId g : ends.base()) {
    if (run.expired()) break;
    ++run.report().cases;
    Verdict const v = invert_check(sc, g);
    if (auto* d = std::get_if<Distinguished>(&v)) {
      run.refute("context distinguishing G + ~G from 0 for G = " + run.show(g), d->witness.game,
                 d->witness.lhs, d->witness.rhs);
    }
    check_left_end_hypothesis(run, store.sum(g, store.conjugate(g)), left_ends);
  }
  run.note(std::to_string(left_ends.size()) + " left ends used for the hypothesis check");
}

std::vector<std::int64_t> integer_range(std::int64_t r) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = -r; n <= r; ++n) out.push_back(n);
  return out;
}

Descriptor closure_tests(Bounds const& b) {
  return Descriptor::dead_end_closure(b.b, b.k, b.t);
}

void int_total_order(Run& run) {
  run.report().mode = kBounded;
  GameStore& store = run.store();
  Scanner& sc = run.scanner(closure_tests(run.bounds()));
  auto const ints = integer_range(run.bounds().b);
  for (auto n : ints) {
    for (auto m : ints) {
      if (n >= m) continue;
      ++run.report().cases;
      GameId const gn = store.integer(n), gm = store.integer(m);
      if (compare_integers_mod_dead_end_closure(n, m) != Comparison::Greater) {
        run.refute("closed form does not rank " + std::to_string(n) + " above " + std::to_string(m), gn);
      }
      OrderVerdict const v = geq_mod(sc, gn, gm);
      if (!std::holds_alternative<GeqConsistentUpTo>(v)) {
        Witness const w = std::holds_alternative<Refuted>(v) ? std::get<Refuted>(v).witness
                                                            : std::get<IncomparableWitnessed>(v).geq_failure;
        run.refute(std::to_string(n) + " >= " + std::to_string(m) + " fails", w.game, w.lhs, w.rhs);
        continue;
      }
      Verdict const e = equiv_mod(sc, gn, gm);
      if (auto* d = std::get_if<Distinguished>(&e)) {
        if (run.report().witnesses.size() < 4) {
          run.record("distinguishes " + std::to_string(n) + " from " + std::to_string(m), d->witness);
        } else {
          ++run.report().witnesses_found;
        }
      } else {
        run.refute("no context distinguishes " + std::to_string(n) + " from " + std::to_string(m), gn);
      }
    }
  }
}

void int_incomparable(Run& run) {
  run.report().mode = kBounded;
  GameStore& store = run.store();
  OutcomeSolver& so = run.solver();
  Scanner& sc = run.scanner(run.dead_ending());
  auto const ints = integer_range(run.bounds().b);
  std::size_t scan_both = 0;
  for (auto n : ints) {
    for (auto m : ints) {
      if (n <= m) continue;
      if (run.expired()) return;
      ++run.report().cases;
      GameId const gn = store.integer(n), gm = store.integer(m);
      std::string const pair = "(" + std::to_string(n) + ", " + std::to_string(m) + ")";
      OrderVerdict const v = geq_mod(sc, gn, gm);
      if (std::holds_alternative<IncomparableWitnessed>(v)) ++scan_both;

      IntegerSeparation const sep = integer_separation(store, n, m);
      Outcome const a1 = so.misere(store.sum(gn, sep.not_geq));
      Outcome const b1 = so.misere(store.sum(gm, sep.not_geq));
      Outcome const a2 = so.misere(store.sum(gn, sep.not_leq));
      Outcome const b2 = so.misere(store.sum(gm, sep.not_leq));
      // The conjugate context: n + ~m is right-win, m + ~m is next-win.
      bool ok = a1 == Outcome::R && b1 == Outcome::N;
      // The lambda context: Left wins with n and not with m.
      if (m >= 0 || n > 0) {
        ok = ok && a2 == Outcome::L;
        ok = ok && (m >= 0 ? (b2 == Outcome::P || b2 == Outcome::R) : b2 == Outcome::N);
      } else {
        ok = ok && b2 == Outcome::R && (a2 == Outcome::P || a2 == Outcome::L);
      }
      ok = ok && !outcome_geq(a1, b1) && !outcome_geq(b2, a2);
      if (!ok) {
        run.refute("separating contexts fail for " + pair, sep.not_leq, a2, b2);
        continue;
      }
      run.record(pair + ": o(n + X) >= o(m + X) fails", sep.not_geq, a1, b1);
      run.record(pair + ": o(m + X) >= o(n + X) fails", sep.not_leq, a2, b2);
    }
  }
  run.note("bounded scan alone witnessed both directions for " +
           std::to_string(scan_both) + " of " + std::to_string(run.report().cases) + " pairs");
}

void end_to_integer(Run& run) {
  run.report().mode = kBounded;
  GameStore& store = run.store();
  TestSet const& ends = run.tests(Descriptor::dead_ends(run.bounds().b, run.bounds().k));
  Scanner& sc = run.scanner(closure_tests(run.bounds()));
  for (GameId g : ends.base()) {
    if (run.expired()) break;
    ++run.report().cases;
    NumberLiteral const n = reduce_end_to_integer(store, g);
    Verdict const v = equiv_mod(sc, g, store.integer(n.numerator()));
    if (auto* d = std::get_if<Distinguished>(&v)) {
      run.refute(run.show(g) + " differs from " + n.to_string(), d->witness.game,
                 d->witness.lhs, d->witness.rhs);
    }
  }
}

// Checks that a quotient is the integer monoid on labels lo..hi.
void check_integer_monoid(Run& run, MonoidReport const& m, std::int64_t lo,
                          std::int64_t hi) {
  std::map<std::int64_t, std::size_t> by_label;
  for (std::size_t i = 0; i < m.classes.size(); ++i) {
    auto const& c = m.classes[i];
    if (!c.label) {
      run.refute("class that matches no integer", c.representative);
      continue;
    }
    if (!by_label.emplace(*c.label, i).second) {
      run.refute("two classes with label " + std::to_string(*c.label), c.representative);
    }
    Outcome const want = *c.label == 0 ? Outcome::N : (*c.label < 0 ? Outcome::L : Outcome::R);
    if (c.outcome != want) run.refute("class with the wrong outcome", c.representative, c.outcome, want);
  }
  for (std::int64_t n = lo; n <= hi; ++n) {
    if (!by_label.contains(n)) {
      run.refute("no class for label " + std::to_string(n), kZero);
    }
  }
  if (m.classes.size() != static_cast<std::size_t>(hi - lo + 1)) {
    run.note(std::to_string(m.classes.size()) + " classes, expected " + std::to_string(hi - lo + 1));
    run.report().status = ClaimStatus::Refuted;
  }
  for (std::size_t i = 0; i < m.classes.size(); ++i) {
    for (std::size_t j = 0; j < m.classes.size(); ++j) {
      ++run.report().cases;
      auto const li = m.classes[i].label, lj = m.classes[j].label;
      if (!li || !lj) continue;
      if (m.product_label[i][j] != *li + *lj) {
        run.refute("product is not label addition", m.classes[i].representative);
      }
      if (i == j) continue;
      char const want = *li < *lj ? '>' : '<';
      if (m.order[i][j] != want) {
        run.refute("order is not the reversed integer order", m.classes[i].representative);
      }
    }
  }
}

std::vector<GameId> integer_generators(GameStore& store, std::int64_t r) {
  std::vector<GameId> gens;
  for (std::int64_t n = 1; n <= r; ++n) {
    gens.push_back(store.integer(n));
    gens.push_back(store.integer(-n));
  }
  return gens;
}

void int_monoid(Run& run) {
  run.report().mode = kBounded;
  Scanner& sc = run.scanner(closure_tests(run.bounds()));
  MonoidReport const m = quotient_monoid(sc, integer_generators(run.store(), 2), 2);
  check_integer_monoid(run, m, -4, 4);
  run.note(std::to_string(m.classes.size()) + " classes from integer generators |n| <= 2, T = 2");
}

// ---------------------------------------------------------------- numbers

void dyadic_options(Run& run) {
  run.report().mode = kExact;
  GameStore& store = run.store();
  std::map<std::string, std::uint64_t> tally;
  for (NumberLiteral a : dyadics_up_to(run.bounds().struct_j, run.bounds().v)) {
    if (a.is_integer()) continue;
    ++run.report().cases;
    auto const al = a.left_option(), ar = a.right_option();
    auto const arl = ar ? ar->left_option() : std::nullopt;
    auto const alr = al ? al->right_option() : std::nullopt;
    bool const first = arl && arl == al;
    bool const second = alr && alr == ar;
    std::int64_t const residue = ((a.numerator() % 4) + 4) % 4;
    if ((!arl && !alr) || (!first && !second)) {
      run.refute("identity fails for " + a.to_string(), store.dyadic(a));
    }
    tally["m=" + std::to_string(residue) + " mod 4: " +
          (first && second ? "both" : first ? "a^L = a^RL" : "a^R = a^LR")]++;
    // Literal options agree with the interned tree.
    GameId const g = store.dyadic(a);
    auto const l = store.left(g), r = store.right(g);
    if (l.size() != 1 || r.size() != 1 || l[0] != store.dyadic(*al) || r[0] != store.dyadic(*ar)) {
      run.refute("interned options differ from the literal options of " + a.to_string(), g);
    }
  }
  for (auto const& [k, v] : tally) run.note(k + " (" + std::to_string(v) + ")");
}

void right_option_length(Run& run) {
  run.report().mode = kExact;
  GameStore& store = run.store();
  for (NumberLiteral a : dyadics_up_to(run.bounds().struct_j, run.bounds().v)) {
    if (a.is_integer()) continue;
    ++run.report().cases;
    GameId const g = store.dyadic(a);
    if (a.sign() > 0) {
      auto const ar = *a.right_option();
      bool ok = *ar.left_length() <= *a.left_length();
      ok = ok && store.left_length(store.dyadic(ar)) == ar.left_length();
      ok = ok && store.left_length(g) == a.left_length();
      ok = ok && *a.left_length() == 1 + *a.left_option()->left_length();
      if (!ok) run.refute("l(a^R) <= l(a) fails for " + a.to_string(), g);
    } else {
      auto const al = *a.left_option();
      bool ok = *al.right_length() <= *a.right_length();
      ok = ok && store.right_length(store.dyadic(al)) == al.right_length();
      ok = ok && store.right_length(g) == a.right_length();
      ok = ok && *a.right_length() == 1 + *a.right_option()->right_length();
      if (!ok) run.refute("r(a^L) <= r(a) fails for " + a.to_string(), g);
    }
  }
}

void number_sum_outcome_claim(Run& run) {
  run.report().mode = kExact;
  GameStore& store = run.store();
  auto const nums = nonzero_dyadics(run.bounds().j, run.bounds().v);
  std::vector<NumberLiteral> terms;
  bool stopped = false;
  for_each_multiset(nums.size(), run.bounds().terms, [&](std::vector<std::size_t> const& idx) {
    if (stopped || (run.report().cases % 1024 == 0 && run.expired())) {
      stopped = true;
      return;
    }
    terms.clear();
    for (auto i : idx) terms.push_back(nums[i]);
    ++run.report().cases;
    GameId const s = literal_sum(store, terms);
    Outcome const o = run.solver().misere(s);
    Outcome const f = number_sum_outcome(terms);
    if (o != f) run.refute("solver and closed form disagree", s, o, f);
  });
  // The two sums named in the literature.
  auto const named = [&](NumberLiteral a, NumberLiteral b, Outcome want) {
    GameId const s = store.sum(store.dyadic(a), store.dyadic(b));
    Outcome const o = run.solver().misere(s);
    if (o != want) run.refute("unexpected outcome", s, o, want);
    else run.record(a.to_string() + " + " + b.to_string(), s, o);
  };
  named(NumberLiteral(1, 1), NumberLiteral(-1, 1), Outcome::N);
  named(NumberLiteral(3, 2), NumberLiteral(-1, 1), Outcome::R);
}

void number_collapses(Run& run) {
  run.report().mode = kBounded;
  GameStore& store = run.store();
  Bounds const& b = run.bounds();
  Scanner& sc = run.scanner(Descriptor::numbers(b.j, b.v, b.t));
  for (NumberLiteral a : dyadics_up_to(b.j, b.v)) {
    if (run.expired()) break;
    ++run.report().cases;
    std::int64_t const n = signed_length(a);
    Verdict const v = equiv_mod(sc, store.dyadic(a), store.integer(n));
    if (auto* d = std::get_if<Distinguished>(&v)) {
      run.refute(a.to_string() + " differs from " + std::to_string(n), d->witness.game,
                 d->witness.lhs, d->witness.rhs);
    }
  }
}

void number_monoid(Run& run) {
  run.report().mode = kBounded;
  GameStore& store = run.store();
  Bounds const& b = run.bounds();
  Scanner& sc = run.scanner(Descriptor::numbers(b.j, b.v, b.t));
  // Dyadics with j <= 2 and |value| <= 1 have length at most 2, so T = 2
  // reaches labels -4..4.
  std::vector<GameId> gens;
  for (NumberLiteral a : nonzero_dyadics(std::min(b.j, 2u), 1)) gens.push_back(store.dyadic(a));
  MonoidReport const m = quotient_monoid(sc, gens, 2);
  check_integer_monoid(run, m, -4, 4);
  // Same tables as the integer-generated quotient over the same tests.
  MonoidReport const ints = quotient_monoid(sc, integer_generators(store, 2), 2);
  std::map<std::int64_t, std::size_t> li, ld;
  for (std::size_t i = 0; i < ints.classes.size(); ++i) {
    if (ints.classes[i].label) li[*ints.classes[i].label] = i;
  }
  for (std::size_t i = 0; i < m.classes.size(); ++i) {
    if (m.classes[i].label) ld[*m.classes[i].label] = i;
  }
  bool iso = li.size() == ld.size() && li.size() == ints.classes.size() &&
             ld.size() == m.classes.size();
  for (auto const& [x, i] : li) {
    if (!ld.contains(x)) {
      iso = false;
      break;
    }
    std::size_t const i2 = ld[x];
    iso = iso && ints.classes[i].outcome == m.classes[i2].outcome;
    for (auto const& [y, j] : li) {
      if (!ld.contains(y)) continue;
      iso = iso && ints.product_label[i][j] == m.product_label[i2][ld[y]];
      iso = iso && ints.order[i][j] == m.order[i2][ld[y]];
    }
  }
  if (!iso) {
    run.note("dyadic and integer quotients are not isomorphic under the label map");
    run.report().status = ClaimStatus::Refuted;
  }
  run.note(std::to_string(gens.size()) + " dyadic generators; " +
           std::to_string(m.classes.size()) + " classes");
}

void number_plus_end(Run& run) {
  run.report().mode = kBounded;
  GameStore& store = run.store();
  Bounds const& b = run.bounds();
  auto const left_ends = run.tests(run.dead_ending()).left_ends(store);
  auto const nums = nonzero_dyadics(b.j, b.v);
  std::vector<NumberLiteral> terms;
  std::size_t sums = 0;
  bool stopped = false;
  for_each_multiset(nums.size(), b.t, [&](std::vector<std::size_t> const& idx) {
    if (stopped || run.expired()) {
      stopped = true;
      return;
    }
    terms.clear();
    std::int64_t k = 0;
    for (auto i : idx) {
      terms.push_back(nums[i]);
      k += signed_length(nums[i]);
    }
    if (k >= 0) return;
    ++sums;
    GameId const s = literal_sum(store, terms);
    for (GameId x : left_ends) {
      ++run.report().cases;
      GameId const sx = store.sum(s, x);
      Outcome const o = run.solver().misere(sx);
      if (o != Outcome::L) run.refute("sum with a left end outside L", sx, o, Outcome::L);
    }
  });
  run.note(std::to_string(sums) + " number sums with k < 0 against " +
           std::to_string(left_ends.size()) + " left ends");
}

void numbers_invertible(Run& run) {
  run.report().mode = kBounded;
  GameStore& store = run.store();
  Scanner& sc = run.scanner(run.dead_ending());
  auto const left_ends = sc.tests().left_ends(store);
  for (NumberLiteral a : dyadics_up_to(run.bounds().j, run.bounds().v)) {
    if (run.expired()) break;
    ++run.report().cases;
    GameId const g = store.dyadic(a);
    Verdict const v = invert_check(sc, g);
    if (auto* d = std::get_if<Distinguished>(&v)) {
      run.refute("context distinguishing a + ~a from 0 for a = " + a.to_string(), d->witness.game,
                 d->witness.lhs, d->witness.rhs);
    }
    check_left_end_hypothesis(run, store.sum(g, store.conjugate(g)), left_ends);
  }
}

void geq_implies_normal(Run& run) {
  run.report().mode = kBounded;
  GameStore& store = run.store();
  OutcomeSolver& so = run.solver();
  Scanner& sc = run.scanner(run.dead_ending());
  std::vector<GameId> pool = sc.tests().base();
  for (NumberLiteral a : dyadics_up_to(run.bounds().j, run.bounds().v)) pool.push_back(store.dyadic(a));
  std::mt19937_64 rng(run.bounds().seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uint64_t refuted_normal = 0, found = 0, beyond = 0;
  for (unsigned i = 0; i < run.bounds().samples && !run.expired(); ++i) {
    GameId const g = pool[pick(rng)], h = pool[pick(rng)];
    ++run.report().cases;
    if (normal_geq(so, g, h)) continue;
    ++refuted_normal;
    OrderVerdict const v = geq_mod(sc, g, h);
    if (std::holds_alternative<GeqConsistentUpTo>(v)) {
      if (++beyond <= 5) {
        run.note("witness beyond bound: " + run.show(g) + " >= " + run.show(h) +
                 " fails in normal play, no misère context in the test set");
      }
      continue;
    }
    ++found;
    Witness const w = std::holds_alternative<Refuted>(v) ? std::get<Refuted>(v).witness
                                                        : std::get<IncomparableWitnessed>(v).geq_failure;
    if (!witness_replays(so, g, h, w)) run.refute("witness does not replay", w.game, w.lhs, w.rhs);
    if (run.report().witnesses.size() < 8) {
      run.record(run.show(g) + " >= " + run.show(h) + " fails", w);
    } else {
      ++run.report().witnesses_found;
    }
  }
  run.report().coverage = refuted_normal ? static_cast<double>(found) / refuted_normal : 1.0;
  run.note(std::to_string(found) + " of " + std::to_string(refuted_normal) +
           " normal-play refutations have a misère witness in the test set");
}

// Explicit contexts for pairs of numbers: conj(a) or conj(b) plus games
// from the test set's base, integers and the lambda family. The test set
// is capped at birthday b; these reach the longer games some witnesses
// need.
struct ContextPool {
  std::vector<GameId> pool;
  std::vector<GameId> pairs;
};

ContextPool context_pool(GameStore& store, Scanner& sc, Bounds const& b) {
  ContextPool cp;
  auto const reach = static_cast<std::int64_t>(2 * b.b + 1);
  for (std::int64_t n = 1; n <= reach; ++n) {
    cp.pairs.push_back(store.integer(n));
    cp.pairs.push_back(store.integer(-n));
  }
  for (unsigned k = 1; k <= reach; ++k) {
    cp.pairs.push_back(store.lambda(k));
    cp.pairs.push_back(store.conjugate(store.lambda(k)));
  }
  cp.pool = sc.tests().base();
  cp.pool.insert(cp.pool.end(), cp.pairs.begin(), cp.pairs.end());
  return cp;
}

void numbers_distinct(Run& run) {
  run.report().mode = kBounded;
  GameStore& store = run.store();
  Scanner& sc = run.scanner(run.dead_ending());
  ContextPool const cp = context_pool(store, sc, run.bounds());
  auto const nums = dyadics_up_to(run.bounds().j, run.bounds().v);
  std::uint64_t from_contexts = 0;
  for (std::size_t i = 0; i < nums.size(); ++i) {
    for (std::size_t j = i + 1; j < nums.size(); ++j) {
      if (run.expired()) return;
      ++run.report().cases;
      GameId const g = store.dyadic(nums[i]), h = store.dyadic(nums[j]);
      std::string const pair = nums[i].to_string() + " vs " + nums[j].to_string();
      std::optional<Witness> w;
      Verdict const v = equiv_mod(sc, g, h);
      if (auto* d = std::get_if<Distinguished>(&v)) {
        w = d->witness;
      } else {
        auto const contexts = conjugate_contexts(store, {h, g}, cp.pool, cp.pairs);
        ContextEvidence const ev = geq_over_contexts(run.solver(), g, h, contexts);
        w = ev.geq_failure ? ev.geq_failure : ev.leq_failure;
        if (w) ++from_contexts;
      }
      if (!w) {
        run.refute("no context distinguishes " + pair, g);
      } else if (!witness_replays(run.solver(), g, h, *w) || w->lhs == w->rhs) {
        run.refute(pair + ": witness does not replay", w->game);
      } else if (run.report().witnesses.size() < 8) {
        run.record(pair, *w);
      } else {
        ++run.report().witnesses_found;
      }
    }
  }
  run.note(std::to_string(from_contexts) + " pairs needed explicit conjugate contexts");
}

void simplicity_length(Run& run) {
  run.report().mode = kExact;
  auto nums = dyadics_up_to(run.bounds().struct_j, run.bounds().v);
  std::erase_if(nums, [](NumberLiteral a) { return a.sign() <= 0; });
  for (NumberLiteral a : nums) {
    NumberLiteral const al = *a.left_option();
    for (NumberLiteral b : nums) {
      if (!(al < b && b < a)) continue;
      ++run.report().cases;
      if (!(*al.left_length() < *b.left_length())) {
        run.refute("l(a^L) < l(b) fails for a = " + a.to_string() + ", b = " + b.to_string(),
                   run.store().dyadic(b));
      }
    }
  }
}

void number_order(Run& run) {
  run.report().mode = kBounded;
  GameStore& store = run.store();
  OutcomeSolver& so = run.solver();
  Bounds const& b = run.bounds();
  Scanner& sc = run.scanner(run.dead_ending());
  ContextPool const cp = context_pool(store, sc, b);

  auto const nums = dyadics_up_to(b.j, b.v);
  std::uint64_t from_scan = 0, from_contexts = 0;
  for (std::size_t i = 0; i < nums.size(); ++i) {
    for (std::size_t j = 0; j < nums.size(); ++j) {
      if (i == j) continue;
      if (run.expired()) return;
      NumberLiteral const a = nums[i], c = nums[j];
      Comparison const cf = compare_numbers_mod_E(a, c);
      if (cf == Comparison::Less) continue;  // covered by the swapped pair
      if (cf == Comparison::Incomparable && i > j) continue;
      ++run.report().cases;
      GameId const g = store.dyadic(a), h = store.dyadic(c);
      std::string const pair = a.to_string() + " vs " + c.to_string();
      OrderVerdict const v = geq_mod(sc, g, h);
      std::optional<Witness> geq_fail, leq_fail;
      if (auto* r = std::get_if<Refuted>(&v)) geq_fail = r->witness;
      if (auto* r = std::get_if<IncomparableWitnessed>(&v)) {
        geq_fail = r->geq_failure;
        leq_fail = r->leq_failure;
      }
      if (!leq_fail) {
        auto const sg = sc.signature(g);
        auto const sh = sc.signature(h);
        if (auto slot = first_geq_failure(*sh, *sg)) {
          leq_fail = Witness{sc.tests().member(store, *slot), *slot, sg->at(*slot), sh->at(*slot)};
        }
      }
      bool const scan_complete = cf == Comparison::Greater ? true : geq_fail && leq_fail;
      if (cf == Comparison::Greater && geq_fail) {
        run.refute(pair + ": refutes the closed-form order", geq_fail->game, geq_fail->lhs, geq_fail->rhs);
        continue;
      }
      if (scan_complete && cf == Comparison::Incomparable) ++from_scan;
      // Contexts are tried for every pair: Greater pairs must survive them,
      // incomparable pairs use them for directions the scan missed.
      if (cf == Comparison::Greater || !scan_complete) {
        auto const contexts = conjugate_contexts(store, {h, g}, cp.pool, cp.pairs);
        ContextEvidence const ev = geq_over_contexts(so, g, h, contexts);
        if (cf == Comparison::Greater) {
          if (ev.geq_failure) {
            run.refute(pair + ": context refutes the closed-form order", ev.geq_failure->game,
                       ev.geq_failure->lhs, ev.geq_failure->rhs);
          }
          continue;
        }
        if (!geq_fail) geq_fail = ev.geq_failure;
        if (!leq_fail) leq_fail = ev.leq_failure;
        if (geq_fail && leq_fail) ++from_contexts;
      }
      if (!geq_fail || !leq_fail) {
        run.refute(pair + ": incomparable, but no witness for " +
                       (geq_fail ? std::string("o(b + X) >= o(a + X)") : std::string("o(a + X) >= o(b + X)")) +
                       " failing",
                   g);
        continue;
      }
      if (!witness_replays(so, g, h, *geq_fail) || !witness_replays(so, g, h, *leq_fail)) {
        run.refute(pair + ": witness does not replay", geq_fail->game);
        continue;
      }
      bool const named = a == NumberLiteral(1, 1) && c == NumberLiteral(3, 2);
      if (named || run.report().witnesses.size() < 8) {
        run.record(pair + ": o(a + X) >= o(b + X) fails", *geq_fail);
        run.record(pair + ": o(b + X) >= o(a + X) fails", *leq_fail);
      } else {
        run.report().witnesses_found += 2;
      }
    }
  }
  run.note("incomparable pairs witnessed by the test set alone: " + std::to_string(from_scan) +
           "; completed with explicit conjugate contexts: " + std::to_string(from_contexts));
}

// -------------------------------------------------------------- zeros

void non_invertible_family(Run& run) {
  run.report().mode = kBounded;
  GameStore& store = run.store();
  OutcomeSolver& so = run.solver();
  unsigned const top = run.bounds().b;
  for (unsigned mask = 1; mask < (1u << (top + 1)); ++mask) {
    std::vector<GameId> ns, conj;
    for (unsigned n = 0; n <= top; ++n) {
      if (mask & (1u << n)) {
        ns.push_back(store.integer(n));
        conj.push_back(store.integer(-static_cast<std::int64_t>(n)));
      }
    }
    ++run.report().cases;
    GameId const g = store.intern(ns, conj);
    GameId const x = store.intern(ns, {});
    GameId const s = store.sum(g, store.conjugate(g));
    Outcome const with = so.misere(store.sum(s, x));
    Outcome const without = so.misere(x);
    bool const ok = store.conjugate(g) == g && store.is_dead_ending(x) && without == Outcome::R &&
                    left_wins_second(with) && with != without;
    if (!ok) {
      run.refute("X fails to distinguish G + ~G from 0 for G = " + run.show(g), x, with, without);
    } else if (ns.size() == 1 || run.report().witnesses.size() < 6) {
      run.record("distinguishes G + ~G from 0 for G = " + run.show(g), x, with, without);
    } else {
      ++run.report().witnesses_found;
    }
  }
}

void zero_family(Run& run) {
  run.report().mode = kBounded;
  GameStore& store = run.store();
  Scanner& sc = run.scanner(run.dead_ending());
  // Candidate options: left ends with a move to zero, right ends likewise,
  // drawn from the base of the test set.
  std::vector<GameId> lefts, rights;
  for (GameId x : sc.tests().base()) {
    auto const r = store.right(x), l = store.left(x);
    if (store.is_left_end(x) && std::find(r.begin(), r.end(), kZero) != r.end()) lefts.push_back(x);
    if (store.is_right_end(x) && std::find(l.begin(), l.end(), kZero) != l.end()) rights.push_back(x);
  }
  std::set<GameId> seen;
  unsigned const k = run.bounds().k;
  for_each_multiset(lefts.size(), k, [&](std::vector<std::size_t> const& li) {
    for_each_multiset(rights.size(), k, [&](std::vector<std::size_t> const& ri) {
      std::vector<GameId> l, r;
      for (auto i : li) l.push_back(lefts[i]);
      for (auto i : ri) r.push_back(rights[i]);
      GameId const g = store.intern(l, r);
      if (!seen.insert(g).second || !store.is_dead_ending(g)) return;
      ++run.report().cases;
      Verdict const v = equiv_mod(sc, g, kZero);
      if (auto* d = std::get_if<Distinguished>(&v)) {
        run.refute(run.show(g) + " is distinguished from 0", d->witness.game, d->witness.lhs,
                   d->witness.rhs);
      }
    });
  });
  GameId const named = store.intern({store.integer(-1)}, {store.integer(1)});
  if (!seen.contains(named)) {
    run.refute("{-1|1} missing from the enumerated family", named);
  }
  run.note(std::to_string(seen.size()) + " candidate games, " +
           std::to_string(run.report().cases) + " of them dead-ending, from " +
           std::to_string(lefts.size()) + " left and " + std::to_string(rights.size()) +
           " right option choices");
}

void star_squared(Run& run) {
  run.report().mode = kBounded;
  GameStore& store = run.store();
  Scanner& sc = run.scanner(run.dead_ending());
  ++run.report().cases;
  GameId const star = store.star();
  Verdict const v = invert_check(sc, star);
  if (auto* d = std::get_if<Distinguished>(&v)) {
    GameId const s = store.sum(star, star);
    if (!witness_replays(run.solver(), s, kZero, d->witness)) {
      run.refute("witness does not replay", d->witness.game);
    } else {
      run.record("distinguishes * + * from 0", d->witness);
    }
  } else {
    run.refute("no context distinguishes * + * from 0", star);
  }
}

struct Entry {
  ClaimInfo info;
  void (*check)(Run&);
};

std::vector<Entry> const& entries() {
  static std::vector<Entry> const e = {
      {{"lemma:follower-closed", "every follower of a dead-ending game is dead-ending"}, follower_closed},
      {{"lemma:sum-closed", "the sum of dead-ending games is dead-ending"}, sum_closed},
      {{"lemma:dead-end-outcome", "nonzero dead left ends are L-, nonzero dead right ends R-"}, dead_end_outcome},
      {{"lemma:end-sum-outcome", "in a dead right end plus a dead left end, the player who runs out of moves first wins"}, end_sum_outcome},
      {{"thm:ends-invertible", "G + ~G is equivalent to 0 for every dead end G"}, ends_invertible},
      {{"thm:int-total-order", "integers are totally ordered modulo the closure of dead ends, n above m when n < m"}, int_total_order},
      {{"thm:int-incomparable", "distinct integers are incomparable modulo the dead-ending universe"}, int_incomparable},
      {{"lemma:end-to-integer", "a dead end is equivalent to an integer modulo the closure of dead ends"}, end_to_integer},
      {{"thm:int-monoid", "the misère monoid of integers is (Z, +)"}, int_monoid},
      {{"prop:dyadic-options", "for a non-integer dyadic a, a^L = a^RL or a^R = a^LR"}, dyadic_options},
      {{"lemma:right-option-length", "l(a^R) <= l(a) for positive non-integer a; r(a^L) <= r(a) for negative"}, right_option_length},
      {{"lemma:number-sum-outcome", "the outcome of a sum of numbers is the sign of k = sum l(a_i) - sum r(b_i)"}, number_sum_outcome_claim},
      {{"cor:number-collapses", "a number is equivalent to l(a) or -r(a) modulo the closure of numbers"}, number_collapses},
      {{"thm:number-monoid", "the misère monoid of dyadic numbers is (Z, +)"}, number_monoid},
      {{"lemma:number-plus-end", "a sum of numbers with k < 0 plus any left end is L-"}, number_plus_end},
      {{"thm:numbers-invertible", "a + ~a is equivalent to 0 for every number a"}, numbers_invertible},
      {{"thm:geq-implies-normal", "G >= H modulo the dead-ending universe implies G >= H in normal play"}, geq_implies_normal},
      {{"cor:numbers-distinct", "distinct numbers are distinguishable modulo the dead-ending universe"}, numbers_distinct},
      {{"lemma:simplicity-length", "for positive a, b with a^L < b < a, l(a^L) < l(b)"}, simplicity_length},
      {{"thm:number-order", "for positive numbers, a > b strictly modulo E iff a > b and l(a) <= l(b)"}, number_order},
      {{"lemma:non-invertible-family", "{n_1..n_k | ~n_1..~n_k} has no inverse modulo the dead-ending universe"}, non_invertible_family},
      {{"thm:zero-family", "G is equivalent to 0 when every G^L is a left end and every G^R a right end, each with a move to 0"}, zero_family},
      {{"fact:star-squared", "* + * is not equivalent to 0 modulo the dead-ending universe"}, star_squared},
  };
  return e;
}

Entry const& find_entry(std::string_view id) {
  for (auto const& e : entries()) {
    if (e.info.id == id) return e;
  }
  throw std::out_of_range("unknown claim id: " + std::string(id));
}

ClaimReport blank(Entry const& e, Bounds const& bounds) {
  ClaimReport r;
  r.id = e.info.id;
  r.statement = e.info.statement;
  r.bounds = bounds;
  return r;
}

}  // namespace

std::string_view status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Refuted: return "refuted";
    case ClaimStatus::Skipped: return "skipped";
  }
  return "?";
}

std::vector<ClaimInfo> const& claim_registry() {
  static std::vector<ClaimInfo> const infos = [] {
    std::vector<ClaimInfo> v;
    for (auto const& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

bool is_claim(std::string_view id) {
  for (auto const& e : entries()) {
    if (e.info.id == id) return true;
  }
  return false;
}

ClaimReport run_claim(std::string_view id, Bounds const& bounds, Deadline deadline) {
  Entry const& e = find_entry(id);
  ClaimReport report = blank(e, bounds);
  auto const t0 = Clock::now();
  {
    Run run(report, deadline);
    e.check(run);
  }
  report.duration_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return report;
}

std::vector<ClaimReport> run_all(Bounds const& bounds, std::optional<double> budget_seconds,
                                 std::optional<std::string_view> only) {
  if (only) find_entry(*only);
  std::vector<ClaimReport> out;
  Deadline deadline;
  if (budget_seconds) {
    deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(*budget_seconds));
  }
  for (auto const& e : entries()) {
    if (only && e.info.id != *only) continue;
    if (deadline && Clock::now() >= *deadline) {
      ClaimReport r = blank(e, bounds);
      r.status = ClaimStatus::Skipped;
      r.notes.push_back("wall-clock budget exhausted before start");
      out.push_back(std::move(r));
      continue;
    }
    try {
      out.push_back(run_claim(e.info.id, bounds, deadline));
    } catch (BudgetExceeded const& ex) {
      ClaimReport r = blank(e, bounds);
      r.status = ClaimStatus::Skipped;
      r.notes.push_back(std::string("budget exceeded: ") + ex.what());
      out.push_back(std::move(r));
    }
  }
  return out;
}

void to_json(nlohmann::json& j, Bounds const& b) {
  j = {{"b", b.b},         {"k", b.k},       {"t", b.t},
       {"j", b.j},         {"v", b.v},       {"struct_j", b.struct_j},
       {"terms", b.terms}, {"samples", b.samples}, {"seed", b.seed}};
}

void from_json(nlohmann::json const& j, Bounds& b) {
  j.at("b").get_to(b.b);
  j.at("k").get_to(b.k);
  j.at("t").get_to(b.t);
  j.at("j").get_to(b.j);
  j.at("v").get_to(b.v);
  j.at("struct_j").get_to(b.struct_j);
  j.at("terms").get_to(b.terms);
  j.at("samples").get_to(b.samples);
  j.at("seed").get_to(b.seed);
}

void to_json(nlohmann::json& j, ClaimWitness const& w) {
  j = {{"role", w.role}, {"game", w.game}, {"notation", w.notation}};
  if (!w.lhs.empty()) j["lhs"] = w.lhs;
  if (!w.rhs.empty()) j["rhs"] = w.rhs;
}

void from_json(nlohmann::json const& j, ClaimWitness& w) {
  j.at("role").get_to(w.role);
  j.at("game").get_to(w.game);
  j.at("notation").get_to(w.notation);
  w.lhs = j.value("lhs", std::string());
  w.rhs = j.value("rhs", std::string());
}

void to_json(nlohmann::json& j, ClaimReport const& r) {
  j = {{"id", r.id},
       {"statement", r.statement},
       {"bounds", r.bounds},
       {"tests", r.tests},
       {"status", status_name(r.status)},
       {"mode", r.mode},
       {"cases", r.cases},
       {"witnesses_found", r.witnesses_found},
       {"witnesses", r.witnesses},
       {"notes", r.notes},
       {"partial", r.partial},
       {"duration_ms", r.duration_ms}};
  if (r.coverage) j["coverage"] = *r.coverage;
}

void from_json(nlohmann::json const& j, ClaimReport& r) {
  j.at("id").get_to(r.id);
  j.at("statement").get_to(r.statement);
  j.at("bounds").get_to(r.bounds);
  j.at("tests").get_to(r.tests);
  std::string const s = j.at("status").get<std::string>();
  if (s == "pass") r.status = ClaimStatus::Pass;
  else if (s == "refuted") r.status = ClaimStatus::Refuted;
  else if (s == "skipped") r.status = ClaimStatus::Skipped;
  else throw std::invalid_argument("unknown claim status: " + s);
  j.at("mode").get_to(r.mode);
  j.at("cases").get_to(r.cases);
  j.at("witnesses_found").get_to(r.witnesses_found);
  j.at("witnesses").get_to(r.witnesses);
  j.at("notes").get_to(r.notes);
  j.at("partial").get_to(r.partial);
  j.at("duration_ms").get_to(r.duration_ms);
  r.coverage = j.contains("coverage") ? std::optional<double>(j.at("coverage").get<double>())
                                      : std::nullopt;
}

}  // namespace misere
