#include "misere/relations.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace misere {

namespace {

Witness make_witness(Scanner& scanner, std::size_t slot, Signature const& a,
                     Signature const& b) {
  return {scanner.tests().member(scanner.store(), slot), slot, a.at(slot),
          b.at(slot)};
}

std::size_t hash_signature(Signature const& s) {
  std::size_t h = 1469598103934665603ull;
  for (auto w : s.left_first.words()) h = (h ^ w) * 1099511628211ull;
  for (auto w : s.left_second.words()) h = (h ^ (w + 0x9e37)) * 1099511628211ull;
  return h;
}

}  // namespace

Verdict equiv_mod(Scanner& scanner, GameId g, GameId h) {
  auto const sg = scanner.signature(g);
  auto const sh = scanner.signature(h);
  if (auto slot = first_difference(*sg, *sh)) {
    return Distinguished{make_witness(scanner, *slot, *sg, *sh)};
  }
  return IndistinguishableUpTo{scanner.tests().descriptor()};
}

OrderVerdict geq_mod(Scanner& scanner, GameId g, GameId h) {
  auto const sg = scanner.signature(g);
  auto const sh = scanner.signature(h);
  auto const geq_fail = first_geq_failure(*sg, *sh);
  if (!geq_fail) return GeqConsistentUpTo{scanner.tests().descriptor()};
  Witness const w = make_witness(scanner, *geq_fail, *sg, *sh);
  auto const leq_fail = first_geq_failure(*sh, *sg);
  if (!leq_fail) return Refuted{w};
  return IncomparableWitnessed{w, make_witness(scanner, *leq_fail, *sg, *sh)};
}

Verdict invert_check(Scanner& scanner, GameId g) {
  GameStore& store = scanner.store();
  GameId const s = store.sum(g, store.conjugate(g));
  return equiv_mod(scanner, s, kZero);
}

bool witness_replays(OutcomeSolver& solver, GameId g, GameId h,
                     Witness const& w) {
  GameStore& store = solver.store();
  return solver.misere(store.sum(g, w.game)) == w.lhs &&
         solver.misere(store.sum(h, w.game)) == w.rhs;
}

ContextEvidence geq_over_contexts(OutcomeSolver& solver, GameId g, GameId h,
                                  std::vector<GameId> const& contexts) {
  GameStore& store = solver.store();
  ContextEvidence ev;
  for (std::size_t i = 0; i < contexts.size(); ++i) {
    if (ev.geq_failure && ev.leq_failure) break;
    GameId const x = contexts[i];
    Outcome const og = solver.misere(store.sum(g, x));
    Outcome const oh = solver.misere(store.sum(h, x));
    ++ev.checked;
    if (!ev.geq_failure && !outcome_geq(og, oh)) ev.geq_failure = Witness{x, i, og, oh};
    if (!ev.leq_failure && !outcome_geq(oh, og)) ev.leq_failure = Witness{x, i, og, oh};
  }
  return ev;
}

std::vector<GameId> conjugate_contexts(GameStore& store,
                                       std::vector<GameId> const& centers,
                                       std::vector<GameId> const& pool,
                                       std::vector<GameId> const& pairs) {
  std::vector<GameId> out;
  std::unordered_set<GameId> seen;
  auto const add = [&](GameId x) {
    if (seen.insert(x).second) out.push_back(x);
  };
  for (GameId c : centers) {
    GameId const base = store.conjugate(c);
    add(base);
    for (GameId y : pool) add(store.sum(base, y));
    for (GameId q : pairs) {
      for (GameId y : pool) add(store.sum(base, store.sum(q, y)));
    }
  }
  return out;
}

IntegerSeparation integer_separation(GameStore& store, std::int64_t n,
                                     std::int64_t m) {
  if (n <= m) throw std::invalid_argument("integer_separation: requires n > m");
  IntegerSeparation s;
  s.not_geq = store.conjugate(store.integer(m));
  if (m >= 0) {
    s.not_leq = store.lambda(static_cast<unsigned>(n));
  } else if (n <= 0) {
    s.not_leq = store.conjugate(store.lambda(static_cast<unsigned>(-m)));
  } else {
    std::int64_t const k = -m - 1;
    s.not_leq = store.sum(store.integer(k), store.lambda(static_cast<unsigned>(n + k)));
  }
  return s;
}

std::string_view comparison_name(Comparison c) {
  switch (c) {
    case Comparison::Equivalent: return "equivalent";
    case Comparison::Greater: return "greater";
    case Comparison::Less: return "less";
    case Comparison::Incomparable: return "incomparable";
  }
  return "?";
}

Comparison compare_numbers_mod_E(NumberLiteral a, NumberLiteral b) {
  if (a == b) return Comparison::Equivalent;
  if (a.sign() > 0 && b.sign() > 0) {
    unsigned const la = *a.left_length();
    unsigned const lb = *b.left_length();
    if (a > b && la <= lb) return Comparison::Greater;
    if (b > a && lb <= la) return Comparison::Less;
    return Comparison::Incomparable;
  }
  if (a.sign() < 0 && b.sign() < 0) {
    unsigned const ra = *a.right_length();
    unsigned const rb = *b.right_length();
    if (a > b && rb <= ra) return Comparison::Greater;
    if (b > a && ra <= rb) return Comparison::Less;
    return Comparison::Incomparable;
  }
  return Comparison::Incomparable;
}

Comparison compare_integers_mod_dead_end_closure(std::int64_t n,
                                                 std::int64_t m) {
  if (n == m) return Comparison::Equivalent;
  return n < m ? Comparison::Greater : Comparison::Less;
}

NumberLiteral reduce_end_to_integer(GameStore& store, GameId g) {
  if (store.is_dead_right_end(g)) {
    return NumberLiteral::integer(*store.left_length(g));
  }
  if (store.is_dead_left_end(g)) {
    return NumberLiteral::integer(-static_cast<std::int64_t>(*store.right_length(g)));
  }
  throw std::invalid_argument("reduce_end_to_integer: game is not a dead end");
}

std::optional<std::int64_t> match_integer(Scanner& scanner,
                                          Signature const& sig,
                                          std::int64_t range) {
  GameStore& store = scanner.store();
  for (std::int64_t a = 0; a <= range; ++a) {
    if (*scanner.signature(store.integer(a)) == sig) return a;
    if (a != 0 && *scanner.signature(store.integer(-a)) == sig) return -a;
  }
  return std::nullopt;
}

MonoidReport quotient_monoid(Scanner& scanner,
                             std::vector<GameId> const& generators,
                             unsigned max_terms) {
  GameStore& store = scanner.store();
  OutcomeSolver& solver = scanner.solver();
  {
    std::unordered_set<GameId> const gens(generators.begin(), generators.end());
    for (GameId g : generators) {
      if (!gens.contains(store.conjugate(g))) {
        throw std::invalid_argument(
            "quotient_monoid: generators are not closed under conjugation");
      }
    }
  }

  MonoidReport report;
  report.tests = scanner.tests().descriptor();
  report.max_terms = max_terms;
  report.generators = generators;

  unsigned max_birthday = 1;
  for (GameId g : generators) max_birthday = std::max(max_birthday, store.birthday(g));
  std::int64_t const label_range = 2 * static_cast<std::int64_t>(max_terms) * max_birthday;

  std::unordered_multimap<std::size_t, std::size_t> by_hash;
  std::unordered_map<GameId, std::size_t> class_of_sum;
  auto const find_class = [&](Signature const& sig) -> std::optional<std::size_t> {
    auto [lo, hi] = by_hash.equal_range(hash_signature(sig));
    for (auto it = lo; it != hi; ++it) {
      if (*scanner.signature(report.classes[it->second].representative) == sig) {
        return it->second;
      }
    }
    return std::nullopt;
  };

  for_each_multiset(generators.size(), max_terms,
                    [&](std::vector<std::size_t> const& word) {
    GameId s = kZero;
    for (std::size_t i : word) s = store.sum(s, generators[i]);
    if (auto it = class_of_sum.find(s); it != class_of_sum.end()) {
      report.classes[it->second].words.push_back(word);
      return;
    }
    auto const sig = scanner.signature(s);
    std::size_t cls;
    if (auto found = find_class(*sig)) {
      cls = *found;
    } else {
      cls = report.classes.size();
      MonoidClass c;
      c.representative = s;
      c.outcome = solver.misere(s);
      c.label = match_integer(scanner, *sig, label_range);
      report.classes.push_back(std::move(c));
      by_hash.emplace(hash_signature(*sig), cls);
    }
    report.classes[cls].members.push_back(s);
    report.classes[cls].words.push_back(word);
    class_of_sum.emplace(s, cls);
  });

  std::size_t const n = report.classes.size();
  report.product.assign(n, std::vector<std::optional<std::size_t>>(n));
  report.product_label.assign(n, std::vector<std::optional<std::int64_t>>(n));
  report.order.assign(n, std::vector<char>(n, '='));
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(report.classes[i].members.begin(),
                  report.classes[i].members.end(),
                  kZero) != report.classes[i].members.end()) {
      report.identity = i;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      GameId const p = store.sum(report.classes[i].representative,
                                 report.classes[j].representative);
      auto const sig = scanner.signature(p);
      report.product[i][j] = find_class(*sig);
      report.product_label[i][j] = match_integer(scanner, *sig, label_range);
      if (i <= j && report.identity && report.product[i][j] == report.identity) {
        report.inverses.emplace_back(i, j);
      }
      if (i != j) {
        auto const si = scanner.signature(report.classes[i].representative);
        auto const sj = scanner.signature(report.classes[j].representative);
        bool const geq = !first_geq_failure(*si, *sj);
        bool const leq = !first_geq_failure(*sj, *si);
        report.order[i][j] = geq ? (leq ? '=' : '>') : (leq ? '<' : '|');
      }
    }
  }
  return report;
}

}  // namespace misere
