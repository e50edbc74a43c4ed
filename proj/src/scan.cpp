#include "misere/scan.hpp"

#include <algorithm>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace misere {

namespace {

using Word = Bitset::Word;
constexpr Word kAllOnes = ~Word{0};

}  // namespace

std::shared_ptr<Signature const> Scanner::signature(GameId g) {
  if (auto it = cache_.find(g); it != cache_.end()) return it->second;
  auto sig = std::make_shared<Signature const>(compute_signature(g));
  cache_.emplace(g, sig);
  return sig;
}

Signature Scanner::compute_signature(GameId g) {
  GameStore& store = solver_.store();
  std::size_t const slots = tests_.slot_count();
  Signature out{Bitset(slots), Bitset(slots)};

  auto const& base = tests_.base();
  for (std::size_t i = 0; i < base.size(); ++i) {
    GameId const s = store.sum(g, base[i]);
    out.left_first.set(i, solver_.left_first_wins(s));
    out.left_second.set(i, !solver_.right_first_wins(s));
  }
  if (!tests_.top()) return out;

  TopLayer const& top = *tests_.top();
  std::size_t const rows = top.rows();
  std::size_t const words = top.stride / Bitset::kWordBits;

  // Followers of g, options before parents, with local option indices.
  std::vector<GameId> const fol = store.followers(g);
  std::size_t const nf = fol.size();
  std::unordered_map<GameId, std::uint32_t> local;
  for (std::size_t f = 0; f < nf; ++f) local.emplace(fol[f], f);
  std::vector<std::vector<std::uint32_t>> lopts(nf), ropts(nf);
  std::vector<char> left_end(nf), right_end(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    for (GameId x : store.left(fol[f])) lopts[f].push_back(local.at(x));
    for (GameId x : store.right(fol[f])) ropts[f].push_back(local.at(x));
    left_end[f] = lopts[f].empty();
    right_end[f] = ropts[f].empty();
  }

  // Outcomes of follower + base member. Left moving X to base member p
  // wins iff Right loses moving first on f + p.
  std::size_t const nb = base.size();
  std::vector<char> right_loses(nf * nb), left_loses(nf * nb);
  for (std::size_t f = 0; f < nf; ++f) {
    for (std::size_t p = 0; p < nb; ++p) {
      GameId const s = store.sum(fol[f], base[p]);
      right_loses[f * nb + p] = !solver_.right_first_wins(s);
      left_loses[f * nb + p] = !solver_.left_first_wins(s);
    }
  }

  // Per follower and choice: does moving X into that choice win outright?
  std::vector<char> left_move_wins(nf * rows), right_move_wins(nf * rows);
  for (std::size_t f = 0; f < nf; ++f) {
    for (std::size_t c = 0; c < rows; ++c) {
      bool lw = false, rw = false;
      for (std::uint32_t p : top.choices[c]) {
        lw = lw || right_loses[f * nb + p];
        rw = rw || left_loses[f * nb + p];
      }
      left_move_wins[f * rows + c] = lw;
      right_move_wins[f * rows + c] = rw;
    }
  }

  // Right-to-move terms that depend only on the right choice (the column).
  std::vector<Word> right_base(nf * words, 0);
  for (std::size_t f = 0; f < nf; ++f) {
    Word* dst = right_base.data() + f * words;
    for (std::size_t c = 0; c < rows; ++c) {
      bool const wins = right_move_wins[f * rows + c] ||
                        (right_end[f] && top.choices[c].empty());
      if (wins) dst[c / Bitset::kWordBits] |= Word{1} << (c % Bitset::kWordBits);
    }
  }

  std::size_t const root = nf - 1;  // post-order ends with g
  auto const mask = tests_.mask().words();
  auto lf_out = out.left_first.words();
  auto ls_out = out.left_second.words();
  std::size_t const top_word = tests_.top_offset() / Bitset::kWordBits;

  // Row r: X's left options are choices[r]. LW[f] / RW[f] hold, for every
  // column c, whether Left / Right moving first wins f + {r | c}.
#pragma omp parallel
  {
    std::vector<Word> lw(nf * words), rw(nf * words);
#pragma omp for schedule(dynamic, 16)
    for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(rows); ++r) {
      bool const row_empty = top.choices[r].empty();
      for (std::size_t f = 0; f < nf; ++f) {
        Word* l = lw.data() + f * words;
        Word* rr = rw.data() + f * words;
        bool const lconst = left_move_wins[f * rows + r] || (left_end[f] && row_empty);
        std::fill(l, l + words, lconst ? kAllOnes : Word{0});
        for (std::uint32_t o : lopts[f]) {
          Word const* ro = rw.data() + o * words;
          for (std::size_t w = 0; w < words; ++w) l[w] |= ~ro[w];
        }
        Word const* rb = right_base.data() + f * words;
        std::copy(rb, rb + words, rr);
        for (std::uint32_t o : ropts[f]) {
          Word const* lo = lw.data() + o * words;
          for (std::size_t w = 0; w < words; ++w) rr[w] |= ~lo[w];
        }
      }
      Word const* l = lw.data() + root * words;
      Word const* rr = rw.data() + root * words;
      std::size_t const off = top_word + r * words;
      for (std::size_t w = 0; w < words; ++w) {
        lf_out[off + w] = l[w] & mask[off + w];
        ls_out[off + w] = ~rr[w] & mask[off + w];
      }
    }
  }
  return out;
}

Signature Scanner::signature_reference(GameId g) {
  std::size_t const slots = tests_.slot_count();
  Signature out{Bitset(slots), Bitset(slots)};
  for (std::size_t slot = 0; slot < slots; ++slot) {
    if (!tests_.is_member(slot)) continue;
    Outcome const o = outcome_at(g, slot);
    out.left_first.set(slot, left_wins_first(o));
    out.left_second.set(slot, left_wins_second(o));
  }
  return out;
}

Outcome Scanner::outcome_at(GameId g, std::size_t slot) {
  GameStore& store = solver_.store();
  GameId const x = tests_.member(store, slot);
  return solver_.misere(store.sum(g, x));
}

std::optional<std::size_t> first_difference(Signature const& a,
                                            Signature const& b) {
  auto const af = a.left_first.words();
  auto const as = a.left_second.words();
  auto const bf = b.left_first.words();
  auto const bs = b.left_second.words();
  for (std::size_t w = 0; w < af.size(); ++w) {
    Word const diff = (af[w] ^ bf[w]) | (as[w] ^ bs[w]);
    if (diff) {
      return w * Bitset::kWordBits + static_cast<std::size_t>(std::countr_zero(diff));
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> first_geq_failure(Signature const& a,
                                             Signature const& b) {
  auto const af = a.left_first.words();
  auto const as = a.left_second.words();
  auto const bf = b.left_first.words();
  auto const bs = b.left_second.words();
  for (std::size_t w = 0; w < af.size(); ++w) {
    Word const fail = (bf[w] & ~af[w]) | (bs[w] & ~as[w]);
    if (fail) {
      return w * Bitset::kWordBits + static_cast<std::size_t>(std::countr_zero(fail));
    }
  }
  return std::nullopt;
}

}  // namespace misere
