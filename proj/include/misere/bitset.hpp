#ifndef MISERE_BITSET_HPP_
#define MISERE_BITSET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace misere {

// Fixed-size bit vector with direct word access for the scan kernels.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t bits)
      : bits_(bits), words_((bits + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const { return bits_; }
  std::size_t word_count() const { return words_.size(); }
  std::span<Word> words() { return words_; }
  std::span<Word const> words() const { return words_; }

  bool test(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i, bool value = true) {
    Word const bit = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= bit;
    } else {
      words_[i / kWordBits] &= ~bit;
    }
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  std::optional<std::size_t> find_first() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) {
        return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
      }
    }
    return std::nullopt;
  }

  friend bool operator==(Bitset const&, Bitset const&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<Word> words_;
};

}  // namespace misere

#endif  // MISERE_BITSET_HPP_
