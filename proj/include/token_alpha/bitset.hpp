#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace token_alpha {

/// Fixed-width dynamic bitset used for adjacency rows and solver candidate
/// sets. All binary operations assume equal widths.
class Bitset {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t bits)
      : bits_(bits), words_((bits + kWordBits - 1) / kWordBits, 0) {}

  std::size_t width() const noexcept { return bits_; }

  void set(std::size_t i) noexcept { words_[i / kWordBits] |= bit(i); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~bit(i); }
  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] & bit(i)) != 0;
  }

  void set_all() noexcept {
    for (auto &w : words_)
      w = ~Word{0};
    trim();
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const noexcept {
    for (auto w : words_)
      if (w)
        return false;
    return true;
  }
  bool any() const noexcept { return !none(); }

  /// |*this & other| without materializing the intersection.
  std::size_t count_and(const Bitset &other) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }

  bool intersects(const Bitset &other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i])
        return true;
    return false;
  }

  std::size_t first() const noexcept { return next(0); }

  /// Smallest set index >= from, or npos.
  std::size_t next(std::size_t from) const noexcept {
    if (from >= bits_)
      return npos;
    std::size_t wi = from / kWordBits;
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w)
        return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size())
        return npos;
      w = words_[wi];
    }
  }

  Bitset &operator&=(const Bitset &o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= o.words_[i];
    return *this;
  }
  Bitset &operator|=(const Bitset &o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] |= o.words_[i];
    return *this;
  }
  /// this &= ~o
  Bitset &subtract(const Bitset &o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset &b) { return a &= b; }

  friend bool operator==(const Bitset &, const Bitset &) = default;

  template <class F> void for_each(F &&f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        f(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

private:
  static constexpr Word bit(std::size_t i) noexcept {
    return Word{1} << (i % kWordBits);
  }
  void trim() noexcept {
    if (bits_ % kWordBits && !words_.empty())
      words_.back() &= (Word{1} << (bits_ % kWordBits)) - 1;
  }

  std::size_t bits_ = 0;
  std::vector<Word> words_;
};

} // namespace token_alpha
