#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace qcomp {

using State = std::uint32_t;

/// Dense bit set over the state range 0..universe-1.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t universe);
  StateSet(std::size_t universe, std::initializer_list<State> members);

  static StateSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(State q) const noexcept {
    return q < universe_ && ((words_[q >> 6] >> (q & 63)) & 1U) != 0;
  }
  void insert(State q);
  void erase(State q);

  bool empty() const noexcept;
  std::size_t count() const noexcept;

  bool intersects(const StateSet& other) const;
  bool is_subset_of(const StateSet& other) const;

  /// Complement within the universe.
  StateSet complement() const;
  StateSet& operator|=(const StateSet& other);
  StateSet& operator&=(const StateSet& other);

  std::vector<State> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        f(static_cast<State>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const noexcept;

  friend bool operator==(const StateSet&, const StateSet&) = default;
  /// Orders by universe, then by the members read as a binary number with
  /// state 0 least significant.
  friend std::strong_ordering operator<=>(const StateSet& a, const StateSet& b);

 private:
  void check(State q) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

StateSet operator|(StateSet a, const StateSet& b);
StateSet operator&(StateSet a, const StateSet& b);

struct StateSetHash {
  std::size_t operator()(const StateSet& s) const noexcept { return s.hash(); }
};

}  // namespace qcomp
