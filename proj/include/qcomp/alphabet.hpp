#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace qcomp {

using Letter = char;

/// Ordered set of distinct letters from a-z. Order is significant.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string_view letters);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::string_view letters() const noexcept { return letters_; }

  std::optional<std::size_t> index_of(Letter a) const noexcept;
  bool contains(Letter a) const noexcept { return index_of(a).has_value(); }
  bool is_subset_of(const Alphabet& other) const noexcept;
  bool same_letters(const Alphabet& other) const noexcept;

  /// Union with letters sorted lexicographically.
  static Alphabet union_of(const Alphabet& a, const Alphabet& b);
  Alphabet sorted() const;

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string letters_;
};

}  // namespace qcomp
