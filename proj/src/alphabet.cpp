#include "qcomp/alphabet.hpp"

#include <algorithm>
#include <array>

#include "qcomp/errors.hpp"

namespace qcomp {

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
  std::array<bool, 26> seen{};
  for (char c : letters_) {
    if (c < 'a' || c > 'z') {
      throw StructuralError(std::string("letter '") + c +
                            "' is not in a-z");
    }
    auto& slot = seen[static_cast<std::size_t>(c - 'a')];
    if (slot) throw StructuralError(std::string("duplicate letter '") + c + "'");
    slot = true;
  }
}

std::optional<std::size_t> Alphabet::index_of(Letter a) const noexcept {
  const auto pos = letters_.find(a);
  if (pos == std::string::npos) return std::nullopt;
  return pos;
}

bool Alphabet::is_subset_of(const Alphabet& other) const noexcept {
  return std::all_of(letters_.begin(), letters_.end(),
                     [&](char c) { return other.contains(c); });
}

bool Alphabet::same_letters(const Alphabet& other) const noexcept {
  return size() == other.size() && is_subset_of(other);
}

Alphabet Alphabet::union_of(const Alphabet& a, const Alphabet& b) {
  std::string merged(a.letters_);
  for (char c : b.letters_) {
    if (!a.contains(c)) merged.push_back(c);
  }
  std::sort(merged.begin(), merged.end());
  return Alphabet(merged);
}

Alphabet Alphabet::sorted() const {
  std::string s(letters_);
  std::sort(s.begin(), s.end());
  return Alphabet(s);
}

}  // namespace qcomp
