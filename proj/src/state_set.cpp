#include "qcomp/state_set.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "qcomp/errors.hpp"

namespace qcomp {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

void require_same_universe(const StateSet& a, const StateSet& b) {
  if (a.universe() != b.universe()) {
    throw StructuralError("state sets over different universes (" +
                          std::to_string(a.universe()) + " vs " +
                          std::to_string(b.universe()) + ")");
  }
}

}  // namespace

StateSet::StateSet(std::size_t universe)
    : universe_(universe), words_(word_count(universe), 0) {}

StateSet::StateSet(std::size_t universe, std::initializer_list<State> members)
    : StateSet(universe) {
  for (State q : members) insert(q);
}

StateSet StateSet::full(std::size_t universe) {
  StateSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (const std::size_t tail = universe % 64; tail != 0) {
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

void StateSet::check(State q) const {
  if (q >= universe_) {
    throw StructuralError("state " + std::to_string(q) +
                          " outside universe of size " +
                          std::to_string(universe_));
  }
}

void StateSet::insert(State q) {
  check(q);
  words_[q >> 6] |= std::uint64_t{1} << (q & 63);
}

void StateSet::erase(State q) {
  check(q);
  words_[q >> 6] &= ~(std::uint64_t{1} << (q & 63));
}

bool StateSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

std::size_t StateSet::count() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool StateSet::intersects(const StateSet& other) const {
  require_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

bool StateSet::is_subset_of(const StateSet& other) const {
  require_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

StateSet StateSet::complement() const {
  StateSet all = full(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) all.words_[i] &= ~words_[i];
  return all;
}

StateSet& StateSet::operator|=(const StateSet& other) {
  require_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

StateSet& StateSet::operator&=(const StateSet& other) {
  require_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::vector<State> StateSet::members() const {
  std::vector<State> out;
  out.reserve(count());
  for_each([&](State q) { out.push_back(q); });
  return out;
}

std::size_t StateSet::hash() const noexcept {
  std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
  for (auto w : words_) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

std::strong_ordering operator<=>(const StateSet& a, const StateSet& b) {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }

}  // namespace qcomp
