#include "qcomp/transformation.hpp"

#include <sstream>

#include "qcomp/errors.hpp"

namespace qcomp {

Transformation::Transformation(std::vector<State> images)
    : images_(std::move(images)) {
  const auto n = images_.size();
  for (std::size_t q = 0; q < n; ++q) {
    if (images_[q] >= n) {
      throw StructuralError("image " + std::to_string(images_[q]) +
                            " of state " + std::to_string(q) +
                            " is outside 0.." + std::to_string(n - 1));
    }
  }
}

Transformation Transformation::identity(std::size_t n) {
  std::vector<State> images(n);
  for (std::size_t q = 0; q < n; ++q) images[q] = static_cast<State>(q);
  return Transformation(std::move(images));
}

Transformation Transformation::cycle(std::size_t n,
                                     std::span<const State> orbit) {
  auto images = identity(n).images_;
  StateSet seen(n);
  for (State q : orbit) {
    if (q >= n) throw StructuralError("cycle state outside range");
    if (seen.contains(q)) throw StructuralError("cycle repeats a state");
    seen.insert(q);
  }
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    images[orbit[i]] = orbit[(i + 1) % orbit.size()];
  }
  return Transformation(std::move(images));
}

Transformation Transformation::cycle(std::size_t n,
                                     std::initializer_list<State> orbit) {
  return cycle(n, std::span<const State>(orbit.begin(), orbit.size()));
}

Transformation Transformation::send(std::size_t n, State p, State q) {
  if (p >= n || q >= n) throw StructuralError("send: state outside range");
  auto images = identity(n).images_;
  images[p] = q;
  return Transformation(std::move(images));
}

Transformation Transformation::collapse(std::size_t n, const StateSet& from,
                                        State q) {
  if (from.universe() != n || q >= n) {
    throw StructuralError("collapse: state outside range");
  }
  auto images = identity(n).images_;
  from.for_each([&](State p) { images[p] = q; });
  return Transformation(std::move(images));
}

StateSet Transformation::image_of(const StateSet& set) const {
  if (set.universe() != size()) {
    throw StructuralError("image_of: set universe differs from domain");
  }
  StateSet out(size());
  set.for_each([&](State q) { out.insert(images_[q]); });
  return out;
}

bool Transformation::is_identity() const noexcept {
  for (std::size_t q = 0; q < images_.size(); ++q) {
    if (images_[q] != q) return false;
  }
  return true;
}

std::string Transformation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t q = 0; q < images_.size(); ++q) {
    if (q != 0) os << ' ';
    os << images_[q];
  }
  os << ']';
  return os.str();
}

Transformation compose(const Transformation& s, const Transformation& t) {
  if (s.size() != t.size()) {
    throw StructuralError("compose: transformations of sizes " +
                          std::to_string(s.size()) + " and " +
                          std::to_string(t.size()));
  }
  std::vector<State> images(s.size());
  for (std::size_t q = 0; q < s.size(); ++q) images[q] = t[s[q]];
  return Transformation(std::move(images));
}

}  // namespace qcomp
