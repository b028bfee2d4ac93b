#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qcomp/state_set.hpp"

namespace qcomp {

/// A total self-map of Q_n = {0,...,n-1}; entry i is the image of state i.
class Transformation {
 public:
  Transformation() = default;
  explicit Transformation(std::vector<State> images);

  static Transformation identity(std::size_t n);
  /// The cycle (q_0,...,q_{k-1}); identity elsewhere.
  static Transformation cycle(std::size_t n, std::span<const State> orbit);
  static Transformation cycle(std::size_t n, std::initializer_list<State> orbit);
  /// The map (p -> q); identity elsewhere.
  static Transformation send(std::size_t n, State p, State q);
  /// Every state of `from` goes to q; identity elsewhere.
  static Transformation collapse(std::size_t n, const StateSet& from, State q);

  std::size_t size() const noexcept { return images_.size(); }
  State operator[](State q) const { return images_[q]; }
  const std::vector<State>& images() const noexcept { return images_; }

  StateSet image_of(const StateSet& set) const;
  bool is_identity() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Transformation&, const Transformation&) = default;

 private:
  std::vector<State> images_;
};

/// Applies s first, then t: q maps to (qs)t.
Transformation compose(const Transformation& s, const Transformation& t);

}  // namespace qcomp
