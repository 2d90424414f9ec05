#pragma once

#include <numeric>
#include <vector>

#include "gyrorep/errors.hpp"

namespace gyrorep {

/// Permutation of {0, ..., n-1}, stored as its image table.
class Permutation {
public:
  static Permutation identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im), unchecked{});
  }

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
        fail(errc::internal_inconsistency, "image table is not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if ((*this)(i) != i) return false;
    return true;
  }

  /// (p.after(q))(x) = p(q(x))
  Permutation after(const Permutation& q) const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < size(); ++i) im[static_cast<std::size_t>(i)] = (*this)(q(i));
    return Permutation(std::move(im), unchecked{});
  }

  Permutation inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < size(); ++i) im[static_cast<std::size_t>((*this)(i))] = i;
    return Permutation(std::move(im), unchecked{});
  }

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return images_ != o.images_; }

private:
  struct unchecked {};
  Permutation(std::vector<int> images, unchecked) : images_(std::move(images)) {}
  std::vector<int> images_;
};

} // namespace gyrorep
