#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "fg/errors.hpp"

namespace fg {

// A permutation of {1..degree}, stored as a 0-based image array.
// Immutable after construction; all operations below are pure.
//
// Composition convention (fixed repo-wide): compose(a, b) applies a first,
// then b, i.e. point i maps to b[a[i]].
class Perm {
 public:
  Perm() = default;

  // Identity on `degree` points.
  explicit Perm(int degree) : img_(static_cast<std::size_t>(degree)) {
    for (int i = 0; i < degree; ++i) img_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(i);
  }

  // From a 1-based image list: images[i] is the image of point i+1.
  static Perm from_images(const std::vector<int>& images);

  int degree() const { return static_cast<int>(img_.size()); }

  // 0-based point application.
  int apply(int p) const { return img_[static_cast<std::size_t>(p)]; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[static_cast<std::size_t>(i)] != i) return false;
    return true;
  }

  // Smallest moved point (0-based), or -1 for the identity.
  int first_moved() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[static_cast<std::size_t>(i)] != i) return i;
    return -1;
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return a.img_ != b.img_; }

  // Canonical total order: lexicographic on image arrays (shorter degree first;
  // mixed degrees never meet in practice).
  friend bool operator<(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.img_ < b.img_;
  }

  const std::vector<std::uint16_t>& images() const { return img_; }

 private:
  std::vector<std::uint16_t> img_;
  friend Perm compose(const Perm& a, const Perm& b);
  friend Perm inverse(const Perm& p);
};

// a first, then b.
inline Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("compose: " + std::to_string(a.degree()) + " vs " +
                         std::to_string(b.degree()));
  Perm r;
  const std::size_t n = a.img_.size();
  r.img_.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.img_[i] = b.img_[a.img_[i]];
  return r;
}

inline Perm inverse(const Perm& p) {
  Perm r;
  const std::size_t n = p.img_.size();
  r.img_.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.img_[p.img_[i]] = static_cast<std::uint16_t>(i);
  return r;
}

// p^g = g^-1 p g (fixed repo-wide).
inline Perm conjugate(const Perm& p, const Perm& g) {
  return compose(compose(inverse(g), p), g);
}

// [a, b] = a^-1 b^-1 a b.
inline Perm commutator(const Perm& a, const Perm& b) {
  return compose(compose(inverse(a), inverse(b)), compose(a, b));
}

Perm power(const Perm& p, std::uint64_t k);

// Least k >= 1 with p^k = identity; lcm of cycle lengths.
std::uint64_t element_order(const Perm& p);

// Cycle notation, e.g. "(1,2)(3,4)"; "()" for the identity. 1-based, no
// whitespace. Cycles start at their smallest point, listed by leader.
std::string format_cycles(const Perm& p);

// Grammar: perm := "()" | cycle+ ; cycle := "(" int ("," int)+ ")".
Perm parse_cycles(const std::string& text, int degree);

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    // FNV-1a over the image bytes.
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint16_t v : p.images()) {
      h = (h ^ (v & 0xff)) * 1099511628211ULL;
      h = (h ^ (v >> 8)) * 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace fg
