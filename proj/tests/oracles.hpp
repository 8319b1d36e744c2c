#pragma once

// Independent reference implementations used to check the library. These are
// deliberately naive: plain breadth-first closures and direct counting, with
// no shared code paths with the stabilizer-chain engine.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>
#include <vector>

#include "fg/perm.hpp"

namespace oracle {

// Full element enumeration by breadth-first closure over the generators.
inline std::vector<fg::Perm> brute_closure(int degree, const std::vector<fg::Perm>& gens) {
  std::unordered_set<fg::Perm, fg::PermHash> seen;
  std::deque<fg::Perm> queue;
  seen.insert(fg::Perm(degree));
  queue.push_back(fg::Perm(degree));
  while (!queue.empty()) {
    fg::Perm e = queue.front();
    queue.pop_front();
    for (const fg::Perm& g : gens) {
      fg::Perm c = fg::compose(e, g);
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  std::vector<fg::Perm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Order of a single permutation by repeated composition.
inline std::uint64_t brute_element_order(const fg::Perm& p) {
  fg::Perm acc = p;
  std::uint64_t n = 1;
  while (!acc.is_identity()) {
    acc = fg::compose(acc, p);
    ++n;
  }
  return n;
}

// |{x : x^d = 1}| for d = 1..dmax by maintaining x^d incrementally.
inline std::vector<std::uint64_t> power_identity_counts(const std::vector<fg::Perm>& elements,
                                                        std::uint64_t dmax) {
  std::vector<fg::Perm> powers = elements;
  std::vector<std::uint64_t> counts(dmax + 1, 0);
  for (std::uint64_t d = 1; d <= dmax; ++d) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (d > 1) powers[i] = fg::compose(powers[i], elements[i]);
      if (powers[i].is_identity()) ++c;
    }
    counts[d] = c;
  }
  return counts;
}

inline std::uint64_t brute_phi(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    std::uint64_t a = k, b = n;
    while (b) {
      std::uint64_t t = a % b;
      a = b;
      b = t;
    }
    if (a == 1) ++c;
  }
  return c;
}

// Every subgroup of a small group, as a set of element sets, found by closing
// every generator subset of size up to 3. Valid whenever every subgroup of
// the group is 3-generated (true for all groups this is used on).
inline std::set<std::vector<fg::Perm>> all_subgroups(int degree,
                                                     const std::vector<fg::Perm>& elements) {
  std::set<std::vector<fg::Perm>> subs;
  const std::size_t n = elements.size();
  auto close = [&](std::vector<fg::Perm> gens) { subs.insert(brute_closure(degree, gens)); };
  close({});
  for (std::size_t i = 0; i < n; ++i) {
    close({elements[i]});
    for (std::size_t j = i + 1; j < n; ++j) {
      close({elements[i], elements[j]});
      for (std::size_t k = j + 1; k < n; ++k) close({elements[i], elements[j], elements[k]});
    }
  }
  return subs;
}

// Partition of a set of subgroups (as element sets) into conjugacy classes
// under the given full element list.
inline std::vector<std::vector<std::vector<fg::Perm>>> conjugacy_classes_of_subgroups(
    const std::set<std::vector<fg::Perm>>& subs, const std::vector<fg::Perm>& elements) {
  std::set<std::vector<fg::Perm>> remaining = subs;
  std::vector<std::vector<std::vector<fg::Perm>>> classes;
  while (!remaining.empty()) {
    const std::vector<fg::Perm> rep = *remaining.begin();
    std::set<std::vector<fg::Perm>> orbit;
    for (const fg::Perm& g : elements) {
      std::vector<fg::Perm> img;
      for (const fg::Perm& h : rep) img.push_back(fg::conjugate(h, g));
      std::sort(img.begin(), img.end());
      orbit.insert(img);
    }
    std::vector<std::vector<fg::Perm>> cls;
    for (const auto& s : orbit) {
      cls.push_back(s);
      remaining.erase(s);
    }
    classes.push_back(cls);
  }
  return classes;
}

}  // namespace oracle
