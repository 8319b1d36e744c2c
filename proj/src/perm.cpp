#include "fg/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace fg {

Perm Perm::from_images(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  Perm r(n);
  for (int i = 0; i < n; ++i) {
    const int v = images[static_cast<std::size_t>(i)];
    if (v < 1 || v > n) throw PointOutOfRange(std::to_string(v) + " with degree " + std::to_string(n));
    if (seen[static_cast<std::size_t>(v - 1)]) throw RepeatedPoint(std::to_string(v));
    seen[static_cast<std::size_t>(v - 1)] = true;
    r.img_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(v - 1);
  }
  return r;
}

Perm power(const Perm& p, std::uint64_t k) {
  Perm acc(p.degree());
  Perm base = p;
  while (k > 0) {
    if (k & 1) acc = compose(acc, base);
    base = compose(base, base);
    k >>= 1;
  }
  return acc;
}

std::uint64_t element_order(const Perm& p) {
  const int n = p.degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::uint64_t order = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::uint64_t len = 0;
    int j = i;
    do {
      seen[static_cast<std::size_t>(j)] = true;
      j = p.apply(j);
      ++len;
    } while (j != i);
    order = std::lcm(order, len);
  }
  return order;
}

std::string format_cycles(const Perm& p) {
  const int n = p.degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)] || p.apply(i) == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out += ',';
      out += std::to_string(j + 1);
      seen[static_cast<std::size_t>(j)] = true;
      j = p.apply(j);
      first = false;
    } while (j != i);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Perm parse_cycles(const std::string& text, int degree) {
  if (text == "()") return Perm(degree);
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  std::vector<bool> used(static_cast<std::size_t>(degree), false);

  std::size_t pos = 0;
  const std::size_t len = text.size();
  if (len == 0) throw MalformedCycle("empty string");
  while (pos < len) {
    if (text[pos] != '(') throw MalformedCycle("expected '(' at position " + std::to_string(pos));
    ++pos;
    std::vector<int> cycle;
    while (true) {
      if (pos >= len || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw MalformedCycle("expected integer at position " + std::to_string(pos));
      int v = 0;
      while (pos < len && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
      }
      if (v < 1 || v > degree)
        throw PointOutOfRange(std::to_string(v) + " with degree " + std::to_string(degree));
      if (used[static_cast<std::size_t>(v - 1)]) throw RepeatedPoint(std::to_string(v));
      used[static_cast<std::size_t>(v - 1)] = true;
      cycle.push_back(v);
      if (pos < len && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < len && text[pos] == ')') {
        ++pos;
        break;
      }
      throw MalformedCycle("expected ',' or ')' at position " + std::to_string(pos));
    }
    if (cycle.size() < 2) throw MalformedCycle("cycle of length < 2");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i];
      const int to = cycle[(i + 1) % cycle.size()];
      images[static_cast<std::size_t>(from - 1)] = to;
    }
  }
  return Perm::from_images(images);
}

}  // namespace fg
