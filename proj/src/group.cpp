#include "fg/group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "fg/errors.hpp"

namespace fg {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

// ---------------------------------------------------------------------------
// StabChain

StabChain::StabChain(const std::vector<Perm>& gens, int degree) : degree_(degree) {
  std::vector<Perm> pruned;
  for (const Perm& g : gens)
    if (!g.is_identity()) pruned.push_back(g);
  if (pruned.empty()) return;

  int base = degree;
  for (const Perm& g : pruned) base = std::min(base, g.first_moved());

  Level l;
  l.base = base;
  l.orbit.push_back(base);
  l.transversal_slot.assign(static_cast<std::size_t>(degree), -1);
  l.transversal_slot[static_cast<std::size_t>(base)] = 0;
  l.transversal.push_back(Perm(degree));
  levels_.push_back(std::move(l));

  for (const Perm& g : pruned) {
    levels_[0].gens.push_back(g);
    extend_orbit(0);
  }
  complete_level(0);
}

// Append-only orbit extension: existing transversal entries are never
// rewritten, so earlier sift results stay valid.
void StabChain::extend_orbit(std::size_t li) {
  Level& l = levels_[li];
  for (std::size_t pi = 0; pi < l.orbit.size(); ++pi) {
    const int p = l.orbit[pi];
    // Copy: pushing to the transversal below may reallocate it.
    const Perm up = l.transversal[static_cast<std::size_t>(l.transversal_slot[static_cast<std::size_t>(p)])];
    for (const Perm& s : l.gens) {
      const int q = s.apply(p);
      if (l.transversal_slot[static_cast<std::size_t>(q)] < 0) {
        l.transversal_slot[static_cast<std::size_t>(q)] = static_cast<int>(l.transversal.size());
        l.transversal.push_back(compose(up, s));
        l.orbit.push_back(q);
      }
    }
  }
}

std::pair<Perm, std::size_t> StabChain::strip(Perm g, std::size_t from) const {
  for (std::size_t li = from; li < levels_.size(); ++li) {
    const Level& l = levels_[li];
    const int p = g.apply(l.base);
    const int slot = l.transversal_slot[static_cast<std::size_t>(p)];
    if (slot < 0) return {std::move(g), li};
    g = compose(g, inverse(l.transversal[static_cast<std::size_t>(slot)]));
  }
  return {std::move(g), levels_.size()};
}

// The residue fixes the bases of every level before `stuck`, so it is a
// strong generator for each level from `from` through `stuck` inclusive,
// not just the level it got stuck at.
void StabChain::add_strong_generator(std::size_t from, std::size_t stuck, const Perm& g) {
  if (stuck == levels_.size()) {
    Level l;
    l.base = g.first_moved();
    l.orbit.push_back(l.base);
    l.transversal_slot.assign(static_cast<std::size_t>(degree_), -1);
    l.transversal_slot[static_cast<std::size_t>(l.base)] = 0;
    l.transversal.push_back(Perm(degree_));
    levels_.push_back(std::move(l));
  }
  for (std::size_t k = from; k <= stuck; ++k) {
    levels_[k].gens.push_back(g);
    extend_orbit(k);
  }
}

void StabChain::complete_level(std::size_t li) {
  // The generator list and orbit at this level are fixed for the duration of
  // the loop: residues are always inserted strictly deeper. References into
  // levels_ are not held across the recursion, which grows the vector.
  for (std::size_t pi = 0; pi < levels_[li].orbit.size(); ++pi) {
    for (std::size_t si = 0; si < levels_[li].gens.size(); ++si) {
      Perm x = Perm(degree_);
      {
        const Level& l = levels_[li];
        const int p = l.orbit[pi];
        const Perm& up = l.transversal[static_cast<std::size_t>(l.transversal_slot[static_cast<std::size_t>(p)])];
        const Perm& s = l.gens[si];
        const int q = s.apply(p);
        const Perm& uq = l.transversal[static_cast<std::size_t>(l.transversal_slot[static_cast<std::size_t>(q)])];
        x = compose(compose(up, s), inverse(uq));
      }
      if (x.is_identity()) continue;
      auto [r, j] = strip(std::move(x), li + 1);
      if (!r.is_identity()) {
        add_strong_generator(li + 1, j, r);
        // Deepest first, so each shallower re-completion sifts through
        // already-consistent levels below it.
        for (std::size_t k = j; k > li; --k) complete_level(k);
      }
    }
  }
}

std::uint64_t StabChain::order() const {
  std::uint64_t o = 1;
  for (const Level& l : levels_) o *= static_cast<std::uint64_t>(l.orbit.size());
  return o;
}

bool StabChain::contains(const Perm& p) const {
  auto [r, li] = strip(p, 0);
  (void)li;
  return r.is_identity();
}

// ---------------------------------------------------------------------------
// Group

Group::Group(int degree, std::vector<Perm> gens, std::uint64_t enumeration_cap)
    : degree_(degree), cap_(enumeration_cap), caches_(std::make_shared<Caches>()) {
  if (gens.empty()) throw EmptyGeneratorList();
  for (const Perm& g : gens)
    if (g.degree() != degree)
      throw DegreeMismatch("generator degree " + std::to_string(g.degree()) +
                           " in group of degree " + std::to_string(degree));
  for (Perm& g : gens)
    if (!g.is_identity()) gens_.push_back(std::move(g));
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

const StabChain& Group::chain() const {
  std::lock_guard<std::mutex> lock(caches_->mu);
  if (!caches_->chain) caches_->chain.emplace(gens_, degree_);
  return *caches_->chain;
}

std::uint64_t Group::order() const { return chain().order(); }

bool Group::contains(const Perm& p) const {
  if (p.degree() != degree_)
    throw DegreeMismatch("membership test of degree " + std::to_string(p.degree()) +
                         " in group of degree " + std::to_string(degree_));
  return chain().contains(p);
}

const std::vector<Perm>& Group::elements() const {
  {
    std::lock_guard<std::mutex> lock(caches_->mu);
    if (caches_->elements) return *caches_->elements;
  }
  const std::uint64_t o = order();
  if (o > cap_) throw EnumerationCapExceeded(o, cap_);

  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> queue;
  seen.insert(Perm(degree_));
  queue.push_back(Perm(degree_));
  while (!queue.empty()) {
    Perm e = std::move(queue.front());
    queue.pop_front();
    for (const Perm& g : gens_) {
      Perm c = compose(e, g);
      if (seen.insert(c).second) queue.push_back(std::move(c));
    }
  }
  std::vector<Perm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());

  std::lock_guard<std::mutex> lock(caches_->mu);
  if (!caches_->elements) caches_->elements = std::move(out);
  return *caches_->elements;
}

std::int64_t Group::element_index(const Perm& p) const {
  const std::vector<Perm>& es = elements();
  auto it = std::lower_bound(es.begin(), es.end(), p);
  if (it == es.end() || !(*it == p)) return -1;
  return it - es.begin();
}

const std::vector<ConjClass>& Group::conjugacy_classes() const {
  {
    std::lock_guard<std::mutex> lock(caches_->mu);
    if (caches_->classes) return *caches_->classes;
  }
  const std::vector<Perm>& es = elements();
  std::vector<bool> visited(es.size(), false);
  std::vector<ConjClass> classes;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (visited[i]) continue;
    // Orbit of es[i] under conjugation by the generators.
    std::vector<std::size_t> stack{i};
    visited[i] = true;
    ConjClass cls;
    cls.representative = es[i];
    cls.size = 0;
    while (!stack.empty()) {
      const std::size_t j = stack.back();
      stack.pop_back();
      ++cls.size;
      if (es[j] < cls.representative) cls.representative = es[j];
      for (const Perm& g : gens_) {
        const std::int64_t k = element_index(conjugate(es[j], g));
        if (k >= 0 && !visited[static_cast<std::size_t>(k)]) {
          visited[static_cast<std::size_t>(k)] = true;
          stack.push_back(static_cast<std::size_t>(k));
        }
      }
    }
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [](const ConjClass& a, const ConjClass& b) {
    const std::uint64_t oa = element_order(a.representative);
    const std::uint64_t ob = element_order(b.representative);
    if (oa != ob) return oa < ob;
    return a.representative < b.representative;
  });
  std::lock_guard<std::mutex> lock(caches_->mu);
  if (!caches_->classes) caches_->classes = std::move(classes);
  return *caches_->classes;
}

// ---------------------------------------------------------------------------
// Derived operations

Group subgroup_of(const Group& parent, std::vector<Perm> gens) {
  for (const Perm& g : gens)
    if (!parent.contains(g)) throw NotAMember(format_cycles(g));
  if (gens.empty()) gens.push_back(Perm(parent.degree()));
  return Group(parent.degree(), std::move(gens), parent.enumeration_cap());
}

bool is_subgroup_of(const Group& G, const Group& H) {
  if (G.degree() != H.degree()) return false;
  for (const Perm& h : H.generators())
    if (!G.contains(h)) return false;
  return true;
}

Group group_from_elements(int degree, const std::vector<Perm>& elems, std::uint64_t cap) {
  std::vector<Perm> gens;
  Group cur(degree, {Perm(degree)}, cap);
  std::vector<Perm> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  for (const Perm& e : sorted) {
    if (!cur.contains(e)) {
      gens.push_back(e);
      cur = Group(degree, gens, cap);
    }
  }
  if (gens.empty()) gens.push_back(Perm(degree));
  return Group(degree, std::move(gens), cap);
}

Group centralizer(const Group& G, const Perm& x) {
  if (!G.contains(x)) throw NotAMember(format_cycles(x));
  std::vector<Perm> gens{Perm(G.degree())};
  Group c(G.degree(), gens, G.enumeration_cap());
  for (const Perm& g : G.elements()) {
    if (compose(g, x) == compose(x, g) && !c.contains(g)) {
      gens.push_back(g);
      c = Group(G.degree(), gens, G.enumeration_cap());
    }
  }
  return c;
}

Group normalizer(const Group& G, const Group& H) {
  if (!is_subgroup_of(G, H)) throw NotASubgroup("normalizer argument");
  std::vector<Perm> gens = H.generators();
  if (gens.empty()) gens.push_back(Perm(G.degree()));
  Group n(G.degree(), gens, G.enumeration_cap());
  for (const Perm& g : G.elements()) {
    if (n.contains(g)) continue;
    bool normalizes = true;
    for (const Perm& h : H.generators()) {
      if (!H.contains(conjugate(h, g))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) {
      gens.push_back(g);
      n = Group(G.degree(), gens, G.enumeration_cap());
    }
  }
  return n;
}

Group normal_closure(const Group& G, const std::vector<Perm>& seeds) {
  std::vector<Perm> gens;
  Group n(G.degree(), {Perm(G.degree())}, G.enumeration_cap());
  std::deque<Perm> queue;
  for (const Perm& s : seeds) {
    if (!s.is_identity() && !n.contains(s)) {
      gens.push_back(s);
      n = Group(G.degree(), gens, G.enumeration_cap());
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Perm x = std::move(queue.front());
    queue.pop_front();
    for (const Perm& g : G.generators()) {
      Perm c = conjugate(x, g);
      if (!n.contains(c)) {
        gens.push_back(c);
        n = Group(G.degree(), gens, G.enumeration_cap());
        queue.push_back(std::move(c));
      }
    }
  }
  if (gens.empty()) return Group(G.degree(), {Perm(G.degree())}, G.enumeration_cap());
  return n;
}

std::vector<Group> derived_series(const Group& G) {
  std::vector<Group> series{G};
  Group cur = G;
  while (true) {
    std::vector<Perm> comms;
    const std::vector<Perm>& gs = cur.generators();
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = i + 1; j < gs.size(); ++j) comms.push_back(commutator(gs[i], gs[j]));
    Group next = normal_closure(cur, comms);
    if (next.order() == cur.order()) {
      if (cur.order() != 1) series.push_back(next);  // perfect term repeats once
      break;
    }
    series.push_back(next);
    if (next.order() == 1) break;
    cur = next;
  }
  return series;
}

bool is_abelian(const Group& G) {
  const std::vector<Perm>& gs = G.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (compose(gs[i], gs[j]) != compose(gs[j], gs[i])) return false;
  return true;
}

bool is_solvable(const Group& G) {
  const std::vector<Group>& s = derived_series(G);
  return s.back().order() == 1;
}

bool is_nilpotent(const Group& G) {
  // Nilpotent iff every Sylow subgroup is normal.
  std::uint64_t o = G.order();
  for (std::uint64_t p = 2; p <= o; ++p) {
    if (o % p != 0) continue;
    if (!is_normal(G, sylow(G, p))) return false;
    while (o % p == 0) o /= p;
  }
  return true;
}

bool is_normal(const Group& G, const Group& H) {
  for (const Perm& g : G.generators())
    for (const Perm& h : H.generators())
      if (!H.contains(conjugate(h, g))) return false;
  return true;
}

Group sylow(const Group& G, std::uint64_t p) {
  std::uint64_t ppart = 1;
  {
    std::uint64_t o = G.order();
    while (o % p == 0) {
      o /= p;
      ppart *= p;
    }
  }
  if (ppart == 1) return Group(G.degree(), {Perm(G.degree())}, G.enumeration_cap());

  // Canonical-minimum p-element of maximal p-power order.
  const std::vector<Perm>& es = G.elements();
  const Perm* start = nullptr;
  std::uint64_t best = 1;
  for (const Perm& e : es) {
    const std::uint64_t o = element_order(e);
    std::uint64_t q = o;
    while (q % p == 0) q /= p;
    if (q != 1 || o == 1) continue;
    if (o > best) {
      best = o;
      start = &e;
    }
  }
  std::vector<Perm> gens{*start};
  Group P(G.degree(), gens, G.enumeration_cap());
  while (P.order() < ppart) {
    // P is normal in its normalizer, so adjoining any p-element of the
    // normalizer keeps the result a p-group; one always exists while P is
    // not yet Sylow.
    Group N = normalizer(G, P);
    const Perm* pick = nullptr;
    for (const Perm& y : N.elements()) {
      if (P.contains(y)) continue;
      const std::uint64_t o = element_order(y);
      std::uint64_t q = o;
      while (q % p == 0) q /= p;
      if (q == 1 && o > 1) {
        pick = &y;
        break;  // elements are sorted, so this is the canonical choice
      }
    }
    if (pick == nullptr) throw Error("sylow: no p-element in normalizer (internal)");
    gens.push_back(*pick);
    P = Group(G.degree(), gens, G.enumeration_cap());
  }
  return P;
}

}  // namespace fg
