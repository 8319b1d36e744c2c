#include "fg/classes.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "fg/errors.hpp"

namespace fg {

namespace {

struct IdVecHash {
  std::size_t operator()(const std::vector<std::int32_t>& v) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::int32_t x : v) {
      h = (h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(x))) * 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
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

// Closure of <gens>; empty result when the subgroup has more than cap
// elements (abandoned early).
std::optional<std::vector<Perm>> closure_with_cap(int degree, const std::vector<Perm>& gens,
                                                  std::uint64_t cap) {
  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> queue;
  seen.insert(Perm(degree));
  queue.push_back(Perm(degree));
  while (!queue.empty()) {
    Perm e = std::move(queue.front());
    queue.pop_front();
    for (const Perm& g : gens) {
      Perm c = compose(e, g);
      if (seen.insert(c).second) {
        if (seen.size() > cap) return std::nullopt;
        queue.push_back(std::move(c));
      }
    }
  }
  return std::vector<Perm>(seen.begin(), seen.end());
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (std::uint64_t p : prime_divisors(n)) r -= r / p;
  return r;
}

CyclicClassTable cyclic_subgroup_classes(const Group& G) {
  const std::vector<Perm>& es = G.elements();
  const std::uint64_t order = G.order();

  // All distinct cyclic subgroups, as sorted element-id sets.
  std::unordered_map<std::vector<std::int32_t>, std::int32_t, IdVecHash> sub_index;
  std::vector<std::vector<std::int32_t>> subs;
  for (std::size_t i = 0; i < es.size(); ++i) {
    std::vector<std::int32_t> ids;
    Perm p = es[i];
    while (true) {
      ids.push_back(static_cast<std::int32_t>(G.element_index(p)));
      if (p.is_identity()) break;
      p = compose(p, es[i]);
    }
    std::sort(ids.begin(), ids.end());
    if (sub_index.emplace(ids, static_cast<std::int32_t>(subs.size())).second)
      subs.push_back(std::move(ids));
  }

  // Conjugation orbits over the collection of cyclic subgroups.
  std::vector<bool> visited(subs.size(), false);
  CyclicClassTable table;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (visited[i]) continue;
    const std::uint64_t n = static_cast<std::uint64_t>(subs[i].size());
    std::vector<std::size_t> stack{i};
    visited[i] = true;
    std::uint64_t class_size = 0;
    std::int32_t rep_id = -1;  // minimal id of an order-n element across the class
    while (!stack.empty()) {
      const std::size_t j = stack.back();
      stack.pop_back();
      ++class_size;
      for (std::int32_t id : subs[j]) {
        if (element_order(es[static_cast<std::size_t>(id)]) == n &&
            (rep_id < 0 || id < rep_id))
          rep_id = id;
      }
      for (const Perm& g : G.generators()) {
        std::vector<std::int32_t> conj;
        conj.reserve(subs[j].size());
        for (std::int32_t id : subs[j])
          conj.push_back(static_cast<std::int32_t>(
              G.element_index(conjugate(es[static_cast<std::size_t>(id)], g))));
        std::sort(conj.begin(), conj.end());
        const auto it = sub_index.find(conj);
        if (!visited[static_cast<std::size_t>(it->second)]) {
          visited[static_cast<std::size_t>(it->second)] = true;
          stack.push_back(static_cast<std::size_t>(it->second));
        }
      }
    }
    CyclicClassRow row;
    row.n = n;
    row.representative = es[static_cast<std::size_t>(rep_id)];
    row.class_size = class_size;
    row.normalizer_order = order / class_size;
    table.rows.push_back(std::move(row));
  }
  std::sort(table.rows.begin(), table.rows.end(),
            [](const CyclicClassRow& a, const CyclicClassRow& b) {
              if (a.n != b.n) return a.n < b.n;
              return a.representative < b.representative;
            });
  return table;
}

CountIdentityReport verify_cyclic_count_identity(const CyclicClassTable& table,
                                                 const OrderEquation& eq) {
  CountIdentityReport report;
  report.all_ok = true;
  std::map<std::uint64_t, std::uint64_t> lhs;
  for (const CyclicClassRow& row : table.rows) lhs[row.n] += row.class_size * euler_phi(row.n);
  for (const auto& [n, rhs] : eq.counts) {
    CountIdentityRow r;
    r.n = n;
    r.lhs = lhs.count(n) ? lhs[n] : 0;
    r.rhs = rhs;
    r.ok = r.lhs == r.rhs;
    report.all_ok = report.all_ok && r.ok;
    report.rows.push_back(r);
  }
  return report;
}

CountIdentityReport verify_cyclic_count_identity(const Group& G) {
  return verify_cyclic_count_identity(cyclic_subgroup_classes(G), order_equation(G));
}

// ---------------------------------------------------------------------------
// Subgroup lattice (small groups)

namespace {

class IdAlgebra {
 public:
  explicit IdAlgebra(const Group& G) : G_(G), es_(G.elements()) {
    const std::size_t n = es_.size();
    mul_.assign(n * n, 0);
    inv_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b)
        mul_[a * n + b] = static_cast<std::int32_t>(G_.element_index(compose(es_[a], es_[b])));
      inv_[a] = static_cast<std::int32_t>(G_.element_index(inverse(es_[a])));
    }
    identity_ = static_cast<std::int32_t>(G_.element_index(Perm(G_.degree())));
  }

  std::size_t size() const { return es_.size(); }
  std::int32_t identity() const { return identity_; }
  std::int32_t mul(std::int32_t a, std::int32_t b) const {
    return mul_[static_cast<std::size_t>(a) * es_.size() + static_cast<std::size_t>(b)];
  }
  std::int32_t conj(std::int32_t e, std::int32_t g) const {
    return mul(mul(inv_[static_cast<std::size_t>(g)], e), g);
  }
  const Perm& perm(std::int32_t id) const { return es_[static_cast<std::size_t>(id)]; }

  std::vector<std::int32_t> closure(const std::vector<std::int32_t>& gens) const {
    std::vector<bool> in(es_.size(), false);
    std::vector<std::int32_t> out{identity_};
    in[static_cast<std::size_t>(identity_)] = true;
    for (std::size_t qi = 0; qi < out.size(); ++qi) {
      for (std::int32_t g : gens) {
        const std::int32_t c = mul(out[qi], g);
        if (!in[static_cast<std::size_t>(c)]) {
          in[static_cast<std::size_t>(c)] = true;
          out.push_back(c);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::int32_t> conj_set(const std::vector<std::int32_t>& s, std::int32_t g) const {
    std::vector<std::int32_t> out;
    out.reserve(s.size());
    for (std::int32_t e : s) out.push_back(conj(e, g));
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const Group& G_;
  const std::vector<Perm>& es_;
  std::vector<std::int32_t> mul_;
  std::vector<std::int32_t> inv_;
  std::int32_t identity_ = 0;
};

}  // namespace

std::vector<SubgroupClassRow> subgroup_lattice(const Group& G, std::uint64_t cap) {
  const std::uint64_t order = G.order();
  if (order > cap) throw LatticeCapExceeded(order, cap);
  IdAlgebra alg(G);

  // Distinct cyclic subgroups (the join seeds).
  std::vector<std::vector<std::int32_t>> cyclics;
  {
    std::unordered_set<std::vector<std::int32_t>, IdVecHash> seen;
    for (std::size_t e = 0; e < alg.size(); ++e) {
      std::vector<std::int32_t> c = alg.closure({static_cast<std::int32_t>(e)});
      if (seen.insert(c).second) cyclics.push_back(std::move(c));
    }
  }

  struct ClassData {
    std::vector<std::int32_t> rep;  // minimal member of the orbit
    std::uint64_t class_size = 0;
  };
  std::unordered_map<std::vector<std::int32_t>, std::int32_t, IdVecHash> class_of;
  std::vector<ClassData> classes;
  std::deque<std::int32_t> work;

  auto discover = [&](const std::vector<std::int32_t>& sub) {
    if (class_of.count(sub)) return;
    // Full orbit under conjugation by every group element.
    std::unordered_set<std::vector<std::int32_t>, IdVecHash> orbit;
    for (std::size_t g = 0; g < alg.size(); ++g)
      orbit.insert(alg.conj_set(sub, static_cast<std::int32_t>(g)));
    ClassData data;
    data.class_size = orbit.size();
    data.rep = *std::min_element(orbit.begin(), orbit.end());
    const std::int32_t ci = static_cast<std::int32_t>(classes.size());
    for (const auto& member : orbit) class_of.emplace(member, ci);
    classes.push_back(std::move(data));
    work.push_back(ci);
  };

  for (const auto& c : cyclics) discover(c);
  while (!work.empty()) {
    const std::int32_t ci = work.front();
    work.pop_front();
    const std::vector<std::int32_t> rep = classes[static_cast<std::size_t>(ci)].rep;
    for (const auto& c : cyclics) {
      std::vector<std::int32_t> gens = rep;
      gens.insert(gens.end(), c.begin(), c.end());
      discover(alg.closure(gens));
    }
  }

  std::vector<SubgroupClassRow> rows;
  for (const ClassData& data : classes) {
    SubgroupClassRow row;
    row.order = static_cast<std::uint64_t>(data.rep.size());
    row.class_size = data.class_size;
    std::vector<Perm> elems;
    elems.reserve(data.rep.size());
    bool cyclic = false;
    for (std::int32_t id : data.rep) {
      elems.push_back(alg.perm(id));
      if (element_order(alg.perm(id)) == row.order) cyclic = true;
    }
    Group H = group_from_elements(G.degree(), elems, G.enumeration_cap());
    row.is_cyclic = cyclic;
    row.is_nilpotent = is_nilpotent(H);
    row.is_solvable = is_solvable(H);
    row.representative_gens = H.generators();
    if (row.representative_gens.empty()) row.representative_gens.push_back(Perm(G.degree()));
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const SubgroupClassRow& a, const SubgroupClassRow& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.class_size != b.class_size) return a.class_size < b.class_size;
    return a.representative_gens < b.representative_gens;
  });
  return rows;
}

// ---------------------------------------------------------------------------
// Order-m subgroup search

SubgroupSearchResult find_subgroup_of_order(const Group& G, std::uint64_t m,
                                            std::uint64_t lattice_cap) {
  SubgroupSearchResult result;
  SearchCertificate& cert = result.certificate;
  cert.target = m;
  const std::uint64_t order = G.order();

  if (m == 0 || order % m != 0) {
    cert.strategy = "divisibility";
    return result;
  }
  if (m == order) {
    cert.strategy = "whole-group";
    cert.found = true;
    result.subgroup = G;
    result.solvable = is_solvable(G);
    return result;
  }
  if (m == 1) {
    cert.strategy = "trivial";
    cert.found = true;
    result.subgroup = Group(G.degree(), {Perm(G.degree())}, G.enumeration_cap());
    result.solvable = true;
    return result;
  }

  if (order <= lattice_cap) {
    cert.strategy = "lattice";
    for (const SubgroupClassRow& row : subgroup_lattice(G, lattice_cap)) {
      if (row.order == m) {
        cert.found = true;
        result.subgroup = subgroup_of(G, row.representative_gens);
        result.solvable = row.is_solvable;
        return result;
      }
    }
    return result;
  }

  // Sylow-closure strategy: the p-part of m must exhaust the p-part of |G|,
  // so that every order-m subgroup contains a full (hence conjugate) Sylow
  // p-subgroup, and the cofactor must be q or q^2 for a single prime q.
  std::uint64_t p = 0, rest = 0;
  for (std::uint64_t cand : prime_divisors(order)) {
    const std::uint64_t pp = p_part(order, cand);
    if (pp > 1 && p_part(m, cand) == pp) {
      const std::uint64_t r = m / pp;
      const std::vector<std::uint64_t> qs = prime_divisors(r);
      if (r == 1 || (qs.size() == 1 && (r == qs[0] || r == qs[0] * qs[0]))) {
        p = cand;
        rest = r;
        break;
      }
    }
  }
  if (p == 0)
    throw UnsupportedSearch("order " + std::to_string(m) + " in group of order " +
                            std::to_string(order) +
                            ": no prime has its full part in the target");

  cert.strategy = "sylow-closure";
  cert.sylow_prime = p;
  Group P = sylow(G, p);
  for (const Perm& g : P.generators()) cert.sylow_generators.push_back(format_cycles(g));
  if (rest == 1) {
    cert.found = true;
    result.subgroup = P;
    result.solvable = true;  // p-group
    return result;
  }
  const std::uint64_t q = prime_divisors(rest)[0];
  const int e = rest == q ? 1 : 2;
  cert.cofactor_prime = q;
  cert.cofactor_exponent = e;

  const Group N = normalizer(G, P);
  cert.normalizer_order = N.order();

  // q-elements of G, in canonical order.
  std::vector<Perm> order_q, order_q2;
  for (const Perm& x : G.elements()) {
    const std::uint64_t o = element_order(x);
    if (o == q) order_q.push_back(x);
    if (e == 2 && o == q * q) order_q2.push_back(x);
  }

  // Dedup a candidate list under conjugation by N: conjugating a candidate by
  // an element normalizing P maps any witness subgroup over P to another one.
  auto dedup = [&](const std::vector<Perm>& xs) {
    std::unordered_set<Perm, PermHash> assigned;
    std::vector<Perm> reps;
    for (const Perm& x : xs) {
      if (assigned.count(x)) continue;
      reps.push_back(x);
      for (const Perm& g : N.elements()) assigned.insert(conjugate(x, g));
    }
    return reps;
  };

  auto accept = [&](const std::vector<Perm>& elems) {
    cert.found = true;
    Group H = group_from_elements(G.degree(), elems, G.enumeration_cap());
    result.subgroup = H;
    result.solvable = is_solvable(H);
  };

  // Singles: a cyclic Sylow q-subgroup of a witness is generated by one
  // element of order q^e.
  const std::vector<Perm>& singles_pool = e == 1 ? order_q : order_q2;
  cert.single_candidates = singles_pool.size();
  std::vector<Perm> single_reps = dedup(singles_pool);
  cert.single_candidates_deduped = single_reps.size();
  for (const Perm& x : single_reps) {
    std::vector<Perm> gens = P.generators();
    gens.push_back(x);
    const auto closed = closure_with_cap(G.degree(), gens, m);
    const std::uint64_t got = closed ? static_cast<std::uint64_t>(closed->size()) : 0;
    ++cert.single_closure_orders[got];
    if (closed && got == m) {
      accept(*closed);
      return result;
    }
  }

  if (e == 2) {
    // Pairs: a Sylow q-subgroup of shape q x q is generated by two elements
    // of order q; the first one already closes P to an index-q subgroup of
    // the witness (or the witness itself, handled above as |closure| == m).
    std::vector<Perm> x_reps = dedup(order_q);
    std::vector<std::pair<Perm, std::vector<Perm>>> layer;  // (x, elements of <P,x>)
    for (const Perm& x : x_reps) {
      std::vector<Perm> gens = P.generators();
      gens.push_back(x);
      const auto closed = closure_with_cap(G.degree(), gens, m);
      const std::uint64_t got = closed ? static_cast<std::uint64_t>(closed->size()) : 0;
      ++cert.single_closure_orders[got];
      if (closed && got == m) {
        accept(*closed);
        return result;
      }
      if (closed && got == P.order() * q) layer.emplace_back(x, *closed);
    }
    for (auto& [x, hx] : layer) {
      std::unordered_set<Perm, PermHash> in_hx(hx.begin(), hx.end());
      std::vector<Perm> gens = P.generators();
      gens.push_back(x);
      gens.push_back(Perm(G.degree()));  // slot for y
      for (const Perm& y : order_q) {
        if (in_hx.count(y)) continue;
        gens.back() = y;
        ++cert.pair_closures;
        const auto closed = closure_with_cap(G.degree(), gens, m);
        const std::uint64_t got = closed ? static_cast<std::uint64_t>(closed->size()) : 0;
        ++cert.pair_closure_orders[got];
        if (closed && got == m) {
          accept(*closed);
          return result;
        }
      }
    }
  }
  return result;
}

}  // namespace fg
