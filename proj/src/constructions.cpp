#include "fg/constructions.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

#include "fg/errors.hpp"
#include "fg/spectrum.hpp"

namespace fg {

namespace {

constexpr int kMaxDegree = 60000;

void check_degree(int n) {
  if (n < 1 || n > kMaxDegree) throw DegreeLimitExceeded(std::to_string(n));
}

}  // namespace

Group trivial_group(int degree) {
  check_degree(degree);
  return Group(degree, {Perm(degree)});
}

Group cyclic(int n) {
  check_degree(n);
  if (n == 1) return trivial_group(1);
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = (i + 1) % n + 1;
  return Group(n, {Perm::from_images(img)});
}

Group symmetric(int n) {
  check_degree(n);
  if (n <= 1) return trivial_group(std::max(n, 1));
  std::vector<Perm> gens{parse_cycles("(1,2)", n)};
  if (n >= 3) {
    std::string cyc = "(1";
    for (int i = 2; i <= n; ++i) cyc += "," + std::to_string(i);
    cyc += ")";
    gens.push_back(parse_cycles(cyc, n));
  }
  return Group(n, std::move(gens));
}

Group alternating(int n) {
  check_degree(std::max(n, 1));
  if (n <= 2) return trivial_group(std::max(n, 1));
  std::vector<Perm> gens{parse_cycles("(1,2,3)", n)};
  if (n >= 4) {
    // n-cycle for odd n, (n-1)-cycle on 2..n for even n
    std::string cyc = n % 2 == 1 ? "(1" : "(2";
    for (int i = (n % 2 == 1 ? 2 : 3); i <= n; ++i) cyc += "," + std::to_string(i);
    cyc += ")";
    gens.push_back(parse_cycles(cyc, n));
  }
  return Group(n, std::move(gens));
}

Group dihedral(int n) {
  if (n < 3) throw DegreeLimitExceeded("dihedral needs n >= 3, got " + std::to_string(n));
  check_degree(n);
  std::vector<int> rot(static_cast<std::size_t>(n)), refl(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rot[static_cast<std::size_t>(i)] = (i + 1) % n + 1;
    refl[static_cast<std::size_t>(i)] = (n - i) % n + 1;
  }
  return Group(n, {Perm::from_images(rot), Perm::from_images(refl)});
}

Group quaternion8() {
  // Units 1,-1,i,-i,j,-j,k,-k at indices 0..7 (sign bit is the low bit).
  // table[a][b] = a*b.
  auto unit_mul = [](int a, int b) {
    const int axes[4][4] = {
        // axis entries: result axis, with sign in the parallel table below
        {0, 1, 2, 3},  // 1 * x
        {1, 0, 3, 2},  // i * x : i*1=i, i*i=-1, i*j=k, i*k=-j
        {2, 3, 0, 1},  // j * x : j*i=-k, j*j=-1, j*k=i
        {3, 2, 1, 0},  // k * x : k*i=j, k*j=-i, k*k=-1
    };
    const int signs[4][4] = {
        {+1, +1, +1, +1},
        {+1, -1, +1, -1},
        {+1, -1, -1, +1},
        {+1, +1, -1, -1},
    };
    const int ax_a = a >> 1, sg_a = a & 1 ? -1 : 1;
    const int ax_b = b >> 1, sg_b = b & 1 ? -1 : 1;
    const int ax = axes[ax_a][ax_b];
    const int sg = signs[ax_a][ax_b] * sg_a * sg_b;
    return ax * 2 + (sg < 0 ? 1 : 0);
  };
  auto right_mult = [&](int u) {
    std::vector<int> img(8);
    for (int x = 0; x < 8; ++x) img[static_cast<std::size_t>(x)] = unit_mul(x, u) + 1;
    return Perm::from_images(img);
  };
  const Perm a = right_mult(2);  // * i
  const Perm b = right_mult(4);  // * j
  Group q(8, {a, b});
  const bool relations_ok = power(a, 4).is_identity() && power(a, 2) == power(b, 2) &&
                            compose(compose(b, a), inverse(b)) == inverse(a);
  std::size_t involutions = 0;
  for (const Perm& e : q.elements())
    if (element_order(e) == 2) ++involutions;
  if (!relations_ok || q.order() != 8 || involutions != 1)
    throw Error("quaternion8: construction self-check failed");
  return q;
}

Group direct_product(const Group& A, const Group& B) {
  const int da = A.degree(), db = B.degree();
  check_degree(da + db);
  std::vector<Perm> gens;
  for (const Perm& g : A.generators()) {
    std::vector<int> img(static_cast<std::size_t>(da + db));
    for (int i = 0; i < da; ++i) img[static_cast<std::size_t>(i)] = g.apply(i) + 1;
    for (int i = 0; i < db; ++i) img[static_cast<std::size_t>(da + i)] = da + i + 1;
    gens.push_back(Perm::from_images(img));
  }
  for (const Perm& g : B.generators()) {
    std::vector<int> img(static_cast<std::size_t>(da + db));
    for (int i = 0; i < da; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    for (int i = 0; i < db; ++i) img[static_cast<std::size_t>(da + i)] = da + g.apply(i) + 1;
    gens.push_back(Perm::from_images(img));
  }
  if (gens.empty()) gens.push_back(Perm(da + db));
  return Group(da + db, std::move(gens));
}

// ---------------------------------------------------------------------------
// GF(4)

std::uint8_t FF4::mul(std::uint8_t a, std::uint8_t b) {
  static constexpr std::uint8_t table[4][4] = {
      {0, 0, 0, 0},
      {0, 1, 2, 3},
      {0, 2, 3, 1},
      {0, 3, 1, 2},
  };
  return table[a][b];
}

std::uint8_t FF4::inv(std::uint8_t a) {
  if (a == 0) throw Error("FF4: inverse of zero");
  static constexpr std::uint8_t table[4] = {0, 1, 3, 2};
  return table[a];
}

MatGF4 mat_identity_gf4() {
  MatGF4 m{};
  for (int i = 0; i < 3; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

MatGF4 mat_mul_gf4(const MatGF4& a, const MatGF4& b) {
  MatGF4 r{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      std::uint8_t s = 0;
      for (std::size_t k = 0; k < 3; ++k) s = FF4::add(s, FF4::mul(a[i][k], b[k][j]));
      r[i][j] = s;
    }
  return r;
}

Vec3GF4 mat_apply_gf4(const MatGF4& m, const Vec3GF4& v) {
  Vec3GF4 r{};
  for (std::size_t i = 0; i < 3; ++i) {
    std::uint8_t s = 0;
    for (std::size_t j = 0; j < 3; ++j) s = FF4::add(s, FF4::mul(m[i][j], v[j]));
    r[i] = s;
  }
  return r;
}

std::uint8_t det_gf4(const MatGF4& m) {
  std::uint8_t d = 0;
  d = FF4::add(d, FF4::mul(m[0][0], FF4::add(FF4::mul(m[1][1], m[2][2]), FF4::mul(m[1][2], m[2][1]))));
  d = FF4::add(d, FF4::mul(m[0][1], FF4::add(FF4::mul(m[1][0], m[2][2]), FF4::mul(m[1][2], m[2][0]))));
  d = FF4::add(d, FF4::mul(m[0][2], FF4::add(FF4::mul(m[1][0], m[2][1]), FF4::mul(m[1][1], m[2][0]))));
  return d;  // characteristic 2: no signs
}

// ---------------------------------------------------------------------------
// PG(2,4)

namespace {

Vec3GF4 normalize_vec(Vec3GF4 v) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (v[i] != 0) {
      const std::uint8_t s = FF4::inv(v[i]);
      for (std::size_t j = 0; j < 3; ++j) v[j] = FF4::mul(v[j], s);
      return v;
    }
  }
  throw Error("normalize_vec: zero vector");
}

std::uint8_t dot_gf4(const Vec3GF4& a, const Vec3GF4& b) {
  std::uint8_t s = 0;
  for (std::size_t i = 0; i < 3; ++i) s = FF4::add(s, FF4::mul(a[i], b[i]));
  return s;
}

ProjectivePlane build_plane() {
  ProjectivePlane pp;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        const Vec3GF4 v{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                        static_cast<std::uint8_t>(c)};
        if (normalize_vec(v) == v) pp.points.push_back(v);
      }
  // One line per normalized functional; order lines by sorted point set.
  struct Line {
    Vec3GF4 u;
    std::vector<int> pts;
  };
  std::vector<Line> lines;
  for (const Vec3GF4& u : pp.points) {
    Line l;
    l.u = u;
    for (std::size_t i = 0; i < pp.points.size(); ++i)
      if (dot_gf4(u, pp.points[i]) == 0) l.pts.push_back(static_cast<int>(i));
    std::sort(l.pts.begin(), l.pts.end());
    lines.push_back(std::move(l));
  }
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) { return a.pts < b.pts; });
  for (Line& l : lines) {
    pp.line_functionals.push_back(l.u);
    pp.line_points.push_back(std::move(l.pts));
  }
  return pp;
}

}  // namespace

int ProjectivePlane::point_index(const Vec3GF4& v) const {
  const Vec3GF4 n = normalize_vec(v);
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] == n) return static_cast<int>(i);
  throw Error("point_index: not found");
}

int ProjectivePlane::line_index_by_functional(const Vec3GF4& u) const {
  const Vec3GF4 n = normalize_vec(u);
  for (std::size_t i = 0; i < line_functionals.size(); ++i)
    if (line_functionals[i] == n) return static_cast<int>(i);
  throw Error("line_index_by_functional: not found");
}

int ProjectivePlane::line_index_by_points(std::vector<int> pts) const {
  std::sort(pts.begin(), pts.end());
  for (std::size_t i = 0; i < line_points.size(); ++i)
    if (line_points[i] == pts) return static_cast<int>(i);
  throw Error("line_index_by_points: not found");
}

const ProjectivePlane& ProjectivePlane::instance() {
  static const ProjectivePlane pp = build_plane();
  return pp;
}

namespace {

std::vector<MatGF4> transvections() {
  std::vector<MatGF4> ts;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (std::uint8_t lambda = 1; lambda <= 3; ++lambda) {
        MatGF4 m = mat_identity_gf4();
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = lambda;
        ts.push_back(m);
      }
    }
  return ts;
}

Perm point_action(const MatGF4& m) {
  const ProjectivePlane& pp = ProjectivePlane::instance();
  std::vector<int> img(21);
  for (std::size_t i = 0; i < 21; ++i)
    img[i] = pp.point_index(mat_apply_gf4(m, pp.points[i])) + 1;
  return Perm::from_images(img);
}

// Action on the 42 points-plus-lines: points 1..21 naturally, lines 22..42
// via image point sets.
Perm flag_action(const MatGF4& m) {
  const ProjectivePlane& pp = ProjectivePlane::instance();
  std::vector<int> img(42);
  for (std::size_t i = 0; i < 21; ++i)
    img[i] = pp.point_index(mat_apply_gf4(m, pp.points[i])) + 1;
  for (std::size_t l = 0; l < 21; ++l) {
    std::vector<int> pts;
    for (int pt : pp.line_points[l])
      pts.push_back(pp.point_index(mat_apply_gf4(m, pp.points[static_cast<std::size_t>(pt)])));
    img[21 + l] = 22 + pp.line_index_by_points(std::move(pts));
  }
  return Perm::from_images(img);
}

Vec3GF4 frobenius_vec(const Vec3GF4& v) {
  return {FF4::frobenius(v[0]), FF4::frobenius(v[1]), FF4::frobenius(v[2])};
}

Perm field_involution() {
  const ProjectivePlane& pp = ProjectivePlane::instance();
  std::vector<int> img(42);
  for (std::size_t i = 0; i < 21; ++i) img[i] = pp.point_index(frobenius_vec(pp.points[i])) + 1;
  for (std::size_t l = 0; l < 21; ++l)
    img[21 + l] = 22 + pp.line_index_by_functional(frobenius_vec(pp.line_functionals[l]));
  return Perm::from_images(img);
}

// The polarity of the standard bilinear form: point <v> -> line v-perp,
// line with functional u -> point <u>. Swaps the two 21-blocks.
Perm graph_involution() {
  const ProjectivePlane& pp = ProjectivePlane::instance();
  std::vector<int> img(42);
  for (std::size_t i = 0; i < 21; ++i) img[i] = 22 + pp.line_index_by_functional(pp.points[i]);
  for (std::size_t l = 0; l < 21; ++l) img[21 + l] = pp.point_index(pp.line_functionals[l]) + 1;
  return Perm::from_images(img);
}

}  // namespace

Group psl3_4() {
  std::vector<Perm> gens;
  for (const MatGF4& t : transvections()) gens.push_back(point_action(t));
  return Group(21, std::move(gens));
}

std::string variant_name(ExtensionVariant v) {
  switch (v) {
    case ExtensionVariant::Field: return "FIELD";
    case ExtensionVariant::Graph: return "GRAPH";
    case ExtensionVariant::GraphField: return "GRAPH_FIELD";
  }
  return "?";
}

Group l3_4_extension(ExtensionVariant v) {
  std::vector<Perm> gens;
  for (const MatGF4& t : transvections()) gens.push_back(flag_action(t));
  switch (v) {
    case ExtensionVariant::Field: gens.push_back(field_involution()); break;
    case ExtensionVariant::Graph: gens.push_back(graph_involution()); break;
    case ExtensionVariant::GraphField:
      gens.push_back(compose(graph_involution(), field_involution()));
      break;
  }
  return Group(42, std::move(gens));
}

std::pair<ExtensionVariant, Group> identify_2_2() {
  const OrderEquation target{
      {{1, 1}, {2, 435}, {3, 2240}, {4, 6300}, {5, 8064}, {6, 6720}, {7, 5760}, {8, 5040}, {14, 5760}},
      40320};
  std::optional<std::pair<ExtensionVariant, Group>> hit;
  int matches = 0;
  for (ExtensionVariant v :
       {ExtensionVariant::Field, ExtensionVariant::Graph, ExtensionVariant::GraphField}) {
    Group g = l3_4_extension(v);
    if (order_equation(g) == target) {
      ++matches;
      hit = {v, std::move(g)};
    }
  }
  if (matches != 1)
    throw AmbiguousIdentification(std::to_string(matches) +
                                  " degree-42 extension variants match the target order equation");
  return *hit;
}

// ---------------------------------------------------------------------------
// GL(4,2) and the affine group on 16 points

bool gf2_invertible(MatGF2 m) {
  std::uint8_t rows[4];
  for (int i = 0; i < 4; ++i) rows[i] = static_cast<std::uint8_t>((m >> (12 - 4 * i)) & 0xF);
  for (int col = 0; col < 4; ++col) {
    const std::uint8_t bit = static_cast<std::uint8_t>(1 << (3 - col));
    int pivot = -1;
    for (int r = col; r < 4; ++r)
      if (rows[r] & bit) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    std::swap(rows[col], rows[pivot]);
    for (int r = 0; r < 4; ++r)
      if (r != col && (rows[r] & bit)) rows[r] ^= rows[col];
  }
  return true;
}

MatGF2 gf2_mul(MatGF2 a, MatGF2 b) {
  MatGF2 r = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int s = 0;
      for (int k = 0; k < 4; ++k)
        s ^= ((a >> (15 - (4 * i + k))) & 1) & ((b >> (15 - (4 * k + j))) & 1);
      r = static_cast<MatGF2>(r | (s << (15 - (4 * i + j))));
    }
  return r;
}

Perm gf2_action_on_vectors(MatGF2 m) {
  std::uint8_t rows[4];
  for (int i = 0; i < 4; ++i) rows[i] = static_cast<std::uint8_t>((m >> (12 - 4 * i)) & 0xF);
  std::vector<int> img(16);
  for (int v = 0; v < 16; ++v) {
    int w = 0;
    for (int i = 0; i < 4; ++i)
      w |= (__builtin_popcount(rows[i] & static_cast<unsigned>(v)) & 1) << (3 - i);
    img[static_cast<std::size_t>(v)] = w + 1;
  }
  return Perm::from_images(img);
}

namespace {

std::string format_gf2(MatGF2 m) {
  std::string s(16, '0');
  for (int b = 0; b < 16; ++b)
    if ((m >> (15 - b)) & 1) s[static_cast<std::size_t>(b)] = '1';
  return s;
}

std::optional<MatGF2> parse_gf2(const std::string& s) {
  if (s.size() != 16) return std::nullopt;
  MatGF2 m = 0;
  for (int b = 0; b < 16; ++b) {
    if (s[static_cast<std::size_t>(b)] == '1')
      m = static_cast<MatGF2>(m | (1u << (15 - b)));
    else if (s[static_cast<std::size_t>(b)] != '0')
      return std::nullopt;
  }
  return m;
}

bool pair_is_a7(MatGF2 g, MatGF2 h) {
  if (!gf2_invertible(g) || !gf2_invertible(h)) return false;
  Group sub(16, {gf2_action_on_vectors(g), gf2_action_on_vectors(h)});
  if (sub.order() != 2520) return false;
  const std::vector<Group> series = derived_series(sub);
  return series.size() == 2 && series[1].order() == 2520;  // perfect
}

}  // namespace

std::pair<MatGF2, MatGF2> a7_in_gl42(const std::optional<std::filesystem::path>& cache) {
  if (cache && std::filesystem::exists(*cache)) {
    std::ifstream in(*cache);
    std::string l1, l2;
    if (std::getline(in, l1) && std::getline(in, l2)) {
      const auto g = parse_gf2(l1);
      const auto h = parse_gf2(l2);
      if (g && h && pair_is_a7(*g, *h)) return {*g, *h};
    }
    // invalid or stale cache: fall through and regenerate
  }

  // All invertible matrices in ascending row-major order, with their
  // permutation actions and element orders.
  std::vector<MatGF2> gl;
  std::vector<Perm> perms;
  std::vector<std::uint64_t> order_by_matrix(65536, 0);
  for (std::uint32_t m = 0; m < 65536; ++m) {
    if (!gf2_invertible(static_cast<MatGF2>(m))) continue;
    gl.push_back(static_cast<MatGF2>(m));
    perms.push_back(gf2_action_on_vectors(static_cast<MatGF2>(m)));
    order_by_matrix[m] = element_order(perms.back());
  }

  // Orders occurring in the target subgroup.
  auto order_ok = [&](std::uint64_t o) { return o >= 1 && o <= 7; };

  auto transitive_on_nonzero = [&](const Perm& a, const Perm& b) {
    bool seen[16] = {false};
    std::vector<int> stack{1};
    seen[1] = true;
    int count = 1;
    while (!stack.empty()) {
      const int p = stack.back();
      stack.pop_back();
      for (const Perm* q : {&a, &b}) {
        const int r = q->apply(p);
        if (!seen[r]) {
          seen[r] = true;
          ++count;
          stack.push_back(r);
        }
      }
    }
    return count == 15;
  };

  for (std::size_t gi = 0; gi < gl.size(); ++gi) {
    const std::uint64_t og = order_by_matrix[gl[gi]];
    if (og < 2 || og > 7) continue;
    for (std::size_t hi = 0; hi < gl.size(); ++hi) {
      const std::uint64_t oh = order_by_matrix[gl[hi]];
      if (oh < 2 || oh > 7) continue;
      // Cheap word filters: every element of the target has order at most 7.
      const MatGF2 gh = gf2_mul(gl[gi], gl[hi]);
      if (!order_ok(order_by_matrix[gh])) continue;
      if (!order_ok(order_by_matrix[gf2_mul(gh, gl[hi])])) continue;
      if (!order_ok(order_by_matrix[gf2_mul(gl[gi], gh)])) continue;
      if (!order_ok(order_by_matrix[gf2_mul(gh, gh)])) continue;
      if (!transitive_on_nonzero(perms[gi], perms[hi])) continue;
      if (pair_is_a7(gl[gi], gl[hi])) {
        if (cache) {
          if (!cache->parent_path().empty())
            std::filesystem::create_directories(cache->parent_path());
          const std::filesystem::path tmp = cache->string() + ".tmp";
          std::ofstream out(tmp);
          out << format_gf2(gl[gi]) << "\n" << format_gf2(gl[hi]) << "\n";
          out.close();
          std::filesystem::rename(tmp, *cache);
        }
        return {gl[gi], gl[hi]};
      }
    }
  }
  throw SearchExhausted("no generating pair for an order-2520 perfect subgroup of GL(4,2)");
}

Group affine_2_4_a7(const std::optional<std::filesystem::path>& cache) {
  const auto [g, h] = a7_in_gl42(cache);
  std::vector<int> translation(16);
  for (int v = 0; v < 16; ++v) translation[static_cast<std::size_t>(v)] = (v ^ 8) + 1;
  return Group(16, {gf2_action_on_vectors(g), gf2_action_on_vectors(h),
                    Perm::from_images(translation)});
}

}  // namespace fg
