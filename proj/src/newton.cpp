#include "blowade/newton.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "blowade/algebra.hpp"
#include "blowade/errors.hpp"

namespace blowade {

namespace {

using Vec = std::array<long, 3>;

long dot(const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec sub(const Vec& a, const Vec& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Vec cross(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec unit(int i) {
  Vec e{0, 0, 0};
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

Vec primitive(Vec v) {
  const long g = std::gcd(std::gcd(std::labs(v[0]), std::labs(v[1])), std::labs(v[2]));
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

// Rank of integer vectors via exact elimination.
int rank_of(const std::vector<Vec>& rows) {
  std::vector<std::array<Rational, 3>> m;
  for (const auto& r : rows) m.push_back({Rational(r[0]), Rational(r[1]), Rational(r[2])});
  int rank = 0;
  for (int col = 0; col < 3 && rank < static_cast<int>(m.size()); ++col) {
    auto pivot = std::find_if(m.begin() + rank, m.end(),
                              [col](const auto& row) { return row[col] != 0; });
    if (pivot == m.end()) continue;
    std::iter_swap(m.begin() + rank, pivot);
    const auto& p = m[static_cast<std::size_t>(rank)];
    for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      const Rational f = m[i][col] / p[col];
      for (int k = col; k < 3; ++k) m[i][k] -= f * p[k];
    }
    ++rank;
  }
  return rank;
}

int affine_dimension(const std::vector<Vec>& pts) {
  if (pts.empty()) return -1;
  std::vector<Vec> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
  return rank_of(diffs);
}

struct RawFace {
  std::vector<std::size_t> members;
  Vec normal;
  long level;
  int dimension;
};

// Compact faces of conv(pts) + R^n_+, where only the first n coordinates are used.
std::vector<RawFace> compact_faces(const std::vector<Vec>& all, int n) {
  std::vector<Vec> pts;
  for (const auto& p : all) {
    const bool dominated = std::any_of(all.begin(), all.end(), [&](const Vec& q) {
      return q != p && q[0] <= p[0] && q[1] <= p[1] && q[2] <= p[2];
    });
    if (!dominated) pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::set<Vec> candidates;
  auto offer = [&](Vec w) {
    if (w == Vec{0, 0, 0}) return;
    if (std::all_of(w.begin(), w.end(), [](long x) { return x <= 0; })) {
      for (auto& x : w) x = -x;
    }
    if (std::any_of(w.begin(), w.end(), [](long x) { return x < 0; })) return;
    candidates.insert(primitive(w));
  };
  for (int i = 0; i < n; ++i) offer(unit(i));
  if (n == 2) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        const Vec d = sub(pts[j], pts[i]);
        offer({-d[1], d[0], 0});
      }
    }
  } else if (n == 3) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        const Vec d = sub(pts[j], pts[i]);
        for (int k = 0; k < 3; ++k) offer(cross(d, unit(k)));
        for (std::size_t l = j + 1; l < pts.size(); ++l) offer(cross(d, sub(pts[l], pts[i])));
      }
    }
  }

  struct Facet {
    std::vector<std::size_t> members;
    Vec normal;
  };
  std::vector<Facet> facets;
  for (const auto& w : candidates) {
    long level = dot(w, pts.front());
    for (const auto& p : pts) level = std::min(level, dot(w, p));
    Facet f{{}, w};
    std::vector<Vec> span;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (dot(w, pts[i]) == level) {
        f.members.push_back(i);
        span.push_back(sub(pts[i], pts[f.members.front()]));
      }
    }
    for (int k = 0; k < n; ++k) {
      if (w[static_cast<std::size_t>(k)] == 0) span.push_back(unit(k));
    }
    if (rank_of(span) == n - 1) facets.push_back(std::move(f));
  }

  std::set<std::vector<std::size_t>> faces;
  std::vector<std::vector<std::size_t>> queue;
  for (const auto& f : facets) {
    if (faces.insert(f.members).second) queue.push_back(f.members);
  }
  while (!queue.empty()) {
    const auto cur = queue.back();
    queue.pop_back();
    for (const auto& f : facets) {
      std::vector<std::size_t> meet;
      std::set_intersection(cur.begin(), cur.end(), f.members.begin(), f.members.end(),
                            std::back_inserter(meet));
      if (!meet.empty() && faces.insert(meet).second) queue.push_back(meet);
    }
  }

  std::vector<RawFace> out;
  for (const auto& members : faces) {
    Vec sum{0, 0, 0};
    for (const auto& f : facets) {
      if (std::includes(f.members.begin(), f.members.end(), members.begin(), members.end())) {
        for (int k = 0; k < 3; ++k) sum[static_cast<std::size_t>(k)] += f.normal[static_cast<std::size_t>(k)];
      }
    }
    bool compact = true;
    for (int k = 0; k < n; ++k) compact = compact && sum[static_cast<std::size_t>(k)] > 0;
    if (!compact) continue;
    const Vec w = primitive(sum);
    std::vector<Vec> mp;
    for (auto i : members) mp.push_back(pts[i]);
    out.push_back({members, w, dot(w, mp.front()), affine_dimension(mp)});
    // Translate member indices into `all`.
    auto& last = out.back();
    last.members.clear();
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (dot(w, all[i]) == last.level) last.members.push_back(i);
    }
  }
  return out;
}

long cross2(const Vec& o, const Vec& a, const Vec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Extreme points of a planar point set, counter-clockwise in the (x, y) projection.
std::vector<Vec> hull_2d(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Vec> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross2(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    const auto& p = pts[i - 1];
    while (k >= t && cross2(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  h.resize(k - 1);
  return h;
}

Vec to_vec(const Exponent& e) { return {e[0], e[1], e[2]}; }

Exponent to_exponent(const Vec& v) {
  return {static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2])};
}

// Projection onto the active coordinates, packed into the leading slots.
Vec pack(const Exponent& e, const std::vector<int>& vars) {
  Vec v{0, 0, 0};
  for (std::size_t k = 0; k < vars.size(); ++k) v[k] = e[static_cast<std::size_t>(vars[k])];
  return v;
}

Vec unpack(const Vec& v, const std::vector<int>& vars) {
  Vec e{0, 0, 0};
  for (std::size_t k = 0; k < vars.size(); ++k) e[static_cast<std::size_t>(vars[k])] = v[k];
  return e;
}

void check_variables(const std::vector<int>& vars) {
  if (vars.empty() || vars.size() > 3 || !std::is_sorted(vars.begin(), vars.end()) ||
      std::adjacent_find(vars.begin(), vars.end()) != vars.end() ||
      std::any_of(vars.begin(), vars.end(), [](int v) { return v < 0 || v > 2; })) {
    throw DomainError(ErrorKind::InvalidArgument, "active variables must be distinct indices 0..2");
  }
}

std::vector<Vec> packed_support(const Polynomial& f, const std::vector<int>& vars) {
  std::vector<Vec> out;
  for (const auto& [e, c] : f.terms()) {
    for (int k = 0; k < 3; ++k) {
      if (e[static_cast<std::size_t>(k)] != 0 &&
          std::find(vars.begin(), vars.end(), k) == vars.end()) {
        throw DomainError(ErrorKind::InvalidArgument,
                          "polynomial involves a variable outside the active set");
      }
    }
    out.push_back(pack(e, vars));
  }
  return out;
}

// Extreme points of a packed face, in boundary order for 2-faces.
std::vector<Vec> face_vertices(const std::vector<Vec>& pts, int dimension) {
  if (dimension == 0) return {pts.front()};
  if (dimension == 1) {
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
    return {*lo, *hi};
  }
  // Compact 2-faces have a positive third normal entry, so dropping z is injective.
  auto hull = hull_2d(pts);
  std::vector<Vec> out;
  for (const auto& h : hull) {
    out.push_back(*std::find_if(pts.begin(), pts.end(),
                                [&](const Vec& p) { return p[0] == h[0] && p[1] == h[1]; }));
  }
  return out;
}

}  // namespace

bool Face::contains(const Exponent& e) const {
  return std::find(points.begin(), points.end(), e) != points.end();
}

std::vector<const Face*> NewtonBoundary::faces_of_dimension(int k) const {
  std::vector<const Face*> out;
  for (const auto& f : faces) {
    if (f.dimension == k) out.push_back(&f);
  }
  return out;
}

NewtonBoundary newton_boundary(const Polynomial& f, const std::vector<int>& variables) {
  check_variables(variables);
  if (f.is_zero()) throw DomainError(ErrorKind::ZeroPolynomial, "Newton boundary of zero");
  const auto packed = packed_support(f, variables);
  NewtonBoundary nb;
  nb.variables = variables;
  for (const auto& [e, c] : f.terms()) nb.support.insert(e);
  const int n = static_cast<int>(variables.size());
  for (const auto& raw : compact_faces(packed, n)) {
    Face face;
    face.dimension = raw.dimension;
    face.level = raw.level;
    face.normal = unpack(raw.normal, variables);
    std::vector<Vec> pts;
    for (auto i : raw.members) pts.push_back(packed[i]);
    std::sort(pts.begin(), pts.end());
    for (const auto& p : pts) face.points.push_back(to_exponent(unpack(p, variables)));
    for (const auto& v : face_vertices(pts, raw.dimension)) {
      face.vertices.push_back(to_exponent(unpack(v, variables)));
    }
    nb.faces.push_back(std::move(face));
  }
  std::sort(nb.faces.begin(), nb.faces.end(), [](const Face& a, const Face& b) {
    return std::tie(a.dimension, a.points) < std::tie(b.dimension, b.points);
  });
  return nb;
}

NewtonBoundary newton_boundary(const TruncatedSeries& f, const std::vector<int>& variables) {
  return newton_boundary(f.poly(), variables);
}

Polynomial newton_principal_part(const Polynomial& f) {
  std::vector<int> vars;
  for (int k = 0; k < 3; ++k) {
    if (f.degree_in(k) > 0) vars.push_back(k);
  }
  if (f.is_zero()) throw DomainError(ErrorKind::ZeroPolynomial, "principal part of zero");
  if (vars.empty()) return f;
  const auto nb = newton_boundary(f, vars);
  Polynomial out;
  for (const auto& [e, c] : f.terms()) {
    if (std::any_of(nb.faces.begin(), nb.faces.end(),
                    [&e](const Face& face) { return face.contains(e); })) {
      out.add_term(e, c);
    }
  }
  return out;
}

Polynomial newton_principal_part(const TruncatedSeries& f) {
  return newton_principal_part(f.poly());
}

Polynomial restrict_to(const Polynomial& f, CoordinateSubset subset) {
  Polynomial out;
  for (const auto& [e, c] : f.terms()) {
    bool inside = true;
    for (int k = 0; k < 3; ++k) {
      if (e[static_cast<std::size_t>(k)] != 0 && !(subset & (1u << k))) inside = false;
    }
    if (inside) out.add_term(e, c);
  }
  return out;
}

namespace {

Integer abs_det(const Vec& a, const Vec& b, const Vec& c) {
  const Integer d = Integer(a[0]) * (Integer(b[1]) * c[2] - Integer(b[2]) * c[1]) -
                    Integer(a[1]) * (Integer(b[0]) * c[2] - Integer(b[2]) * c[0]) +
                    Integer(a[2]) * (Integer(b[0]) * c[1] - Integer(b[1]) * c[0]);
  return abs(d);
}

std::size_t anchor_index(const std::vector<Vec>& v, FanAnchor anchor) {
  if (anchor == FanAnchor::LowestLex) {
    return static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
  }
  Vec sum{0, 0, 0};
  for (const auto& p : v) {
    for (int k = 0; k < 3; ++k) sum[static_cast<std::size_t>(k)] += p[static_cast<std::size_t>(k)];
  }
  const long m = static_cast<long>(v.size());
  std::size_t best = 0;
  Integer best_d = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Integer d = 0;
    for (std::size_t k = 0; k < 3; ++k) {
      const Integer x = Integer(m) * v[i][k] - sum[k];
      d += x * x;
    }
    if (best_d < 0 || d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

// |I|! Vol of the cone over the compact top-dimensional faces of f^I.
Integer cone_volume(const Polynomial& fI, const std::vector<int>& vars, FanAnchor anchor) {
  if (fI.is_zero()) return 0;
  const auto packed = packed_support(fI, vars);
  const int n = static_cast<int>(vars.size());
  Integer total = 0;
  for (const auto& raw : compact_faces(packed, n)) {
    if (raw.dimension != n - 1) continue;
    std::vector<Vec> pts;
    for (auto i : raw.members) pts.push_back(packed[i]);
    const auto v = face_vertices(pts, raw.dimension);
    if (n == 1) {
      total += v[0][0];
    } else if (n == 2) {
      total += abs(Integer(v[0][0]) * v[1][1] - Integer(v[0][1]) * v[1][0]);
    } else {
      const std::size_t a = anchor_index(v, anchor);
      const std::size_t k = v.size();
      for (std::size_t i = 1; i + 1 < k; ++i) {
        total += abs_det(v[a], v[(a + i) % k], v[(a + i + 1) % k]);
      }
    }
  }
  return total;
}

}  // namespace

NewtonNumber newton_number(const Polynomial& f, const std::vector<int>& variables,
                           FanAnchor anchor) {
  check_variables(variables);
  if (f.is_zero()) throw DomainError(ErrorKind::ZeroPolynomial, "Newton number of zero");
  packed_support(f, variables);
  const int n = static_cast<int>(variables.size());
  NewtonNumber nn;
  Integer value = (n % 2 == 0) ? 1 : -1;
  nn.volume_terms[0] = 1;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> sub;
    CoordinateSubset subset = 0;
    for (int k = 0; k < n; ++k) {
      if (mask & (1u << k)) {
        sub.push_back(variables[static_cast<std::size_t>(k)]);
        subset |= 1u << variables[static_cast<std::size_t>(k)];
      }
    }
    const Integer term = cone_volume(restrict_to(f, subset), sub, anchor);
    nn.volume_terms[subset] = term;
    const int size = static_cast<int>(sub.size());
    if ((n - size) % 2 == 0) {
      value += term;
    } else {
      value -= term;
    }
  }
  if (!value.fits_slong_p()) {
    throw DomainError(ErrorKind::InvalidArgument, "Newton number out of range");
  }
  nn.value = value.get_si();
  return nn;
}

Polynomial face_polynomial(const Polynomial& f, const Face& face) {
  Polynomial out;
  for (const auto& [e, c] : f.terms()) {
    if (face.contains(e)) out.add_term(e, c);
  }
  return out;
}

namespace {

// Coordinates of the face points in a basis of the face's lattice, shifted so
// that each coordinate has minimum zero. Slots 0 and 1 of the result hold u, v.
Polynomial reduce_to_lattice(const Polynomial& fd, const Face& face) {
  std::vector<std::pair<std::array<long, 2>, Rational>> coords;
  const Vec p0 = to_vec(fd.terms().begin()->first);
  if (face.dimension == 1) {
    const Vec d = primitive(sub(to_vec(face.vertices[1]), to_vec(face.vertices[0])));
    const std::size_t k = d[0] != 0 ? 0 : (d[1] != 0 ? 1 : 2);
    for (const auto& [e, c] : fd.terms()) {
      const Vec delta = sub(to_vec(e), p0);
      coords.push_back({{delta[k] / d[k], 0}, c});
    }
  } else {
    const Vec w = face.normal;
    const long g = std::gcd(w[0], w[1]);
    Integer ga, a, b;
    mpz_gcdext(ga.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), Integer(w[0]).get_mpz_t(),
               Integer(w[1]).get_mpz_t());
    const long al = a.get_si();
    for (const auto& [e, c] : fd.terms()) {
      const Vec delta = sub(to_vec(e), p0);
      if (delta[2] % g != 0) throw std::logic_error("face point off the face lattice");
      const long beta = -delta[2] / g;
      const long num = (delta[0] - beta * al * w[2]) * g;
      if (num % w[1] != 0) throw std::logic_error("face point off the face lattice");
      coords.push_back({{num / w[1], beta}, c});
    }
  }
  std::array<long, 2> lo{coords.front().first};
  for (const auto& [uv, c] : coords) {
    lo[0] = std::min(lo[0], uv[0]);
    lo[1] = std::min(lo[1], uv[1]);
  }
  Polynomial g;
  for (const auto& [uv, c] : coords) {
    g.add_term({static_cast<int>(uv[0] - lo[0]), static_cast<int>(uv[1] - lo[1]), 0}, c);
  }
  return g;
}

}  // namespace

bool face_is_degenerate(const Polynomial& f, const Face& face) {
  if (face.dimension == 0) return false;
  const Polynomial fd = face_polynomial(f, face);
  const Polynomial g = reduce_to_lattice(fd, face);
  if (face.dimension == 1) {
    algebra::UPoly p;
    {
      std::vector<Rational> c(static_cast<std::size_t>(g.degree_in(0) + 1));
      for (const auto& [e, coef] : g.terms()) c[static_cast<std::size_t>(e[0])] = coef;
      p = algebra::UPoly(std::move(c));
    }
    return algebra::gcd(p, p.derivative()).degree() >= 1;
  }
  if (algebra::has_repeated_factor(g, 0, 1)) return true;
  const auto b = algebra::to_bipoly(g, 0, 1);
  algebra::UPoly r = algebra::resultant(b, algebra::derivative_v(b));
  while (!r.is_zero() && r.coeff(0) == 0) {
    r = algebra::exact_divide(r, algebra::UPoly::linear_root(0));
  }
  if (r.is_zero()) return true;
  if (r.degree() < 1) return false;
  const auto branches = algebra::gcd_branches(
      {b, algebra::derivative_u(b), algebra::derivative_v(b)}, r, true);
  return std::any_of(branches.begin(), branches.end(),
                     [](const algebra::ModularBranch& br) { return br.gcd_degree != 0; });
}

NondegeneracyResult is_nondegenerate(const Polynomial& f, const std::vector<int>& variables) {
  const auto nb = newton_boundary(f, variables);
  for (const auto& face : nb.faces) {
    if (face_is_degenerate(f, face)) return {false, face};
  }
  return {};
}

NondegeneracyResult is_nondegenerate(const TruncatedSeries& f, const std::vector<int>& variables) {
  return is_nondegenerate(f.poly(), variables);
}

}  // namespace blowade
