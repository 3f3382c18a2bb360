#include "pfam/region.hpp"

#include <algorithm>
#include <array>

namespace pfam {

namespace {

const Int kMaxGridCells = Int(100000000);  // 1e8

void require_nonneg(const std::vector<RatVec>& pts, int dim) {
  for (const RatVec& p : pts) {
    if (static_cast<int>(p.size()) != dim)
      throw error(errc::validation, "region point of wrong dimension");
    for (const Rat& v : p)
      if (v < 0) throw error(errc::validation, "region points must be nonnegative");
  }
}

/// Lower-left hull chain (x ascending, y descending) of planar points.
std::vector<RatVec> lower_hull_rat(std::vector<RatVec> pts) {
  pts = detail::minimal_points(std::move(pts));  // lex-sorted antichain
  std::vector<RatVec> hull;
  for (const RatVec& p : pts) {
    while (hull.size() >= 2) {
      const RatVec& o = hull[hull.size() - 2];
      const RatVec& a = hull[hull.size() - 1];
      Rat cross = (a[0] - o[0]) * (p[1] - o[1]) - (a[1] - o[1]) * (p[0] - o[0]);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  return hull;
}

std::vector<RatVec> to_rat_points(const std::vector<Exponent>& gens) {
  std::vector<RatVec> pts;
  pts.reserve(gens.size());
  for (const Exponent& g : gens) {
    RatVec v;
    v.reserve(static_cast<std::size_t>(g.dim()));
    for (int i = 0; i < g.dim(); ++i) v.emplace_back(g[i]);
    pts.push_back(std::move(v));
  }
  return pts;
}

using Poly = std::vector<std::array<Rat, 2>>;

Rat polygon_area(const Poly& P) {
  if (P.size() < 3) return 0;
  Rat s = 0;
  for (std::size_t i = 0; i < P.size(); ++i) {
    const auto& a = P[i];
    const auto& b = P[(i + 1) % P.size()];
    s += a[0] * b[1] - b[0] * a[1];
  }
  if (s < 0) s = -s;
  return s / 2;
}

/// Keep {(x,y) : a*x + b*y <= c}.
Poly clip_halfplane(const Poly& P, const Rat& a, const Rat& b, const Rat& c) {
  Poly out;
  const std::size_t n = P.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& cur = P[i];
    const auto& nxt = P[(i + 1) % n];
    Rat fc = a * cur[0] + b * cur[1] - c;
    Rat fn = a * nxt[0] + b * nxt[1] - c;
    if (fc <= 0) out.push_back(cur);
    if ((fc < 0 && fn > 0) || (fc > 0 && fn < 0)) {
      Rat t = fc / (fc - fn);
      out.push_back({cur[0] + t * (nxt[0] - cur[0]), cur[1] + t * (nxt[1] - cur[1])});
    }
  }
  return out;
}

/// Pure-power bound per axis for a staircase apex antichain, or nullopt when
/// some axis has no apex on it (complement unbounded).
std::optional<std::vector<Rat>> staircase_bounds(const Region& R) {
  std::vector<Rat> B(static_cast<std::size_t>(R.dim), Rat(-1));
  for (const RatVec& a : R.points) {
    int nonzero = -1;
    bool pure = true;
    for (int i = 0; i < R.dim; ++i)
      if (a[static_cast<std::size_t>(i)] != 0) {
        if (nonzero >= 0) {
          pure = false;
          break;
        }
        nonzero = i;
      }
    if (!pure) continue;
    if (nonzero < 0) {
      std::fill(B.begin(), B.end(), Rat(0));
      return B;
    }
    B[static_cast<std::size_t>(nonzero)] = a[static_cast<std::size_t>(nonzero)];
  }
  for (const Rat& v : B)
    if (v < 0) return std::nullopt;
  return B;
}

struct RatGrid {
  std::vector<std::vector<Rat>> vals;  // per axis, sorted, last value = limit
  std::vector<long> ncells;
  std::vector<long> stride;
  long total = 0;
  std::vector<char> covered;  // cell's lower corner dominates some apex
};

/// Compressed grid over [0, limits) with cell coverage by the staircase.
/// Apexes with any coordinate >= its limit are irrelevant inside the box.
RatGrid build_rat_grid(const std::vector<RatVec>& apexes, const std::vector<Rat>& limits) {
  const int d = static_cast<int>(limits.size());
  RatGrid g;
  g.vals.resize(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    auto& v = g.vals[static_cast<std::size_t>(i)];
    v.push_back(0);
    for (const RatVec& a : apexes) {
      const Rat& c = a[static_cast<std::size_t>(i)];
      if (c > 0 && c < limits[static_cast<std::size_t>(i)]) v.push_back(c);
    }
    v.push_back(limits[static_cast<std::size_t>(i)]);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  Int cells = 1;
  for (int i = 0; i < d; ++i) {
    g.ncells.push_back(static_cast<long>(g.vals[static_cast<std::size_t>(i)].size()) - 1);
    cells *= g.ncells.back();
  }
  if (cells > kMaxGridCells)
    throw error(errc::overflow, "slab grid exceeds the 1e8 cell cap");
  g.total = cells.convert_to<long>();
  g.stride.assign(static_cast<std::size_t>(d), 1);
  long acc = 1;
  for (int i = d - 1; i >= 0; --i) {
    g.stride[static_cast<std::size_t>(i)] = acc;
    acc *= g.ncells[static_cast<std::size_t>(i)];
  }
  if (g.total == 0) return g;
  g.covered.assign(static_cast<std::size_t>(g.total), 0);
  for (const RatVec& a : apexes) {
    long idx = 0;
    bool inside = true;
    for (int i = 0; i < d && inside; ++i) {
      if (a[static_cast<std::size_t>(i)] >= limits[static_cast<std::size_t>(i)]) {
        inside = false;
        break;
      }
      const auto& v = g.vals[static_cast<std::size_t>(i)];
      auto it = std::lower_bound(v.begin(), v.end(), a[static_cast<std::size_t>(i)]);
      idx += g.stride[static_cast<std::size_t>(i)] * (it - v.begin());
    }
    if (inside) g.covered[static_cast<std::size_t>(idx)] = 1;
  }
  for (int i = 0; i < d; ++i) {
    for (long idx = 0; idx < g.total; ++idx) {
      long pos = (idx / g.stride[static_cast<std::size_t>(i)]) % g.ncells[static_cast<std::size_t>(i)];
      if (pos > 0 && g.covered[static_cast<std::size_t>(idx - g.stride[static_cast<std::size_t>(i)])])
        g.covered[static_cast<std::size_t>(idx)] = 1;
    }
  }
  return g;
}

bool staircase_contains(const Region& R, const RatVec& u) {
  for (const RatVec& a : R.points) {
    bool dom = true;
    for (int i = 0; i < R.dim && dom; ++i)
      dom = u[static_cast<std::size_t>(i)] >= a[static_cast<std::size_t>(i)];
    if (dom) return true;
  }
  return false;
}

}  // namespace

Region Region::staircase_region(int dim, std::vector<RatVec> apexes) {
  if (dim < 1) throw error(errc::validation, "region dimension must be >= 1");
  require_nonneg(apexes, dim);
  if (apexes.empty()) throw error(errc::validation, "staircase region needs at least one apex");
  Region r;
  r.kind = region_kind::staircase;
  r.dim = dim;
  r.points = detail::minimal_points(std::move(apexes));
  return r;
}

Region Region::convex_region(int dim, std::vector<RatVec> vertices) {
  if (dim < 1) throw error(errc::validation, "region dimension must be >= 1");
  if (dim > 2)
    throw error(errc::unsupported, "exact convex regions are supported for d <= 2 only");
  require_nonneg(vertices, dim);
  if (vertices.empty()) throw error(errc::validation, "convex region needs at least one vertex");
  Region r;
  r.kind = region_kind::convex;
  r.dim = dim;
  if (dim == 1) {
    RatVec best = vertices.front();
    for (const RatVec& v : vertices)
      if (v[0] < best[0]) best = v;
    r.points = {best};
  } else {
    r.points = lower_hull_rat(std::move(vertices));
  }
  return r;
}

Region staircase(const MonomialIdeal& I) {
  if (I.is_zero()) throw error(errc::precondition, "staircase of the zero ideal");
  return Region::staircase_region(I.dim(), to_rat_points(I.gens()));
}

Region newton_region(const MonomialIdeal& I) {
  if (I.is_zero()) throw error(errc::precondition, "newton polyhedron of the zero ideal");
  return Region::convex_region(I.dim(), to_rat_points(I.gens()));
}

PBodyResult pbody(const FamilyExpr& F, const Int& q_max, long p) {
  unsigned long e_top = 0;
  if (q_max < 1 || !power_of(q_max, p, &e_top))
    throw error(errc::validation, "q_max must be a power of p");
  std::vector<RatVec> apexes;
  for (unsigned long e = 0; e <= e_top; ++e) {
    MonomialIdeal I = evaluate(F, static_cast<int>(e), p);
    if (I.is_zero()) throw error(errc::precondition, "p-body of a family with a zero member");
    Int q = pow_int(p, e);
    for (const Exponent& g : I.gens()) {
      RatVec v;
      v.reserve(static_cast<std::size_t>(I.dim()));
      for (int i = 0; i < I.dim(); ++i) v.push_back(Rat(g[i], q));
      apexes.push_back(std::move(v));
    }
  }
  PBodyResult out{Region::staircase_region(F.dim(), std::move(apexes)), false,
                  F.finite_type_hint()};
  out.exact = out.finite_type_threshold &&
              static_cast<long>(e_top) >= *out.finite_type_threshold;
  return out;
}

Region minkowski_scale_sum(const std::vector<std::pair<Region, Rat>>& parts) {
  if (parts.empty()) throw error(errc::validation, "minkowski sum of no parts");
  const int d = parts.front().first.dim;
  const region_kind kind = parts.front().first.kind;
  for (const auto& [r, scale] : parts) {
    if (r.dim != d) throw error(errc::validation, "minkowski sum dimension mismatch");
    if (r.kind != kind)
      throw error(errc::validation, "minkowski sum of mixed region kinds");
    if (scale < 0) throw error(errc::validation, "minkowski scales must be nonnegative");
  }
  if (kind == region_kind::staircase) {
    std::vector<RatVec> acc{RatVec(static_cast<std::size_t>(d), Rat(0))};
    for (const auto& [r, scale] : parts) {
      std::vector<RatVec> next;
      next.reserve(acc.size() * r.points.size());
      for (const RatVec& base : acc)
        for (const RatVec& a : r.points) {
          RatVec v = base;
          for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(i)] += scale * a[static_cast<std::size_t>(i)];
          next.push_back(std::move(v));
        }
      acc = detail::minimal_points(std::move(next));
    }
    return Region::staircase_region(d, std::move(acc));
  }
  if (d == 1) {
    Rat c = 0;
    for (const auto& [r, scale] : parts) c += scale * r.points.front()[0];
    return Region::convex_region(1, {{c}});
  }
  if (d > 2)
    throw error(errc::unsupported, "exact convex minkowski sums are supported for d <= 2 only");
  // Edge-slope merge of the boundary chains.
  RatVec start(2, Rat(0));
  struct Edge {
    Rat dx, dy;
  };
  std::vector<Edge> edges;
  for (const auto& [r, scale] : parts) {
    start[0] += scale * r.points.front()[0];
    start[1] += scale * r.points.front()[1];
    if (scale == 0) continue;
    for (std::size_t i = 0; i + 1 < r.points.size(); ++i)
      edges.push_back({scale * (r.points[i + 1][0] - r.points[i][0]),
                       scale * (r.points[i + 1][1] - r.points[i][1])});
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.dy * b.dx < b.dy * a.dx;  // steeper slope first (dx > 0)
  });
  std::vector<RatVec> verts{start};
  for (const Edge& e : edges) {
    RatVec v = verts.back();
    v[0] += e.dx;
    v[1] += e.dy;
    verts.push_back(std::move(v));
  }
  return Region::convex_region(2, std::move(verts));
}

CovolumeResult covolume(const Region& R) {
  CovolumeResult res;
  if (R.kind == region_kind::staircase) {
    res.method = covolume_method::slab;
    auto B = staircase_bounds(R);
    if (!B) {
      res.cobounded = false;
      return res;
    }
    res.cobounded = true;
    RatGrid g = build_rat_grid(R.points, *B);
    Rat vol = 0;
    for (long idx = 0; idx < g.total; ++idx) {
      if (g.covered[static_cast<std::size_t>(idx)]) continue;
      Rat cell = 1;
      for (int i = 0; i < R.dim; ++i) {
        long pos = (idx / g.stride[static_cast<std::size_t>(i)]) % g.ncells[static_cast<std::size_t>(i)];
        cell *= g.vals[static_cast<std::size_t>(i)][static_cast<std::size_t>(pos) + 1] -
                g.vals[static_cast<std::size_t>(i)][static_cast<std::size_t>(pos)];
      }
      vol += cell;
    }
    res.value = vol;
    return res;
  }
  if (R.dim == 1) {
    res.method = covolume_method::shoelace;
    res.cobounded = true;
    res.value = R.points.front()[0];
    return res;
  }
  if (R.dim == 2) {
    res.method = covolume_method::shoelace;
    res.cobounded = R.points.front()[0] == 0 && R.points.back()[1] == 0;
    if (!res.cobounded) return res;
    Poly poly{{Rat(0), Rat(0)}};
    for (const RatVec& v : R.points) poly.push_back({v[0], v[1]});
    res.value = polygon_area(poly);
    return res;
  }
  throw error(errc::unsupported, "exact convex covolume is supported for d <= 2 only");
}

RegionProperties region_properties(const Region& R) {
  RegionProperties props;
  if (R.kind == region_kind::convex) {
    props.convex = true;
    if (R.dim == 1)
      props.cobounded = true;
    else
      props.cobounded = R.points.front()[0] == 0 && R.points.back()[1] == 0;
    return props;
  }
  props.cobounded = staircase_bounds(R).has_value();
  bool midpoints_inside = true;
  for (std::size_t i = 0; i < R.points.size() && midpoints_inside; ++i)
    for (std::size_t j = i + 1; j < R.points.size() && midpoints_inside; ++j) {
      RatVec mid(static_cast<std::size_t>(R.dim));
      for (int k = 0; k < R.dim; ++k)
        mid[static_cast<std::size_t>(k)] =
            (R.points[i][static_cast<std::size_t>(k)] + R.points[j][static_cast<std::size_t>(k)]) / 2;
      midpoints_inside = staircase_contains(R, mid);
    }
  bool single_apex = R.points.size() <= 1;
  if (single_apex != midpoints_inside)
    throw std::logic_error("staircase convexity checks disagree");
  props.convex = midpoints_inside;
  return props;
}

namespace {

CovolumeResult volume_below_staircase(const Region& R, const Halfspace& H) {
  CovolumeResult res;
  res.cobounded = region_properties(R).cobounded;
  const int d = R.dim;
  if (H.bound <= 0) {
    res.method = d <= 2 ? covolume_method::slab : covolume_method::lattice_estimate;
    res.value = 0;
    return res;
  }
  if (d == 1) {
    res.method = covolume_method::slab;
    Rat limit = H.bound / H.normal[0];
    Rat lo = R.points.front()[0];
    res.value = lo < limit ? limit - lo : Rat(0);
    return res;
  }
  if (d == 2) {
    res.method = covolume_method::slab;
    std::vector<Rat> limits{H.bound / H.normal[0], H.bound / H.normal[1]};
    RatGrid g = build_rat_grid(R.points, limits);
    Rat vol = 0;
    for (long idx = 0; idx < g.total; ++idx) {
      if (!g.covered[static_cast<std::size_t>(idx)]) continue;
      long px = (idx / g.stride[0]) % g.ncells[0];
      long py = (idx / g.stride[1]) % g.ncells[1];
      const Rat& x0 = g.vals[0][static_cast<std::size_t>(px)];
      const Rat& x1 = g.vals[0][static_cast<std::size_t>(px) + 1];
      const Rat& y0 = g.vals[1][static_cast<std::size_t>(py)];
      const Rat& y1 = g.vals[1][static_cast<std::size_t>(py) + 1];
      Poly cell{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
      vol += polygon_area(clip_halfplane(cell, H.normal[0], H.normal[1], H.bound));
    }
    res.value = vol;
    return res;
  }
  // d >= 3: count lattice points of the q-refined grid, exactly, and report
  // the discretization envelope.
  res.method = covolume_method::lattice_estimate;
  auto count_at = [&](long q) -> Rat {
    std::vector<Exponent> gens;
    gens.reserve(R.points.size());
    for (const RatVec& a : R.points) {
      std::vector<Int> c(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] = ceil_rat(Rat(q) * a[static_cast<std::size_t>(i)]);
      gens.emplace_back(std::move(c));
    }
    MonomialIdeal Iq(d, std::move(gens));
    Halfspace Hq(H.normal, H.bound * q);
    return Rat(count_below(Iq, Hq), pow_int(q, static_cast<unsigned long>(d)));
  };
  long q = 64;
  while (q > 2) {
    Rat cells = 1;
    for (int i = 0; i < d; ++i) cells *= Rat(q) * H.bound / H.normal[static_cast<std::size_t>(i)];
    if (cells <= 20000000) break;
    q /= 2;
  }
  Rat vq = count_at(q);
  Rat vhalf = count_at(q / 2);
  Rat maxside = 0;
  for (int i = 0; i < d; ++i) maxside = std::max(maxside, H.bound / H.normal[static_cast<std::size_t>(i)]);
  Rat cauchy = vq > vhalf ? vq - vhalf : vhalf - vq;
  res.value = vq;
  res.resolution = q;
  res.envelope = cauchy + Rat(d) * pow_rat(maxside, static_cast<unsigned long>(d - 1)) / q;
  return res;
}

CovolumeResult volume_below_convex(const Region& R, const Halfspace& H) {
  CovolumeResult res;
  res.cobounded = region_properties(R).cobounded;
  res.method = covolume_method::shoelace;
  if (H.bound <= 0) {
    res.value = 0;
    return res;
  }
  if (R.dim == 1) {
    Rat limit = H.bound / H.normal[0];
    Rat lo = R.points.front()[0];
    res.value = lo < limit ? limit - lo : Rat(0);
    return res;
  }
  // Halfplane intersection: orthant, chain facets, and the truncating line.
  Rat M = H.bound / H.normal[0] + H.bound / H.normal[1] + 1;
  for (const RatVec& v : R.points) M = std::max({M, v[0] + 1, v[1] + 1});
  Poly poly{{Rat(0), Rat(0)}, {M, Rat(0)}, {M, M}, {Rat(0), M}};
  poly = clip_halfplane(poly, Rat(-1), Rat(0), -R.points.front()[0]);  // x >= x_min
  poly = clip_halfplane(poly, Rat(0), Rat(-1), -R.points.back()[1]);   // y >= y_min
  for (std::size_t i = 0; i + 1 < R.points.size(); ++i) {
    Rat dx = R.points[i + 1][0] - R.points[i][0];
    Rat dy = R.points[i + 1][1] - R.points[i][1];
    // Inside: -dy*x + dx*y >= c through the edge.
    Rat c = -dy * R.points[i][0] + dx * R.points[i][1];
    poly = clip_halfplane(poly, dy, -dx, -c);
  }
  poly = clip_halfplane(poly, H.normal[0], H.normal[1], H.bound);
  res.value = polygon_area(poly);
  return res;
}

}  // namespace

CovolumeResult volume_below(const Region& R, const Halfspace& H) {
  if (H.dim() != R.dim) throw error(errc::validation, "halfspace dimension mismatch");
  if (R.kind == region_kind::staircase) return volume_below_staircase(R, H);
  return volume_below_convex(R, H);
}

}  // namespace pfam
