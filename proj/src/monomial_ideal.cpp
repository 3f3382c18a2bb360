#include "pfam/monomial_ideal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace pfam {

namespace {

constexpr long kMaxColonSubsetGens = 20;
const Int kMaxGridCells = Int(100000000);  // 1e8

void require_same_dim(const MonomialIdeal& A, const MonomialIdeal& B) {
  if (A.dim() != B.dim())
    throw error(errc::validation, "dimension mismatch between ideals");
}

int vec_dim(const Exponent& v) { return v.dim(); }
int vec_dim(const std::vector<Rat>& v) { return static_cast<int>(v.size()); }

bool vec_le(const Exponent& a, const Exponent& b) { return b.dominates(a); }
bool vec_le(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool lex_less(const Exponent& a, const Exponent& b) { return a < b; }
bool lex_less(const std::vector<Rat>& a, const std::vector<Rat>& b) { return a < b; }

}  // namespace

namespace detail {

template <typename Vec>
std::vector<Vec> minimal_points(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) { return lex_less(a, b); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 1) return pts;
  int d = vec_dim(pts.front());
  std::vector<Vec> kept;
  if (d == 1) {
    kept.push_back(pts.front());
    return kept;
  }
  if (d == 2) {
    // Lex order makes x nondecreasing; a point is dominated iff its y is
    // >= the smallest y seen so far.
    kept.push_back(pts.front());
    for (std::size_t i = 1; i < pts.size(); ++i)
      if (pts[i][1] < kept.back()[1]) kept.push_back(pts[i]);
    return kept;
  }
  for (const Vec& v : pts) {
    bool dominated = false;
    for (const Vec& k : kept)
      if (vec_le(k, v)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(v);
  }
  return kept;
}

template std::vector<Exponent> minimal_points<Exponent>(std::vector<Exponent>);
template std::vector<std::vector<Rat>> minimal_points<std::vector<Rat>>(
    std::vector<std::vector<Rat>>);

bool in_newton_polyhedron(const std::vector<Exponent>& points, const std::vector<Rat>& u) {
  const int d = static_cast<int>(u.size());
  const int n = static_cast<int>(points.size());
  if (n == 0) return false;
  for (const Exponent& g : points) {
    bool below = true;
    for (int i = 0; i < d; ++i)
      if (Rat(g[i]) > u[i]) {
        below = false;
        break;
      }
    if (below) return true;  // u >= a vertex, no LP needed
  }
  // Phase-I simplex for { lambda >= 0, s >= 0 : sum lambda*g + s = u, sum lambda = 1 },
  // Bland's rule throughout.
  const int rows = d + 1;
  const int cols = n + d + rows;  // lambda, slacks, artificials
  std::vector<std::vector<Rat>> T(rows, std::vector<Rat>(cols + 1, Rat(0)));
  for (int k = 0; k < d; ++k) {
    for (int j = 0; j < n; ++j) T[k][j] = Rat(points[j][k]);
    T[k][n + k] = 1;
    T[k][n + d + k] = 1;
    T[k][cols] = u[k];
  }
  for (int j = 0; j < n; ++j) T[d][j] = 1;
  T[d][n + d + d] = 1;
  T[d][cols] = 1;

  std::vector<int> basis(rows);
  for (int r = 0; r < rows; ++r) basis[r] = n + d + r;
  auto artificial = [&](int j) { return j >= n + d; };

  while (true) {
    int enter = -1;
    for (int j = 0; j < cols && enter < 0; ++j) {
      Rat w = 0;
      for (int r = 0; r < rows; ++r)
        if (artificial(basis[r])) w += T[r][j];
      if (artificial(j)) w -= 1;
      if (w > 0) enter = j;
    }
    if (enter < 0) break;
    int leave = -1;
    Rat best;
    for (int r = 0; r < rows; ++r) {
      if (T[r][enter] <= 0) continue;
      Rat ratio = T[r][cols] / T[r][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave < 0) break;
    Rat piv = T[leave][enter];
    for (Rat& v : T[leave]) v /= piv;
    for (int r = 0; r < rows; ++r) {
      if (r == leave || T[r][enter] == 0) continue;
      Rat f = T[r][enter];
      for (int j = 0; j <= cols; ++j) T[r][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  Rat obj = 0;
  for (int r = 0; r < rows; ++r)
    if (artificial(basis[r])) obj += T[r][cols];
  return obj == 0;
}

}  // namespace detail

MonomialIdeal::MonomialIdeal(int dim, std::vector<Exponent> gens) : dim_(dim) {
  if (dim < 1) throw error(errc::validation, "ambient dimension must be >= 1");
  for (const Exponent& g : gens)
    if (g.dim() != dim)
      throw error(errc::validation, "dimension mismatch among generators");
  gens_ = detail::minimal_points(std::move(gens));
}

MonomialIdeal MonomialIdeal::maximal(int dim) {
  std::vector<Exponent> gens;
  for (int i = 0; i < dim; ++i) {
    Exponent e = Exponent::zero(dim);
    e[i] = 1;
    gens.push_back(e);
  }
  return MonomialIdeal(dim, std::move(gens));
}

bool MonomialIdeal::contains(const Exponent& u) const {
  for (const Exponent& g : gens_)
    if (u.dominates(g)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_dim(*this, other);
  for (const Exponent& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

std::string MonomialIdeal::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I) {
  os << '{';
  for (std::size_t i = 0; i < I.gens_.size(); ++i) {
    if (i) os << ',';
    os << '(';
    for (int k = 0; k < I.dim_; ++k) {
      if (k) os << ',';
      os << I.gens_[i][k];
    }
    os << ')';
  }
  return os << '}';
}

MonomialIdeal minimalize(int dim, std::vector<Exponent> gens) {
  return MonomialIdeal(dim, std::move(gens));
}

MonomialIdeal combine(const MonomialIdeal& A, const MonomialIdeal& B, combine_kind kind) {
  require_same_dim(A, B);
  const int d = A.dim();
  std::vector<Exponent> out;
  switch (kind) {
    case combine_kind::sum:
      out = A.gens();
      out.insert(out.end(), B.gens().begin(), B.gens().end());
      break;
    case combine_kind::product:
      for (const Exponent& a : A.gens())
        for (const Exponent& b : B.gens()) out.push_back(a + b);
      break;
    case combine_kind::intersection:
      for (const Exponent& a : A.gens())
        for (const Exponent& b : B.gens()) out.push_back(lcm(a, b));
      break;
    case combine_kind::colon: {
      if (B.is_zero()) return MonomialIdeal::unit(d);  // (A : 0) = R
      bool first = true;
      MonomialIdeal acc = MonomialIdeal::zero(d);
      for (const Exponent& b : B.gens()) {
        std::vector<Exponent> shifted;
        for (const Exponent& a : A.gens()) shifted.push_back(colon_shift(a, b));
        MonomialIdeal part(d, std::move(shifted));
        acc = first ? part : intersection(acc, part);
        first = false;
      }
      return acc;
    }
  }
  return MonomialIdeal(d, std::move(out));
}

MonomialIdeal power(const MonomialIdeal& I, const Int& n, power_mode mode, long p) {
  if (n < 0) throw error(errc::validation, "negative power");
  if (mode == power_mode::frobenius) {
    if (n < 1 || (p > 0 && !power_of(n, p)))
      throw error(errc::validation, "frobenius exponent " + n.str() + " is not a power of p");
    std::vector<Exponent> gens;
    gens.reserve(I.gens().size());
    for (const Exponent& g : I.gens()) gens.push_back(g.scaled(n));
    return MonomialIdeal(I.dim(), std::move(gens));
  }
  MonomialIdeal result = MonomialIdeal::unit(I.dim());
  MonomialIdeal base = I;
  Int e = n;
  while (e > 0) {
    if (e % 2 == 1) result = product(result, base);
    e /= 2;
    if (e > 0) base = product(base, base);
  }
  return result;
}

bool is_m_primary(const MonomialIdeal& I) {
  if (I.is_zero()) return false;
  for (int axis = 0; axis < I.dim(); ++axis) {
    bool found = false;
    for (const Exponent& g : I.gens()) {
      bool pure = true;
      for (int i = 0; i < I.dim(); ++i)
        if (i != axis && g[i] != 0) {
          pure = false;
          break;
        }
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace {

/// Per-axis pure-power bound; requires m-primary input.
std::vector<Int> pure_bounds(const MonomialIdeal& I) {
  std::vector<Int> B(I.dim(), Int(-1));
  for (const Exponent& g : I.gens()) {
    int nonzero_axis = -1;
    bool pure = true;
    for (int i = 0; i < I.dim(); ++i) {
      if (g[i] != 0) {
        if (nonzero_axis >= 0) {
          pure = false;
          break;
        }
        nonzero_axis = i;
      }
    }
    if (!pure) continue;
    if (nonzero_axis < 0) {  // unit ideal
      std::fill(B.begin(), B.end(), Int(0));
      return B;
    }
    B[nonzero_axis] = g[nonzero_axis];
  }
  return B;
}

struct Grid {
  std::vector<std::vector<Int>> vals;  // per axis, sorted, last entry = bound
  std::vector<long> ncells;
  long total = 1;
};

Grid build_grid(const MonomialIdeal& I, const std::vector<Int>& B) {
  Grid g;
  const int d = I.dim();
  g.vals.resize(d);
  for (int i = 0; i < d; ++i) {
    std::vector<Int>& v = g.vals[i];
    v.push_back(0);
    for (const Exponent& e : I.gens())
      if (e[i] > 0 && e[i] < B[i]) v.push_back(e[i]);
    v.push_back(B[i]);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  Int cells = 1;
  for (int i = 0; i < d; ++i) {
    g.ncells.push_back(static_cast<long>(g.vals[i].size()) - 1);
    cells *= g.ncells.back();
  }
  if (cells > kMaxGridCells)
    throw error(errc::overflow, "slab grid exceeds the 1e8 cell cap");
  g.total = cells.convert_to<long>();
  return g;
}

}  // namespace

Int colength(const MonomialIdeal& I) {
  if (I.is_unit()) return 0;
  if (!is_m_primary(I))
    throw error(errc::precondition, "ideal is not m-primary: infinite length " + I.str());
  const int d = I.dim();
  std::vector<Int> B = pure_bounds(I);
  Grid grid = build_grid(I, B);
  if (grid.total == 0) return 0;

  std::vector<long> stride(d);
  long acc = 1;
  for (int i = d - 1; i >= 0; --i) {
    stride[i] = acc;
    acc *= grid.ncells[i];
  }
  std::vector<char> covered(static_cast<std::size_t>(grid.total), 0);
  for (const Exponent& g : I.gens()) {
    long idx = 0;
    bool inside = true;
    for (int i = 0; i < d && inside; ++i) {
      if (g[i] >= B[i]) {  // pure-power gen: its cells sit outside the box
        inside = false;
        break;
      }
      auto it = std::lower_bound(grid.vals[i].begin(), grid.vals[i].end(), g[i]);
      idx += stride[i] * (it - grid.vals[i].begin());
    }
    if (inside) covered[static_cast<std::size_t>(idx)] = 1;
  }
  // Cumulative OR along each axis: covered[c] = "some generator's cell <= c".
  for (int i = 0; i < d; ++i) {
    for (long idx = 0; idx < grid.total; ++idx) {
      long pos = (idx / stride[i]) % grid.ncells[i];
      if (pos > 0 && covered[static_cast<std::size_t>(idx - stride[i])])
        covered[static_cast<std::size_t>(idx)] = 1;
    }
  }
  Int count = 0;
  for (long idx = 0; idx < grid.total; ++idx) {
    if (!covered[static_cast<std::size_t>(idx)]) {
      Int cell = 1;
      for (int i = 0; i < d; ++i) {
        long pos = (idx / stride[i]) % grid.ncells[i];
        cell *= grid.vals[i][pos + 1] - grid.vals[i][pos];
      }
      count += cell;
    }
  }
  return count;
}

Int relative_colength(const MonomialIdeal& J, const MonomialIdeal& K) {
  require_same_dim(J, K);
  if (!J.contains(K))
    throw error(errc::precondition, "relative colength requires K subseteq J");
  if (J == K) return 0;
  if (J.is_zero()) return 0;
  const auto& gens = J.gens();
  if (static_cast<long>(gens.size()) > kMaxColonSubsetGens)
    throw error(errc::validation,
                "relative colength capped at " + std::to_string(kMaxColonSubsetGens) +
                    " generators of J");
  const unsigned long nsub = 1ul << gens.size();
  Int total = 0;
  for (unsigned long mask = 1; mask < nsub; ++mask) {
    Exponent l = Exponent::zero(J.dim());
    int bits = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (mask & (1ul << i)) {
        l = lcm(l, gens[i]);
        ++bits;
      }
    MonomialIdeal shifted = colon(K, MonomialIdeal(J.dim(), {l}));
    if (!is_m_primary(shifted))
      throw error(errc::precondition, "lambda(J/K) is infinite");
    Int c = colength(shifted);
    total += (bits % 2 == 1) ? c : -c;
  }
  return total;
}

Int count_below(const MonomialIdeal& I, const Halfspace& H) {
  if (H.dim() != I.dim()) throw error(errc::validation, "halfspace dimension mismatch");
  if (I.is_zero() || H.bound <= 0) return 0;
  const int d = I.dim();
  const auto& gens = I.gens();
  // Walk the first d-1 coordinates; for each prefix the staircase gives a
  // single membership threshold in the last coordinate.
  std::vector<Int> prefix(d - 1, Int(0));
  Int count = 0;
  auto walk = [&](auto&& self, int level, const Rat& used) -> void {
    if (level == d - 1) {
      Int tmin;
      bool any = false;
      for (const Exponent& g : gens) {
        bool fits = true;
        for (int i = 0; i < d - 1; ++i)
          if (g[i] > prefix[i]) {
            fits = false;
            break;
          }
        if (!fits) continue;
        if (!any || g[d - 1] < tmin) tmin = g[d - 1];
        any = true;
      }
      if (any) count += count_integers_below(tmin, (H.bound - used) / H.normal[d - 1]);
      return;
    }
    for (Int x = 0;; ++x) {
      Rat next = used + H.normal[level] * Rat(x);
      if (next >= H.bound) break;
      prefix[level] = x;
      self(self, level + 1, next);
    }
  };
  walk(walk, 0, Rat(0));
  return count;
}

namespace {

/// Lower-left hull chain of a planar antichain, x ascending.
std::vector<Exponent> lower_hull(std::vector<Exponent> pts) {
  std::sort(pts.begin(), pts.end());
  std::vector<Exponent> hull;
  for (const Exponent& p : pts) {
    while (hull.size() >= 2) {
      const Exponent& o = hull[hull.size() - 2];
      const Exponent& a = hull[hull.size() - 1];
      Int cross = (a[0] - o[0]) * (p[1] - o[1]) - (a[1] - o[1]) * (p[0] - o[0]);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  return hull;
}

MonomialIdeal closure_dim2(const MonomialIdeal& I) {
  std::vector<Exponent> hull = lower_hull(I.gens());
  std::vector<Exponent> cands;
  const Exponent& left = hull.front();
  const Exponent& right = hull.back();
  std::size_t seg = 0;
  for (Int x = left[0]; x <= right[0]; ++x) {
    while (seg + 1 < hull.size() && hull[seg + 1][0] < x) ++seg;
    Int y;
    if (seg + 1 >= hull.size()) {
      y = right[1];
    } else {
      const Exponent& a = hull[seg];
      const Exponent& b = hull[seg + 1];
      Rat value = Rat(a[1]) + Rat((x - a[0]) * (b[1] - a[1]), b[0] - a[0]);
      y = ceil_rat(value);
    }
    std::vector<Int> c{x, y};
    cands.emplace_back(std::move(c));
  }
  return MonomialIdeal(2, std::move(cands));
}

MonomialIdeal closure_boxed(const MonomialIdeal& I) {
  const int d = I.dim();
  std::vector<Int> L(d, Int(0));
  for (const Exponent& g : I.gens())
    for (int i = 0; i < d; ++i) L[i] = std::max(L[i], g[i]);
  Int cells = 1;
  for (int i = 0; i < d; ++i) cells *= L[i] + 1;
  if (cells > kMaxGridCells)
    throw error(errc::overflow, "integral closure bounding box exceeds the 1e8 cell cap");
  std::vector<Exponent> cands;
  std::vector<Int> u(d, Int(0));
  while (true) {
    std::vector<Rat> ru(u.begin(), u.end());
    if (detail::in_newton_polyhedron(I.gens(), ru)) cands.emplace_back(u);
    int i = d - 1;
    while (i >= 0) {
      if (++u[i] <= L[i]) break;
      u[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return MonomialIdeal(d, std::move(cands));
}

}  // namespace

MonomialIdeal integral_closure(const MonomialIdeal& I) {
  if (I.is_zero()) throw error(errc::precondition, "integral closure of the zero ideal");
  if (I.is_unit()) return I;
  if (I.dim() == 1) return I;  // principal: already closed
  if (I.dim() == 2) return closure_dim2(I);
  return closure_boxed(I);
}

}  // namespace pfam
