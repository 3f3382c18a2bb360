#ifndef PFAM_REGION_HPP
#define PFAM_REGION_HPP

#include "pfam/family.hpp"
#include "pfam/monomial_ideal.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace pfam {

using RatVec = std::vector<Rat>;

enum class region_kind { staircase, convex };
enum class covolume_method { slab, shoelace, hull_triangulation, lattice_estimate };

/// Orthant-stable region of the nonnegative orthant.
///   staircase: union of apex + orthant over an antichain of rational apexes.
///   convex: conv(vertices) + orthant; exact machinery is provided for d <= 2,
///   where the canonical form is the lower-left hull chain (x ascending).
struct Region {
  region_kind kind = region_kind::staircase;
  int dim = 1;
  std::vector<RatVec> points;

  static Region staircase_region(int dim, std::vector<RatVec> apexes);
  static Region convex_region(int dim, std::vector<RatVec> vertices);
};

struct CovolumeResult {
  std::optional<Rat> value;  // absent when the complement is unbounded
  covolume_method method = covolume_method::slab;
  bool cobounded = false;
  std::optional<long> resolution;  // lattice_estimate only
  std::optional<Rat> envelope;     // lattice_estimate: O(1/q) error bound
};

struct RegionProperties {
  bool convex = false;
  bool cobounded = false;
};

struct PBodyResult {
  Region region;
  bool exact = false;  // q_max reached the finite-type threshold
  std::optional<int> finite_type_threshold;
};

/// Staircase region with apexes at the minimal generators.
Region staircase(const MonomialIdeal& I);

/// conv(gens) + orthant as a convex region (d <= 2).
Region newton_region(const MonomialIdeal& I);

/// Union over q = p^e <= q_max of (1/q)*gens(F at e), as a staircase region.
PBodyResult pbody(const FamilyExpr& F, const Int& q_max, long p);

/// Minkowski sum of scaled regions (scales >= 0). Staircase with staircase in
/// any dimension; convex with convex for d <= 2.
Region minkowski_scale_sum(const std::vector<std::pair<Region, Rat>>& parts);

CovolumeResult covolume(const Region& R);

/// Volume of R ∩ {<u,a> < bound}; exact for d <= 2, lattice estimate beyond.
CovolumeResult volume_below(const Region& R, const Halfspace& H);

RegionProperties region_properties(const Region& R);

}  // namespace pfam

#endif
