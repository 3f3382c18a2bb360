#ifndef PFAM_MONOMIAL_IDEAL_HPP
#define PFAM_MONOMIAL_IDEAL_HPP

#include "pfam/exponent.hpp"
#include "pfam/numeric.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace pfam {

/// Truncating halfspace {u : <u, normal> < bound} with strictly positive
/// rational normal, so the slice of the orthant is bounded.
struct Halfspace {
  std::vector<Rat> normal;
  Rat bound;

  Halfspace(std::vector<Rat> n, Rat b) : normal(std::move(n)), bound(std::move(b)) {
    for (const Rat& a : normal)
      if (a <= 0) throw error(errc::validation, "halfspace normal must be strictly positive");
  }
  int dim() const { return static_cast<int>(normal.size()); }
};

enum class combine_kind { sum, product, intersection, colon };
enum class power_mode { ordinary, frobenius };

/// A monomial ideal in d variables, stored as the antichain of minimal
/// generator exponents, sorted lexicographically. Empty gens is the zero
/// ideal; the single generator 0 is the unit ideal.
class MonomialIdeal {
public:
  explicit MonomialIdeal(int dim) : dim_(dim), gens_() {
    if (dim < 1) throw error(errc::validation, "ambient dimension must be >= 1");
  }
  MonomialIdeal(int dim, std::vector<Exponent> gens);

  static MonomialIdeal unit(int dim) { return MonomialIdeal(dim, {Exponent::zero(dim)}); }
  static MonomialIdeal zero(int dim) { return MonomialIdeal(dim); }
  /// The maximal ideal (x_1, ..., x_d).
  static MonomialIdeal maximal(int dim);

  int dim() const { return dim_; }
  const std::vector<Exponent>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_zero(); }

  /// Monomial membership: x^u in I.
  bool contains(const Exponent& u) const;
  /// Ideal containment: other subseteq this.
  bool contains(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.dim_ == b.dim_ && a.gens_ == b.gens_;
  }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I);

private:
  int dim_;
  std::vector<Exponent> gens_;
};

/// The unique minimal antichain generating the same ideal.
MonomialIdeal minimalize(int dim, std::vector<Exponent> gens);

MonomialIdeal combine(const MonomialIdeal& A, const MonomialIdeal& B, combine_kind kind);

inline MonomialIdeal sum(const MonomialIdeal& A, const MonomialIdeal& B) {
  return combine(A, B, combine_kind::sum);
}
inline MonomialIdeal product(const MonomialIdeal& A, const MonomialIdeal& B) {
  return combine(A, B, combine_kind::product);
}
inline MonomialIdeal intersection(const MonomialIdeal& A, const MonomialIdeal& B) {
  return combine(A, B, combine_kind::intersection);
}
/// (A : B); for multi-generator B this is the intersection of the colons by
/// the generators of B.
inline MonomialIdeal colon(const MonomialIdeal& A, const MonomialIdeal& B) {
  return combine(A, B, combine_kind::colon);
}

/// I^n (ordinary) or I^[n] (frobenius; n must be a power of the configured p).
MonomialIdeal power(const MonomialIdeal& I, const Int& n, power_mode mode, long p = 0);

inline MonomialIdeal ordinary_power(const MonomialIdeal& I, const Int& n) {
  return power(I, n, power_mode::ordinary);
}
/// Frobenius power: every generator scaled by q. Callers that already know q
/// is a p-power may skip validation by leaving p = 0.
inline MonomialIdeal frobenius_power(const MonomialIdeal& I, const Int& q, long p = 0) {
  return power(I, q, power_mode::frobenius, p);
}

/// Minimal generators of the set of lattice points in conv(gens) + orthant.
MonomialIdeal integral_closure(const MonomialIdeal& I);

/// True iff each axis carries a pure-power generator.
bool is_m_primary(const MonomialIdeal& I);

/// Exact number of standard monomials (lattice points outside I); errors on
/// non-m-primary input (infinite length).
Int colength(const MonomialIdeal& I);

/// #(Exp(J) \ Exp(K)) for K subseteq J, via inclusion-exclusion over
/// generator subsets of J; requires the result to be finite.
Int relative_colength(const MonomialIdeal& J, const MonomialIdeal& K);

/// #{u in Exp(I) : <u, normal> < bound}.
Int count_below(const MonomialIdeal& I, const Halfspace& H);

namespace detail {
/// Antichain of componentwise-minimal points; generic over Int/Rat points.
template <typename Vec>
std::vector<Vec> minimal_points(std::vector<Vec> pts);

/// Feasibility of { lambda >= 0, sum lambda = 1, sum lambda*g <= u }:
/// membership of u in conv(points) + orthant, by exact Phase-I simplex.
bool in_newton_polyhedron(const std::vector<Exponent>& points, const std::vector<Rat>& u);
}  // namespace detail

}  // namespace pfam

#endif
