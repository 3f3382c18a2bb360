#ifndef PFAM_EXPONENT_HPP
#define PFAM_EXPONENT_HPP

#include "pfam/numeric.hpp"

#include <algorithm>
#include <initializer_list>
#include <vector>

namespace pfam {

/// Exponent vector of a monomial: d nonnegative integers ordered by
/// componentwise divisibility.
class Exponent {
public:
  Exponent() = default;
  explicit Exponent(std::vector<Int> coords) : c_(std::move(coords)) { check(); }
  Exponent(std::initializer_list<long> coords) {
    c_.reserve(coords.size());
    for (long v : coords) c_.emplace_back(v);
    check();
  }
  static Exponent zero(int dim) { return Exponent(std::vector<Int>(dim, Int(0))); }

  int dim() const { return static_cast<int>(c_.size()); }
  const Int& operator[](int i) const { return c_[i]; }
  Int& operator[](int i) { return c_[i]; }
  const std::vector<Int>& coords() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Int& v) { return v == 0; });
  }

  Int total_degree() const {
    Int s = 0;
    for (const Int& v : c_) s += v;
    return s;
  }

  /// g divides this monomial, i.e. g <= this componentwise.
  bool dominates(const Exponent& g) const {
    for (int i = 0; i < dim(); ++i)
      if (c_[i] < g.c_[i]) return false;
    return true;
  }

  friend Exponent operator+(const Exponent& a, const Exponent& b) {
    Exponent r = a;
    for (int i = 0; i < r.dim(); ++i) r.c_[i] += b.c_[i];
    return r;
  }

  Exponent scaled(const Int& k) const {
    Exponent r = *this;
    for (Int& v : r.c_) v *= k;
    return r;
  }

  /// Componentwise max: exponent of lcm of the two monomials.
  friend Exponent lcm(const Exponent& a, const Exponent& b) {
    Exponent r = a;
    for (int i = 0; i < r.dim(); ++i) r.c_[i] = std::max(r.c_[i], b.c_[i]);
    return r;
  }

  /// Componentwise max(a - b, 0): exponent of a : b in the colon sense.
  friend Exponent colon_shift(const Exponent& a, const Exponent& b) {
    Exponent r = a;
    for (int i = 0; i < r.dim(); ++i) {
      r.c_[i] -= b.c_[i];
      if (r.c_[i] < 0) r.c_[i] = 0;
    }
    return r;
  }

  friend bool operator==(const Exponent& a, const Exponent& b) { return a.c_ == b.c_; }
  friend bool operator<(const Exponent& a, const Exponent& b) { return a.c_ < b.c_; }

private:
  void check() const {
    for (const Int& v : c_)
      if (v < 0) throw error(errc::validation, "exponent coordinates must be nonnegative");
  }

  std::vector<Int> c_;
};

}  // namespace pfam

#endif
