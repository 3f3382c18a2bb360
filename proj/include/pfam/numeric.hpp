#ifndef PFAM_NUMERIC_HPP
#define PFAM_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace pfam {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Error kinds, mapped to CLI exit codes (parse -> 2, everything else -> 3).
enum class errc { parse, validation, precondition, unsupported, overflow };

class error : public std::runtime_error {
public:
  error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  errc kind() const { return kind_; }

private:
  errc kind_;
};

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Largest integer <= r.
inline Int floor_rat(const Rat& r) {
  Int q = num(r) / den(r);
  if (num(r) < 0 && q * den(r) != num(r)) --q;
  return q;
}

/// Smallest integer >= r.
inline Int ceil_rat(const Rat& r) {
  Int q = num(r) / den(r);
  if (num(r) > 0 && q * den(r) != num(r)) ++q;
  return q;
}

inline bool is_integer(const Rat& r) { return den(r) == 1; }

/// Number of integers u with lo <= u < hi (0 if empty). hi is rational, lo integral.
inline Int count_integers_below(const Int& lo, const Rat& hi) {
  Int top = is_integer(hi) ? num(hi) : floor_rat(hi) + 1;  // smallest integer NOT allowed
  if (top <= lo) return 0;
  return top - lo;
}

inline Int pow_int(const Int& base, unsigned long exp) {
  Int r = 1, b = base;
  unsigned long e = exp;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline Rat pow_rat(const Rat& base, unsigned long exp) {
  Rat r = 1, b = base;
  unsigned long e = exp;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

/// C(n, 2) and friends; n may be any nonnegative Int.
inline Int binomial2(const Int& n) { return n * (n - 1) / 2; }

inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

/// True iff n is p^k for some k >= 0; on success stores k.
inline bool power_of(const Int& n, long p, unsigned long* k_out = nullptr) {
  if (n < 1) return false;
  Int m = n;
  unsigned long k = 0;
  while (m > 1) {
    if (m % p != 0) return false;
    m /= p;
    ++k;
  }
  if (k_out) *k_out = k;
  return true;
}

std::string to_decimal(const Rat& r, int significant_digits = 12);

/// Renders "num/den" (always with denominator, e.g. "4/1").
inline std::string to_fraction(const Rat& r) {
  return num(r).str() + "/" + den(r).str();
}

/// Accepts "a/b", plain integers, and decimal strings like "1.25".
Rat parse_rat(const std::string& s);

}  // namespace pfam

#endif
