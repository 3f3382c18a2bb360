#include "pfam/numeric.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cctype>
#include <iomanip>
#include <sstream>

namespace pfam {

std::string to_decimal(const Rat& r, int significant_digits) {
  boost::multiprecision::cpp_bin_float_50 f(r);
  std::ostringstream os;
  os << std::setprecision(significant_digits) << f;
  return os.str();
}

Rat parse_rat(const std::string& s) {
  auto fail = [&]() -> Rat { throw error(errc::parse, "cannot parse rational '" + s + "'"); };
  if (s.empty()) return fail();
  auto slash = s.find('/');
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  try {
    if (slash != std::string::npos) {
      std::string a = s.substr(0, slash), b = s.substr(slash + 1);
      if (!is_int(a) || !is_int(b)) return fail();
      Int d(b);
      if (d == 0) return fail();
      return Rat(Int(a), d);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string a = s.substr(0, dot), b = s.substr(dot + 1);
      if (a.empty() || a == "-" || a == "+") a += "0";
      if (!is_int(a) || b.empty()) return fail();
      for (char c : b)
        if (!std::isdigit(static_cast<unsigned char>(c))) return fail();
      Rat whole(Int(a));
      Rat frac(Int(b), pow_int(10, static_cast<unsigned long>(b.size())));
      return whole < 0 || a[0] == '-' ? whole - frac : whole + frac;
    }
    if (!is_int(s)) return fail();
    return Rat(Int(s));
  } catch (const std::exception&) {
    return fail();
  }
}

}  // namespace pfam
