#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "hsplit/error.hpp"

namespace hsplit {

using Weight = boost::multiprecision::cpp_int;

inline Weight parse_weight(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("bad weight '" + s + "'");
  return Weight(s);
}

inline std::string to_string(const Weight& w) { return w.str(); }

inline bool fits_int64(const Weight& w) {
  return w <= std::numeric_limits<std::int64_t>::max() && w >= std::numeric_limits<std::int64_t>::min();
}

// Integers extended by -inf and +inf. Set-function values use this so that
// functions which are -inf outside a few sets can be expressed.
class ExtInt {
 public:
  enum class Kind : std::int8_t { neg_inf = -1, finite = 0, pos_inf = 1 };

  ExtInt() = default;
  ExtInt(Weight v) : v_(std::move(v)) {}
  ExtInt(long long v) : v_(v) {}
  ExtInt(int v) : v_(v) {}

  static ExtInt neg_inf() { return ExtInt(Kind::neg_inf); }
  static ExtInt pos_inf() { return ExtInt(Kind::pos_inf); }

  Kind kind() const { return k_; }
  bool finite() const { return k_ == Kind::finite; }
  bool is_neg_inf() const { return k_ == Kind::neg_inf; }
  bool is_pos_inf() const { return k_ == Kind::pos_inf; }

  const Weight& value() const {
    if (!finite()) throw ContractViolation("infinite value used as an integer");
    return v_;
  }

  ExtInt operator-() const {
    if (k_ == Kind::neg_inf) return pos_inf();
    if (k_ == Kind::pos_inf) return neg_inf();
    return ExtInt(Weight(-v_));
  }

  friend ExtInt operator+(const ExtInt& a, const ExtInt& b) {
    if (a.finite() && b.finite()) return ExtInt(Weight(a.v_ + b.v_));
    if ((a.is_neg_inf() && b.is_pos_inf()) || (a.is_pos_inf() && b.is_neg_inf()))
      throw ContractViolation("undefined sum of +inf and -inf");
    return a.finite() ? b : a;
  }
  friend ExtInt operator-(const ExtInt& a, const ExtInt& b) { return a + (-b); }

  friend bool operator==(const ExtInt& a, const ExtInt& b) {
    return a.k_ == b.k_ && (!a.finite() || a.v_ == b.v_);
  }
  friend std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
    if (a.k_ != b.k_) return a.k_ <=> b.k_;
    if (!a.finite()) return std::strong_ordering::equal;
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (b.v_ < a.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    if (k_ == Kind::neg_inf) return "-inf";
    if (k_ == Kind::pos_inf) return "inf";
    return v_.str();
  }

 private:
  explicit ExtInt(Kind k) : k_(k) {}
  Kind k_ = Kind::finite;
  Weight v_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const ExtInt& x) { return os << x.str(); }

inline ExtInt min(const ExtInt& a, const ExtInt& b) { return b < a ? b : a; }
inline ExtInt max(const ExtInt& a, const ExtInt& b) { return a < b ? b : a; }

}  // namespace hsplit
