#pragma once

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace specrisk {

/// Extended real value: finite, +inf or -inf. Used instead of raw
/// floating-point infinities on public interfaces so callers must
/// acknowledge the infinite cases explicitly.
class ExtendedReal {
 public:
  constexpr ExtendedReal() : value_(0.0), kind_(Kind::Finite) {}
  constexpr ExtendedReal(double v) : value_(v), kind_(Kind::Finite) {}

  static constexpr ExtendedReal pos_inf() { return ExtendedReal(Kind::PosInf); }
  static constexpr ExtendedReal neg_inf() { return ExtendedReal(Kind::NegInf); }

  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  /// Finite value; throws on infinite.
  double finite() const {
    if (!is_finite()) throw std::logic_error("ExtendedReal: value is infinite");
    return value_;
  }

  /// Conversion to double, mapping the infinite states to IEEE infinities.
  double as_double() const {
    switch (kind_) {
      case Kind::PosInf: return std::numeric_limits<double>::infinity();
      case Kind::NegInf: return -std::numeric_limits<double>::infinity();
      default: return value_;
    }
  }

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Kind::Finite || a.value_ == b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtendedReal& x) {
    if (x.is_pos_inf()) return os << "+inf";
    if (x.is_neg_inf()) return os << "-inf";
    return os << x.value_;
  }

 private:
  enum class Kind { Finite, PosInf, NegInf };
  constexpr explicit ExtendedReal(Kind k) : value_(0.0), kind_(k) {}

  double value_;
  Kind kind_;
};

}  // namespace specrisk
