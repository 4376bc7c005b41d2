#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cellkit {

// Element of Z[q, q^{-1}], stored densely between its lowest and highest
// exponent.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(long long c) { return monomial(c, 0); }
  static LaurentPoly monomial(long long c, int e);
  // q^e - q^{-e}
  static LaurentPoly q_minus_inverse(int e);

  bool is_zero() const { return c_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  long long coeff(int e) const;
  std::map<int, long long> terms() const;

  LaurentPoly bar() const;  // q -> q^{-1}
  LaurentPoly shifted(int e) const;  // times q^e
  bool nonnegative() const;
  bool in_negative_part() const;  // lies in q^{-1} Z[q^{-1}]
  // Bar-invariant polynomial agreeing with this one in degrees >= 0.
  LaurentPoly symmetrized_nonnegative_part() const;
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(long long k);
  // this += a * b
  void add_product(const LaurentPoly& a, const LaurentPoly& b, long long sign = 1);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a) { return a *= -1; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const;
  static LaurentPoly parse(const std::string& text);

 private:
  void trim();
  void reserve_range(int lo, int hi);

  int low_ = 0;
  std::vector<long long> c_;
};

}  // namespace cellkit
