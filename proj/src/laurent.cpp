#include "cellkit/laurent.hpp"

#include <algorithm>
#include <cctype>

#include "cellkit/error.hpp"

namespace cellkit {

LaurentPoly LaurentPoly::monomial(long long c, int e) {
  LaurentPoly p;
  if (c != 0) {
    p.low_ = e;
    p.c_ = {c};
  }
  return p;
}

LaurentPoly LaurentPoly::q_minus_inverse(int e) {
  return monomial(1, e) - monomial(1, -e);
}

long long LaurentPoly::coeff(int e) const {
  if (is_zero() || e < low_ || e > high()) return 0;
  return c_[e - low_];
}

std::map<int, long long> LaurentPoly::terms() const {
  std::map<int, long long> t;
  for (size_t k = 0; k < c_.size(); ++k)
    if (c_[k]) t[low_ + static_cast<int>(k)] = c_[k];
  return t;
}

void LaurentPoly::trim() {
  size_t first = 0;
  while (first < c_.size() && c_[first] == 0) ++first;
  if (first == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  size_t last = c_.size();
  while (c_[last - 1] == 0) --last;
  if (first > 0 || last < c_.size()) {
    c_ = std::vector<long long>(c_.begin() + first, c_.begin() + last);
    low_ += static_cast<int>(first);
  }
}

void LaurentPoly::reserve_range(int lo, int hi) {
  if (c_.empty()) {
    low_ = lo;
    c_.assign(hi - lo + 1, 0);
    return;
  }
  int cur_hi = high();
  if (lo < low_) {
    c_.insert(c_.begin(), low_ - lo, 0);
    low_ = lo;
  }
  if (hi > cur_hi) c_.resize(hi - low_ + 1, 0);
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  if (is_zero()) return p;
  p.low_ = -high();
  p.c_.assign(c_.rbegin(), c_.rend());
  return p;
}

LaurentPoly LaurentPoly::shifted(int e) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += e;
  return p;
}

bool LaurentPoly::nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](long long x) { return x >= 0; });
}

bool LaurentPoly::in_negative_part() const { return is_zero() || high() < 0; }

LaurentPoly LaurentPoly::symmetrized_nonnegative_part() const {
  LaurentPoly p;
  for (int e = std::max(0, low_); !is_zero() && e <= high(); ++e) {
    long long c = coeff(e);
    if (!c) continue;
    p += monomial(c, e);
    if (e) p += monomial(c, -e);
  }
  return p;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(
    const LaurentPoly& divisor) const {
  if (divisor.is_zero())
    throw Error(ErrorCode::DivisionNotExact, "division by zero");
  LaurentPoly rest = *this, quotient;
  const int min_exp = is_zero() ? 0 : low() - divisor.low();
  const long long lead = divisor.c_.back();
  while (!rest.is_zero()) {
    int e = rest.high() - divisor.high();
    if (e < min_exp) return std::nullopt;
    long long top = rest.c_.back();
    if (top % lead) return std::nullopt;
    LaurentPoly term = monomial(top / lead, e);
    quotient += term;
    rest.add_product(term, divisor, -1);
  }
  return quotient;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  reserve_range(o.low_, o.high());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[o.low_ - low_ + k] += o.c_[k];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  reserve_range(o.low_, o.high());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[o.low_ - low_ + k] -= o.c_[k];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(long long k) {
  if (k == 0) {
    c_.clear();
    low_ = 0;
  }
  for (auto& x : c_) x *= k;
  return *this;
}

void LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b,
                              long long sign) {
  if (a.is_zero() || b.is_zero()) return;
  reserve_range(a.low_ + b.low_, a.high() + b.high());
  const int base = a.low_ + b.low_ - low_;
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    const long long ai = sign * a.c_[i];
    for (size_t j = 0; j < b.c_.size(); ++j) c_[base + i + j] += ai * b.c_[j];
  }
  trim();
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  p.add_product(a, b);
  return p;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (auto [e, c] : terms()) {
    std::string mono = e == 1 ? "q" : "q^" + std::to_string(e);
    std::string term;
    if (e == 0)
      term = std::to_string(c);
    else if (c == 1)
      term = mono;
    else if (c == -1)
      term = "-" + mono;
    else
      term = std::to_string(c) + "*" + mono;
    if (!s.empty() && term[0] != '-') s += "+";
    s += term;
  }
  return s;
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw Error(ErrorCode::Parse, "empty polynomial");
  LaurentPoly p;
  size_t i = 0;
  auto bad = [&]() { return Error(ErrorCode::Parse, "bad polynomial: " + text); };
  while (i < t.size()) {
    long long sign = 1;
    if (t[i] == '+' || t[i] == '-') {
      if (t[i] == '-') sign = -1;
      ++i;
    }
    size_t j = i;
    while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
    long long c = 1;
    bool has_coeff = j > i;
    if (has_coeff) c = std::stoll(t.substr(i, j - i));
    i = j;
    int e = 0;
    if (i < t.size() && (t[i] == '*' || t[i] == 'q')) {
      if (t[i] == '*') {
        if (!has_coeff) throw bad();
        ++i;
      }
      if (i >= t.size() || t[i] != 'q') throw bad();
      ++i;
      e = 1;
      if (i < t.size() && t[i] == '^') {
        ++i;
        size_t k = i;
        if (k < t.size() && t[k] == '-') ++k;
        size_t m = k;
        while (m < t.size() && std::isdigit(static_cast<unsigned char>(t[m]))) ++m;
        if (m == k) throw bad();
        e = std::stoi(t.substr(i, m - i));
        i = m;
      }
    } else if (!has_coeff) {
      throw bad();
    }
    p += monomial(sign * c, e);
    if (i < t.size() && t[i] != '+' && t[i] != '-') throw bad();
  }
  return p;
}

}  // namespace cellkit
