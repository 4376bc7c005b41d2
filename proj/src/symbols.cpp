#include "cellkit/symbols.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "cellkit/error.hpp"

namespace cellkit {

namespace {

void check_row(const std::vector<int>& row) {
  for (size_t i = 0; i < row.size(); ++i) {
    if (row[i] < 0 || (i && row[i] <= row[i - 1]))
      throw Error(ErrorCode::InvalidArgument,
                  "symbol rows must be strictly increasing and non-negative");
  }
}

int entry_sum(const std::vector<int>& a, const std::vector<int>& b) {
  return std::accumulate(a.begin(), a.end(), 0) +
         std::accumulate(b.begin(), b.end(), 0);
}

std::vector<int> shifted_row(const std::vector<int>& row) {
  std::vector<int> out{0};
  for (int x : row) out.push_back(x + 1);
  return out;
}

std::vector<int> unshifted_row(const std::vector<int>& row) {
  std::vector<int> out;
  for (size_t i = 1; i < row.size(); ++i) out.push_back(row[i] - 1);
  return out;
}

std::vector<int> sorted_entries(const std::vector<int>& a,
                                const std::vector<int>& b) {
  std::vector<int> all(a);
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  return all;
}

Partition par_from_values(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  Partition p;
  for (size_t k = 0; k < values.size(); ++k)
    if (values[k] - static_cast<int>(k) > 0)
      p.push_back(values[k] - static_cast<int>(k));
  std::reverse(p.begin(), p.end());
  return p;
}

}  // namespace

void validate(const SymbolBC& s) {
  check_row(s.top);
  check_row(s.bottom);
  if (s.top.size() != s.bottom.size() + 1)
    throw Error(ErrorCode::InvalidArgument,
                "type B/C symbol needs one more entry on top");
  if (rank(s) < 0)
    throw Error(ErrorCode::InvalidArgument, "symbol of negative rank");
}

void validate(const SymbolD& s) {
  check_row(s.top);
  check_row(s.bottom);
  if (s.top.size() != s.bottom.size())
    throw Error(ErrorCode::InvalidArgument,
                "type D symbol needs rows of equal length");
  if (s.twin && s.top != s.bottom)
    throw Error(ErrorCode::InvalidArgument,
                "twin label on a symbol with distinct rows");
  if (rank(s) < 0)
    throw Error(ErrorCode::InvalidArgument, "symbol of negative rank");
}

int defect(const SymbolBC& s) { return static_cast<int>(s.bottom.size()); }
int defect(const SymbolD& s) { return static_cast<int>(s.bottom.size()); }

int rank(const SymbolBC& s) {
  int m = defect(s);
  return entry_sum(s.top, s.bottom) - m * m;
}

int rank(const SymbolD& s) {
  int m = defect(s);
  return entry_sum(s.top, s.bottom) - m * (m - 1);
}

bool is_twin(const SymbolD& s) { return s.top == s.bottom; }

SymbolBC shift(const SymbolBC& s) {
  return {shifted_row(s.top), shifted_row(s.bottom)};
}

SymbolD shift(const SymbolD& s) {
  return {shifted_row(s.top), shifted_row(s.bottom), s.twin};
}

SymbolBC normalize(const SymbolBC& s) {
  validate(s);
  SymbolBC r = s;
  while (!r.bottom.empty() && r.top.front() == 0 && r.bottom.front() == 0)
    r = {unshifted_row(r.top), unshifted_row(r.bottom)};
  return r;
}

SymbolD normalize(const SymbolD& s) {
  validate(s);
  SymbolD r = s;
  while (!r.bottom.empty() && r.top.front() == 0 && r.bottom.front() == 0)
    r = {unshifted_row(r.top), unshifted_row(r.bottom), r.twin};
  if (!r.twin && r.bottom < r.top) std::swap(r.top, r.bottom);
  return r;
}

Partition par_B(const SymbolBC& s) {
  validate(s);
  std::vector<int> v;
  for (int x : s.top) v.push_back(2 * x + 1);
  for (int x : s.bottom) v.push_back(2 * x);
  return par_from_values(v);
}

Partition par_C(const SymbolBC& s) {
  validate(s);
  std::vector<int> v;
  for (int x : s.top) v.push_back(2 * x);
  for (int x : s.bottom) v.push_back(2 * x + 1);
  return par_from_values(v);
}

SymbolBC symbol_from_partition(const Partition& p, EmbedKind kind) {
  std::vector<int> q(p.rbegin(), p.rend());
  if (q.size() % 2 == 0) q.insert(q.begin(), 0);
  SymbolBC s;
  for (size_t k = 0; k < q.size(); ++k) {
    int nu = q[k] + static_cast<int>(k);
    bool odd = nu % 2;
    bool goes_top = kind == EmbedKind::B ? odd : !odd;
    (goes_top ? s.top : s.bottom).push_back(odd ? (nu - 1) / 2 : nu / 2);
  }
  if (s.top.size() != s.bottom.size() + 1)
    throw Error(ErrorCode::NotSymbolPartition,
                partition_to_string(p) + " is not the partition of a symbol");
  return s;
}

namespace {

template <typename S>
std::pair<S, S> common_defect(S a, S b) {
  while (defect(a) < defect(b)) a = shift(a);
  while (defect(b) < defect(a)) b = shift(b);
  return {a, b};
}

}  // namespace

bool approx_equal(const SymbolBC& a, const SymbolBC& b) {
  validate(a);
  validate(b);
  auto [x, y] = common_defect(a, b);
  return sorted_entries(x.top, x.bottom) == sorted_entries(y.top, y.bottom);
}

bool approx_equal(const SymbolD& a, const SymbolD& b,
                  DEquivalenceOptions opts) {
  validate(a);
  validate(b);
  auto [x, y] = common_defect(a, b);
  if (!opts.twins_identical && is_twin(x) && is_twin(y) && x.twin != y.twin)
    return false;
  auto ex = sorted_entries(x.top, x.bottom);
  auto ey = sorted_entries(y.top, y.bottom);
  if (opts.entries == EntryComparison::Multisets) return ex == ey;
  return std::set<int>(ex.begin(), ex.end()) ==
         std::set<int>(ey.begin(), ey.end());
}

bool same_class(const SymbolBC& a, const SymbolBC& b) {
  return normalize(a) == normalize(b);
}

bool same_class(const SymbolD& a, const SymbolD& b, bool twins_identical) {
  SymbolD x = normalize(a), y = normalize(b);
  if (twins_identical) x.twin = y.twin = std::nullopt;
  return x == y;
}

bool is_special_symbol(const SymbolBC& s) {
  validate(s);
  for (size_t i = 0; i < s.bottom.size(); ++i)
    if (!(s.top[i] <= s.bottom[i] && s.bottom[i] <= s.top[i + 1]))
      return false;
  return true;
}

namespace {

bool interlaces(const std::vector<int>& a, const std::vector<int>& b) {
  // a_1 <= b_1 <= a_2 <= b_2 <= ... <= a_m <= b_m
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (i + 1 < a.size() && b[i] > a[i + 1]) return false;
  }
  return true;
}

}  // namespace

bool is_special_symbol(const SymbolD& s) {
  validate(s);
  return interlaces(s.top, s.bottom) || interlaces(s.bottom, s.top);
}

SymbolBC special_in_class(const SymbolBC& s) {
  validate(s);
  auto z = sorted_entries(s.top, s.bottom);
  SymbolBC r;
  for (size_t k = 0; k < z.size(); ++k) (k % 2 ? r.bottom : r.top).push_back(z[k]);
  return normalize(r);
}

SymbolD special_in_class(const SymbolD& s) {
  validate(s);
  auto z = sorted_entries(s.top, s.bottom);
  SymbolD r;
  for (size_t k = 0; k < z.size(); ++k) (k % 2 ? r.bottom : r.top).push_back(z[k]);
  if (is_twin(r)) r.twin = s.twin;
  return normalize(r);
}

SymbolD chi(const SymbolBC& s) {
  validate(s);
  SymbolD r{s.top, shifted_row(s.bottom), std::nullopt};
  return r;
}

SymbolD sym(const SignedPermutation& w) {
  return normalize(
      chi(symbol_from_partition(pt_shape(w, EmbedKind::C), EmbedKind::C)));
}

namespace {

void rows_with_sum(int len, int sum, int min_value, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (len == 0) {
    if (sum == 0) out.push_back(cur);
    return;
  }
  // smallest possible total of len increasing values starting at v
  for (int v = min_value; len * v + len * (len - 1) / 2 <= sum; ++v) {
    cur.push_back(v);
    rows_with_sum(len - 1, sum - v, v + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<SymbolBC> enumerate_symbols(int d, int m) {
  std::vector<SymbolBC> out;
  const int total = d + m * m;
  for (int top_sum = 0; top_sum <= total; ++top_sum) {
    std::vector<std::vector<int>> tops, bottoms;
    std::vector<int> cur;
    rows_with_sum(m + 1, top_sum, 0, cur, tops);
    rows_with_sum(m, total - top_sum, 0, cur, bottoms);
    for (const auto& t : tops)
      for (const auto& b : bottoms) out.push_back({t, b});
  }
  std::sort(out.begin(), out.end(), [](const SymbolBC& a, const SymbolBC& b) {
    return std::tie(a.top, a.bottom) < std::tie(b.top, b.bottom);
  });
  return out;
}

namespace {

std::string row_string(const std::vector<int>& row) {
  std::string s;
  for (size_t i = 0; i < row.size(); ++i) {
    if (i) s += "<";
    s += std::to_string(row[i]);
  }
  return s;
}

std::vector<int> parse_row(const std::string& text) {
  std::vector<int> row;
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) return row;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, '<')) {
    try {
      size_t used = 0;
      row.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad symbol entry: " + item);
    }
  }
  return row;
}

std::pair<std::vector<int>, std::vector<int>> parse_rows(const std::string& text,
                                                         std::string& suffix) {
  auto open = text.find('{');
  auto close = text.rfind('}');
  auto slash = text.find('/');
  if (open == std::string::npos || close == std::string::npos ||
      slash == std::string::npos || !(open < slash && slash < close))
    throw Error(ErrorCode::Parse, "expected {top / bottom}: " + text);
  suffix = text.substr(close + 1);
  return {parse_row(text.substr(open + 1, slash - open - 1)),
          parse_row(text.substr(slash + 1, close - slash - 1))};
}

}  // namespace

std::string to_string(const SymbolBC& s) {
  return "{" + row_string(s.top) + " / " + row_string(s.bottom) + "}";
}

std::string to_string(const SymbolD& s) {
  std::string out = "{" + row_string(s.top) + " / " + row_string(s.bottom) + "}";
  if (s.twin) out += *s.twin == VeryEvenLabel::I ? "_I" : "_II";
  return out;
}

SymbolBC parse_symbol_bc(const std::string& text) {
  std::string suffix;
  auto [top, bottom] = parse_rows(text, suffix);
  SymbolBC s{top, bottom};
  validate(s);
  return s;
}

SymbolD parse_symbol_d(const std::string& text) {
  std::string suffix;
  auto [top, bottom] = parse_rows(text, suffix);
  SymbolD s{top, bottom, std::nullopt};
  if (suffix == "_I")
    s.twin = VeryEvenLabel::I;
  else if (suffix == "_II")
    s.twin = VeryEvenLabel::II;
  else if (!suffix.empty())
    throw Error(ErrorCode::Parse, "bad twin label: " + suffix);
  validate(s);
  return s;
}

}  // namespace cellkit
