#include "cellkit/signed_perm.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "cellkit/error.hpp"

namespace cellkit {

SignedPermutation::SignedPermutation(std::vector<int> window)
    : w_(std::move(window)) {
  const int d = rank();
  std::vector<bool> seen(d + 1, false);
  for (int v : w_) {
    int a = std::abs(v);
    if (a < 1 || a > d || seen[a])
      throw Error(ErrorCode::InvalidArgument,
                  "window is not a signed permutation");
    seen[a] = true;
  }
}

SignedPermutation SignedPermutation::identity(int d) {
  std::vector<int> w(d);
  std::iota(w.begin(), w.end(), 1);
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::longest(int d) {
  std::vector<int> w(d);
  for (int i = 0; i < d; ++i) w[i] = -(i + 1);
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::simple(int d, int i) {
  return from_word(d, {i});
}

bool SignedPermutation::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (w_[i] != i + 1) return false;
  return true;
}

namespace {

void check_letter(int d, int a) {
  if (a < 0 || a >= d)
    throw Error(ErrorCode::InvalidGenerator,
                "generator s" + std::to_string(a) + " not in rank " +
                    std::to_string(d));
}

// w -> w s_a, in place on the window
void right_multiply(std::vector<int>& w, int a) {
  if (a == 0)
    w[0] = -w[0];
  else
    std::swap(w[a - 1], w[a]);
}

}  // namespace

SignedPermutation from_word(int d, const CoxeterWord& word) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "rank must be positive");
  std::vector<int> w(d);
  std::iota(w.begin(), w.end(), 1);
  for (int a : word) {
    check_letter(d, a);
    right_multiply(w, a);
  }
  return SignedPermutation(std::move(w));
}

SignedPermutation compose(const SignedPermutation& x,
                          const SignedPermutation& y) {
  if (x.rank() != y.rank())
    throw Error(ErrorCode::RankMismatch, "compose: ranks differ");
  std::vector<int> w(x.rank());
  for (int i = 1; i <= x.rank(); ++i) w[i - 1] = x(y(i));
  return SignedPermutation(std::move(w));
}

SignedPermutation inverse(const SignedPermutation& w) {
  std::vector<int> v(w.rank());
  for (int i = 1; i <= w.rank(); ++i) {
    int j = w(i);
    if (j > 0)
      v[j - 1] = i;
    else
      v[-j - 1] = -i;
  }
  return SignedPermutation(std::move(v));
}

int length(const SignedPermutation& w) {
  // 2 l(w) = #{(a, b) in [1,d] x [-d,d] : a<b, w(a)>w(b) or a>b, w(a)<w(b)}
  const int d = w.rank();
  int twice = 0;
  for (int a = 1; a <= d; ++a)
    for (int b = -d; b <= d; ++b) {
      if (a < b && w(a) > w(b)) ++twice;
      if (a > b && w(a) < w(b)) ++twice;
    }
  return twice / 2;
}

int negative_count(const SignedPermutation& w) {
  return static_cast<int>(std::count_if(w.window().begin(), w.window().end(),
                                        [](int v) { return v < 0; }));
}

int weight_a(const SignedPermutation& w) {
  return length(w) - negative_count(w);
}

bool has_descent(const SignedPermutation& w, int i, Side side) {
  check_letter(w.rank(), i);
  if (side == Side::Right) return w(i) > w(i + 1);
  SignedPermutation v = inverse(w);
  return v(i) > v(i + 1);
}

std::vector<int> descents(const SignedPermutation& w, Side side,
                          GeneratorSet gens) {
  const SignedPermutation v = side == Side::Left ? inverse(w) : w;
  std::vector<int> out;
  for (int i = gens == GeneratorSet::Full ? 0 : 1; i < w.rank(); ++i)
    if (v(i) > v(i + 1)) out.push_back(i);
  return out;
}

CoxeterWord reduced_word(const SignedPermutation& w) {
  std::vector<int> v = w.window();
  CoxeterWord word;
  for (;;) {
    int found = -1;
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
      int left = i == 0 ? 0 : v[i - 1];
      if (left > v[i]) {
        found = i;
        break;
      }
    }
    if (found < 0) break;
    word.push_back(found);
    right_multiply(v, found);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

bool in_type_D(const SignedPermutation& w) {
  return negative_count(w) % 2 == 0;
}

bool bruhat_leq(const SignedPermutation& x, const SignedPermutation& y) {
  if (x.rank() != y.rank())
    throw Error(ErrorCode::RankMismatch, "bruhat_leq: ranks differ");
  if (length(x) > length(y)) return false;
  // Walk a reduced word of y from the right: for s with ys < y,
  // x <= y iff min(x, xs) <= ys.
  std::vector<int> a = x.window();
  const CoxeterWord word = reduced_word(y);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int s = *it;
    int left = s == 0 ? 0 : a[s - 1];
    if (left > a[s]) right_multiply(a, s);
  }
  for (int i = 0; i < static_cast<int>(a.size()); ++i)
    if (a[i] != i + 1) return false;
  return true;
}

std::vector<SignedPermutation> enumerate_group(int d, GroupType type,
                                               int bound) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "rank must be positive");
  if (d > bound)
    throw Error(ErrorCode::ResourceLimit,
                "group enumeration limited to rank " + std::to_string(bound));
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<SignedPermutation> out;
  do {
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      if (type == GroupType::D && __builtin_popcount(mask) % 2) continue;
      std::vector<int> w(perm);
      for (int i = 0; i < d; ++i)
        if (mask & (1u << i)) w[i] = -w[i];
      out.emplace_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::pair<int, SignedPermutation>> keyed;
  keyed.reserve(out.size());
  for (auto& w : out) keyed.emplace_back(length(w), std::move(w));
  std::sort(keyed.begin(), keyed.end());
  out.clear();
  for (auto& [l, w] : keyed) out.push_back(std::move(w));
  return out;
}

std::string to_string(const SignedPermutation& w) {
  std::string s = "[";
  for (int i = 0; i < w.rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.window()[i]);
  }
  return s + "]";
}

SignedPermutation parse_signed_perm(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw Error(ErrorCode::Parse, "expected [w1,...,wd]: " + text);
  std::vector<int> w;
  std::stringstream ss(t.substr(1, t.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      w.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad window entry: " + item);
    }
  }
  return SignedPermutation(std::move(w));
}

std::string word_to_string(const CoxeterWord& word) {
  if (word.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) s += ' ';
    s += 's' + std::to_string(word[i]);
  }
  return s;
}

CoxeterWord parse_word(const std::string& text) {
  CoxeterWord word;
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    if (tok == "e") continue;
    if (tok.size() < 2 || tok[0] != 's')
      throw Error(ErrorCode::Parse, "bad generator token: " + tok);
    try {
      size_t used = 0;
      int a = std::stoi(tok.substr(1), &used);
      if (used != tok.size() - 1 || a < 0) throw std::invalid_argument(tok);
      word.push_back(a);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad generator token: " + tok);
    }
  }
  return word;
}

std::uint64_t encode(const SignedPermutation& w) {
  const std::uint64_t base = 2 * w.rank() + 1;
  std::uint64_t key = 0;
  for (int v : w.window()) key = key * base + static_cast<std::uint64_t>(v + w.rank());
  return key;
}

}  // namespace cellkit
