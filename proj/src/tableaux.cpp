#include "cellkit/tableaux.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cellkit/error.hpp"

namespace cellkit {

std::vector<int> embed_sym(const SignedPermutation& w, EmbedKind kind) {
  const int d = w.rank();
  std::vector<int> out;
  if (kind == EmbedKind::B) {
    for (int v = -d; v <= d; ++v) out.push_back(w(v) + d + 1);
  } else {
    auto relabel = [d](int v) { return v < 0 ? v + d + 1 : v + d; };
    for (int v = -d; v <= d; ++v)
      if (v != 0) out.push_back(relabel(w(v)));
  }
  return out;
}

Tableau rs_insert(const std::vector<int>& seq) {
  std::set<int> seen;
  for (int k : seq)
    if (!seen.insert(k).second)
      throw Error(ErrorCode::InvalidArgument,
                  "rs_insert: duplicate entry " + std::to_string(k));
  Tableau t;
  for (int k : seq) {
    for (size_t r = 0;; ++r) {
      if (r == t.size()) {
        t.push_back({k});
        break;
      }
      auto& row = t[r];
      if (k <= row.back()) {
        row.push_back(k);
        break;
      }
      // rows are decreasing: first entry below k is the largest one
      auto it = std::find_if(row.begin(), row.end(),
                             [k](int x) { return x < k; });
      std::swap(*it, k);
    }
  }
  return t;
}

Partition shape(const Tableau& t) {
  Partition p;
  for (const auto& row : t) p.push_back(static_cast<int>(row.size()));
  return p;
}

Partition pt_shape(const SignedPermutation& w, EmbedKind kind) {
  return shape(rs_insert(embed_sym(w, kind)));
}

int size(const Partition& p) {
  int n = 0;
  for (int x : p) n += x;
  return n;
}

Partition conjugate(const Partition& p) {
  Partition q;
  if (p.empty()) return q;
  for (int j = 1; j <= p.front(); ++j) {
    int c = 0;
    for (int x : p)
      if (x >= j) ++c;
    q.push_back(c);
  }
  return q;
}

namespace {

void partitions_rec(int n, int max_part, int parts_left, Partition& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  if (parts_left == 0) return;
  for (int x = std::min(n, max_part); x >= 1; --x) {
    cur.push_back(x);
    partitions_rec(n - x, x, parts_left - 1, cur, out);
    cur.pop_back();
  }
}

std::map<int, int> multiplicities(const Partition& p) {
  std::map<int, int> m;
  for (int x : p) ++m[x];
  return m;
}

}  // namespace

std::vector<Partition> partitions(int n, int max_parts) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, max_parts, cur, out);
  return out;
}

bool even_parts_even_multiplicity(const Partition& p) {
  for (auto [part, mult] : multiplicities(p))
    if (part % 2 == 0 && mult % 2) return false;
  return true;
}

bool odd_parts_even_multiplicity(const Partition& p) {
  for (auto [part, mult] : multiplicities(p))
    if (part % 2 && mult % 2) return false;
  return true;
}

bool is_very_even(const Partition& p) {
  return std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 0; }) &&
         even_parts_even_multiplicity(p);
}

bool is_special(const Partition& p, PartitionKind kind) {
  const int n = size(p);
  const bool want_odd = kind == PartitionKind::B;
  if ((n % 2 == 1) != want_odd)
    throw Error(ErrorCode::ParityMismatch,
                "partition size " + std::to_string(n) + " has wrong parity");
  const Partition t = conjugate(p);
  switch (kind) {
    case PartitionKind::B:
      return even_parts_even_multiplicity(p) && even_parts_even_multiplicity(t);
    case PartitionKind::C:
      return odd_parts_even_multiplicity(p) && odd_parts_even_multiplicity(t);
    case PartitionKind::D:
      return even_parts_even_multiplicity(p) && odd_parts_even_multiplicity(t);
  }
  return false;
}

std::vector<LabeledPartition> enumerate_special(int n, int max_parts,
                                                PartitionKind kind) {
  std::vector<LabeledPartition> out;
  for (const auto& p : partitions(n, max_parts)) {
    if (!is_special(p, kind)) continue;
    if (kind == PartitionKind::D && is_very_even(p)) {
      out.push_back({p, VeryEvenLabel::I});
      out.push_back({p, VeryEvenLabel::II});
    } else {
      out.push_back({p, std::nullopt});
    }
  }
  return out;
}

namespace {

Partition trimmed(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

long long standard_rec(const Partition& p, std::map<Partition, long long>& memo) {
  const int n = size(p);
  if (n <= 1) return 1;
  if (auto it = memo.find(p); it != memo.end()) return it->second;
  long long total = 0;
  const int rows = static_cast<int>(p.size());
  auto at = [&](int i) { return i < rows ? p[i] : 0; };
  for (int i = 0; i < rows; ++i) {
    // horizontal domino at the end of row i
    if (p[i] - 2 >= at(i + 1)) {
      Partition q = p;
      q[i] -= 2;
      total += standard_rec(trimmed(q), memo);
    }
    // vertical domino at the end of rows i, i+1
    if (i + 1 < rows && p[i] == p[i + 1] && p[i + 1] - 1 >= at(i + 2)) {
      Partition q = p;
      --q[i];
      --q[i + 1];
      total += standard_rec(trimmed(q), memo);
    }
  }
  memo[p] = total;
  return total;
}

// Cells of lam/mu, row-major.
std::vector<std::pair<int, int>> skew_cells(const Partition& lam,
                                            const Partition& mu) {
  std::vector<std::pair<int, int>> cells;
  for (size_t i = 0; i < lam.size(); ++i) {
    int start = i < mu.size() ? mu[i] : 0;
    for (int j = start; j < lam[i]; ++j)
      cells.emplace_back(static_cast<int>(i), j);
  }
  return cells;
}

// 1 when nu/mu can be tiled by pieces of a single label, else 0.  The corner
// box is a monomino when with_monomino is set.
int strip_tilings(const Partition& nu, const Partition& mu,
                  bool with_monomino) {
  auto cells = skew_cells(nu, mu);
  std::map<int, int> per_column;
  for (auto [i, j] : cells) ++per_column[j];
  std::set<std::pair<int, int>> single;
  for (auto [i, j] : cells) {
    int c = per_column[j];
    if (c > 2) return 0;
    if (with_monomino && i == 0 && j == 0) {
      if (c != 1) return 0;
      continue;
    }
    if (c == 1) single.insert({i, j});
  }
  // a column holding two cells is a vertical domino: they are adjacent in a
  // skew shape.  Single cells pair off horizontally within runs.
  std::set<std::pair<int, int>> used;
  for (auto cell : single) {
    if (used.count(cell)) continue;
    auto right = std::make_pair(cell.first, cell.second + 1);
    if (!single.count(right) || used.count(right)) return 0;
    used.insert(cell);
    used.insert(right);
  }
  return 1;
}

void between(const Partition& lo, const Partition& hi, size_t i, Partition& cur,
             std::vector<Partition>& out) {
  if (i == hi.size()) {
    out.push_back(trimmed(cur));
    return;
  }
  int low = i < lo.size() ? lo[i] : 0;
  int high = hi[i];
  if (i > 0) high = std::min(high, cur[i - 1]);
  for (int x = low; x <= high; ++x) {
    cur[i] = x;
    between(lo, hi, i + 1, cur, out);
  }
}

}  // namespace

long long count_standard_domino(const Partition& p) {
  std::map<Partition, long long> memo;
  Partition q = trimmed(p);
  if (size(q) == 0) return 1;
  return standard_rec(q, memo);
}

long long count_semistandard_domino(const Partition& p, int bound,
                                    bool monomino_entry_one) {
  const Partition lam = trimmed(p);
  const int n = size(lam);
  if (n % 2 == 0 && monomino_entry_one)
    throw Error(ErrorCode::ParityMismatch,
                "monomino requested for a shape of even size");
  if (bound < 0) throw Error(ErrorCode::InvalidArgument, "negative bound");
  Partition start;
  if (n % 2 == 1 && !monomino_entry_one) start = {1};
  std::map<std::pair<int, Partition>, long long> memo;
  auto rec = [&](auto&& self, int level, const Partition& mu) -> long long {
    if (level > bound) return mu == lam ? 1 : 0;
    auto key = std::make_pair(level, mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<Partition> nus;
    Partition cur(lam.size(), 0);
    between(mu, lam, 0, cur, nus);
    long long total = 0;
    const bool mono = monomino_entry_one && level == 1;
    for (const auto& nu : nus) {
      int added = size(nu) - size(mu);
      if ((added - (mono ? 1 : 0)) % 2 != 0) continue;
      if (mono && nu.empty()) continue;
      if (strip_tilings(nu, mu, mono)) total += self(self, level + 1, nu);
    }
    memo[key] = total;
    return total;
  };
  if (n % 2 == 1 && monomino_entry_one && bound == 0) return 0;
  return rec(rec, 1, start);
}

std::string partition_to_string(const Partition& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

}  // namespace cellkit
