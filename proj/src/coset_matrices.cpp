#include "cellkit/coset_matrices.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "cellkit/error.hpp"
#include "cellkit/symbols.hpp"

namespace cellkit {

EmbedKind embed_kind(MatrixKind kind) {
  return kind == MatrixKind::J ? EmbedKind::B : EmbedKind::C;
}

const char* kind_name(MatrixKind kind) {
  return kind == MatrixKind::J ? "j" : "i";
}

namespace {

void check_n(MatrixKind kind, int n) {
  if (n < 1 || (kind == MatrixKind::J) != (n % 2 == 1))
    throw Error(ErrorCode::ParityMismatch,
                std::string("n = ") + std::to_string(n) +
                    " does not fit kind " + kind_name(kind));
}

int half(MatrixKind kind, int n) { return kind == MatrixKind::J ? (n - 1) / 2 : n / 2; }

// position in index order of label i
int position(MatrixKind kind, int n, int i) {
  int r = half(kind, n);
  if (kind == MatrixKind::J) return i + r;
  return i < 0 ? i + r : i + r - 1;
}

std::vector<int> domain(MatrixKind kind, int d) {
  std::vector<int> v;
  for (int x = -d; x <= d; ++x)
    if (kind == MatrixKind::J || x != 0) v.push_back(x);
  return v;
}

}  // namespace

std::vector<int> index_set(MatrixKind kind, int n) {
  check_n(kind, n);
  return domain(kind, half(kind, n));
}

int CosetMatrix::at(int i, int j) const {
  return rows[position(kind, n, i)][position(kind, n, j)];
}

void validate(const CosetMatrix& a) {
  check_n(a.kind, a.n);
  if (static_cast<int>(a.rows.size()) != a.n)
    throw Error(ErrorCode::InvalidArgument, "matrix has wrong number of rows");
  int total = 0;
  for (int p = 0; p < a.n; ++p) {
    if (static_cast<int>(a.rows[p].size()) != a.n)
      throw Error(ErrorCode::InvalidArgument, "matrix is not square");
    for (int q = 0; q < a.n; ++q) {
      int x = a.rows[p][q];
      if (x < 0) throw Error(ErrorCode::InvalidArgument, "negative entry");
      if (x != a.rows[a.n - 1 - p][a.n - 1 - q])
        throw Error(ErrorCode::InvalidArgument,
                    "matrix is not centrally symmetric");
      total += x;
    }
  }
  int expected = a.kind == MatrixKind::J ? 2 * a.d + 1 : 2 * a.d;
  if (total != expected)
    throw Error(ErrorCode::InvalidArgument, "entry sum does not match rank");
}

CosetMatrix make_matrix(MatrixKind kind, std::vector<std::vector<int>> rows) {
  CosetMatrix a;
  a.kind = kind;
  a.n = static_cast<int>(rows.size());
  int total = 0;
  for (const auto& row : rows)
    for (int x : row) total += x;
  if (kind == MatrixKind::J && total % 2 == 0)
    throw Error(ErrorCode::ParityMismatch, "entry sum must be odd");
  if (kind == MatrixKind::I && total % 2 == 1)
    throw Error(ErrorCode::ParityMismatch, "entry sum must be even");
  a.d = total / 2;
  a.rows = std::move(rows);
  validate(a);
  return a;
}

std::vector<Composition> enumerate_compositions(int n, int d, MatrixKind kind) {
  check_n(kind, n);
  const int r = half(kind, n);
  std::vector<Composition> out;
  std::vector<int> pos(r, 0);  // lambda_1..lambda_r
  std::function<void(int, int, int)> rec = [&](int k, int left, int center) {
    if (k == r) {
      if (left != 0) return;
      Composition c;
      for (int i = r - 1; i >= 0; --i) c.push_back(pos[i]);
      if (kind == MatrixKind::J) c.push_back(center);
      for (int i = 0; i < r; ++i) c.push_back(pos[i]);
      out.push_back(c);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      pos[k] = x;
      rec(k + 1, left - x, center);
    }
  };
  if (kind == MatrixKind::J) {
    for (int c = 1; c <= 2 * d + 1; c += 2) rec(0, d - (c - 1) / 2, c);
  } else {
    rec(0, d, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CosetMatrix> enumerate_Pi(int n, int d, MatrixKind kind) {
  check_n(kind, n);
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "negative rank");
  // free positions: rows strictly below the middle, plus for J the right
  // half of the middle row
  std::vector<std::pair<int, int>> free;
  const int mid = n / 2;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      bool lower = kind == MatrixKind::J ? p > mid : p >= mid;
      bool right_of_centre = kind == MatrixKind::J && p == mid && q > mid;
      if (lower || right_of_centre) free.emplace_back(p, q);
    }
  std::vector<CosetMatrix> out;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  std::function<void(size_t, int)> rec = [&](size_t k, int left) {
    if (k == free.size()) {
      if (left) return;
      CosetMatrix a;
      a.kind = kind;
      a.n = n;
      a.d = d;
      a.rows = rows;
      for (auto [p, q] : free) a.rows[n - 1 - p][n - 1 - q] = a.rows[p][q];
      out.push_back(std::move(a));
      return;
    }
    auto [p, q] = free[k];
    for (int x = 0; x <= left; ++x) {
      rows[p][q] = x;
      rec(k + 1, left - x);
    }
    rows[p][q] = 0;
  };
  if (kind == MatrixKind::J) {
    for (int c = 1; c <= 2 * d + 1; c += 2) {
      rows[mid][mid] = c;
      rec(0, d - (c - 1) / 2);
    }
  } else {
    rec(0, d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Composition ro(const CosetMatrix& a) {
  Composition c;
  for (const auto& row : a.rows) c.push_back(std::accumulate(row.begin(), row.end(), 0));
  return c;
}

Composition co(const CosetMatrix& a) {
  Composition c(a.n, 0);
  for (const auto& row : a.rows)
    for (int q = 0; q < a.n; ++q) c[q] += row[q];
  return c;
}

namespace {

void check_composition(const Composition& lambda, MatrixKind kind) {
  const int n = static_cast<int>(lambda.size());
  check_n(kind, n);
  for (int p = 0; p < n; ++p)
    if (lambda[p] < 0 || lambda[p] != lambda[n - 1 - p])
      throw Error(ErrorCode::InvalidArgument,
                  "composition must be non-negative and symmetric");
  if (kind == MatrixKind::J && lambda[n / 2] % 2 == 0)
    throw Error(ErrorCode::ParityMismatch, "middle part must be odd");
}

}  // namespace

int composition_rank(const Composition& lambda, MatrixKind kind) {
  check_composition(lambda, kind);
  return std::accumulate(lambda.begin(), lambda.end(), 0) / 2;
}

std::vector<std::vector<int>> intervals(const Composition& lambda,
                                        MatrixKind kind) {
  check_composition(lambda, kind);
  const int n = static_cast<int>(lambda.size());
  const int r = half(kind, n);
  std::vector<std::vector<int>> blocks(n);
  int next = 1;
  if (kind == MatrixKind::J) {
    int h = lambda[r] / 2;
    for (int x = -h; x <= h; ++x) blocks[r].push_back(x);
    next = h + 1;
  }
  for (int i = 1; i <= r; ++i) {
    int p = kind == MatrixKind::J ? r + i : r + i - 1;
    int q = n - 1 - p;
    for (int k = 0; k < lambda[p]; ++k) {
      blocks[p].push_back(next + k);
      blocks[q].insert(blocks[q].begin(), -(next + k));
    }
    next += lambda[p];
  }
  return blocks;
}

std::vector<int> parabolic_generators(const Composition& lambda,
                                      MatrixKind kind) {
  const int d = composition_rank(lambda, kind);
  const int n = static_cast<int>(lambda.size());
  const int r = half(kind, n);
  std::vector<bool> cut(d + 1, false);
  int c = kind == MatrixKind::J ? lambda[r] / 2 : 0;
  for (int i = 1; i <= r; ++i) {
    if (c < d) cut[c] = true;
    int p = kind == MatrixKind::J ? r + i : r + i - 1;
    c += lambda[p];
  }
  std::vector<int> gens;
  for (int k = 0; k < d; ++k)
    if (!cut[k]) gens.push_back(k);
  return gens;
}

CosetMatrix matrix_of_triple(const Composition& lambda,
                             const SignedPermutation& g, const Composition& mu,
                             MatrixKind kind) {
  const int d = composition_rank(lambda, kind);
  if (composition_rank(mu, kind) != d || g.rank() != d ||
      lambda.size() != mu.size())
    throw Error(ErrorCode::RankMismatch, "matrix_of_triple: ranks differ");
  auto rl = intervals(lambda, kind);
  auto rm = intervals(mu, kind);
  const int n = static_cast<int>(lambda.size());
  CosetMatrix a;
  a.kind = kind;
  a.n = n;
  a.d = d;
  a.rows.assign(n, std::vector<int>(n, 0));
  std::vector<int> block_of(2 * d + 1, -1);
  for (int p = 0; p < n; ++p)
    for (int x : rl[p]) block_of[x + d] = p;
  for (int q = 0; q < n; ++q)
    for (int x : rm[q]) ++a.rows[block_of[g(x) + d]][q];
  return a;
}

PseudoMatrix pseudo_matrix(const CosetMatrix& a) {
  validate(a);
  const auto values = domain(a.kind, a.d);
  PseudoMatrix cells(a.n, std::vector<std::vector<int>>(a.n));
  size_t next = 0;
  for (int p = 0; p < a.n; ++p)
    for (int q = a.n - 1; q >= 0; --q) {
      auto& cell = cells[p][q];
      for (int k = 0; k < a.rows[p][q]; ++k) cell.push_back(values[next++]);
      std::reverse(cell.begin(), cell.end());
    }
  return cells;
}

SignedPermutation y_of_matrix(const CosetMatrix& a) {
  const auto cells = pseudo_matrix(a);
  const auto values = domain(a.kind, a.d);
  std::vector<int> image;
  for (int q = 0; q < a.n; ++q)
    for (int p = a.n - 1; p >= 0; --p)
      for (int x : cells[p][q]) image.push_back(x);
  std::vector<int> window;
  for (size_t k = 0; k < values.size(); ++k)
    if (values[k] > 0) window.push_back(image[k]);
  for (size_t k = 0; k < values.size(); ++k)
    if (image[k] != -image[values.size() - 1 - k])
      throw Error(ErrorCode::ConventionFailure,
                  "pseudo-matrix reading is not a signed permutation");
  return SignedPermutation(std::move(window));
}

int length_formula(const CosetMatrix& a) {
  validate(a);
  const auto labels = index_set(a.kind, a.n);
  auto inner = [&](int i, int j) {
    long s = 0;
    for (int x : labels)
      for (int y : labels) {
        if (x < i && y < j) s += a.at(x, y);
        if (x > i && y > j) s += a.at(x, y);
      }
    return s;
  };
  long twice = 0;  // twice the subtracted amount
  const int r = half(a.kind, a.n);
  if (a.kind == MatrixKind::J) {
    for (int j = 1; j <= r; ++j) twice += a.at(0, j) * inner(0, j);
    for (int i = 1; i <= r; ++i)
      for (int j : labels) twice += a.at(i, j) * inner(i, j);
    twice += (a.at(0, 0) - 1) / 2 * inner(0, 0);
  } else {
    for (int i = 1; i <= r; ++i)
      for (int j : labels) twice += a.at(i, j) * inner(i, j);
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= r; ++j) twice += a.at(i, j);
  }
  if (twice % 2)
    throw Error(ErrorCode::ConventionFailure, "length formula gave a half-integer");
  return a.d * a.d - static_cast<int>(twice / 2);
}

Partition sigma(const CosetMatrix& a) {
  return pt_shape(y_of_matrix(a), embed_kind(a.kind));
}

std::vector<int> greene_invariants(const CosetMatrix& a) {
  validate(a);
  if (a.n > 4)
    throw Error(ErrorCode::ResourceLimit, "Greene oracle limited to n <= 4");
  const int cells = a.n * a.n;
  std::vector<unsigned> comparable(cells, 0);
  std::vector<int> weight(cells);
  for (int u = 0; u < cells; ++u) {
    int p = u / a.n, q = u % a.n;
    weight[u] = a.rows[p][q];
    for (int v = 0; v < cells; ++v) {
      int p2 = v / a.n, q2 = v % a.n;
      bool le = p >= p2 && q <= q2;
      bool ge = p2 >= p && q2 <= q;
      if (le || ge) comparable[u] |= 1u << v;
    }
  }
  const unsigned full = 1u << cells;
  std::vector<int> width(full, 0), total(full, 0);
  for (unsigned mask = 1; mask < full; ++mask) {
    int low = __builtin_ctz(mask);
    unsigned rest = mask & (mask - 1);
    width[mask] = std::max(width[rest], 1 + width[mask & ~comparable[low]]);
    total[mask] = total[rest] + weight[low];
  }
  std::vector<int> best(cells + 1, 0);
  for (unsigned mask = 0; mask < full; ++mask)
    best[width[mask]] = std::max(best[width[mask]], total[mask]);
  for (int k = 1; k <= cells; ++k) best[k] = std::max(best[k], best[k - 1]);
  return std::vector<int>(best.begin() + 1, best.end());
}

Partition sigma_greene_oracle(const CosetMatrix& a) {
  auto s = greene_invariants(a);
  Partition p;
  int prev = 0;
  for (int x : s) {
    if (x - prev > 0) p.push_back(x - prev);
    prev = x;
  }
  return p;
}

Partition special_partition_of(const Partition& p, MatrixKind kind) {
  SymbolBC s = special_in_class(symbol_from_partition(p, embed_kind(kind)));
  return kind == MatrixKind::J ? par_B(s) : par_C(s);
}

std::vector<TwoSidedClass> two_sided_classify(int n, int d, MatrixKind kind) {
  std::map<Partition, std::vector<CosetMatrix>, std::greater<>> groups;
  for (auto& a : enumerate_Pi(n, d, kind))
    groups[special_partition_of(sigma(a), kind)].push_back(a);
  std::vector<TwoSidedClass> out;
  for (auto& [key, members] : groups) out.push_back({key, std::move(members)});
  return out;
}

std::string to_string(const CosetMatrix& a) {
  std::string s = "[";
  for (int p = 0; p < a.n; ++p) {
    if (p) s += ",";
    s += "[";
    for (int q = 0; q < a.n; ++q) {
      if (q) s += ",";
      s += std::to_string(a.rows[p][q]);
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace cellkit
