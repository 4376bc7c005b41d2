#include "cellkit/hecke.hpp"

#include <deque>
#include <set>

#include "cellkit/error.hpp"

namespace cellkit {

WeylGroupB::WeylGroupB(int d, int bound)
    : d_(d), elements_(enumerate_group(d, GroupType::B, bound)) {
  std::uint64_t span = 1;
  for (int i = 0; i < d; ++i) span *= 2 * d + 1;
  lookup_.assign(span, -1);
  for (int w = 0; w < size(); ++w) lookup_[encode(elements_[w])] = w;
  std::vector<SignedPermutation> gens;
  for (int s = 0; s < d; ++s) gens.push_back(SignedPermutation::simple(d, s));
  right_.assign(size(), std::vector<int>(d));
  left_.assign(size(), std::vector<int>(d));
  for (int w = 0; w < size(); ++w) {
    const auto& x = elements_[w];
    for (int s = 0; s < d; ++s) {
      right_[w][s] = index(compose(x, gens[s]));
      left_[w][s] = index(compose(gens[s], x));
    }
    inverse_.push_back(index(cellkit::inverse(x)));
    length_.push_back(cellkit::length(x));
    negatives_.push_back(negative_count(x));
    words_.push_back(reduced_word(x));
  }
}

int WeylGroupB::index(const SignedPermutation& w) const {
  if (w.rank() != d_)
    throw Error(ErrorCode::RankMismatch, "element of the wrong rank");
  return lookup_[encode(w)];
}

int WeylGroupB::multiply(int x, int y) const {
  int w = x;
  for (int s : words_[y]) w = right_[w][s];
  return w;
}

std::vector<int> WeylGroupB::right_descents(int w) const {
  std::vector<int> out;
  for (int s = 0; s < d_; ++s)
    if (right_descent(w, s)) out.push_back(s);
  return out;
}

std::vector<int> WeylGroupB::left_descents(int w) const {
  std::vector<int> out;
  for (int s = 0; s < d_; ++s)
    if (left_descent(s, w)) out.push_back(s);
  return out;
}

std::vector<int> WeylGroupB::generated_subgroup(const std::vector<int>& gens) const {
  std::set<int> seen{identity()};
  std::deque<int> todo{identity()};
  while (!todo.empty()) {
    int w = todo.front();
    todo.pop_front();
    for (int g : gens) {
      int v = multiply(w, g);
      if (seen.insert(v).second) todo.push_back(v);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> WeylGroupB::d_elements() const {
  std::vector<int> out;
  for (int w = 0; w < size(); ++w)
    if (in_D(w)) out.push_back(w);
  return out;
}

HeckeAlgebra::HeckeAlgebra(int d, WeightFunction weights, int max_rank)
    : group_((d > max_rank
                  ? throw Error(ErrorCode::ResourceLimit,
                                "Hecke oracle limited to rank " +
                                    std::to_string(max_rank))
                  : d),
             std::max(5, max_rank)),
      weights_(weights) {
  const int n = size();
  for (int w = 0; w < n; ++w) {
    int neg = group_.negatives(w);
    wlen_.push_back(weights_.s0 * neg + weights_.other * (group_.length(w) - neg));
  }

  bar_t_.resize(n);
  bar_t_[0] = T(0);
  for (int w = 1; w < n; ++w) {
    int s = group_.word(w).back();
    int shorter = group_.right(w, s);
    HeckeVector h = right_generator(bar_t_[shorter], s);
    const LaurentPoly c = LaurentPoly::q_minus_inverse(weights_.of(s));
    for (int y = 0; y < n; ++y) h[y].add_product(c, bar_t_[shorter][y], -1);
    bar_t_[w] = std::move(h);
  }

  kl_.resize(n);
  kl_sparse_.resize(n);
  kl_[0] = T(0);
  kl_sparse_[0] = sparse(kl_[0]);
  for (int w = 1; w < n; ++w) {
    int s = group_.word(w).front();
    int shorter = group_.left(s, w);
    HeckeVector h = left_generator(s, kl_[shorter]);
    if (weights_.of(s) > 0) {
      const LaurentPoly c = LaurentPoly::monomial(1, -weights_.of(s));
      for (int y = 0; y < n; ++y) h[y].add_product(c, kl_[shorter][y]);
    }
    for (int y = w - 1; y >= 0; --y) {
      if (h[y].in_negative_part()) continue;
      if (group_.length(y) >= group_.length(w))
        throw Error(ErrorCode::ConventionFailure,
                    "KL construction produced a term of full length");
      const LaurentPoly beta = h[y].symmetrized_nonnegative_part();
      for (const auto& [z, p] : kl_sparse_[y]) h[z].add_product(beta, p, -1);
    }
    if (!(h[w] == LaurentPoly::constant(1)))
      throw Error(ErrorCode::ConventionFailure, "KL basis element is not monic");
    kl_[w] = std::move(h);
    kl_sparse_[w] = sparse(kl_[w]);
  }
}

HeckeVector HeckeAlgebra::T(int w) const {
  HeckeVector h = zero();
  h[w] = LaurentPoly::constant(1);
  return h;
}

HeckeVector HeckeAlgebra::right_generator(const HeckeVector& h, int s) const {
  HeckeVector out = zero();
  const LaurentPoly c = LaurentPoly::q_minus_inverse(weights_.of(s));
  for (int w = 0; w < size(); ++w) {
    if (h[w].is_zero()) continue;
    int ws = group_.right(w, s);
    out[ws] += h[w];
    if (group_.length(ws) < group_.length(w)) out[w].add_product(c, h[w]);
  }
  return out;
}

HeckeVector HeckeAlgebra::left_generator(int s, const HeckeVector& h) const {
  HeckeVector out = zero();
  const LaurentPoly c = LaurentPoly::q_minus_inverse(weights_.of(s));
  for (int w = 0; w < size(); ++w) {
    if (h[w].is_zero()) continue;
    int sw = group_.left(s, w);
    out[sw] += h[w];
    if (group_.length(sw) < group_.length(w)) out[w].add_product(c, h[w]);
  }
  return out;
}

HeckeVector HeckeAlgebra::multiply(const HeckeVector& a,
                                   const HeckeVector& b) const {
  HeckeVector out = zero();
  for (int w = 0; w < size(); ++w) {
    if (a[w].is_zero()) continue;
    HeckeVector tb = b;
    const auto& word = group_.word(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      tb = left_generator(*it, tb);
    for (int y = 0; y < size(); ++y) out[y].add_product(a[w], tb[y]);
  }
  return out;
}

HeckeVector HeckeAlgebra::bar(const HeckeVector& h) const {
  HeckeVector out = zero();
  for (int w = 0; w < size(); ++w) {
    if (h[w].is_zero()) continue;
    const LaurentPoly c = h[w].bar();
    for (int y = 0; y < size(); ++y) out[y].add_product(c, bar_t_[w][y]);
  }
  return out;
}

HeckeVector HeckeAlgebra::to_kl_basis(HeckeVector h) const {
  HeckeVector out = zero();
  for (int z = size() - 1; z >= 0; --z) {
    if (h[z].is_zero()) continue;
    const LaurentPoly c = h[z];
    out[z] = c;
    for (const auto& [y, p] : kl_sparse_[z]) h[y].add_product(c, p, -1);
  }
  return out;
}

HeckeVector HeckeAlgebra::from_kl_basis(const HeckeVector& c) const {
  HeckeVector out = zero();
  for (int z = 0; z < size(); ++z) {
    if (c[z].is_zero()) continue;
    for (const auto& [y, p] : kl_sparse_[z]) out[y].add_product(c[z], p);
  }
  return out;
}

SparseTerms HeckeAlgebra::sparse(const HeckeVector& h) {
  SparseTerms t;
  for (int w = 0; w < static_cast<int>(h.size()); ++w)
    if (!h[w].is_zero()) t.emplace_back(w, h[w]);
  return t;
}

SparseTerms HeckeAlgebra::product_in_kl_basis(int x, int y) const {
  return sparse(to_kl_basis(multiply(kl_[x], kl_[y])));
}

void HeckeAlgebra::build_structure_table() {
  if (!table_.empty()) return;
  const int n = size();
  std::vector<std::vector<SparseTerms>> table(n, std::vector<SparseTerms>(n));
  for (int y = 0; y < n; ++y) {
    // T_w C'_y for every w, by induction on length
    std::vector<HeckeVector> tw(n);
    tw[0] = kl_[y];
    for (int w = 1; w < n; ++w) {
      int s = group_.word(w).front();
      tw[w] = left_generator(s, tw[group_.left(s, w)]);
    }
    for (int x = 0; x < n; ++x) {
      HeckeVector prod = zero();
      for (const auto& [w, p] : kl_sparse_[x])
        for (int z = 0; z < n; ++z) prod[z].add_product(p, tw[w][z]);
      table[x][y] = sparse(to_kl_basis(std::move(prod)));
    }
  }
  table_ = std::move(table);
  cache_.clear();
}

const SparseTerms& HeckeAlgebra::structure(int x, int y) {
  if (!table_.empty()) return table_[x][y];
  auto it = cache_.find({x, y});
  if (it == cache_.end()) it = cache_.emplace(std::pair{x, y}, product_in_kl_basis(x, y)).first;
  return it->second;
}

}  // namespace cellkit
