#include "krfusion/char_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace krfusion {

namespace {

Weight add(const Weight& x, const Weight& y) {
  Weight out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

// lam - w lies in the nonnegative root cone.
bool below(const AlgebraData& alg, const Weight& lam, const Weight& w) {
  Weight diff(lam.size());
  for (std::size_t i = 0; i < lam.size(); ++i) diff[i] = lam[i] - w[i];
  const auto k = alg.fundamental_to_root(diff);
  return k && std::all_of(k->begin(), k->end(), [](int c) { return c >= 0; });
}

WeightTable freudenthal(const AlgebraData& alg, const DominantWeight& lam) {
  const int r = alg.rank();
  const Weight& top = lam.coords();
  const Weight rho = alg.rho();
  std::vector<Weight> roots_fund;
  for (const auto& a : alg.positive_roots()) roots_fund.push_back(alg.root_to_fundamental(a));

  const Weight top_rho = add(top, rho);
  const std::int64_t top_norm = alg.scaled_inner_product(top_rho, top_rho);

  WeightTable table;
  table[top] = 1;
  std::vector<Weight> layer{top};
  while (!layer.empty()) {
    std::vector<Weight> next;
    for (const Weight& w : layer) {
      for (int i = 0; i < r; ++i) {
        Weight mu = w;
        for (int j = 0; j < r; ++j) mu[j] -= alg.simple_root(i)[j];
        if (table.count(mu)) continue;
        Weight dom = mu;
        reflect_to_dominant(alg, dom);
        // reflect_to_dominant may report a wall; the chamber image is still valid.
        if (!below(alg, top, dom)) continue;
        table[mu] = 0;  // placeholder; filled below once the layer is complete
        next.push_back(std::move(mu));
      }
    }
    // Every weight of `next` has depth one more than `layer`, so all weights
    // mu + k alpha (k >= 1) are already final.
    for (const Weight& mu : next) {
      std::int64_t sum = 0;
      for (std::size_t ai = 0; ai < roots_fund.size(); ++ai) {
        Weight shifted = mu;
        while (true) {
          for (int j = 0; j < r; ++j) shifted[j] += roots_fund[ai][j];
          auto it = table.find(shifted);
          if (it == table.end()) break;
          sum += alg.pair_with_root(shifted, alg.positive_roots()[ai]) * it->second;
        }
      }
      const Weight mu_rho = add(mu, rho);
      const std::int64_t gap = top_norm - alg.scaled_inner_product(mu_rho, mu_rho);
      const std::int64_t num = 2 * alg.cartan_determinant() * sum;
      if (gap <= 0 || num % gap != 0)
        throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity");
      table[mu] = num / gap;
      if (table[mu] <= 0) throw std::logic_error("Freudenthal recursion produced a nonpositive multiplicity");
    }
    layer = std::move(next);
  }
  return table;
}

}  // namespace

int reflect_to_dominant(const AlgebraData& alg, Weight& v) {
  const int r = alg.rank();
  int sign = 1;
  while (true) {
    int i = 0;
    while (i < r && v[i] >= 0) ++i;
    if (i == r) break;
    const int c = v[i];
    for (int j = 0; j < r; ++j) v[j] -= c * alg.simple_root(i)[j];
    sign = -sign;
  }
  for (int c : v)
    if (c == 0) return 0;
  return sign;
}

BigInt weyl_dimension(const AlgebraData& alg, const DominantWeight& lam) {
  if (lam.rank() != alg.rank()) throw std::invalid_argument("weight rank does not match algebra");
  const Weight rho = alg.rho();
  const Weight lr = add(lam.coords(), rho);
  BigInt num = 1;
  BigInt den = 1;
  for (const auto& a : alg.positive_roots()) {
    num *= alg.pair_with_root(lr, a);
    den *= alg.pair_with_root(rho, a);
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension is not integral");
  return num / den;
}

WeightTable weight_multiplicities(const AlgebraData& alg, const DominantWeight& lam) {
  if (lam.rank() != alg.rank()) throw std::invalid_argument("weight rank does not match algebra");
  return freudenthal(alg, lam);
}

BigInt total_dimension(const AlgebraData& alg, const CharacterDecomp& c) {
  BigInt total = 0;
  for (const auto& [lam, mult] : c) total += mult * weyl_dimension(alg, lam);
  return total;
}

CharacterDecomp irreducible(const DominantWeight& lam) { return {{lam, BigInt(1)}}; }

// ---------------------------------------------------------------------------

CharacterOracle::CharacterOracle(AlgebraData alg) : alg_(std::move(alg)) {}

BigInt CharacterOracle::weyl_dimension(const DominantWeight& lam) const {
  return krfusion::weyl_dimension(alg_, lam);
}

const WeightTable& CharacterOracle::weight_multiplicities(const DominantWeight& lam) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = tables_.find(lam.coords()); it != tables_.end()) return *it->second;
  }
  auto table = std::make_unique<WeightTable>(krfusion::weight_multiplicities(alg_, lam));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = tables_.emplace(lam.coords(), std::move(table));
  return *it->second;
}

CharacterDecomp CharacterOracle::tensor_decompose(const CharacterDecomp& a,
                                                  const CharacterDecomp& b) const {
  // Expand the weights of whichever side has the smaller total dimension.
  const bool swap = total_dimension(alg_, b) > total_dimension(alg_, a);
  const CharacterDecomp& base = swap ? b : a;
  const CharacterDecomp& expanded = swap ? a : b;

  const Weight rho = alg_.rho();
  std::map<DominantWeight, BigInt> acc;
  for (const auto& [nu, nu_mult] : expanded) {
    const WeightTable& weights = weight_multiplicities(nu);
    for (const auto& [mu, mu_mult] : base) {
      const BigInt outer = nu_mult * mu_mult;
      const Weight mu_rho = add(mu.coords(), rho);
      for (const auto& [w, wm] : weights) {
        Weight v = add(mu_rho, w);
        const int sign = reflect_to_dominant(alg_, v);
        if (sign == 0) continue;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= 1;
        acc[DominantWeight(std::move(v))] += sign * outer * wm;
      }
    }
  }
  CharacterDecomp out;
  for (auto& [lam, mult] : acc) {
    if (mult < 0) throw std::logic_error("Klimyk rule produced a negative multiplicity");
    if (mult != 0) out.emplace(lam, std::move(mult));
  }
  return out;
}

const CharacterDecomp& CharacterOracle::kr_character(int a, int node) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = kr_.find({a, node}); it != kr_.end()) return *it->second;
  }
  const KRWeightSpec R({KRFactor{a, node}});
  auto decomp = std::make_unique<CharacterDecomp>();
  if (alg_.type().family == Family::A) {
    // Irreducible in type A; elsewhere bootstrapped from the N = 1 sum.
    decomp->emplace(top_weight(alg_, R), BigInt(1));
  } else {
    for (const auto& lam : support_weights(alg_, R)) {
      BigInt mult = eval_at_one(fermionic_polynomial(alg_, R, lam));
      if (mult != 0) decomp->emplace(lam, std::move(mult));
    }
  }
  std::lock_guard lock(mutex_);
  auto [it, inserted] = kr_.emplace(std::make_pair(a, node), std::move(decomp));
  return *it->second;
}

CharacterDecomp CharacterOracle::oracle_decomposition(const KRWeightSpec& R) const {
  R.check_rank(alg_.rank());
  CharacterDecomp acc = irreducible(DominantWeight::zero(alg_.rank()));
  for (const auto& f : R.entries()) acc = tensor_decompose(acc, kr_character(f.a, f.node));
  return acc;
}

BigInt CharacterOracle::oracle_multiplicity(const KRWeightSpec& R, const DominantWeight& lam) const {
  const CharacterDecomp d = oracle_decomposition(R);
  auto it = d.find(lam);
  return it == d.end() ? BigInt(0) : it->second;
}

CharacterDecomp tensor_decompose(const AlgebraData& alg, const CharacterDecomp& a,
                                 const CharacterDecomp& b) {
  return CharacterOracle(alg).tensor_decompose(a, b);
}

CharacterDecomp kr_character(const AlgebraData& alg, int a, int node) {
  return CharacterOracle(alg).kr_character(a, node);
}

BigInt oracle_multiplicity(const AlgebraData& alg, const KRWeightSpec& R, const DominantWeight& lam) {
  return CharacterOracle(alg).oracle_multiplicity(R, lam);
}

}  // namespace krfusion
