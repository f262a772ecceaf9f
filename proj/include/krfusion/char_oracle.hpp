#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>

#include "krfusion/fermionic.hpp"
#include "krfusion/lie_data.hpp"

namespace krfusion {

/// Isomorphism class of a finite-dimensional module: V_lambda -> multiplicity (>= 1).
using CharacterDecomp = std::map<DominantWeight, BigInt>;

/// Weights of a single irreducible V_lambda with multiplicities (>= 1).
using WeightTable = std::map<Weight, std::int64_t>;

BigInt weyl_dimension(const AlgebraData& alg, const DominantWeight& lam);

/// Freudenthal recursion over the full weight system.
WeightTable weight_multiplicities(const AlgebraData& alg, const DominantWeight& lam);

/// Reflects v to the dominant chamber. Returns the sign of the Weyl element
/// used, or 0 if v lies on a wall (is fixed by some reflection).
int reflect_to_dominant(const AlgebraData& alg, Weight& v);

/// Total dimension sum mult * dim V_lambda.
BigInt total_dimension(const AlgebraData& alg, const CharacterDecomp& c);

CharacterDecomp irreducible(const DominantWeight& lam);

/*
  Weyl character ring oracle bound to one algebra. Freudenthal tables and KR
  characters are memoised; lookups are guarded by a mutex so one instance can
  be shared across threads.
*/
class CharacterOracle {
 public:
  explicit CharacterOracle(AlgebraData alg);

  const AlgebraData& algebra() const { return alg_; }

  BigInt weyl_dimension(const DominantWeight& lam) const;
  const WeightTable& weight_multiplicities(const DominantWeight& lam) const;

  /// Klimyk: V_mu (x) V_nu = sum_{weights w of V_nu} sign * V_{dom(mu + w + rho) - rho}.
  CharacterDecomp tensor_decompose(const CharacterDecomp& a, const CharacterDecomp& b) const;

  /// KR module character: V_{a w_node} in type A, otherwise the N = 1 fermionic sum at q = 1.
  const CharacterDecomp& kr_character(int a, int node) const;

  /// Fold of kr_character over the entries of R.
  CharacterDecomp oracle_decomposition(const KRWeightSpec& R) const;

  BigInt oracle_multiplicity(const KRWeightSpec& R, const DominantWeight& lam) const;

 private:
  AlgebraData alg_;
  mutable std::mutex mutex_;
  mutable std::map<Weight, std::unique_ptr<WeightTable>> tables_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<CharacterDecomp>> kr_;
};

CharacterDecomp tensor_decompose(const AlgebraData& alg, const CharacterDecomp& a,
                                 const CharacterDecomp& b);
CharacterDecomp kr_character(const AlgebraData& alg, int a, int node);
BigInt oracle_multiplicity(const AlgebraData& alg, const KRWeightSpec& R, const DominantWeight& lam);

}  // namespace krfusion
