#include "krfusion/selfcheck.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "krfusion/char_oracle.hpp"
#include "krfusion/fermionic.hpp"
#include "krfusion/qpoly.hpp"

namespace krfusion {

int SelfCheckReport::total_cases() const {
  int total = 0;
  for (const auto& p : properties) total += p.cases;
  return total;
}

bool SelfCheckReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.passed(); });
}

namespace {

const std::vector<AlgebraType>& small_algebras() {
  static const std::vector<AlgebraType> types = {
      {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::B, 2},
      {Family::B, 3}, {Family::B, 4}, {Family::C, 2}, {Family::C, 3}, {Family::C, 4},
      {Family::D, 3}, {Family::D, 4}, {Family::F, 4}, {Family::G, 2}};
  return types;
}

class Checker {
 public:
  explicit Checker(std::uint64_t seed) : rng_(seed) {
    for (const auto& t : small_algebras()) algebras_.emplace_back(t);
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  const AlgebraData& random_algebra() {
    return algebras_[static_cast<std::size_t>(uniform(0, static_cast<int>(algebras_.size()) - 1))];
  }

  // Small random R; keeps every fermionic sum at desk scale even for F4.
  std::vector<KRFactor> random_factors(const AlgebraData& alg) {
    const int rank = alg.rank();
    const bool big = alg.type().family == Family::F || rank >= 4;
    const int n = uniform(1, big ? 2 : 4);
    std::vector<KRFactor> out;
    for (int k = 0; k < n; ++k) out.push_back({uniform(1, big ? 1 : 2), uniform(1, rank)});
    return out;
  }

  DominantWeight random_small_weight(const AlgebraData& alg) {
    const int rank = alg.rank();
    const int cap = rank <= 2 ? 2 : 1;
    Weight w(rank, 0);
    const int nonzero = uniform(0, rank <= 2 ? rank : 2);
    for (int k = 0; k < nonzero; ++k) w[uniform(0, rank - 1)] = uniform(0, cap);
    return DominantWeight(w);
  }

  void run(PropertyResult& res, int cases, const std::function<std::string()>& body) {
    for (int c = 0; c < cases; ++c) {
      ++res.cases;
      std::string failure;
      try {
        failure = body();
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      if (!failure.empty()) {
        ++res.failures;
        if (res.failure_details.size() < 5) res.failure_details.push_back(failure);
      }
    }
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::vector<AlgebraData> algebras_;
};

std::string describe(const AlgebraData& alg, const KRWeightSpec& R) {
  return alg.type().name() + " R=" + R.to_string();
}

}  // namespace

SelfCheckReport run_selfcheck(std::uint64_t seed, int cases) {
  Checker chk(seed);
  SelfCheckReport report;
  auto add = [&](const std::string& name, const std::function<std::string()>& body) {
    PropertyResult res;
    res.name = name;
    chk.run(res, cases, body);
    report.properties.push_back(std::move(res));
  };

  add("permutation_invariance", [&]() -> std::string {
    const auto& alg = chk.random_algebra();
    auto factors = chk.random_factors(alg);
    const KRWeightSpec R(factors);
    std::shuffle(factors.begin(), factors.end(), chk.rng());
    const KRWeightSpec shuffled(factors);
    const auto support = support_weights(alg, R);
    const auto& lam = support[static_cast<std::size_t>(chk.uniform(0, static_cast<int>(support.size()) - 1))];
    if (!(R == shuffled)) return describe(alg, R) + ": multiset differs after shuffle";
    if (fermionic_polynomial(alg, R, lam) != fermionic_polynomial(alg, shuffled, lam))
      return describe(alg, R) + " lambda=" + lam.to_string() + ": result depends on order";
    return {};
  });

  add("zero_weight_gate", [&]() -> std::string {
    const auto& alg = chk.random_algebra();
    const KRWeightSpec R(chk.random_factors(alg));
    // Either strictly above the top weight, or in the wrong root-lattice coset.
    Weight w = top_weight(alg, R).coords();
    w[static_cast<std::size_t>(chk.uniform(0, alg.rank() - 1))] += chk.uniform(1, 2);
    const DominantWeight lam(w);
    if (total_m(alg, R, lam)) return describe(alg, R) + ": weight above top has total_m";
    if (!fermionic_polynomial(alg, R, lam).is_zero()) return describe(alg, R) + ": KR1 nonzero";
    if (fermionic_kr2(alg, R, lam) != 0) return describe(alg, R) + ": KR2 nonzero";
    return {};
  });

  add("top_weight_is_one", [&]() -> std::string {
    const auto& alg = chk.random_algebra();
    const KRWeightSpec R(chk.random_factors(alg));
    if (fermionic_polynomial(alg, R, top_weight(alg, R)) != LaurentPoly(1))
      return describe(alg, R) + ": M at top weight is not 1";
    return {};
  });

  add("kr1_coefficients_nonnegative", [&]() -> std::string {
    const auto& alg = chk.random_algebra();
    const KRWeightSpec R(chk.random_factors(alg));
    for (const auto& lam : support_weights(alg, R)) {
      const auto p = fermionic_polynomial(alg, R, lam);
      for (const auto& c : p.dense())
        if (c < 0) return describe(alg, R) + " lambda=" + lam.to_string() + ": negative coefficient";
      if (!p.is_zero() && p.min_exponent() < 0)
        return describe(alg, R) + " lambda=" + lam.to_string() + ": negative degree";
    }
    return {};
  });

  add("positivity_filter_redundant", [&]() -> std::string {
    const auto& alg = chk.random_algebra();
    const KRWeightSpec R(chk.random_factors(alg));
    for (const auto& lam : support_weights(alg, R)) {
      const auto filtered = fermionic_polynomial(alg, R, lam, {PositivityScope::occupied, 1});
      const auto unfiltered = fermionic_polynomial(alg, R, lam, {PositivityScope::none, 1});
      if (filtered != unfiltered)
        return describe(alg, R) + " lambda=" + lam.to_string() + ": filter changes the result";
    }
    return {};
  });

  add("q_binomial_identities", [&]() -> std::string {
    const int n = chk.uniform(0, 18);
    const int m = chk.uniform(0, n);
    const auto b = q_binomial(n, m);
    std::ostringstream where;
    where << "[" << n << "," << m << "]";
    if (b != q_binomial(n, n - m)) return where.str() + ": not symmetric";
    if (n >= 1 && b != q_binomial(n - 1, m - 1) + q_binomial(n - 1, m).shifted(m))
      return where.str() + ": Pascal recurrence fails";
    if (b.min_exponent() != 0 || b.max_exponent() != static_cast<std::int64_t>(m) * (n - m))
      return where.str() + ": wrong degree";
    if (eval_at_one(b) != gamma_binomial(n, m)) return where.str() + ": q = 1 value differs";
    const auto& c = b.dense();
    std::size_t peak = 0;
    while (peak + 1 < c.size() && c[peak + 1] >= c[peak]) ++peak;
    for (std::size_t k = peak; k + 1 < c.size(); ++k)
      if (c[k + 1] > c[k]) return where.str() + ": not unimodal";
    for (const auto& x : c)
      if (x <= 0) return where.str() + ": nonpositive coefficient";
    return {};
  });

  add("freudenthal_total_is_weyl_dimension", [&]() -> std::string {
    const auto& alg = chk.random_algebra();
    const DominantWeight lam = chk.random_small_weight(alg);
    const auto table = weight_multiplicities(alg, lam);
    BigInt total = 0;
    for (const auto& [w, m] : table) total += m;
    if (total != weyl_dimension(alg, lam))
      return alg.type().name() + " lambda=" + lam.to_string() + ": weight total differs from Weyl dimension";
    if (table.at(lam.coords()) != 1) return alg.type().name() + ": highest weight multiplicity != 1";
    return {};
  });

  add("klimyk_dimension_homomorphism", [&]() -> std::string {
    const auto& alg = chk.random_algebra();
    const DominantWeight x = chk.random_small_weight(alg);
    const DominantWeight y = chk.random_small_weight(alg);
    const auto prod = tensor_decompose(alg, irreducible(x), irreducible(y));
    if (total_dimension(alg, prod) != weyl_dimension(alg, x) * weyl_dimension(alg, y))
      return alg.type().name() + " " + x.to_string() + " (x) " + y.to_string() + ": dimension mismatch";
    return {};
  });

  return report;
}

}  // namespace krfusion
