#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "krfusion/lie_data.hpp"
#include "krfusion/qpoly.hpp"

namespace krfusion {

/// One KR factor a * w_node (node is 1-based).
struct KRFactor {
  int a = 1;
  int node = 1;

  /// Ordered by node, then a.
  friend std::strong_ordering operator<=>(const KRFactor& x, const KRFactor& y) {
    if (auto c = x.node <=> y.node; c != 0) return c;
    return x.a <=> y.a;
  }
  friend bool operator==(const KRFactor&, const KRFactor&) = default;
  std::string to_string() const;  // "2*w1"
};

/*
  Multiset R of KR factors. Entries are kept sorted so that equality is
  multiset equality.
*/
class KRWeightSpec {
 public:
  KRWeightSpec() = default;
  explicit KRWeightSpec(std::vector<KRFactor> entries);

  const std::vector<KRFactor>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// n_a^(node): number of entries equal to (a, node).
  int count(int node, int a) const;
  /// Largest a among the entries on `node`, 0 if none.
  int max_a(int node) const;
  /// n^(i) = sum_a a n_a^(i), indexed 0-based; length `rank`.
  Weight totals(int rank) const;

  /// Throws std::invalid_argument if some node exceeds `rank`.
  void check_rank(int rank) const;

  std::string to_string() const;  // "1*w1,2*w3"

  friend bool operator==(const KRWeightSpec&, const KRWeightSpec&) = default;

 private:
  std::vector<KRFactor> entries_;
};

/// Dominant weight l in fundamental coordinates.
class DominantWeight {
 public:
  DominantWeight() = default;
  explicit DominantWeight(Weight coords);  // throws on negative entries
  static DominantWeight zero(int rank) { return DominantWeight(Weight(rank, 0)); }

  const Weight& coords() const { return coords_; }
  int rank() const { return static_cast<int>(coords_.size()); }
  int operator[](int i) const { return coords_[i]; }

  std::string to_string() const;  // "0", "2*w1+w3"

  friend auto operator<=>(const DominantWeight&, const DominantWeight&) = default;

 private:
  Weight coords_;
};

/// Highest weight sum_p a_p w_{i_p} of the tensor product.
DominantWeight top_weight(const AlgebraData& alg, const KRWeightSpec& R);

/// One multiplicity m_a^(node) > 0.
struct PartCount {
  int part = 0;
  int count = 0;
  friend bool operator==(const PartCount&, const PartCount&) = default;
};

/// m-configuration: for each node (0-based) the part multiplicities of a
/// partition, sorted by part size.
struct MConfig {
  std::vector<std::vector<PartCount>> nodes;

  int at(int node, int a) const;  // node 0-based
  std::string to_string() const;
  friend bool operator==(const MConfig&, const MConfig&) = default;
};

/// m = C^{-1}(n - l) if it is a nonnegative integer vector.
std::optional<Weight> total_m(const AlgebraData& alg, const KRWeightSpec& R,
                              const DominantWeight& lam);

/*
  Streams every m-configuration whose node-i partition has size mtotal[i],
  in ascending lexicographic order of (m_1^(1), m_2^(1), ..., m_1^(2), ...).
*/
class MConfigStream {
 public:
  explicit MConfigStream(const Weight& mtotal);
  /// Streams the product of explicit per-node candidate lists.
  explicit MConfigStream(std::vector<std::vector<std::vector<PartCount>>> per_node);

  /// Advances to the next configuration; false when exhausted.
  bool next();
  const MConfig& current() const { return current_; }
  /// Product of partition counts.
  std::uint64_t size() const;

 private:
  std::vector<std::vector<std::vector<PartCount>>> partitions_;  // per node
  std::vector<std::size_t> index_;
  MConfig current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<MConfig> enumerate_mconfigs(const Weight& mtotal);

/// Partitions of n as part-multiplicity lists in ascending lexicographic order
/// of (m_1, m_2, ..., m_n).
std::vector<std::vector<PartCount>> partitions_by_multiplicity(int n);

struct Vacancy {
  int node = 0;  // 0-based
  int a = 0;
  std::int64_t value = 0;
  bool occupied = false;  // m_a^(node) > 0
  friend bool operator==(const Vacancy&, const Vacancy&) = default;
};

/// Vacancy numbers on support(m) U support(n), sorted by (node, a).
using VacancyVector = std::vector<Vacancy>;

VacancyVector vacancy_numbers(const AlgebraData& alg, const KRWeightSpec& R, const MConfig& mc);

/// Q(m, n) = m^t A m - 1/2 m^t B m - m^t A n.
std::int64_t quadratic_exponent(const AlgebraData& alg, const KRWeightSpec& R, const MConfig& mc);

/// Which (node, a) must have P >= 0 for a configuration to contribute to KR1.
enum class PositivityScope {
  occupied,  // (node, a) with m_a > 0 (default)
  all,       // support(m) U support(n)
  none,      // no filter; the q-binomial convention alone decides
};

struct FermionicOptions {
  PositivityScope scope = PositivityScope::occupied;
  int threads = 1;
};

/// S(q) = sum_m q^Q prod [P + m, m]_q, the literal fermionic sum (equal to M(q^{-1})).
LaurentPoly fermionic_sum(const AlgebraData& alg, const KRWeightSpec& R, const DominantWeight& lam,
                          const FermionicOptions& opts = {});

/// KR1 graded multiplicity M(q) = S(q^{-1}).
LaurentPoly fermionic_polynomial(const AlgebraData& alg, const KRWeightSpec& R,
                                 const DominantWeight& lam, const FermionicOptions& opts = {});

/// KR2 at q = 1: same sum with Gamma-ratio binomials and no positivity restriction.
BigInt fermionic_kr2(const AlgebraData& alg, const KRWeightSpec& R, const DominantWeight& lam,
                     int threads = 1);

/// All dominant l with total_m present, ascending lexicographic.
std::vector<DominantWeight> support_weights(const AlgebraData& alg, const KRWeightSpec& R);

/// sum over support weights of M(1) * dim V_l.
BigInt fermionic_dimension(const AlgebraData& alg, const KRWeightSpec& R,
                           const FermionicOptions& opts = {});

}  // namespace krfusion
