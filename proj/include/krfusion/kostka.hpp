#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "krfusion/fermionic.hpp"
#include "krfusion/qpoly.hpp"

namespace krfusion {

/// Weakly decreasing list of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; throws if not weakly decreasing or negative.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;  // |lambda|
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }

  /// n(lambda) = sum_i (i - 1) lambda_i.
  int n() const;

  std::string to_string() const;  // "(2,1,1)"
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Semistandard filling, rows in English notation.
struct Tableau {
  std::vector<std::vector<int>> rows;

  /// Rows read bottom to top, each left to right.
  std::vector<int> reading_word() const;
  /// Number of occurrences of each letter 1..max.
  std::vector<int> content() const;
  bool is_semistandard() const;
  friend bool operator==(const Tableau&, const Tableau&) = default;
};

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Partition& content);

/// Lascoux-Schuetzenberger charge of a word with partition content. Throws
/// std::invalid_argument otherwise.
std::int64_t charge(const std::vector<int>& word);
std::int64_t charge(const Tableau& t);

/// K_{shape, content}(q) = sum over SSYT of q^charge.
LaurentPoly kostka_polynomial(const Partition& shape, const Partition& content);

/*
  Dictionary between the fermionic M(q) and the charge Kostka polynomial:
      M(q) = q^{c(shape, content)} K(q^{sign})
  with c = x * n(content) + y * n(shape) + z.
*/
struct KostkaNormalization {
  int sign = 1;
  int x = 0;
  int y = 0;
  int z = 0;

  LaurentPoly apply(const LaurentPoly& kostka, const Partition& shape, const Partition& content) const;
  std::string to_string() const;
  friend bool operator==(const KostkaNormalization&, const KostkaNormalization&) = default;
};

struct CalibrationInstance {
  Partition shape;
  Partition content;
  LaurentPoly fermionic;
};

/// All normalizations with sign in {+1, -1} and x, y, z in [-3, 3] that map
/// every instance's Kostka polynomial to its fermionic polynomial.
std::vector<KostkaNormalization> calibrate_normalization(const std::vector<CalibrationInstance>& instances);

/// Frozen result of calibrating on the A1 instances: q -> q^{-1}, c = n(content),
/// i.e. M(q) is the cocharge Kostka polynomial.
KostkaNormalization calibrated_normalization();

/// Shape of the GL_{r+1} weight matching a dominant A_r weight with |shape| = total.
std::optional<Partition> shape_from_weight(const DominantWeight& lam, int total);

struct KostkaComparison {
  Partition shape;
  Partition content;
  LaurentPoly fermionic;
  LaurentPoly kostka;
  LaurentPoly transformed;  // calibrated_normalization().apply(kostka, ...)
  bool equal = false;
};

/// Requires type A and every factor on node 1. Throws std::invalid_argument otherwise.
KostkaComparison fermionic_vs_kostka(const AlgebraData& alg, const KRWeightSpec& R,
                                     const DominantWeight& lam,
                                     const FermionicOptions& opts = {});

}  // namespace krfusion
