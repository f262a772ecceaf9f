#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace krfusion {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integer coordinate vector. Depending on context the basis is either the
/// fundamental weights (weights) or the simple roots (root-lattice elements).
using Weight = std::vector<int>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct AlgebraType {
  Family family = Family::A;
  int rank = 1;

  std::string name() const;  // "A3", "G2", ...
  friend bool operator==(const AlgebraType&, const AlgebraType&) = default;
};

/// Throws std::invalid_argument when the rank is not admissible for the family.
void validate(const AlgebraType& t);

/*
  Static data of a simple Lie algebra.

  Nodes are numbered 1..r following Bourbaki, except G2 where node 1 carries
  the long simple root (see README). Internally all indices are 0-based.

  The Cartan matrix follows C_ij = 2 (a_i, a_j) / (a_i, a_i), so the simple
  root a_i has fundamental-weight coordinates given by column i of C. The
  bilinear form is normalised so that short simple roots have (a, a) = 2;
  symmetrizers d_i = (a_i, a_i) / 2 satisfy d_i C_ij = d_j C_ji.

  Immutable after construction.
*/
class AlgebraData {
 public:
  explicit AlgebraData(const AlgebraType& t);

  const AlgebraType& type() const { return type_; }
  int rank() const { return type_.rank; }

  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  /// C^{-1} = inv_cartan_numerator / cartan_determinant, entries exact.
  std::int64_t inv_cartan_numerator(int i, int j) const { return inv_num_[i][j]; }
  std::int64_t cartan_determinant() const { return det_; }
  Rational inv_cartan(int i, int j) const;

  const std::vector<int>& symmetrizers() const { return sym_; }

  /// Positive roots in the simple-root basis, sorted by height then lexicographically.
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }

  /// Weyl vector in fundamental coordinates (all ones).
  Weight rho() const { return Weight(rank(), 1); }

  /// Simple root a_i (0-based) in fundamental coordinates.
  const Weight& simple_root(int i) const { return simple_roots_[i]; }

  /// Converts a root-lattice element from the simple-root to the fundamental basis.
  Weight root_to_fundamental(const Weight& root_coords) const;

  /// Solves C k = v. Returns nothing if k is not integral.
  std::optional<Weight> fundamental_to_root(const Weight& v) const;

  /// (v, w) for v, w in fundamental coordinates. Throws on dimension mismatch.
  Rational inner_product(const Weight& v, const Weight& w) const;

  /// cartan_determinant() * (v, w); always an integer.
  std::int64_t scaled_inner_product(const Weight& v, const Weight& w) const;

  /// (v, alpha) for v in fundamental coordinates and alpha in the simple-root
  /// basis; integral because (w_i, a_j) = delta_ij d_j.
  std::int64_t pair_with_root(const Weight& v, const Weight& root_coords) const;

  bool is_dominant(const Weight& v) const;

 private:
  AlgebraType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<std::int64_t>> inv_num_;
  std::int64_t det_ = 1;
  std::vector<int> sym_;
  std::vector<Weight> simple_roots_;
  std::vector<Weight> positive_roots_;
};

AlgebraData build_algebra(const AlgebraType& t);

std::size_t positive_root_count(const AlgebraType& t);

}  // namespace krfusion
