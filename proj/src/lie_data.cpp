#include "krfusion/lie_data.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace krfusion {

namespace {

using Edge = std::pair<int, int>;  // 0-based nodes

struct DynkinDiagram {
  std::vector<Edge> edges;
  std::vector<int> half_lengths;  // (a_i, a_i) / 2
};

DynkinDiagram diagram(const AlgebraType& t) {
  const int r = t.rank;
  DynkinDiagram g;
  g.half_lengths.assign(r, 1);
  auto chain = [&](int n) {
    for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  };
  switch (t.family) {
    case Family::A:
      chain(r);
      break;
    case Family::B:
      chain(r);
      for (int i = 0; i + 1 < r; ++i) g.half_lengths[i] = 2;
      break;
    case Family::C:
      chain(r);
      g.half_lengths[r - 1] = 2;
      break;
    case Family::D:
      chain(r - 1);
      g.edges.emplace_back(r - 3, r - 1);
      break;
    case Family::E:
      // 1-3-4-5-6-7-8 with 2 attached to 4.
      g.edges.emplace_back(0, 2);
      g.edges.emplace_back(1, 3);
      for (int i = 2; i + 1 < r; ++i) g.edges.emplace_back(i, i + 1);
      break;
    case Family::F:
      chain(4);
      g.half_lengths = {2, 2, 1, 1};
      break;
    case Family::G:
      chain(2);
      g.half_lengths = {3, 1};
      break;
  }
  return g;
}

// Exact inverse and determinant by Gauss-Jordan elimination over Q.
std::pair<std::vector<std::vector<Rational>>, Rational> invert(
    const std::vector<std::vector<int>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular Cartan matrix");
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    const Rational p = a[col][col];
    det *= p;
    for (auto& x : a[col]) x /= p;
    for (int row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col];
      for (int j = 0; j < 2 * n; ++j) a[row][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return {inv, det};
}

}  // namespace

std::string AlgebraType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

void validate(const AlgebraType& t) {
  const int r = t.rank;
  bool ok = false;
  std::string need;
  switch (t.family) {
    case Family::A: ok = r >= 1; need = "r >= 1"; break;
    case Family::B: ok = r >= 2; need = "r >= 2"; break;
    case Family::C: ok = r >= 2; need = "r >= 2"; break;
    case Family::D: ok = r >= 3; need = "r >= 3"; break;
    case Family::E: ok = r >= 6 && r <= 8; need = "r in {6, 7, 8}"; break;
    case Family::F: ok = r == 4; need = "r = 4"; break;
    case Family::G: ok = r == 2; need = "r = 2"; break;
    default:
      throw std::invalid_argument("unknown Lie algebra family");
  }
  if (!ok) {
    throw std::invalid_argument("invalid rank " + std::to_string(r) + " for type " +
                                std::string(1, static_cast<char>(t.family)) + " (requires " +
                                need + ")");
  }
}

AlgebraData::AlgebraData(const AlgebraType& t) : type_(t) {
  validate(t);
  const int r = t.rank;
  const DynkinDiagram g = diagram(t);
  sym_ = g.half_lengths;

  cartan_.assign(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) cartan_[i][i] = 2;
  for (auto [i, j] : g.edges) {
    // (a_i, a_j) = -max(d_i, d_j) for adjacent nodes.
    const int ip = -std::max(sym_[i], sym_[j]);
    cartan_[i][j] = ip / sym_[i];
    cartan_[j][i] = ip / sym_[j];
  }

  auto [inv, det] = invert(cartan_);
  if (denominator(det) != 1) throw std::logic_error("non-integral Cartan determinant");
  det_ = static_cast<std::int64_t>(numerator(det));
  inv_num_.assign(r, std::vector<std::int64_t>(r));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      const Rational scaled = inv[i][j] * det_;
      if (denominator(scaled) != 1) throw std::logic_error("adjugate not integral");
      inv_num_[i][j] = static_cast<std::int64_t>(numerator(scaled));
    }
  }

  simple_roots_.assign(r, Weight(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) simple_roots_[i][j] = cartan_[j][i];

  // Reflection closure. s_i(b) = b - <b, a_i^vee> a_i with <a_k, a_i^vee> = C_ik.
  std::set<Weight> seen;
  std::vector<Weight> frontier;
  for (int i = 0; i < r; ++i) {
    Weight e(r, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& b : frontier) {
      for (int i = 0; i < r; ++i) {
        int pairing = 0;
        for (int k = 0; k < r; ++k) pairing += b[k] * cartan_[i][k];
        if (pairing == 0) continue;
        Weight image = b;
        image[i] -= pairing;
        if (std::any_of(image.begin(), image.end(), [](int c) { return c < 0; })) continue;
        if (seen.insert(image).second) next.push_back(std::move(image));
      }
    }
    frontier = std::move(next);
  }
  positive_roots_.assign(seen.begin(), seen.end());
  auto height = [](const Weight& w) {
    int h = 0;
    for (int c : w) h += c;
    return h;
  };
  std::stable_sort(positive_roots_.begin(), positive_roots_.end(),
                   [&](const Weight& x, const Weight& y) { return height(x) < height(y); });
}

Rational AlgebraData::inv_cartan(int i, int j) const {
  return Rational(inv_num_[i][j], det_);
}

Weight AlgebraData::root_to_fundamental(const Weight& root_coords) const {
  const int r = rank();
  Weight out(r, 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) out[i] += cartan_[i][k] * root_coords[k];
  return out;
}

std::optional<Weight> AlgebraData::fundamental_to_root(const Weight& v) const {
  const int r = rank();
  if (static_cast<int>(v.size()) != r) throw std::invalid_argument("weight has wrong dimension");
  Weight out(r);
  for (int i = 0; i < r; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < r; ++j) acc += inv_num_[i][j] * v[j];
    if (acc % det_ != 0) return std::nullopt;
    out[i] = static_cast<int>(acc / det_);
  }
  return out;
}

std::int64_t AlgebraData::scaled_inner_product(const Weight& v, const Weight& w) const {
  const int r = rank();
  if (static_cast<int>(v.size()) != r || static_cast<int>(w.size()) != r)
    throw std::invalid_argument("inner_product: dimension mismatch");
  // (w_i, w_j) = d_i (C^{-1})_{ij}
  std::int64_t acc = 0;
  for (int i = 0; i < r; ++i) {
    if (v[i] == 0) continue;
    std::int64_t row = 0;
    for (int j = 0; j < r; ++j) row += inv_num_[i][j] * w[j];
    acc += static_cast<std::int64_t>(v[i]) * sym_[i] * row;
  }
  return acc;
}

Rational AlgebraData::inner_product(const Weight& v, const Weight& w) const {
  return Rational(scaled_inner_product(v, w), det_);
}

std::int64_t AlgebraData::pair_with_root(const Weight& v, const Weight& root_coords) const {
  std::int64_t acc = 0;
  for (int k = 0; k < rank(); ++k) acc += static_cast<std::int64_t>(root_coords[k]) * v[k] * sym_[k];
  return acc;
}

bool AlgebraData::is_dominant(const Weight& v) const {
  return std::all_of(v.begin(), v.end(), [](int c) { return c >= 0; });
}

AlgebraData build_algebra(const AlgebraType& t) { return AlgebraData(t); }

std::size_t positive_root_count(const AlgebraType& t) {
  return AlgebraData(t).positive_roots().size();
}

}  // namespace krfusion
