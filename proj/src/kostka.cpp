#include "krfusion/kostka.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace krfusion {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition is not weakly decreasing");
  }
  if (std::find(parts_.begin(), parts_.end(), 0) != parts_.end())
    throw std::invalid_argument("partition has an interior zero part");
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::n() const {
  int total = 0;
  for (int i = 0; i < length(); ++i) total += i * parts_[i];
  return total;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> word;
  for (auto row = rows.rbegin(); row != rows.rend(); ++row) word.insert(word.end(), row->begin(), row->end());
  return word;
}

std::vector<int> Tableau::content() const {
  std::vector<int> counts;
  for (const auto& row : rows)
    for (int v : row) {
      if (v < 1) throw std::invalid_argument("tableau entries must be positive");
      if (static_cast<int>(counts.size()) < v) counts.resize(v, 0);
      ++counts[v - 1];
    }
  return counts;
}

bool Tableau::is_semistandard() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) return false;
    if (i > 0 && rows[i].size() > rows[i - 1].size()) return false;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j > 0 && rows[i][j] < rows[i][j - 1]) return false;
      if (i > 0 && rows[i][j] <= rows[i - 1][j]) return false;
    }
  }
  return true;
}

namespace {

// Adds the letter `letter` as a horizontal strip, row by row.
void add_strip(const Partition& shape, const Partition& content, int letter,
               const std::vector<int>& inner, std::vector<int>& outer, int row, int remaining,
               Tableau& t, std::vector<Tableau>& out);

void fill(const Partition& shape, const Partition& content, int letter, const std::vector<int>& inner,
          Tableau& t, std::vector<Tableau>& out) {
  if (letter > content.length()) {
    out.push_back(t);
    return;
  }
  std::vector<int> outer = inner;
  add_strip(shape, content, letter, inner, outer, 0, content[letter - 1], t, out);
}

void add_strip(const Partition& shape, const Partition& content, int letter,
               const std::vector<int>& inner, std::vector<int>& outer, int row, int remaining,
               Tableau& t, std::vector<Tableau>& out) {
  if (remaining == 0) {
    fill(shape, content, letter + 1, outer, t, out);
    return;
  }
  if (row >= shape.length()) return;
  // Horizontal strip: the new row length may not exceed the old length of the row above.
  const int cap = row == 0 ? shape[0] : std::min(shape[row], inner[row - 1]);
  const int room = std::max(0, cap - inner[row]);
  for (int add = std::min(room, remaining); add >= 0; --add) {
    outer[row] = inner[row] + add;
    auto& cells = t.rows[row];
    cells.insert(cells.end(), add, letter);
    add_strip(shape, content, letter, inner, outer, row + 1, remaining - add, t, out);
    cells.resize(cells.size() - add);
  }
  outer[row] = inner[row];
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Partition& content) {
  if (shape.size() != content.size())
    throw std::invalid_argument("shape and content must have the same size");
  std::vector<Tableau> out;
  Tableau t;
  t.rows.resize(shape.length());
  fill(shape, content, 1, std::vector<int>(shape.length(), 0), t, out);
  return out;
}

std::int64_t charge(const std::vector<int>& word) {
  std::vector<int> counts;
  for (int v : word) {
    if (v < 1) throw std::invalid_argument("charge: letters must be positive");
    if (static_cast<int>(counts.size()) < v) counts.resize(v, 0);
    ++counts[v - 1];
  }
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i] > counts[i - 1]) throw std::invalid_argument("charge: content is not a partition");

  const int n = static_cast<int>(word.size());
  std::vector<bool> used(n, false);
  std::int64_t total = 0;
  int left = n;
  while (left > 0) {
    // Extract one standard subword: 1, 2, ... scanning leftwards cyclically.
    int pos = n;
    int index = 0;
    for (int letter = 1; letter <= static_cast<int>(counts.size()) && counts[letter - 1] > 0; ++letter) {
      int found = -1;
      for (int p = pos - 1; p >= 0; --p)
        if (!used[p] && word[p] == letter) {
          found = p;
          break;
        }
      if (found < 0) {
        for (int p = n - 1; p > pos; --p)
          if (!used[p] && word[p] == letter) {
            found = p;
            break;
          }
        if (letter > 1) ++index;
      }
      if (found < 0) throw std::logic_error("charge: subword extraction failed");
      used[found] = true;
      --counts[letter - 1];
      --left;
      total += index;
      pos = found;
    }
  }
  return total;
}

std::int64_t charge(const Tableau& t) { return charge(t.reading_word()); }

LaurentPoly kostka_polynomial(const Partition& shape, const Partition& content) {
  LaurentPoly out;
  for (const auto& t : enumerate_ssyt(shape, content)) out += LaurentPoly::monomial(1, charge(t));
  return out;
}

LaurentPoly KostkaNormalization::apply(const LaurentPoly& kostka, const Partition& shape,
                                       const Partition& content) const {
  const LaurentPoly base = sign < 0 ? substitute_inverse(kostka) : kostka;
  return base.shifted(static_cast<std::int64_t>(x) * content.n() + static_cast<std::int64_t>(y) * shape.n() + z);
}

std::string KostkaNormalization::to_string() const {
  return std::string("M(q) = q^(") + std::to_string(x) + "*n(content) + " + std::to_string(y) +
         "*n(shape) + " + std::to_string(z) + ") * K(q^" + (sign < 0 ? "-1" : "1") + ")";
}

std::vector<KostkaNormalization> calibrate_normalization(const std::vector<CalibrationInstance>& instances) {
  std::vector<LaurentPoly> kostka;
  for (const auto& inst : instances) kostka.push_back(kostka_polynomial(inst.shape, inst.content));
  std::vector<KostkaNormalization> fits;
  for (int sign : {1, -1})
    for (int x = -3; x <= 3; ++x)
      for (int y = -3; y <= 3; ++y)
        for (int z = -3; z <= 3; ++z) {
          const KostkaNormalization cand{sign, x, y, z};
          bool ok = true;
          for (std::size_t k = 0; k < instances.size() && ok; ++k)
            ok = cand.apply(kostka[k], instances[k].shape, instances[k].content) == instances[k].fermionic;
          if (ok) fits.push_back(cand);
        }
  return fits;
}

KostkaNormalization calibrated_normalization() { return {-1, 1, 0, 0}; }

std::optional<Partition> shape_from_weight(const DominantWeight& lam, int total) {
  const int r = lam.rank();
  int weighted = 0;
  for (int j = 0; j < r; ++j) weighted += (j + 1) * lam[j];
  const int rest = total - weighted;
  if (rest < 0 || rest % (r + 1) != 0) return std::nullopt;
  std::vector<int> parts(r + 1);
  parts[r] = rest / (r + 1);
  for (int j = r - 1; j >= 0; --j) parts[j] = parts[j + 1] + lam[j];
  return Partition(std::move(parts));
}

KostkaComparison fermionic_vs_kostka(const AlgebraData& alg, const KRWeightSpec& R,
                                     const DominantWeight& lam, const FermionicOptions& opts) {
  if (alg.type().family != Family::A) throw std::invalid_argument("Kostka comparison requires type A");
  std::vector<int> a;
  for (const auto& f : R.entries()) {
    if (f.node != 1)
      throw std::invalid_argument("Kostka comparison requires every factor on node 1 (got " + f.to_string() + ")");
    a.push_back(f.a);
  }
  std::sort(a.rbegin(), a.rend());
  KostkaComparison cmp;
  cmp.content = Partition(a);
  cmp.fermionic = fermionic_polynomial(alg, R, lam, opts);
  if (auto shape = shape_from_weight(lam, cmp.content.size())) {
    cmp.shape = *shape;
    cmp.kostka = kostka_polynomial(cmp.shape, cmp.content);
    cmp.transformed = calibrated_normalization().apply(cmp.kostka, cmp.shape, cmp.content);
  }
  cmp.equal = cmp.transformed == cmp.fermionic;
  return cmp;
}

}  // namespace krfusion
