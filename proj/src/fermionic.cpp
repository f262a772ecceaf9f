#include "krfusion/fermionic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "krfusion/char_oracle.hpp"

namespace krfusion {

// ---------------------------------------------------------------------------
// Value types

std::string KRFactor::to_string() const {
  return std::to_string(a) + "*w" + std::to_string(node);
}

KRWeightSpec::KRWeightSpec(std::vector<KRFactor> entries) : entries_(std::move(entries)) {
  for (const auto& f : entries_) {
    if (f.a < 1) throw std::invalid_argument("KR factor multiple must be >= 1");
    if (f.node < 1) throw std::invalid_argument("KR factor node must be >= 1");
  }
  std::sort(entries_.begin(), entries_.end());
}

int KRWeightSpec::count(int node, int a) const {
  return static_cast<int>(std::count(entries_.begin(), entries_.end(), KRFactor{a, node}));
}

int KRWeightSpec::max_a(int node) const {
  int best = 0;
  for (const auto& f : entries_)
    if (f.node == node) best = std::max(best, f.a);
  return best;
}

Weight KRWeightSpec::totals(int rank) const {
  check_rank(rank);
  Weight n(rank, 0);
  for (const auto& f : entries_) n[f.node - 1] += f.a;
  return n;
}

void KRWeightSpec::check_rank(int rank) const {
  for (const auto& f : entries_)
    if (f.node > rank)
      throw std::invalid_argument("node index " + std::to_string(f.node) + " out of range 1.." +
                                  std::to_string(rank));
}

std::string KRWeightSpec::to_string() const {
  std::string out;
  for (const auto& f : entries_) {
    if (!out.empty()) out += ",";
    out += f.to_string();
  }
  return out;
}

DominantWeight::DominantWeight(Weight coords) : coords_(std::move(coords)) {
  for (int c : coords_)
    if (c < 0) throw std::invalid_argument("dominant weight has a negative coordinate");
}

std::string DominantWeight::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    if (!out.empty()) out += "+";
    out += std::to_string(coords_[i]) + "*w" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

DominantWeight top_weight(const AlgebraData& alg, const KRWeightSpec& R) {
  return DominantWeight(R.totals(alg.rank()));
}

int MConfig::at(int node, int a) const {
  for (const auto& pc : nodes[node])
    if (pc.part == a) return pc.count;
  return 0;
}

std::string MConfig::to_string() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (const auto& pc : nodes[i]) {
      if (!first) out += ", ";
      first = false;
      out += "m_" + std::to_string(pc.part) + "^(" + std::to_string(i + 1) + ")=" +
             std::to_string(pc.count);
    }
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void partitions_rec(int a, int rem, std::vector<PartCount>& cur,
                    std::vector<std::vector<PartCount>>& out) {
  if (rem == 0) {
    out.push_back(cur);
    return;
  }
  if (a > rem) return;
  for (int c = 0; c * a <= rem; ++c) {
    if (c > 0) cur.push_back({a, c});
    partitions_rec(a + 1, rem - c * a, cur, out);
    if (c > 0) cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<PartCount>> partitions_by_multiplicity(int n) {
  if (n < 0) return {};
  static std::mutex mutex;
  static std::map<int, std::vector<std::vector<PartCount>>> memo;
  std::lock_guard lock(mutex);
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<std::vector<PartCount>> out;
  std::vector<PartCount> cur;
  partitions_rec(1, n, cur, out);
  memo.emplace(n, out);
  return out;
}

MConfigStream::MConfigStream(const Weight& mtotal) {
  for (int m : mtotal) partitions_.push_back(partitions_by_multiplicity(m));
  index_.assign(partitions_.size(), 0);
  current_.nodes.resize(partitions_.size());
}

MConfigStream::MConfigStream(std::vector<std::vector<std::vector<PartCount>>> per_node)
    : partitions_(std::move(per_node)) {
  index_.assign(partitions_.size(), 0);
  current_.nodes.resize(partitions_.size());
}

std::uint64_t MConfigStream::size() const {
  std::uint64_t total = 1;
  for (const auto& p : partitions_) total *= p.size();
  return total;
}

bool MConfigStream::next() {
  if (done_) return false;
  const std::size_t r = partitions_.size();
  if (!started_) {
    started_ = true;
    for (const auto& p : partitions_)
      if (p.empty()) {
        done_ = true;
        return false;
      }
    for (std::size_t i = 0; i < r; ++i) current_.nodes[i] = partitions_[i][0];
    return true;
  }
  // Last node varies fastest.
  for (std::size_t k = r; k-- > 0;) {
    if (++index_[k] < partitions_[k].size()) {
      current_.nodes[k] = partitions_[k][index_[k]];
      return true;
    }
    index_[k] = 0;
    current_.nodes[k] = partitions_[k][0];
  }
  done_ = true;
  return false;
}

std::vector<MConfig> enumerate_mconfigs(const Weight& mtotal) {
  std::vector<MConfig> out;
  MConfigStream stream(mtotal);
  while (stream.next()) out.push_back(stream.current());
  return out;
}

std::optional<Weight> total_m(const AlgebraData& alg, const KRWeightSpec& R,
                              const DominantWeight& lam) {
  const int r = alg.rank();
  if (lam.rank() != r) throw std::invalid_argument("weight rank does not match algebra");
  Weight diff = R.totals(r);
  for (int i = 0; i < r; ++i) diff[i] -= lam[i];
  auto m = alg.fundamental_to_root(diff);
  if (!m) return std::nullopt;
  for (int c : *m)
    if (c < 0) return std::nullopt;
  return m;
}

// ---------------------------------------------------------------------------
// Vacancy numbers and the quadratic form

namespace {

struct Neighbour {
  int node;
  std::int64_t c_ij;  // |C_{i,j}|
  std::int64_t c_ji;  // |C_{j,i}|
};

/*
  Per-(algebra, R) data reused for every configuration: adjacency, the
  n-term sum_b min(a, b) n_b^(i), and the n-support.
*/
class FermionicContext {
 public:
  FermionicContext(const AlgebraData& alg, const KRWeightSpec& R) : rank_(alg.rank()) {
    R.check_rank(rank_);
    neighbours_.resize(rank_);
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        if (i != j && alg.cartan(i, j) < 0)
          neighbours_[i].push_back({j, -alg.cartan(i, j), -alg.cartan(j, i)});
    n_support_.resize(rank_);
    for (const auto& f : R.entries()) {
      auto& sup = n_support_[f.node - 1];
      if (!sup.empty() && sup.back().part == f.a)
        ++sup.back().count;
      else
        sup.push_back({f.a, 1});
    }
  }

  int rank() const { return rank_; }
  const std::vector<PartCount>& n_support(int node) const { return n_support_[node]; }
  const std::vector<Neighbour>& neighbours(int node) const { return neighbours_[node]; }

  std::int64_t n_term(int node, int a) const {
    std::int64_t s = 0;
    for (const auto& nb : n_support_[node]) s += static_cast<std::int64_t>(std::min(a, nb.part)) * nb.count;
    return s;
  }

  std::int64_t vacancy(const MConfig& mc, int node, int a) const {
    std::int64_t p = n_term(node, a);
    for (const auto& nb : neighbours_[node])
      for (const auto& pc : mc.nodes[nb.node])
        p += std::min(nb.c_ij * pc.part, nb.c_ji * a) * pc.count;
    for (const auto& pc : mc.nodes[node]) p -= 2 * static_cast<std::int64_t>(std::min(a, pc.part)) * pc.count;
    return p;
  }

  std::int64_t quadratic(const MConfig& mc) const {
    std::int64_t q = 0;
    for (int i = 0; i < rank_; ++i) {
      const auto& mi = mc.nodes[i];
      for (const auto& x : mi) {
        for (const auto& y : mi) q += static_cast<std::int64_t>(std::min(x.part, y.part)) * x.count * y.count;
        q -= n_term(i, x.part) * x.count;
      }
      for (const auto& nb : neighbours_[i]) {
        if (nb.node <= i) continue;  // each unordered pair once: 1/2 m^t B m
        for (const auto& x : mi)
          for (const auto& y : mc.nodes[nb.node])
            q -= std::min(nb.c_ij * y.part, nb.c_ji * x.part) * x.count * y.count;
      }
    }
    return q;
  }

  /// Whether the configuration passes the positivity filter for `scope`.
  bool admissible(const MConfig& mc, PositivityScope scope) const {
    if (scope == PositivityScope::none) return true;
    for (int i = 0; i < rank_; ++i) {
      for (const auto& pc : mc.nodes[i])
        if (vacancy(mc, i, pc.part) < 0) return false;
      if (scope == PositivityScope::all)
        for (const auto& nb : n_support_[i])
          if (vacancy(mc, i, nb.part) < 0) return false;
    }
    return true;
  }

  /*
    Per-node candidate partitions. A partition of node i is dropped when some
    occupied a has a negative vacancy number even with the largest possible
    neighbour contribution, sum_j min(|C_ij|, |C_ji| a) m^(j). Such a
    configuration would also contribute zero without the filter, since
    [P + m, m]_q vanishes whenever P < 0.
  */
  std::vector<std::vector<std::vector<PartCount>>> pruned_partitions(const Weight& mtotal) const {
    std::vector<std::vector<std::vector<PartCount>>> out(rank_);
    for (int i = 0; i < rank_; ++i) {
      for (auto& part : partitions_by_multiplicity(mtotal[i])) {
        bool keep = true;
        for (const auto& x : part) {
          std::int64_t bound = n_term(i, x.part);
          for (const auto& nb : neighbours_[i])
            bound += std::min(nb.c_ij, nb.c_ji * x.part) * mtotal[nb.node];
          for (const auto& y : part) bound -= 2 * static_cast<std::int64_t>(std::min(x.part, y.part)) * y.count;
          if (bound < 0) {
            keep = false;
            break;
          }
        }
        if (keep) out[i].push_back(std::move(part));
      }
    }
    return out;
  }

 private:
  int rank_;
  std::vector<std::vector<Neighbour>> neighbours_;
  std::vector<std::vector<PartCount>> n_support_;
};

template <typename Acc, typename Visit>
Acc parallel_reduce(const std::vector<std::vector<std::vector<PartCount>>>& lists, int threads,
                    Visit visit) {
  threads = std::max(1, threads);
  if (threads == 1) {
    Acc acc{};
    MConfigStream stream(lists);
    while (stream.next()) visit(stream.current(), acc);
    return acc;
  }
  std::vector<Acc> partial(threads);
  std::vector<std::thread> workers;
  for (int t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      MConfigStream stream(lists);
      std::uint64_t k = 0;
      while (stream.next()) {
        if (k++ % static_cast<std::uint64_t>(threads) == static_cast<std::uint64_t>(t))
          visit(stream.current(), partial[t]);
      }
    });
  }
  for (auto& w : workers) w.join();
  Acc acc{};
  for (auto& p : partial) acc += p;
  return acc;
}

}  // namespace

VacancyVector vacancy_numbers(const AlgebraData& alg, const KRWeightSpec& R, const MConfig& mc) {
  const FermionicContext ctx(alg, R);
  if (static_cast<int>(mc.nodes.size()) != ctx.rank())
    throw std::invalid_argument("configuration rank does not match algebra");
  VacancyVector out;
  for (int i = 0; i < ctx.rank(); ++i) {
    std::vector<int> parts;
    for (const auto& pc : mc.nodes[i]) parts.push_back(pc.part);
    for (const auto& nb : ctx.n_support(i)) parts.push_back(nb.part);
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    for (int a : parts) out.push_back({i, a, ctx.vacancy(mc, i, a), mc.at(i, a) > 0});
  }
  return out;
}

std::int64_t quadratic_exponent(const AlgebraData& alg, const KRWeightSpec& R, const MConfig& mc) {
  const FermionicContext ctx(alg, R);
  if (static_cast<int>(mc.nodes.size()) != ctx.rank())
    throw std::invalid_argument("configuration rank does not match algebra");
  return ctx.quadratic(mc);
}

// ---------------------------------------------------------------------------
// Fermionic sums

LaurentPoly fermionic_sum(const AlgebraData& alg, const KRWeightSpec& R, const DominantWeight& lam,
                          const FermionicOptions& opts) {
  const auto m = total_m(alg, R, lam);
  if (!m) return {};
  const FermionicContext ctx(alg, R);
  std::vector<std::vector<std::vector<PartCount>>> lists;
  if (opts.scope == PositivityScope::none) {
    for (int mi : *m) lists.push_back(partitions_by_multiplicity(mi));
  } else {
    lists = ctx.pruned_partitions(*m);
  }
  return parallel_reduce<LaurentPoly>(lists, opts.threads, [&](const MConfig& mc, LaurentPoly& acc) {
    if (!ctx.admissible(mc, opts.scope)) return;
    LaurentPoly term(1);
    for (int i = 0; i < ctx.rank() && !term.is_zero(); ++i) {
      for (const auto& pc : mc.nodes[i]) {
        const std::int64_t p = ctx.vacancy(mc, i, pc.part);
        term *= q_binomial(p + pc.count, pc.count);
        if (term.is_zero()) break;
      }
    }
    acc.add_scaled(term, ctx.quadratic(mc));
  });
}

LaurentPoly fermionic_polynomial(const AlgebraData& alg, const KRWeightSpec& R,
                                 const DominantWeight& lam, const FermionicOptions& opts) {
  return substitute_inverse(fermionic_sum(alg, R, lam, opts));
}

BigInt fermionic_kr2(const AlgebraData& alg, const KRWeightSpec& R, const DominantWeight& lam,
                     int threads) {
  const auto m = total_m(alg, R, lam);
  if (!m) return 0;
  const FermionicContext ctx(alg, R);
  std::vector<std::vector<std::vector<PartCount>>> lists;
  for (int mi : *m) lists.push_back(partitions_by_multiplicity(mi));
  return parallel_reduce<BigInt>(lists, threads, [&](const MConfig& mc, BigInt& acc) {
    BigInt term = 1;
    for (int i = 0; i < ctx.rank() && term != 0; ++i)
      for (const auto& pc : mc.nodes[i]) {
        term *= gamma_binomial(ctx.vacancy(mc, i, pc.part) + pc.count, pc.count);
        if (term == 0) break;
      }
    acc += term;
  });
}

std::vector<DominantWeight> support_weights(const AlgebraData& alg, const KRWeightSpec& R) {
  const int r = alg.rank();
  const Weight top = R.totals(r);
  // Any dominant l with top - l = sum k_i a_i has 0 <= k <= C^{-1} top, since
  // C^{-1} has nonnegative entries.
  Weight kmax(r);
  for (int i = 0; i < r; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < r; ++j) acc += alg.inv_cartan_numerator(i, j) * top[j];
    kmax[i] = static_cast<int>(acc / alg.cartan_determinant());
  }
  std::vector<DominantWeight> out;
  Weight k(r, 0);
  Weight mu = top;
  // Odometer over the box, maintaining mu = top - sum k_i a_i.
  while (true) {
    if (alg.is_dominant(mu)) out.emplace_back(mu);
    int pos = 0;
    for (; pos < r; ++pos) {
      if (k[pos] < kmax[pos]) {
        ++k[pos];
        for (int j = 0; j < r; ++j) mu[j] -= alg.simple_root(pos)[j];
        break;
      }
      for (int j = 0; j < r; ++j) mu[j] += k[pos] * alg.simple_root(pos)[j];
      k[pos] = 0;
    }
    if (pos == r) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt fermionic_dimension(const AlgebraData& alg, const KRWeightSpec& R,
                           const FermionicOptions& opts) {
  BigInt total = 0;
  for (const auto& lam : support_weights(alg, R))
    total += eval_at_one(fermionic_polynomial(alg, R, lam, opts)) * weyl_dimension(alg, lam);
  return total;
}

}  // namespace krfusion
