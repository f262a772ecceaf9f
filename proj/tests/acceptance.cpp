// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any failure.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "krfusion/char_oracle.hpp"
#include "krfusion/fermionic.hpp"
#include "krfusion/kostka.hpp"
#include "krfusion/selfcheck.hpp"

using namespace krfusion;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

struct Instance {
  AlgebraData alg;
  KRWeightSpec R;
};

// All multisets of size lo..hi drawn from `factors`.
std::vector<KRWeightSpec> multisets(const std::vector<KRFactor>& factors, int lo, int hi) {
  std::vector<KRWeightSpec> out;
  std::vector<KRFactor> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(cur.size()) >= lo) out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == hi) return;
    for (std::size_t k = start; k < factors.size(); ++k) {
      cur.push_back(factors[k]);
      rec(k);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<KRFactor> factor_box(int rank, int max_a, bool node1_only) {
  std::vector<KRFactor> out;
  for (int node = 1; node <= (node1_only ? 1 : rank); ++node)
    for (int a = 1; a <= max_a; ++a) out.push_back({a, node});
  return out;
}

std::vector<Instance> type_a_sweep(bool node1_only) {
  std::vector<Instance> out;
  for (int r = 1; r <= 3; ++r) {
    const AlgebraData alg({Family::A, r});
    for (auto& R : multisets(factor_box(r, 3, node1_only), 1, 5)) out.push_back({alg, std::move(R)});
  }
  return out;
}

std::vector<Instance> d4_sweep() {
  std::vector<Instance> out;
  const AlgebraData alg({Family::D, 4});
  for (auto& R : multisets(factor_box(4, 1, false), 2, 3)) out.push_back({alg, std::move(R)});
  return out;
}

// N = 1 is excluded: there the bootstrapped KR character equals the sum by construction.
std::vector<Instance> node1_sweep() {
  std::vector<Instance> out;
  for (AlgebraType t : {AlgebraType{Family::B, 2}, AlgebraType{Family::B, 3}, AlgebraType{Family::C, 2},
                        AlgebraType{Family::C, 3}, AlgebraType{Family::D, 4}}) {
    const AlgebraData alg(t);
    for (auto& R : multisets(factor_box(t.rank, 3, true), 2, 4)) out.push_back({alg, std::move(R)});
  }
  return out;
}

std::string where(const Instance& in, const DominantWeight& lam) {
  return in.alg.type().name() + " R=" + in.R.to_string() + " lambda=" + lam.to_string();
}

// Every lambda in the support: KR1 at q = 1 equals the character-ring multiplicity.
Outcome oracle_equality(const std::vector<Instance>& instances, std::size_t& checked) {
  Outcome res;
  std::map<std::string, std::unique_ptr<CharacterOracle>> oracles;
  for (const auto& in : instances) {
    auto& oracle = oracles[in.alg.type().name()];
    if (!oracle) oracle = std::make_unique<CharacterOracle>(in.alg);
    const CharacterDecomp decomp = oracle->oracle_decomposition(in.R);
    const auto support = support_weights(in.alg, in.R);
    for (const auto& lam : support) {
      const BigInt kr1 = eval_at_one(fermionic_polynomial(in.alg, in.R, lam));
      auto it = decomp.find(lam);
      const BigInt expected = it == decomp.end() ? BigInt(0) : it->second;
      ++checked;
      if (kr1 != expected) res.fail(where(in, lam) + ": fermionic " + kr1.str() + " oracle " + expected.str());
    }
    for (const auto& [lam, mult] : decomp)
      if (!std::binary_search(support.begin(), support.end(), lam))
        res.fail(where(in, lam) + ": oracle weight outside fermionic support");
  }
  return res;
}

struct Criterion {
  int id;
  std::string title;
  double limit_s;
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  const auto sweep_a = type_a_sweep(false);
  const auto sweep_sym = type_a_sweep(true);
  const auto sweep_d4 = d4_sweep();
  const auto sweep_node1 = node1_sweep();
  std::vector<const std::vector<Instance>*> all_sweeps = {&sweep_a, &sweep_d4, &sweep_node1};

  std::vector<Criterion> criteria;

  criteria.push_back({1, "A1 pinned instances", 1.0, [] {
    Outcome res;
    const AlgebraData alg({Family::A, 1});
    const KRWeightSpec two({{1, 1}, {1, 1}});
    const KRWeightSpec four({{1, 1}, {1, 1}, {1, 1}, {1, 1}});
    const auto q = [](std::int64_t e) { return LaurentPoly::monomial(1, e); };
    const std::vector<std::tuple<KRWeightSpec, int, LaurentPoly>> cases = {
        {two, 0, q(1)}, {two, 2, LaurentPoly(1)}, {four, 0, q(2) + q(4)}, {four, 2, q(1) + q(2) + q(3)}};
    for (const auto& [R, l, expected] : cases) {
      const auto got = fermionic_polynomial(alg, R, DominantWeight({l}));
      if (got != expected)
        res.fail("R=" + R.to_string() + " lambda=" + std::to_string(l) + "w: got " + got.to_string() +
                 ", expected " + expected.to_string());
    }
    res.detail = res.ok ? "4 instances" : res.detail;
    return res;
  }});

  criteria.push_back({2, "type A oracle equality (A1-A3, N<=5, a<=3)", 60.0, [&] {
    std::size_t checked = 0;
    Outcome res = oracle_equality(sweep_a, checked);
    if (res.ok) res.detail = std::to_string(sweep_a.size()) + " R, " + std::to_string(checked) + " weights";
    return res;
  }});

  criteria.push_back({3, "symmetric powers: M(q) = calibrated Kostka transform", 60.0, [&] {
    Outcome res;
    const AlgebraData a1({Family::A, 1});
    std::vector<CalibrationInstance> calib;
    for (int n : {2, 4})
      for (int l = 0; l <= n; l += 2) {
        if (l == n) continue;
        const KRWeightSpec R(std::vector<KRFactor>(static_cast<std::size_t>(n), KRFactor{1, 1}));
        const DominantWeight lam({l});
        calib.push_back({*shape_from_weight(lam, n), Partition(std::vector<int>(n, 1)),
                         fermionic_polynomial(a1, R, lam)});
      }
    const auto found = calibrate_normalization(calib);
    if (found.size() != 1) {
      res.fail("calibration on the A1 instances is not unique (" + std::to_string(found.size()) + " solutions)");
      return res;
    }
    const KostkaNormalization norm = found.front();
    if (!(norm == calibrated_normalization())) res.fail("calibrated " + norm.to_string() + " differs from frozen");
    std::size_t checked = 0;
    for (const auto& in : sweep_sym) {
      std::vector<int> parts;
      for (auto it = in.R.entries().rbegin(); it != in.R.entries().rend(); ++it) parts.push_back(it->a);
      const Partition content(parts);
      for (const auto& lam : support_weights(in.alg, in.R)) {
        const auto shape = shape_from_weight(lam, content.size());
        const LaurentPoly fermionic = fermionic_polynomial(in.alg, in.R, lam);
        const LaurentPoly expected =
            shape ? norm.apply(kostka_polynomial(*shape, content), *shape, content) : LaurentPoly();
        ++checked;
        if (fermionic != expected)
          res.fail(where(in, lam) + ": fermionic " + fermionic.to_string() + " kostka " + expected.to_string());
      }
    }
    if (res.ok)
      res.detail = "normalization " + norm.to_string() + ", " + std::to_string(sweep_sym.size()) + " R, " +
                   std::to_string(checked) + " weights";
    return res;
  }});

  criteria.push_back({4, "D4 fundamental weights oracle equality (N=2,3)", 300.0, [&] {
    std::size_t checked = 0;
    Outcome res = oracle_equality(sweep_d4, checked);
    if (res.ok) res.detail = std::to_string(sweep_d4.size()) + " R, " + std::to_string(checked) + " weights";
    return res;
  }});

  criteria.push_back({5, "B2,B3,C2,C3,D4 multiples of w1 oracle equality (N=2..4)", 300.0, [&] {
    std::size_t checked = 0;
    Outcome res = oracle_equality(sweep_node1, checked);
    if (res.ok) res.detail = std::to_string(sweep_node1.size()) + " R, " + std::to_string(checked) + " weights";
    return res;
  }});

  criteria.push_back({6, "KR1(1) = KR2 on the instances of 2, 4, 5", 300.0, [&] {
    Outcome res;
    std::size_t checked = 0;
    for (const auto* sweep : all_sweeps)
      for (const auto& in : *sweep)
        for (const auto& lam : support_weights(in.alg, in.R)) {
          const BigInt kr1 = eval_at_one(fermionic_polynomial(in.alg, in.R, lam));
          const BigInt kr2 = fermionic_kr2(in.alg, in.R, lam);
          ++checked;
          if (kr1 != kr2) res.fail(where(in, lam) + ": KR1 " + kr1.str() + " KR2 " + kr2.str());
        }
    if (res.ok) res.detail = std::to_string(checked) + " weights";
    return res;
  }});

  criteria.push_back({7, "fermionic dimension is multiplicative on the instances of 2, 4, 5", 300.0, [&] {
    Outcome res;
    std::size_t checked = 0;
    for (const auto* sweep : all_sweeps)
      for (const auto& in : *sweep) {
        BigInt product = 1;
        for (const auto& f : in.R.entries()) product *= fermionic_dimension(in.alg, KRWeightSpec({f}));
        const BigInt total = fermionic_dimension(in.alg, in.R);
        ++checked;
        if (total != product)
          res.fail(in.alg.type().name() + " R=" + in.R.to_string() + ": " + total.str() + " != " + product.str());
      }
    if (res.ok) res.detail = std::to_string(checked) + " R";
    return res;
  }});

  criteria.push_back({8, "structural property suite (rank <= 4, >= 500 random cases)", 300.0, [] {
    Outcome res;
    const auto report = run_selfcheck(20261018, 70);
    for (const auto& p : report.properties)
      if (!p.passed())
        res.fail(p.name + ": " + std::to_string(p.failures) + " failures" +
                 (p.failure_details.empty() ? "" : " (" + p.failure_details.front() + ")"));
    if (report.total_cases() < 500) res.fail("only " + std::to_string(report.total_cases()) + " cases");
    if (res.ok)
      res.detail = std::to_string(report.properties.size()) + " properties, " +
                   std::to_string(report.total_cases()) + " cases";
    return res;
  }});

  bool all_ok = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome res;
    try {
      res = c.body();
    } catch (const std::exception& e) {
      res.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (res.ok && secs > c.limit_s) {
      std::ostringstream os;
      os << "took " << secs << " s, limit " << c.limit_s << " s";
      res.fail(os.str());
    }
    all_ok = all_ok && res.ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (res.ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title << ": " << res.detail << " (" << secs
         << " s, limit " << c.limit_s << " s)";
    std::cout << line.str() << std::endl;
  }
  return all_ok ? 0 : 1;
}
