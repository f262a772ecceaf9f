#include "krfusion/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace krfusion {

LaurentPoly::LaurentPoly(BigInt constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

LaurentPoly LaurentPoly::monomial(const BigInt& coefficient, std::int64_t exponent) {
  LaurentPoly p;
  if (coefficient != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(coefficient);
  }
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(std::int64_t low, std::vector<BigInt> coefficients) {
  LaurentPoly p;
  p.low_ = low;
  p.coeffs_ = std::move(coefficients);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<std::int64_t>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

BigInt LaurentPoly::coefficient(std::int64_t exponent) const {
  if (is_zero() || exponent < low_ || exponent > max_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<std::int64_t, BigInt>> LaurentPoly::terms() const {
  std::vector<std::pair<std::int64_t, BigInt>> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) out.emplace_back(low_ + static_cast<std::int64_t>(k), coeffs_[k]);
  return out;
}

void LaurentPoly::add_scaled(const LaurentPoly& other, std::int64_t shift) {
  if (other.is_zero()) return;
  const std::int64_t olow = other.low_ + shift;
  const std::int64_t ohigh = olow + static_cast<std::int64_t>(other.coeffs_.size()) - 1;
  if (is_zero()) {
    low_ = olow;
    coeffs_ = other.coeffs_;
    return;
  }
  const std::int64_t new_low = std::min(low_, olow);
  const std::int64_t new_high = std::max(max_exponent(), ohigh);
  if (new_low < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - new_low), BigInt(0));
    low_ = new_low;
  }
  coeffs_.resize(static_cast<std::size_t>(new_high - low_ + 1));
  const std::size_t offset = static_cast<std::size_t>(olow - low_);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[offset + k] += other.coeffs_[k];
  trim();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  add_scaled(other, 0);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  LaurentPoly neg = other;
  for (auto& c : neg.coeffs_) c = -c;
  add_scaled(neg, 0);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly out;
  out.low_ = a.low_ + b.low_;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  out.trim();
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::shifted(std::int64_t e) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += e;
  return p;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    if (!first) out += " + ";
    first = false;
    if (e == 0) {
      out += c.str();
      continue;
    }
    if (c == -1) {
      out += "-";
    } else if (c != 1) {
      out += c.str();
      out += "*";
    }
    out += "q";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly q_binomial(std::int64_t n, std::int64_t m) {
  if (m < 0 || m > n) return {};
  if (m > n - m) m = n - m;
  if (m == 0) return LaurentPoly(1);

  static std::mutex mutex;
  static std::map<std::pair<std::int64_t, std::int64_t>, LaurentPoly> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find({n, m}); it != memo.end()) return it->second;
  }

  // G(w, h) = [w + h, h]_q = G(w - 1, h) + q^w G(w, h - 1); row[w] holds G(w, h).
  const std::int64_t width = n - m;
  std::vector<std::vector<BigInt>> row(static_cast<std::size_t>(width + 1), std::vector<BigInt>{1});
  for (std::int64_t h = 1; h <= m; ++h) {
    std::vector<std::vector<BigInt>> next(static_cast<std::size_t>(width + 1));
    next[0] = {1};
    for (std::int64_t w = 1; w <= width; ++w) {
      const auto& left = next[static_cast<std::size_t>(w - 1)];   // G(w-1, h)
      const auto& below = row[static_cast<std::size_t>(w)];       // G(w, h-1)
      std::vector<BigInt> cur(std::max(left.size(), below.size() + static_cast<std::size_t>(w)), BigInt(0));
      for (std::size_t k = 0; k < left.size(); ++k) cur[k] += left[k];
      for (std::size_t k = 0; k < below.size(); ++k) cur[k + static_cast<std::size_t>(w)] += below[k];
      next[static_cast<std::size_t>(w)] = std::move(cur);
    }
    row = std::move(next);
  }
  LaurentPoly result = LaurentPoly::from_coefficients(0, row[static_cast<std::size_t>(width)]);
  std::lock_guard lock(mutex);
  memo.emplace(std::make_pair(n, m), result);
  return result;
}

BigInt gamma_binomial(std::int64_t n, std::int64_t m) {
  if (m < 0) throw std::invalid_argument("gamma_binomial: m must be nonnegative");
  BigInt num = 1;
  BigInt den = 1;
  for (std::int64_t i = 1; i <= m; ++i) {
    num *= n - m + i;
    den *= i;
    if (num == 0) return 0;
  }
  return num / den;
}

LaurentPoly substitute_inverse(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  std::vector<BigInt> rev(p.dense().rbegin(), p.dense().rend());
  return LaurentPoly::from_coefficients(-p.max_exponent(), std::move(rev));
}

BigInt eval_at_one(const LaurentPoly& p) {
  BigInt sum = 0;
  for (const auto& c : p.dense()) sum += c;
  return sum;
}

LaurentPoly parse_laurent_poly(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  if (s == "0") return {};
  LaurentPoly out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find('+', pos);
    // A '+' directly after '^' cannot occur in the canonical form.
    if (end == std::string::npos) end = s.size();
    const std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw std::invalid_argument("malformed polynomial: " + text);
    BigInt c = 1;
    std::int64_t e = 0;
    const std::size_t qpos = term.find('q');
    try {
      if (qpos == std::string::npos) {
        c = BigInt(term);
      } else {
        std::string coeff = term.substr(0, qpos);
        if (coeff == "-") {
          c = -1;
        } else if (!coeff.empty()) {
          if (coeff.back() != '*') throw std::invalid_argument("missing '*'");
          coeff.pop_back();
          c = BigInt(coeff);
        }
        const std::string rest = term.substr(qpos + 1);
        if (rest.empty()) {
          e = 1;
        } else {
          if (rest[0] != '^') throw std::invalid_argument("missing '^'");
          e = std::stoll(rest.substr(1));
        }
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed polynomial term '" + term + "'");
    }
    out += LaurentPoly::monomial(c, e);
    pos = end + 1;
    if (end == s.size()) break;
  }
  return out;
}

}  // namespace krfusion
