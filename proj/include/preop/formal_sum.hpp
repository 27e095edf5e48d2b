#pragma once

// Finite linear combinations with exact rational coefficients over an
// ordered basis-key type. Zero coefficients are never stored, so equality is
// plain map equality and iteration follows the key order.

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "json.hpp"

#include "preop/rational.hpp"

namespace preop {

template <typename K>
class FormalSum {
 public:
  using Key = K;
  using Terms = std::map<K, Rational>;

  FormalSum() = default;

  // Builds from raw terms, dropping zero coefficients.
  static FormalSum normalize(Terms raw) {
    std::erase_if(raw, [](const auto& kv) { return kv.second == 0; });
    FormalSum s;
    s.terms_ = std::move(raw);
    return s;
  }

  static FormalSum term(K key, Rational coeff = 1) {
    FormalSum s;
    s.add(std::move(key), coeff);
    return s;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  // Coefficient of `key` (0 when absent).
  Rational coefficient(const K& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(K key, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
    if (inserted) return;
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }

  FormalSum& operator+=(const FormalSum& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  FormalSum& operator*=(const Rational& a) {
    if (a == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= a;
    return *this;
  }

  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator-(FormalSum a) { return a *= Rational(-1); }
  friend FormalSum operator*(const Rational& a, FormalSum x) { return x *= a; }
  friend FormalSum operator*(FormalSum x, const Rational& a) { return x *= a; }

  friend bool operator==(const FormalSum& a, const FormalSum& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

// x = Σ aᵢ kᵢ  ↦  Σ aᵢ f(kᵢ).
template <typename K, typename F>
auto linear_extend(const FormalSum<K>& x, F&& f) -> std::invoke_result_t<F&, const K&> {
  std::invoke_result_t<F&, const K&> out;
  for (const auto& [k, a] : x) {
    auto image = f(k);
    image *= a;
    out += image;
  }
  return out;
}

// Lifts f: K × K → FormalSum<R> to (Σ aᵢxᵢ, Σ bⱼyⱼ) ↦ Σ aᵢbⱼ f(xᵢ, yⱼ).
template <typename K, typename F>
auto bilinear_extend(F f) {
  return [f = std::move(f)](const FormalSum<K>& x, const FormalSum<K>& y) {
    std::invoke_result_t<F&, const K&, const K&> out;
    for (const auto& [kx, a] : x)
      for (const auto& [ky, b] : y) {
        auto image = f(kx, ky);
        image *= a * b;
        out += image;
      }
    return out;
  };
}

// "c1*KEY1 + c2*KEY2 - KEY3"; the empty sum prints "0".
template <typename K, typename Printer>
std::string to_text(const FormalSum<K>& x, Printer&& print) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(c);
    if (magnitude != 1) out += to_string(magnitude) + "*";
    out += print(k);
  }
  return out;
}

template <typename K>
std::string to_text(const FormalSum<K>& x) {
  return to_text(x, [](const K& k) { return std::string(to_string(k)); });
}

// [{"coeff": "p/q", "key": "..."}, ...] in key order.
template <typename K, typename Printer>
nlohmann::json to_json(const FormalSum<K>& x, Printer&& print) {
  auto out = nlohmann::json::array();
  for (const auto& [k, c] : x) out.push_back({{"coeff", to_string(c)}, {"key", print(k)}});
  return out;
}

template <typename K>
nlohmann::json to_json(const FormalSum<K>& x) {
  return to_json(x, [](const K& k) { return std::string(to_string(k)); });
}

}  // namespace preop
