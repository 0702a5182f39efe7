#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>

namespace morse {

/// Integer Laurent polynomial in one variable A. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant) { add_term(0, constant); }

  static LaurentPoly monomial(std::int64_t coef, int exponent) {
    LaurentPoly p;
    p.add_term(exponent, coef);
    return p;
  }

  const std::map<int, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::int64_t coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(int exponent, std::int64_t coef) {
    if (coef == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly pow(unsigned k) const {
    LaurentPoly out(1);
    for (unsigned i = 0; i < k; ++i) out *= *this;
    return out;
  }

  /// Substitutes A -> A^-1 (the bracket of the mirror diagram).
  LaurentPoly mirror() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.add_term(-e, c);
    return out;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Highest exponent first, e.g. "A^7 - A^3 - A^-5".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto [e, c] = *it;
      const std::int64_t mag = c < 0 ? -c : c;
      if (first)
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      first = false;
      if (e == 0) {
        out += std::to_string(mag);
        continue;
      }
      if (mag != 1) out += std::to_string(mag);
      out += "A";
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

 private:
  std::map<int, std::int64_t> terms_;
};

}  // namespace morse
