#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypercat/error.hpp"
#include "hypercat/scalar.hpp"

namespace hypercat {

/// A variable X_k, or its conjugate copy Xbar_k when `bar` is set.
struct Variable {
  std::uint32_t index = 0;
  bool bar = false;

  auto operator<=>(const Variable&) const = default;
};

/// Variables with positive exponents, sorted by variable.
using Monomial = std::vector<std::pair<Variable, std::uint32_t>>;

/// Monomial holding each listed variable with exponent one.
Monomial monomial_of(const std::vector<Variable>& vars);

/// Sparse polynomial with integer coefficients over {X_k} ∪ {Xbar_k}.
///
/// The involution swaps X_k and Xbar_k in every monomial; it is the identity
/// on polynomials without barred variables. No zero coefficient is stored.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c) : Polynomial(Integer(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(const Integer& c);                    // NOLINT(google-explicit-constructor)

  static Polynomial variable(std::uint32_t index, bool bar = false);
  static Polynomial term(Monomial m, Integer coefficient);

  const std::map<Monomial, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t total_degree() const;
  std::vector<Variable> variables() const;

  /// Exact coefficient of `m`, zero when absent.
  Integer coefficient_of(const Monomial& m) const;
  Polynomial involute() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void add_term(const Monomial& m, const Integer& c);

  std::map<Monomial, Integer> terms_;
};

/// `2*X_b1*Xbar_b2 + 1`: monomials in descending lexicographic order,
/// variables in ascending order inside each monomial.
std::string to_string(const Polynomial& p);
Polynomial parse_polynomial(std::string_view text);

inline std::ostream& operator<<(std::ostream& out, const Polynomial& p) { return out << to_string(p); }

template <>
struct SemiringTraits<Polynomial> {
  static constexpr bool has_negation = true;
  static constexpr bool involution_trivial = false;
  static constexpr const char* name = "poly";
  static Polynomial zero() { return {}; }
  static Polynomial one() { return 1; }
  static bool is_zero(const Polynomial& a) { return a.is_zero(); }
  static Polynomial involute(const Polynomial& a) { return a.involute(); }
  static Polynomial from_integer(const Integer& a) { return a; }
  static std::string to_string(const Polynomial& a) { return hypercat::to_string(a); }
  static Polynomial parse(std::string_view s) { return parse_polynomial(s); }
};

/// Values for the unbarred variables; Xbar_k always evaluates to the
/// involution of the value of X_k.
template <class S>
using EvaluationPoint = std::map<std::uint32_t, S>;

/// Ring homomorphism Z[X ∪ Xbar] -> S determined by `point`. Throws Error if
/// a variable of `p` has no value.
template <class S>
S evaluate(const Polynomial& p, const EvaluationPoint<S>& point);

/// A point (over the Gaussian rationals; real when `dagger_mode` is false)
/// where `p` does not vanish. Random search over growing integer boxes,
/// starting at side total_degree + 1; each candidate is re-checked before it
/// is returned. Throws Error when `p` is the zero polynomial.
EvaluationPoint<GaussianRational> find_nonroot(const Polynomial& p, bool dagger_mode, std::uint64_t seed);

}  // namespace hypercat

namespace Eigen {
template <>
struct NumTraits<hypercat::Polynomial> : ExactNumTraits<hypercat::Polynomial> {};
}  // namespace Eigen

namespace hypercat {

template <class S>
S evaluate(const Polynomial& p, const EvaluationPoint<S>& point) {
  using Traits = SemiringTraits<S>;
  S total = Traits::zero();
  for (const auto& [mono, coeff] : p.terms()) {
    S value = Traits::from_integer(coeff);
    for (const auto& [var, exp] : mono) {
      auto it = point.find(var.index);
      if (it == point.end())
        throw Error("no value assigned to X_b" + std::to_string(var.index));
      const S base = var.bar ? Traits::involute(it->second) : it->second;
      for (std::uint32_t e = 0; e < exp; ++e) value = value * base;
    }
    total = total + value;
  }
  return total;
}

}  // namespace hypercat
