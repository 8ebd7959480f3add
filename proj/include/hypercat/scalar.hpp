#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace hypercat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact complex rationals re + im·i. The involution is complex conjugation.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {0, 1}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  GaussianRational conj() const { return {re_, -im_}; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  /// Throws std::domain_error on division by zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Formats as `3`, `-1/2`, `2i`, `1/2+3i`, `1-i`.
std::string to_string(const GaussianRational& z);
GaussianRational parse_gaussian(std::string_view text);

inline std::ostream& operator<<(std::ostream& out, const GaussianRational& z) { return out << to_string(z); }
Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);

/// Compile-time description of a commutative unital semiring with involution.
///
/// Specialisations provide zero(), one(), is_zero(), involute(), to_string(),
/// parse(), from_integer(), and the flags `has_negation` and
/// `involution_trivial`.
template <class S>
struct SemiringTraits;

template <>
struct SemiringTraits<Integer> {
  static constexpr bool has_negation = true;
  static constexpr bool involution_trivial = true;
  static constexpr const char* name = "int";
  static Integer zero() { return 0; }
  static Integer one() { return 1; }
  static bool is_zero(const Integer& a) { return sgn(a) == 0; }
  static Integer involute(const Integer& a) { return a; }
  static Integer from_integer(const Integer& a) { return a; }
  static std::string to_string(const Integer& a) { return a.get_str(); }
  static Integer parse(std::string_view s) { return parse_integer(s); }
};

template <>
struct SemiringTraits<Rational> {
  static constexpr bool has_negation = true;
  static constexpr bool involution_trivial = true;
  static constexpr const char* name = "rat";
  static Rational zero() { return 0; }
  static Rational one() { return 1; }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static Rational involute(const Rational& a) { return a; }
  static Rational from_integer(const Integer& a) { return Rational(a); }
  static std::string to_string(const Rational& a) { return a.get_str(); }
  static Rational parse(std::string_view s) { return parse_rational(s); }
};

template <>
struct SemiringTraits<GaussianRational> {
  static constexpr bool has_negation = true;
  static constexpr bool involution_trivial = false;
  static constexpr const char* name = "gauss";
  static GaussianRational zero() { return 0; }
  static GaussianRational one() { return 1; }
  static bool is_zero(const GaussianRational& a) { return a.is_zero(); }
  static GaussianRational involute(const GaussianRational& a) { return a.conj(); }
  static GaussianRational from_integer(const Integer& a) { return Rational(a); }
  static std::string to_string(const GaussianRational& a) { return hypercat::to_string(a); }
  static GaussianRational parse(std::string_view s) { return parse_gaussian(s); }
};

template <class S>
S involute(const S& a) {
  return SemiringTraits<S>::involute(a);
}

template <class S>
bool is_zero(const S& a) {
  return SemiringTraits<S>::is_zero(a);
}

}  // namespace hypercat

namespace Eigen {

template <class S>
struct ExactNumTraits : GenericNumTraits<S> {
  using Real = S;
  using NonInteger = S;
  using Nested = S;
  using Literal = S;
  // Exact types: printing needs no precision.
  static constexpr int digits10() { return 0; }
  static constexpr int max_digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8,
  };
};

template <>
struct NumTraits<mpz_class> : ExactNumTraits<mpz_class> {};
template <>
struct NumTraits<mpq_class> : ExactNumTraits<mpq_class> {};
template <>
struct NumTraits<hypercat::GaussianRational> : ExactNumTraits<hypercat::GaussianRational> {};

}  // namespace Eigen
