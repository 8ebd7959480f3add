#include "hypercat/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>

namespace hypercat {

Monomial monomial_of(const std::vector<Variable>& vars) {
  std::map<Variable, std::uint32_t> exps;
  for (const auto& v : vars) ++exps[v];
  return Monomial(exps.begin(), exps.end());
}

namespace {

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(const Integer& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(std::uint32_t index, bool bar) {
  return term(Monomial{{Variable{index, bar}, 1}}, 1);
}

Polynomial Polynomial::term(Monomial m, Integer coefficient) {
  Polynomial p;
  std::sort(m.begin(), m.end());
  Monomial merged;
  for (const auto& [v, e] : m) {
    if (e == 0) continue;
    if (!merged.empty() && merged.back().first == v)
      merged.back().second += e;
    else
      merged.emplace_back(v, e);
  }
  p.add_term(merged, coefficient);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

std::size_t Polynomial::total_degree() const {
  std::size_t deg = 0;
  for (const auto& [m, _] : terms_) {
    std::size_t d = 0;
    for (const auto& [v, e] : m) d += e;
    deg = std::max(deg, d);
  }
  return deg;
}

std::vector<Variable> Polynomial::variables() const {
  std::set<Variable> vars;
  for (const auto& [m, _] : terms_)
    for (const auto& [v, e] : m) vars.insert(v);
  return {vars.begin(), vars.end()};
}

Integer Polynomial::coefficient_of(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

Polynomial Polynomial::involute() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Monomial swapped;
    for (const auto& [v, e] : m) swapped.emplace_back(Variable{v.index, !v.bar}, e);
    std::sort(swapped.begin(), swapped.end());
    out.add_term(swapped, c);
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  Polynomial out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(multiply(ma, mb), ca * cb);
  *this = std::move(out);
  return *this;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out;
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Integer magnitude = abs(c);
    if (first)
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    first = false;
    std::vector<std::string> factors;
    if (m.empty() || magnitude != 1) factors.push_back(magnitude.get_str());
    for (const auto& [v, e] : m) {
      std::string f = (v.bar ? "Xbar_b" : "X_b") + std::to_string(v.index);
      if (e > 1) f += "^" + std::to_string(e);
      factors.push_back(std::move(f));
    }
    for (std::size_t k = 0; k < factors.size(); ++k) out += (k ? "*" : "") + factors[k];
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    skip();
    Polynomial total;
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    while (true) {
      Polynomial t = term();
      total += negative ? -t : t;
      if (accept('+'))
        negative = false;
      else if (accept('-'))
        negative = true;
      else
        break;
    }
    if (pos_ != text_.size()) throw ParseError("unexpected character in polynomial", pos_);
    return total;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      skip();
      return true;
    }
    return false;
  }
  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected digits in polynomial", pos_);
    std::string out(text_.substr(start, pos_ - start));
    skip();
    return out;
  }
  bool starts_with(std::string_view prefix) const { return text_.substr(pos_).rfind(prefix, 0) == 0; }

  Polynomial factor() {
    bool bar = false;
    if (starts_with("Xbar_b")) {
      bar = true;
      pos_ += 6;
    } else if (starts_with("X_b")) {
      pos_ += 3;
    } else {
      return Polynomial(Integer(digits()));
    }
    const auto index = static_cast<std::uint32_t>(std::stoul(digits()));
    std::uint32_t exp = 1;
    if (accept('^')) exp = static_cast<std::uint32_t>(std::stoul(digits()));
    return Polynomial::term(Monomial{{Variable{index, bar}, exp}}, 1);
  }

  Polynomial term() {
    Polynomial t = factor();
    while (accept('*')) t *= factor();
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

EvaluationPoint<GaussianRational> find_nonroot(const Polynomial& p, bool dagger_mode, std::uint64_t seed) {
  if (p.is_zero()) throw Error("the zero polynomial has no non-root");
  std::set<std::uint32_t> indices;
  for (const auto& v : p.variables()) indices.insert(v.index);

  std::mt19937_64 rng(seed);
  long bound = static_cast<long>(p.total_degree()) + 1;
  constexpr int kAttemptsPerBox = 32;
  while (true) {
    std::uniform_int_distribution<long> coord(-bound, bound);
    std::uniform_int_distribution<long> nonzero(1, bound);
    std::bernoulli_distribution sign(0.5);
    for (int attempt = 0; attempt < kAttemptsPerBox; ++attempt) {
      EvaluationPoint<GaussianRational> point;
      for (std::uint32_t k : indices) {
        const long re = coord(rng);
        long im = 0;
        if (dagger_mode) {
          // Non-real values first: a real point cannot separate X from Xbar.
          im = attempt < kAttemptsPerBox / 2 ? nonzero(rng) * (sign(rng) ? 1 : -1) : coord(rng);
        }
        point.emplace(k, GaussianRational(Rational(re), Rational(im)));
      }
      if (!evaluate(p, point).is_zero()) return point;
    }
    bound *= 2;
  }
}

}  // namespace hypercat
