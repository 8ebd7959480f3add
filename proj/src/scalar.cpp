#include "hypercat/scalar.hpp"

#include <algorithm>
#include <stdexcept>

#include "hypercat/error.hpp"

namespace hypercat {

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
  if (sgn(norm) == 0) throw std::domain_error("division by zero");
  *this *= o.conj();
  re_ /= norm;
  im_ /= norm;
  return *this;
}

std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return z.re().get_str();
  std::string im;
  if (z.im() == 1)
    im = "i";
  else if (z.im() == -1)
    im = "-i";
  else
    im = z.im().get_str() + "i";
  if (sgn(z.re()) == 0) return im;
  return z.re().get_str() + (im[0] == '-' ? "" : "+") + im;
}

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t') out += c;
  return out;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string s = strip(text);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  Integer out;
  if (s.empty() || out.set_str(s, 10) != 0) throw Error("invalid integer '" + std::string(text) + "'");
  return out;
}

Rational parse_rational(std::string_view text) {
  std::string s = strip(text);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s));
  const Integer num = parse_integer(s.substr(0, slash));
  const Integer den = parse_integer(s.substr(slash + 1));
  if (sgn(den) == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

GaussianRational parse_gaussian(std::string_view text) {
  const std::string s = strip(text);
  if (s.empty()) throw Error("empty scalar");
  if (s.back() != 'i') return GaussianRational(parse_rational(s));

  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;)
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  const std::string re_part = split == std::string::npos ? "0" : body.substr(0, split);
  std::string im_part = split == std::string::npos ? body : body.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  return {parse_rational(re_part), parse_rational(im_part)};
}

}  // namespace hypercat
