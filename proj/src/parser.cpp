#include <cctype>

#include "hypercat/term.hpp"

namespace hypercat {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  Term parse() {
    Term t = sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected an identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  Term sequence() {
    Term t = tensor();
    while (true) {
      const std::size_t at = (skip_space(), pos_);
      if (!accept(';')) return t;
      Term rhs = tensor();
      try {
        t = Term::seq(std::move(t), std::move(rhs));
      } catch (const TypeError& e) {
        throw TypeError(std::string(e.what()) + " at position " + std::to_string(at));
      }
    }
  }

  Term tensor() {
    Term t = postfix();
    while (accept('*')) t = Term::par(std::move(t), postfix());
    return t;
  }

  Term postfix() {
    Term t = atom();
    while (true) {
      const std::size_t at = (skip_space(), pos_);
      if (!accept('^')) return t;
      if (t.contains_boxes() && !sig_.is_dagger())
        throw TypeError("dagger of a term with boxes needs a dagger signature at position " +
                        std::to_string(at));
      t = Term::dag(std::move(t));
    }
  }

  std::string object() {
    const std::size_t at = (skip_space(), pos_);
    std::string name = identifier();
    if (!sig_.has_object(name)) throw ParseError("unknown object '" + name + "'", at);
    return name;
  }

  Word object_list() {
    expect('[');
    Word w;
    if (accept(']')) return w;
    do {
      w.push_back(object());
    } while (accept(','));
    expect(']');
    return w;
  }

  Term atom() {
    if (accept('(')) {
      Term t = sequence();
      expect(')');
      return t;
    }
    const std::size_t at = (skip_space(), pos_);
    const std::string name = identifier();
    skip_space();
    const bool bracketed = pos_ < text_.size() && text_[pos_] == '[';
    if (bracketed) {
      Word args = object_list();
      const auto arity = [&](std::size_t n) {
        if (args.size() != n)
          throw ParseError("'" + name + "' takes " + std::to_string(n) + " object(s)", at);
      };
      if (name == "id") return Term::id(std::move(args));
      if (name == "swap") return arity(2), Term::swap(args[0], args[1]);
      arity(1);
      if (name == "mu") return Term::mu(args[0]);
      if (name == "eta") return Term::eta(args[0]);
      if (name == "delta") return Term::delta(args[0]);
      if (name == "eps") return Term::eps(args[0]);
      if (name == "cap") return Term::cap(args[0]);
      if (name == "cup") return Term::cup(args[0]);
      throw ParseError("unknown constant '" + name + "'", at);
    }
    if (!sig_.has_generator(name)) throw ParseError("unknown identifier '" + name + "'", at);
    return Term::box(sig_, name);
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text, const Signature& sig) { return Parser(text, sig).parse(); }

}  // namespace hypercat
