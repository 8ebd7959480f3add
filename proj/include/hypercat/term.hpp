#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "hypercat/diagram.hpp"
#include "hypercat/signature.hpp"

namespace hypercat {

/// A typed string-diagram expression. Terms are immutable values with
/// shared subterms; every constructor checks typing, so a Term that exists
/// is well typed.
class Term {
 public:
  enum class Kind { Box, Id, Swap, Mu, Eta, Delta, Eps, Cap, Cup, Seq, Par, Dag };

  static Term box(const Signature& sig, std::string_view name);
  static Term id(Word w);
  static Term swap(std::string a, std::string b);
  static Term mu(std::string a);
  static Term eta(std::string a);
  static Term delta(std::string a);
  static Term eps(std::string a);
  /// I -> A A, sugar for `eta ; delta`.
  static Term cap(std::string a);
  /// A A -> I, sugar for `mu ; eps`.
  static Term cup(std::string a);
  /// Diagram-order composition. Throws TypeError if `s.cod() != t.dom()`.
  static Term seq(Term s, Term t);
  static Term par(Term s, Term t);
  static Term dag(Term t);

  Kind kind() const { return kind_; }
  /// Generator name (Kind::Box).
  const std::string& name() const { return name_; }
  /// Object arguments: the word of `id`, the pair of `swap`, the object of a spider constant.
  const Word& objects() const { return objects_; }
  const Term& lhs() const { return *lhs_; }
  const Term& rhs() const { return *rhs_; }
  const Term& operand() const { return *lhs_; }

  const Word& dom() const { return dom_; }
  const Word& cod() const { return cod_; }

  bool contains_boxes() const { return has_boxes_; }
  /// Number of generator constants (identities excluded).
  std::size_t generator_count() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  Term() = default;

  Kind kind_ = Kind::Id;
  std::string name_;
  Word objects_;
  std::shared_ptr<const Term> lhs_;
  std::shared_ptr<const Term> rhs_;
  Word dom_;
  Word cod_;
  bool has_boxes_ = false;
};

/// Prints with minimal parentheses; `parse(to_string(t))` gives back `t`.
std::string to_string(const Term& t);

/// Parses the term grammar: `;` sequential (diagram order), `*` tensor,
/// postfix `^` dagger, constants `id[A,B]`, `swap[A,B]`, `mu[A]`, `eta[A]`,
/// `delta[A]`, `eps[A]`, `cap[A]`, `cup[A]`, and generator names.
/// Precedence `^` > `*` > `;`, both binary operators left-associative.
Term parse_term(std::string_view text, const Signature& sig);

/// The freeness functor: structural translation into dot-diagrams, where
/// pushout composition fuses each connected SCFA region into one dot.
Morphism elaborate(const Term& t, const Signature& sig);

/// Builds a term whose elaboration is isomorphic to `f`: every dot becomes a
/// left-leaning multiplication tree followed by a comultiplication co-tree,
/// boxes are laid out in parallel, and box outputs are fed back to their dots
/// through cups.
Term expand(const Morphism& f, const Signature& sig);

/// Canonical spider term S_m^n on `object`.
Term spider_term(std::size_t m, std::size_t n, const std::string& object);

}  // namespace hypercat
