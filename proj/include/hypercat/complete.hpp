#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hypercat/diagram.hpp"
#include "hypercat/matsem.hpp"
#include "hypercat/polynomial.hpp"
#include "hypercat/signature.hpp"

namespace hypercat {

/// Every object has two elements and every generator is the all-ones matrix,
/// so a closed diagram evaluates to 2^(number of dots).
template <class S>
Model<S> dot_count_model(const Signature& sig) {
  Model<S> m(sig);
  for (const auto& obj : sig.objects()) m.set_object(obj, IndexSet::of_size(2));
  for (const auto& [name, g] : sig.generators())
    m.set_generator(name, Matrix<S>::Constant(m.dim(g.cod), m.dim(g.dom), SemiringTraits<S>::one()));
  return m;
}

/// Distinct primes 2, 3, 5, ... for the objects labelling dots of `f` or `g`
/// (in name order).
std::map<std::string, unsigned> free_dot_primes(const DotDiagram& f, const DotDiagram& g);

/// Objects labelling dots of `f` or `g` get p_A elements, the rest one; each
/// generator is 1 exactly at the all-first-elements entry. Simple closed
/// diagrams evaluate to 1 and a free dot of type A contributes p_A.
template <class S>
Model<S> free_dot_model(const DotDiagram& f, const DotDiagram& g, const Signature& sig) {
  const auto primes = free_dot_primes(f, g);
  Model<S> m(sig);
  for (const auto& obj : sig.objects()) {
    auto it = primes.find(obj);
    m.set_object(obj, IndexSet::of_size(it == primes.end() ? 1 : it->second));
  }
  for (const auto& [name, gen] : sig.generators()) {
    Matrix<S> mat = zero_matrix<S>(m.dim(gen.cod), m.dim(gen.dom));
    mat(0, 0) = SemiringTraits<S>::one();
    m.set_generator(name, std::move(mat));
  }
  return m;
}

/// The polynomial model of a simple closed `f`: object A is the set of dots
/// of `f` labelled A, and generator g is the sum over boxes b labelled g of
/// the indicator X_b of b's wiring. In dagger mode g additionally receives
/// the conjugate transposes (Xbar_b) of the boxes labelled g's partner.
/// Box b carries variable index b + 1.
Model<Polynomial> poly_model(const DotDiagram& f, const Signature& sig, bool dagger_mode);

/// The product of X_b over all boxes of `f`.
Monomial magic_monomial(const DotDiagram& f);

/// Coefficient of the magic monomial of `f` in the evaluation of `g` under
/// poly_model(f).
Integer magic_coefficient(const DotDiagram& g, const DotDiagram& f, const Signature& sig, bool dagger_mode);

/// Homomorphisms g -> f with bijective box map, by enumeration.
std::size_t bbij_count(const DotDiagram& g, const DotDiagram& f);

struct Closure {
  Signature signature;  // extended by the port boxes
  DotDiagram lhs;
  DotDiagram rhs;
  std::string input_box;
  std::string output_box;
};

/// Closes both morphisms with fresh rigid boxes `__in : I -> dom` and
/// `__out : cod -> I`. Throws TypeError if their boundaries differ.
Closure close_up(const Morphism& f, const Morphism& g, const Signature& sig);

/// Closes `f` with unit and counit dots instead. Not a faithful closure: it
/// can identify non-isomorphic morphisms.
DotDiagram close_with_spiders(const Morphism& f);

enum class Verdict { Equal, Distinct };
enum class Route { FreeDots, DotCount, MagicCoefficient };

std::string to_string(Verdict v);
std::string to_string(Route r);

/// A scalar model separating the two closures.
struct Witness {
  Signature signature;
  DotDiagram lhs;
  DotDiagram rhs;
  Model<GaussianRational> model;
  std::optional<EvaluationPoint<GaussianRational>> point;  // magic-coefficient route only
  std::optional<Polynomial> difference;
  GaussianRational lhs_value;
  GaussianRational rhs_value;
  std::string field;  // "Q" or "Q(i)"
};

struct Stage {
  std::string name;
  std::string result;
};

struct DistinguisherReport {
  Verdict verdict = Verdict::Equal;
  std::optional<Route> route;
  std::optional<Witness> witness;
  std::vector<Stage> stages;
  bool dagger_mode = false;
  std::uint64_t seed = 0;
};

/// Semantic equality test. Closes both sides with port boxes, then compares
/// free dots (prime model), dot counts (dot-counting model) and finally the
/// polynomial evaluations under the left closure's polynomial model. A
/// distinct verdict carries a rational (Gaussian rational in dagger mode)
/// witness. Deterministic in (f, g, seed).
DistinguisherReport decide_equal(const Morphism& f, const Morphism& g, const Signature& sig, bool dagger_mode,
                                 std::uint64_t seed = 0);

nlohmann::json to_json(const DistinguisherReport& r);
DistinguisherReport report_from_json(const nlohmann::json& doc);

/// Re-evaluates a serialized witness. True when both recorded values are
/// reproduced and differ.
bool replay_witness(const Witness& w);

}  // namespace hypercat
