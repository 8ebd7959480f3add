#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hypercat/signature.hpp"

namespace hypercat {

using DotId = std::size_t;
using BoxId = std::size_t;

/// A box together with the dots its ports are wired to: `ins[i]` is the dot
/// of input port i, `outs[j]` the dot of output port j.
struct Box {
  std::string label;
  std::vector<DotId> ins;
  std::vector<DotId> outs;

  bool operator==(const Box&) const = default;
};

/// A dot-diagram: boxes, dots (multi-edges), and an ordered boundary.
///
/// Boxes and dots are numbered densely from zero. Element numbers are an
/// artefact of the representation; every public notion of equality between
/// morphisms goes through boundary-fixing isomorphism.
class DotDiagram {
 public:
  DotDiagram() = default;

  /// Throws Error if any wiring refers to a dot out of range.
  DotDiagram(std::vector<std::string> dot_labels, std::vector<Box> boxes, std::vector<DotId> inputs,
             std::vector<DotId> outputs);

  std::size_t dot_count() const { return dot_labels_.size(); }
  std::size_t box_count() const { return boxes_.size(); }

  const std::vector<std::string>& dot_labels() const { return dot_labels_; }
  const std::string& dot_label(DotId d) const { return dot_labels_.at(d); }
  const std::vector<Box>& boxes() const { return boxes_; }
  const Box& box(BoxId b) const { return boxes_.at(b); }

  /// Dots wired to the boundary ports, in port order.
  const std::vector<DotId>& inputs() const { return inputs_; }
  const std::vector<DotId>& outputs() const { return outputs_; }

  Word dom() const;
  Word cod() const;

  /// Checks the typing conditions against `sig`: every label is declared and
  /// box ports carry the objects of the generator's arity.
  void validate(const Signature& sig) const;

  /// Structural equality of representations (not isomorphism).
  bool operator==(const DotDiagram&) const = default;

 private:
  std::vector<std::string> dot_labels_;
  std::vector<Box> boxes_;
  std::vector<DotId> inputs_;
  std::vector<DotId> outputs_;
};

/// A morphism of the free hypergraph category: an isomorphism class of
/// dot-diagrams with its boundary words. `==` decides isomorphism.
class Morphism {
 public:
  Morphism() = default;
  explicit Morphism(DotDiagram rep) : rep_(std::move(rep)) {}

  const DotDiagram& rep() const { return rep_; }
  Word dom() const { return rep_.dom(); }
  Word cod() const { return rep_.cod(); }

  friend bool operator==(const Morphism& a, const Morphism& b);

 private:
  DotDiagram rep_;
};

// ---- generators of the free hypergraph category ----

struct GeneratorSpec {
  enum class Kind { Box, Identity, Swap, Mu, Eta, Delta, Epsilon };
  Kind kind;
  std::string name;    // generator name for Kind::Box, else the object
  std::string second;  // second object of Kind::Swap
};

/// Literal single-box / single-dot / two-dot diagrams. Throws SignatureError
/// on names the signature does not declare.
Morphism generator_diagram(const GeneratorSpec& spec, const Signature& sig);

/// One box labelled `name`, one fresh dot per port.
Morphism box_diagram(const Signature& sig, const std::string& name);
/// One dot per object, each wired to the matching input and output.
Morphism identity_diagram(const Word& w);
Morphism swap_diagram(const std::string& a, const std::string& b);
/// The single-dot diagram with `m` inputs and `n` outputs.
Morphism spider_diagram(std::size_t m, std::size_t n, const std::string& object);
Morphism empty_diagram();

/// Sequential composition in diagram order (`f` then `g`), by pushout over
/// the dots shared along the middle boundary. Throws TypeError when
/// `f.cod() != g.dom()`.
Morphism compose(const Morphism& f, const Morphism& g);
Morphism tensor(const Morphism& f, const Morphism& g);
/// Relabels boxes by their dagger partners and exchanges inputs with outputs.
Morphism dagger(const Morphism& f, const Signature& sig);

struct Classification {
  bool simple;
  bool closed;
};

/// Simple: every dot is hit by some wiring (box port or boundary port).
/// Closed: empty boundary.
Classification classify(const DotDiagram& f);

/// Dots touched by nothing.
std::vector<DotId> free_dots(const DotDiagram& f);

struct FreeDotSplit {
  DotDiagram simple_part;
  std::map<std::string, std::size_t> free_dots;  // object -> count
};

/// Separates a closed diagram into its simple part and its free dots.
/// Throws Error if `f` is not closed.
FreeDotSplit split_free_dots(const DotDiagram& f);

/// Closed diagram made only of free dots.
DotDiagram free_dot_diagram(const std::map<std::string, std::size_t>& counts);

// ---- homomorphisms ----

struct Hom {
  std::vector<BoxId> box_map;
  std::vector<DotId> dot_map;

  bool operator==(const Hom&) const = default;
};

enum class HomKind {
  Any,
  BoxBijective,
  Iso,
};

/// Checks every homomorphism equation, including boundary preservation.
bool is_hom(const DotDiagram& f, const DotDiagram& g, const Hom& h);

/// Exhaustive backtracking over homomorphisms `f -> g`. The visitor returns
/// false to stop the search early.
void for_each_hom(const DotDiagram& f, const DotDiagram& g, HomKind kind,
                  const std::function<bool(const Hom&)>& visit);
std::vector<Hom> enumerate_homs(const DotDiagram& f, const DotDiagram& g, HomKind kind);
std::size_t count_homs(const DotDiagram& f, const DotDiagram& g, HomKind kind);

/// A boundary-fixing isomorphism, if one exists.
std::optional<Hom> is_isomorphic(const DotDiagram& f, const DotDiagram& g);

/// Number of automorphisms.
std::size_t automorphism_count(const DotDiagram& f);

/// Renumbers dots and boxes into a deterministic order. Best effort: equal
/// classes usually, but not always, get identical representations.
DotDiagram canonical_form(const DotDiagram& f);

// ---- interchange format ----

nlohmann::json to_json(const DotDiagram& f);
DotDiagram diagram_from_json(const nlohmann::json& doc);
DotDiagram load_diagram_file(const std::string& path);

}  // namespace hypercat
