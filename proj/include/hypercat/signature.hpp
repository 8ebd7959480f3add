#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hypercat/error.hpp"

namespace hypercat {

/// An object word. The monoidal unit is the empty word.
using Word = std::vector<std::string>;

std::string to_string(const Word& w);

struct GeneratorDecl {
  std::string name;
  Word dom;
  Word cod;
  std::optional<std::string> dagger_of;

  bool operator==(const GeneratorDecl&) const = default;
};

/// A monoidal (dagger) signature: object names, typed generators and the
/// involutive dagger pairing on generator names.
///
/// Signatures are immutable once built. `build` validates every invariant and
/// completes one-sided dagger declarations (declaring `f` as `dagger_of: g`
/// implies `g` is `dagger_of: f`).
class Signature {
 public:
  Signature() = default;

  static Signature build(std::vector<std::string> objects, std::vector<GeneratorDecl> generators,
                         bool is_dagger);

  const std::vector<std::string>& objects() const { return objects_; }
  const std::map<std::string, GeneratorDecl>& generators() const { return generators_; }
  bool is_dagger() const { return is_dagger_; }

  bool has_object(std::string_view name) const;
  bool has_generator(std::string_view name) const;

  /// Throws SignatureError for unknown names.
  const GeneratorDecl& generator(std::string_view name) const;

  /// Name of the dagger partner. Throws if the signature is not a dagger signature.
  const std::string& dagger_name(std::string_view name) const;

  bool operator==(const Signature&) const = default;

 private:
  friend struct SignatureAccess;

  std::vector<std::string> objects_;
  std::map<std::string, GeneratorDecl> generators_;
  bool is_dagger_ = false;
};

/// Identifiers usable as object or generator names in user-supplied signatures.
bool is_user_identifier(std::string_view name);

/// Result of adding the port boxes used to close an open morphism.
struct PortExtension {
  Signature signature;
  std::string input_box;   // I -> dom_word
  std::string output_box;  // cod_word -> I
};

/// Adds fresh generators `__in : I -> dom_word` and `__out : cod_word -> I`
/// (plus `__in_dag`, `__out_dag` partners for dagger signatures). Names are
/// suffixed with a counter when an earlier extension already took them.
PortExtension extend_with_ports(const Signature& sig, const Word& dom_word, const Word& cod_word);

/// Parses a signature document. Reserved `__` names are rejected unless
/// `allow_reserved` is set (used when replaying closed-up signatures).
Signature load_signature(const nlohmann::json& doc, bool allow_reserved = false);
Signature load_signature_file(const std::string& path);
nlohmann::json to_json(const Signature& sig);

}  // namespace hypercat
