#include "hypercat/signature.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

namespace hypercat {

namespace {

constexpr std::array<std::string_view, 8> kKeywords = {"id",    "swap", "mu",  "eta",
                                                       "delta", "eps",  "cap", "cup"};

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  const auto ident_char = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  };
  return std::all_of(name.begin(), name.end(), ident_char) && !(name[0] >= '0' && name[0] <= '9');
}

}  // namespace

std::string to_string(const Word& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += w[i];
  }
  return out + ")";
}

bool is_user_identifier(std::string_view name) {
  if (!is_identifier(name) || name.front() == '_') return false;
  return std::find(kKeywords.begin(), kKeywords.end(), name) == kKeywords.end();
}

// Grants the port extension access to the unchecked constructor path: port
// boxes use reserved `__` names that `build` rejects.
struct SignatureAccess {
  static Signature make(std::vector<std::string> objects, std::vector<GeneratorDecl> generators,
                        bool is_dagger, bool allow_reserved) {
    Signature sig;
    sig.is_dagger_ = is_dagger;

    std::set<std::string> seen;
    for (auto& obj : objects) {
      if (!is_user_identifier(obj)) throw SignatureError("invalid object name '" + obj + "'");
      if (!seen.insert(obj).second) throw SignatureError("duplicate object '" + obj + "'");
    }
    sig.objects_ = std::move(objects);

    for (auto& g : generators) {
      const bool reserved = g.name.rfind("__", 0) == 0 && is_identifier(g.name);
      if (!(is_user_identifier(g.name) || (allow_reserved && reserved)))
        throw SignatureError("invalid generator name '" + g.name + "'");
      if (seen.count(g.name))
        throw SignatureError("duplicate name '" + g.name + "'");
      seen.insert(g.name);
      for (const Word* w : {&g.dom, &g.cod})
        for (const auto& obj : *w)
          if (!sig.has_object(obj))
            throw SignatureError("undeclared object '" + obj + "' in arity of '" + g.name + "'");
      sig.generators_.emplace(g.name, g);
    }

    for (auto& [name, g] : sig.generators_) {
      if (!g.dagger_of) continue;
      if (!is_dagger)
        throw SignatureError("generator '" + name + "' declares a dagger in a non-dagger signature");
      auto it = sig.generators_.find(*g.dagger_of);
      if (it == sig.generators_.end())
        throw SignatureError("dagger of '" + name + "' names unknown generator '" + *g.dagger_of + "'");
      auto& partner = it->second;
      if (partner.dom != g.cod || partner.cod != g.dom)
        throw SignatureError("dagger pairing " + name + " <-> " + partner.name +
                             " does not swap arities");
      if (partner.dagger_of && *partner.dagger_of != name)
        throw SignatureError("dagger pairing is not an involution at '" + name + "'");
      partner.dagger_of = name;
    }
    if (is_dagger) {
      for (const auto& [name, g] : sig.generators_)
        if (!g.dagger_of) throw SignatureError("generator '" + name + "' has no dagger partner");
    }
    return sig;
  }
};

Signature Signature::build(std::vector<std::string> objects, std::vector<GeneratorDecl> generators,
                           bool is_dagger) {
  return SignatureAccess::make(std::move(objects), std::move(generators), is_dagger, false);
}

bool Signature::has_object(std::string_view name) const {
  return std::find(objects_.begin(), objects_.end(), name) != objects_.end();
}

bool Signature::has_generator(std::string_view name) const {
  return generators_.find(std::string(name)) != generators_.end();
}

const GeneratorDecl& Signature::generator(std::string_view name) const {
  auto it = generators_.find(std::string(name));
  if (it == generators_.end()) throw SignatureError("unknown generator '" + std::string(name) + "'");
  return it->second;
}

const std::string& Signature::dagger_name(std::string_view name) const {
  if (!is_dagger_) throw SignatureError("signature lacks a dagger pairing");
  return *generator(name).dagger_of;
}

PortExtension extend_with_ports(const Signature& sig, const Word& dom_word, const Word& cod_word) {
  for (const Word* w : {&dom_word, &cod_word})
    for (const auto& obj : *w)
      if (!sig.has_object(obj)) throw SignatureError("undeclared object '" + obj + "'");

  const auto fresh = [&](const std::string& base) {
    const auto taken = [&](const std::string& n) {
      return sig.has_generator(n) || sig.has_generator(n + "_dag");
    };
    if (!taken(base)) return base;
    for (int k = 1;; ++k)
      if (!taken(base + std::to_string(k))) return base + std::to_string(k);
  };

  std::vector<GeneratorDecl> gens;
  for (const auto& [_, g] : sig.generators()) gens.push_back(g);
  PortExtension ext;
  ext.input_box = fresh("__in");
  ext.output_box = fresh("__out");
  gens.push_back({ext.input_box, {}, dom_word, std::nullopt});
  gens.push_back({ext.output_box, cod_word, {}, std::nullopt});
  if (sig.is_dagger()) {
    gens[gens.size() - 2].dagger_of = ext.input_box + "_dag";
    gens.back().dagger_of = ext.output_box + "_dag";
    gens.push_back({ext.input_box + "_dag", dom_word, {}, ext.input_box});
    gens.push_back({ext.output_box + "_dag", {}, cod_word, ext.output_box});
  }
  ext.signature = SignatureAccess::make(sig.objects(), std::move(gens), sig.is_dagger(), true);
  return ext;
}

Signature load_signature(const nlohmann::json& doc, bool allow_reserved) {
  try {
    std::vector<std::string> objects = doc.at("objects").get<std::vector<std::string>>();
    std::vector<GeneratorDecl> gens;
    for (const auto& g : doc.value("generators", nlohmann::json::array())) {
      GeneratorDecl decl;
      decl.name = g.at("name").get<std::string>();
      decl.dom = g.value("dom", Word{});
      decl.cod = g.value("cod", Word{});
      if (g.contains("dagger_of") && !g.at("dagger_of").is_null())
        decl.dagger_of = g.at("dagger_of").get<std::string>();
      gens.push_back(std::move(decl));
    }
    return SignatureAccess::make(std::move(objects), std::move(gens), doc.value("dagger", false),
                                 allow_reserved);
  } catch (const nlohmann::json::exception& e) {
    throw SignatureError(std::string("malformed signature document: ") + e.what());
  }
}

Signature load_signature_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open signature file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw SignatureError("'" + path + "': " + e.what());
  }
  return load_signature(doc);
}

nlohmann::json to_json(const Signature& sig) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& [name, g] : sig.generators()) {
    nlohmann::json entry = {{"name", name}, {"dom", g.dom}, {"cod", g.cod}};
    if (g.dagger_of) entry["dagger_of"] = *g.dagger_of;
    gens.push_back(std::move(entry));
  }
  return {{"objects", sig.objects()}, {"generators", gens}, {"dagger", sig.is_dagger()}};
}

}  // namespace hypercat
