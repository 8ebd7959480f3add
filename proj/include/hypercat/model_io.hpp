#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypercat/matsem.hpp"

namespace hypercat {

// Model documents:
//
//   {"objects": {"A": 2, "B": ["x", "y"]},
//    "generators": {"f": {"entries": [{"row": ["y"], "col": [1], "value": "3"}]},
//                   "g": {"dense": [["1", "0"], ["0", "1"]]}}}
//
// An object is a size (labels 0..n-1) or a label list. Row and column words
// name one element per object of the codomain and domain word; elements may
// be given by label or by position. Scalars are strings in the semiring's
// syntax (plain JSON integers are accepted too). In a dagger signature a
// generator may be omitted when its partner is given; its matrix is derived
// by conjugate transposition.

namespace detail {

template <class S>
S scalar_from_json(const nlohmann::json& v) {
  if (v.is_string()) return SemiringTraits<S>::parse(v.get<std::string>());
  if (v.is_number_integer()) return SemiringTraits<S>::from_integer(Integer(v.get<long>()));
  if constexpr (std::is_same_v<S, GaussianRational>) {
    if (v.is_array() && v.size() == 2)
      return GaussianRational(scalar_from_json<Rational>(v[0]), scalar_from_json<Rational>(v[1]));
  }
  throw Error("invalid scalar " + v.dump());
}

inline std::size_t element_from_json(const IndexSet& set, const std::string& object, const nlohmann::json& v) {
  if (v.is_string()) {
    const auto& labels = set.labels;
    for (std::size_t k = 0; k < labels.size(); ++k)
      if (labels[k] == v.get<std::string>()) return k;
  } else if (v.is_number_unsigned() && v.get<std::size_t>() < set.size()) {
    return v.get<std::size_t>();
  }
  throw Error("no element " + v.dump() + " in the index set of '" + object + "'");
}

template <class S>
std::size_t flat_from_json(const Model<S>& m, const Word& w, const nlohmann::json& v) {
  if (!v.is_array() || v.size() != w.size())
    throw Error("index word " + v.dump() + " does not match " + to_string(w));
  std::size_t flat = 0;
  for (std::size_t k = 0; k < w.size(); ++k)
    flat = flat * m.size_of(w[k]) + element_from_json(m.object(w[k]), w[k], v[k]);
  return flat;
}

template <class S>
nlohmann::json flat_to_json(const Model<S>& m, const Word& w, std::size_t flat) {
  std::vector<std::string> labels(w.size());
  for (std::size_t k = w.size(); k-- > 0;) {
    const IndexSet& set = m.object(w[k]);
    labels[k] = set.labels[flat % set.size()];
    flat /= set.size();
  }
  return labels;
}

}  // namespace detail

template <class S>
Model<S> model_from_json(const nlohmann::json& doc, const Signature& sig) {
  Model<S> m(sig);
  const auto& objects = doc.at("objects");
  for (const auto& obj : sig.objects()) {
    if (!objects.contains(obj)) throw Error("model has no index set for object '" + obj + "'");
    const auto& v = objects.at(obj);
    if (v.is_number_unsigned()) {
      m.set_object(obj, IndexSet::of_size(v.get<std::size_t>()));
    } else {
      IndexSet set;
      for (const auto& label : v) set.labels.push_back(label.is_string() ? label.get<std::string>() : label.dump());
      m.set_object(obj, std::move(set));
    }
  }
  for (const auto& [name, _] : objects.items())
    if (!sig.has_object(name)) throw SignatureError("model mentions unknown object '" + name + "'");

  const auto& gens = doc.at("generators");
  for (const auto& [name, spec] : gens.items()) {
    const GeneratorDecl& g = sig.generator(name);
    Matrix<S> mat = zero_matrix<S>(m.dim(g.cod), m.dim(g.dom));
    if (spec.contains("dense")) {
      const auto& rows = spec.at("dense");
      if (rows.size() != static_cast<std::size_t>(mat.rows())) throw ShapeError("wrong row count for '" + name + "'");
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != static_cast<std::size_t>(mat.cols()))
          throw ShapeError("wrong column count for '" + name + "'");
        for (std::size_t c = 0; c < rows[r].size(); ++c) mat(r, c) = detail::scalar_from_json<S>(rows[r][c]);
      }
    } else {
      for (const auto& e : spec.at("entries"))
        mat(detail::flat_from_json(m, g.cod, e.at("row")), detail::flat_from_json(m, g.dom, e.at("col"))) +=
            detail::scalar_from_json<S>(e.at("value"));
    }
    m.set_generator(name, std::move(mat));
  }
  for (const auto& [name, g] : sig.generators()) {
    if (gens.contains(name)) continue;
    if (sig.is_dagger() && gens.contains(*g.dagger_of))
      m.set_generator(name, dagger_mat(m.generator(*g.dagger_of)));
    else
      throw Error("model has no matrix for generator '" + name + "'");
  }
  m.validate();
  return m;
}

/// Sparse form: default-labelled objects as sizes, nonzero entries only.
template <class S>
nlohmann::json to_json(const Model<S>& m) {
  nlohmann::json objects = nlohmann::json::object();
  for (const auto& [name, set] : m.objects()) {
    if (set == IndexSet::of_size(set.size()))
      objects[name] = set.size();
    else
      objects[name] = set.labels;
  }
  nlohmann::json gens = nlohmann::json::object();
  for (const auto& [name, mat] : m.generators()) {
    const GeneratorDecl& g = m.signature().generator(name);
    nlohmann::json entries = nlohmann::json::array();
    for (Eigen::Index r = 0; r < mat.rows(); ++r)
      for (Eigen::Index c = 0; c < mat.cols(); ++c)
        if (!is_zero(mat(r, c)))
          entries.push_back({{"row", detail::flat_to_json(m, g.cod, r)},
                             {"col", detail::flat_to_json(m, g.dom, c)},
                             {"value", SemiringTraits<S>::to_string(mat(r, c))}});
    gens[name] = {{"entries", std::move(entries)}};
  }
  return {{"objects", std::move(objects)}, {"generators", std::move(gens)}};
}

/// Rows of scalar strings.
template <class S>
nlohmann::json matrix_to_json(const Matrix<S>& mat) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < mat.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < mat.cols(); ++c) row.push_back(SemiringTraits<S>::to_string(mat(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hypercat
