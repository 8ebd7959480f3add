#include "hypercat/complete.hpp"

#include <nlohmann/json.hpp>

#include "hypercat/model_io.hpp"

namespace hypercat {

using GR = GaussianRational;

std::map<std::string, unsigned> free_dot_primes(const DotDiagram& f, const DotDiagram& g) {
  std::set<std::string> labels(f.dot_labels().begin(), f.dot_labels().end());
  labels.insert(g.dot_labels().begin(), g.dot_labels().end());
  std::map<std::string, unsigned> primes;
  unsigned candidate = 2;
  for (const auto& obj : labels) {
    const auto is_prime = [](unsigned n) {
      for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
      return true;
    };
    while (!is_prime(candidate)) ++candidate;
    primes[obj] = candidate++;
  }
  return primes;
}

Model<Polynomial> poly_model(const DotDiagram& f, const Signature& sig, bool dagger_mode) {
  if (dagger_mode && !sig.is_dagger()) throw SignatureError("dagger mode needs a dagger signature");
  f.validate(sig);

  Model<Polynomial> m(sig);
  std::map<std::string, IndexSet> sets;
  std::vector<std::size_t> position(f.dot_count());
  for (DotId d = 0; d < f.dot_count(); ++d) {
    IndexSet& set = sets[f.dot_label(d)];
    position[d] = set.size();
    set.labels.push_back("d" + std::to_string(d));
  }
  for (const auto& obj : sig.objects()) m.set_object(obj, sets[obj]);

  std::map<std::string, Matrix<Polynomial>> mats;
  for (const auto& [name, g] : sig.generators()) mats[name] = zero_matrix<Polynomial>(m.dim(g.cod), m.dim(g.dom));

  const auto flat = [&](const std::vector<DotId>& dots) {
    std::size_t idx = 0;
    for (DotId d : dots) idx = idx * m.size_of(f.dot_label(d)) + position[d];
    return idx;
  };
  for (BoxId b = 0; b < f.box_count(); ++b) {
    const Box& box = f.box(b);
    const auto var = static_cast<std::uint32_t>(b + 1);
    mats[box.label](flat(box.outs), flat(box.ins)) += Polynomial::variable(var);
    if (dagger_mode) mats[sig.dagger_name(box.label)](flat(box.ins), flat(box.outs)) += Polynomial::variable(var, true);
  }
  for (auto& [name, mat] : mats) m.set_generator(name, std::move(mat));
  return m;
}

Monomial magic_monomial(const DotDiagram& f) {
  std::vector<Variable> vars;
  for (BoxId b = 0; b < f.box_count(); ++b) vars.push_back({static_cast<std::uint32_t>(b + 1), false});
  return monomial_of(vars);
}

namespace {

template <class S>
S closed_value(const Model<S>& m, const DotDiagram& f) {
  if (!classify(f).closed) throw Error("expected a closed diagram");
  return eval_contraction(m, f)(0, 0);
}

/// Appends one element to the index set of each object in `objects`. All
/// generator entries touching a new element are zero, so values of simple
/// diagrams do not change, while a free dot of such an object contributes a
/// nonzero factor.
template <class S>
Model<S> pad_objects(const Model<S>& m, const std::set<std::string>& objects) {
  const Signature& sig = m.signature();
  Model<S> out(sig);
  for (const auto& [name, set] : m.objects()) {
    IndexSet padded = set;
    if (objects.count(name)) padded.labels.push_back("pad");
    out.set_object(name, std::move(padded));
  }
  const auto reindex = [&](const Word& w, std::size_t flat) {
    std::vector<std::size_t> digits(w.size());
    for (std::size_t k = w.size(); k-- > 0;) {
      digits[k] = flat % m.size_of(w[k]);
      flat /= m.size_of(w[k]);
    }
    std::size_t idx = 0;
    for (std::size_t k = 0; k < w.size(); ++k) idx = idx * out.size_of(w[k]) + digits[k];
    return idx;
  };
  for (const auto& [name, mat] : m.generators()) {
    const GeneratorDecl& g = sig.generator(name);
    Matrix<S> p = zero_matrix<S>(out.dim(g.cod), out.dim(g.dom));
    for (Eigen::Index r = 0; r < mat.rows(); ++r)
      for (Eigen::Index c = 0; c < mat.cols(); ++c) p(reindex(g.cod, r), reindex(g.dom, c)) = mat(r, c);
    out.set_generator(name, std::move(p));
  }
  return out;
}

std::string describe(const std::map<std::string, std::size_t>& counts) {
  if (counts.empty()) return "none";
  std::string out;
  for (const auto& [obj, n] : counts) out += (out.empty() ? "" : ", ") + obj + "^" + std::to_string(n);
  return out;
}

}  // namespace

Integer magic_coefficient(const DotDiagram& g, const DotDiagram& f, const Signature& sig, bool dagger_mode) {
  return closed_value(poly_model(f, sig, dagger_mode), g).coefficient_of(magic_monomial(f));
}

std::size_t bbij_count(const DotDiagram& g, const DotDiagram& f) { return count_homs(g, f, HomKind::BoxBijective); }

Closure close_up(const Morphism& f, const Morphism& g, const Signature& sig) {
  if (f.dom() != g.dom() || f.cod() != g.cod())
    throw TypeError("cannot compare " + to_string(f.dom()) + " -> " + to_string(f.cod()) + " with " +
                    to_string(g.dom()) + " -> " + to_string(g.cod()));
  PortExtension ext = extend_with_ports(sig, f.dom(), f.cod());
  const Morphism in = box_diagram(ext.signature, ext.input_box);
  const Morphism out = box_diagram(ext.signature, ext.output_box);
  return {ext.signature, compose(compose(in, f), out).rep(), compose(compose(in, g), out).rep(), ext.input_box,
          ext.output_box};
}

DotDiagram close_with_spiders(const Morphism& f) {
  Morphism units = empty_diagram();
  for (const auto& obj : f.dom()) units = tensor(units, spider_diagram(0, 1, obj));
  Morphism counits = empty_diagram();
  for (const auto& obj : f.cod()) counits = tensor(counits, spider_diagram(1, 0, obj));
  return compose(compose(units, f), counits).rep();
}

std::string to_string(Verdict v) { return v == Verdict::Equal ? "equal" : "distinct"; }

std::string to_string(Route r) {
  switch (r) {
    case Route::FreeDots:
      return "free-dot-primes";
    case Route::DotCount:
      return "dot-count";
    case Route::MagicCoefficient:
      return "magic-coefficient";
  }
  return "";
}

DistinguisherReport decide_equal(const Morphism& f, const Morphism& g, const Signature& sig, bool dagger_mode,
                                 std::uint64_t seed) {
  if (dagger_mode && !sig.is_dagger()) throw SignatureError("dagger mode needs a dagger signature");
  DistinguisherReport report;
  report.dagger_mode = dagger_mode;
  report.seed = seed;

  Closure c = close_up(f, g, sig);
  c.lhs.validate(c.signature);
  c.rhs.validate(c.signature);
  report.stages.push_back({"close-up", "ports " + c.input_box + ", " + c.output_box});

  Witness w;
  w.signature = c.signature;
  w.lhs = c.lhs;
  w.rhs = c.rhs;
  w.field = dagger_mode ? "Q(i)" : "Q";
  const auto distinct = [&](Route route, Model<GR> model) {
    w.lhs_value = closed_value(model, c.lhs);
    w.rhs_value = closed_value(model, c.rhs);
    w.model = std::move(model);
    report.verdict = Verdict::Distinct;
    report.route = route;
    report.witness = std::move(w);
    return report;
  };

  const FreeDotSplit ls = split_free_dots(c.lhs);
  const FreeDotSplit rs = split_free_dots(c.rhs);
  if (ls.free_dots != rs.free_dots) {
    report.stages.push_back({"free-dots", describe(ls.free_dots) + " vs " + describe(rs.free_dots)});
    return distinct(Route::FreeDots, free_dot_model<GR>(c.lhs, c.rhs, c.signature));
  }
  report.stages.push_back({"free-dots", "same: " + describe(ls.free_dots)});

  const std::size_t ld = ls.simple_part.dot_count(), rd = rs.simple_part.dot_count();
  if (ld != rd) {
    report.stages.push_back({"dot-count", std::to_string(ld) + " vs " + std::to_string(rd)});
    return distinct(Route::DotCount, dot_count_model<GR>(c.signature));
  }
  report.stages.push_back({"dot-count", "same: " + std::to_string(ld)});

  const Model<Polynomial> poly = poly_model(ls.simple_part, c.signature, dagger_mode);
  const Polynomial diff = closed_value(poly, ls.simple_part) - closed_value(poly, rs.simple_part);
  if (diff.is_zero()) {
    report.stages.push_back({"polynomial", "equal"});
    return report;
  }
  report.stages.push_back({"polynomial", "difference has " + std::to_string(diff.terms().size()) + " terms"});

  const EvaluationPoint<GR> point = find_nonroot(diff, dagger_mode, seed);
  Model<GR> at_point = map_model<GR>(poly, [&](const Polynomial& p) { return evaluate(p, point); });
  std::set<std::string> padded;
  for (const auto& [obj, _] : ls.free_dots) padded.insert(obj);
  w.point = point;
  w.difference = diff;
  return distinct(Route::MagicCoefficient, pad_objects(at_point, padded));
}

nlohmann::json to_json(const DistinguisherReport& r) {
  nlohmann::json doc;
  doc["schema"] = "hypercat.report/1";
  doc["verdict"] = to_string(r.verdict);
  doc["route"] = r.route ? nlohmann::json(to_string(*r.route)) : nlohmann::json(nullptr);
  doc["dagger"] = r.dagger_mode;
  doc["seed"] = r.seed;
  nlohmann::json stages = nlohmann::json::array();
  for (const auto& s : r.stages) stages.push_back({{"stage", s.name}, {"result", s.result}});
  doc["stages"] = std::move(stages);
  if (!r.witness) {
    doc["witness"] = nullptr;
    return doc;
  }
  const Witness& w = *r.witness;
  nlohmann::json wj;
  wj["field"] = w.field;
  wj["signature"] = to_json(w.signature);
  wj["lhs"] = to_json(w.lhs);
  wj["rhs"] = to_json(w.rhs);
  wj["model"] = to_json(w.model);
  if (w.point) {
    nlohmann::json point = nlohmann::json::object();
    for (const auto& [k, v] : *w.point) point["X_b" + std::to_string(k)] = to_string(v);
    wj["point"] = std::move(point);
  }
  if (w.difference) wj["polynomial_difference"] = to_string(*w.difference);
  wj["lhs_value"] = to_string(w.lhs_value);
  wj["rhs_value"] = to_string(w.rhs_value);
  doc["witness"] = std::move(wj);
  return doc;
}

DistinguisherReport report_from_json(const nlohmann::json& doc) {
  if (doc.value("schema", "") != "hypercat.report/1") throw Error("unsupported report schema");
  DistinguisherReport r;
  r.verdict = doc.at("verdict") == "equal" ? Verdict::Equal : Verdict::Distinct;
  if (!doc.at("route").is_null()) {
    const std::string route = doc.at("route");
    for (Route candidate : {Route::FreeDots, Route::DotCount, Route::MagicCoefficient})
      if (to_string(candidate) == route) r.route = candidate;
    if (!r.route) throw Error("unknown route '" + route + "'");
  }
  r.dagger_mode = doc.value("dagger", false);
  r.seed = doc.value("seed", std::uint64_t{0});
  for (const auto& s : doc.value("stages", nlohmann::json::array()))
    r.stages.push_back({s.at("stage"), s.at("result")});
  const auto& wj = doc.at("witness");
  if (wj.is_null()) return r;

  Witness w;
  w.field = wj.at("field");
  w.signature = load_signature(wj.at("signature"), true);
  w.lhs = diagram_from_json(wj.at("lhs"));
  w.rhs = diagram_from_json(wj.at("rhs"));
  w.model = model_from_json<GR>(wj.at("model"), w.signature);
  if (wj.contains("point")) {
    EvaluationPoint<GR> point;
    for (const auto& [key, value] : wj.at("point").items()) {
      if (key.rfind("X_b", 0) != 0) throw Error("bad point coordinate '" + key + "'");
      point[static_cast<std::uint32_t>(std::stoul(key.substr(3)))] = parse_gaussian(value.get<std::string>());
    }
    w.point = std::move(point);
  }
  if (wj.contains("polynomial_difference")) w.difference = parse_polynomial(wj.at("polynomial_difference").get<std::string>());
  w.lhs_value = parse_gaussian(wj.at("lhs_value").get<std::string>());
  w.rhs_value = parse_gaussian(wj.at("rhs_value").get<std::string>());
  r.witness = std::move(w);
  return r;
}

bool replay_witness(const Witness& w) {
  w.model.validate(w.field == "Q(i)");
  w.lhs.validate(w.signature);
  w.rhs.validate(w.signature);
  const GR lhs = closed_value(w.model, w.lhs);
  const GR rhs = closed_value(w.model, w.rhs);
  return lhs == w.lhs_value && rhs == w.rhs_value && lhs != rhs;
}

}  // namespace hypercat
