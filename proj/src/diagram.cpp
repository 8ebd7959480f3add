#include "hypercat/diagram.hpp"

#include <algorithm>

#include "union_find.hpp"

namespace hypercat {

DotDiagram::DotDiagram(std::vector<std::string> dot_labels, std::vector<Box> boxes,
                       std::vector<DotId> inputs, std::vector<DotId> outputs)
    : dot_labels_(std::move(dot_labels)),
      boxes_(std::move(boxes)),
      inputs_(std::move(inputs)),
      outputs_(std::move(outputs)) {
  const auto check = [&](const std::vector<DotId>& dots) {
    for (DotId d : dots)
      if (d >= dot_labels_.size()) throw Error("wiring refers to missing dot " + std::to_string(d));
  };
  check(inputs_);
  check(outputs_);
  for (const auto& b : boxes_) {
    check(b.ins);
    check(b.outs);
  }
}

Word DotDiagram::dom() const {
  Word w;
  for (DotId d : inputs_) w.push_back(dot_labels_[d]);
  return w;
}

Word DotDiagram::cod() const {
  Word w;
  for (DotId d : outputs_) w.push_back(dot_labels_[d]);
  return w;
}

void DotDiagram::validate(const Signature& sig) const {
  for (const auto& label : dot_labels_)
    if (!sig.has_object(label)) throw SignatureError("dot labelled by undeclared object '" + label + "'");
  for (std::size_t b = 0; b < boxes_.size(); ++b) {
    const Box& box = boxes_[b];
    const GeneratorDecl& g = sig.generator(box.label);
    if (box.ins.size() != g.dom.size() || box.outs.size() != g.cod.size())
      throw TypeError("box " + std::to_string(b) + " labelled '" + box.label +
                      "' has the wrong number of ports");
    for (std::size_t i = 0; i < box.ins.size(); ++i)
      if (dot_labels_[box.ins[i]] != g.dom[i])
        throw TypeError("input " + std::to_string(i) + " of box " + std::to_string(b) + " expects " +
                        g.dom[i] + " but its dot carries " + dot_labels_[box.ins[i]]);
    for (std::size_t j = 0; j < box.outs.size(); ++j)
      if (dot_labels_[box.outs[j]] != g.cod[j])
        throw TypeError("output " + std::to_string(j) + " of box " + std::to_string(b) + " expects " +
                        g.cod[j] + " but its dot carries " + dot_labels_[box.outs[j]]);
  }
}

bool operator==(const Morphism& a, const Morphism& b) {
  return is_isomorphic(a.rep(), b.rep()).has_value();
}

// ---- generators ----

Morphism box_diagram(const Signature& sig, const std::string& name) {
  const GeneratorDecl& g = sig.generator(name);
  std::vector<std::string> labels;
  Box box{name, {}, {}};
  for (const auto& obj : g.dom) {
    box.ins.push_back(labels.size());
    labels.push_back(obj);
  }
  for (const auto& obj : g.cod) {
    box.outs.push_back(labels.size());
    labels.push_back(obj);
  }
  std::vector<DotId> inputs = box.ins, outputs = box.outs;
  return Morphism(DotDiagram(std::move(labels), {std::move(box)}, std::move(inputs), std::move(outputs)));
}

Morphism identity_diagram(const Word& w) {
  std::vector<DotId> ports(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) ports[i] = i;
  return Morphism(DotDiagram(w, {}, ports, ports));
}

Morphism swap_diagram(const std::string& a, const std::string& b) {
  return Morphism(DotDiagram({a, b}, {}, {0, 1}, {1, 0}));
}

Morphism spider_diagram(std::size_t m, std::size_t n, const std::string& object) {
  return Morphism(DotDiagram({object}, {}, std::vector<DotId>(m, 0), std::vector<DotId>(n, 0)));
}

Morphism empty_diagram() { return Morphism(DotDiagram()); }

Morphism generator_diagram(const GeneratorSpec& spec, const Signature& sig) {
  using Kind = GeneratorSpec::Kind;
  if (spec.kind == Kind::Box) return box_diagram(sig, spec.name);
  if (!sig.has_object(spec.name)) throw SignatureError("unknown object '" + spec.name + "'");
  switch (spec.kind) {
    case Kind::Identity:
      return identity_diagram({spec.name});
    case Kind::Swap:
      if (!sig.has_object(spec.second)) throw SignatureError("unknown object '" + spec.second + "'");
      return swap_diagram(spec.name, spec.second);
    case Kind::Mu:
      return spider_diagram(2, 1, spec.name);
    case Kind::Eta:
      return spider_diagram(0, 1, spec.name);
    case Kind::Delta:
      return spider_diagram(1, 2, spec.name);
    case Kind::Epsilon:
      return spider_diagram(1, 0, spec.name);
    case Kind::Box:
      break;
  }
  throw Error("unreachable generator kind");
}

// ---- categorical structure ----

Morphism compose(const Morphism& f, const Morphism& g) {
  const DotDiagram& F = f.rep();
  const DotDiagram& G = g.rep();
  if (F.cod() != G.dom())
    throw TypeError("cannot compose: codomain " + to_string(F.cod()) + " does not match domain " +
                    to_string(G.dom()));

  const std::size_t offset = F.dot_count();
  detail::UnionFind uf(offset + G.dot_count());
  for (std::size_t k = 0; k < F.outputs().size(); ++k) uf.unite(F.outputs()[k], offset + G.inputs()[k]);

  std::size_t count = 0;
  const std::vector<std::size_t> cls = uf.dense_classes(count);
  std::vector<std::string> labels(count);
  for (std::size_t d = 0; d < F.dot_count(); ++d) labels[cls[d]] = F.dot_label(d);
  for (std::size_t d = 0; d < G.dot_count(); ++d) labels[cls[offset + d]] = G.dot_label(d);

  const auto remap = [&](const std::vector<DotId>& dots, std::size_t shift) {
    std::vector<DotId> out;
    out.reserve(dots.size());
    for (DotId d : dots) out.push_back(cls[shift + d]);
    return out;
  };
  std::vector<Box> boxes;
  boxes.reserve(F.box_count() + G.box_count());
  for (const auto& b : F.boxes()) boxes.push_back({b.label, remap(b.ins, 0), remap(b.outs, 0)});
  for (const auto& b : G.boxes()) boxes.push_back({b.label, remap(b.ins, offset), remap(b.outs, offset)});
  return Morphism(DotDiagram(std::move(labels), std::move(boxes), remap(F.inputs(), 0),
                             remap(G.outputs(), offset)));
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  const DotDiagram& F = f.rep();
  const DotDiagram& G = g.rep();
  const std::size_t offset = F.dot_count();
  const auto shifted = [offset](std::vector<DotId> dots) {
    for (auto& d : dots) d += offset;
    return dots;
  };

  std::vector<std::string> labels = F.dot_labels();
  labels.insert(labels.end(), G.dot_labels().begin(), G.dot_labels().end());
  std::vector<Box> boxes = F.boxes();
  for (const auto& b : G.boxes()) boxes.push_back({b.label, shifted(b.ins), shifted(b.outs)});
  std::vector<DotId> inputs = F.inputs();
  for (DotId d : G.inputs()) inputs.push_back(d + offset);
  std::vector<DotId> outputs = F.outputs();
  for (DotId d : G.outputs()) outputs.push_back(d + offset);
  return Morphism(DotDiagram(std::move(labels), std::move(boxes), std::move(inputs), std::move(outputs)));
}

Morphism dagger(const Morphism& f, const Signature& sig) {
  const DotDiagram& F = f.rep();
  std::vector<Box> boxes;
  boxes.reserve(F.box_count());
  for (const auto& b : F.boxes()) boxes.push_back({sig.dagger_name(b.label), b.outs, b.ins});
  return Morphism(DotDiagram(F.dot_labels(), std::move(boxes), F.outputs(), F.inputs()));
}

// ---- structure queries ----

namespace {

std::vector<bool> touched_dots(const DotDiagram& f) {
  std::vector<bool> hit(f.dot_count(), false);
  for (DotId d : f.inputs()) hit[d] = true;
  for (DotId d : f.outputs()) hit[d] = true;
  for (const auto& b : f.boxes()) {
    for (DotId d : b.ins) hit[d] = true;
    for (DotId d : b.outs) hit[d] = true;
  }
  return hit;
}

}  // namespace

Classification classify(const DotDiagram& f) {
  const auto hit = touched_dots(f);
  return {std::all_of(hit.begin(), hit.end(), [](bool h) { return h; }),
          f.inputs().empty() && f.outputs().empty()};
}

std::vector<DotId> free_dots(const DotDiagram& f) {
  const auto hit = touched_dots(f);
  std::vector<DotId> out;
  for (DotId d = 0; d < hit.size(); ++d)
    if (!hit[d]) out.push_back(d);
  return out;
}

FreeDotSplit split_free_dots(const DotDiagram& f) {
  if (!classify(f).closed) throw Error("split_free_dots requires a closed diagram");
  const auto hit = touched_dots(f);
  FreeDotSplit out;
  std::vector<DotId> renumber(f.dot_count());
  std::vector<std::string> labels;
  for (DotId d = 0; d < f.dot_count(); ++d) {
    if (hit[d]) {
      renumber[d] = labels.size();
      labels.push_back(f.dot_label(d));
    } else {
      ++out.free_dots[f.dot_label(d)];
    }
  }
  std::vector<Box> boxes;
  for (const auto& b : f.boxes()) {
    Box nb{b.label, {}, {}};
    for (DotId d : b.ins) nb.ins.push_back(renumber[d]);
    for (DotId d : b.outs) nb.outs.push_back(renumber[d]);
    boxes.push_back(std::move(nb));
  }
  out.simple_part = DotDiagram(std::move(labels), std::move(boxes), {}, {});
  return out;
}

DotDiagram free_dot_diagram(const std::map<std::string, std::size_t>& counts) {
  std::vector<std::string> labels;
  for (const auto& [obj, n] : counts) labels.insert(labels.end(), n, obj);
  return DotDiagram(std::move(labels), {}, {}, {});
}

DotDiagram canonical_form(const DotDiagram& f) {
  // Boxes sorted stably by label, then dots numbered by first appearance
  // along inputs, outputs and box ports; untouched dots last, by label.
  std::vector<BoxId> order(f.box_count());
  for (BoxId b = 0; b < order.size(); ++b) order[b] = b;
  std::stable_sort(order.begin(), order.end(),
                   [&](BoxId a, BoxId b) { return f.box(a).label < f.box(b).label; });

  const std::size_t unset = f.dot_count();
  std::vector<DotId> renumber(f.dot_count(), unset);
  std::size_t next = 0;
  const auto visit = [&](DotId d) {
    if (renumber[d] == unset) renumber[d] = next++;
  };
  for (DotId d : f.inputs()) visit(d);
  for (DotId d : f.outputs()) visit(d);
  for (BoxId b : order) {
    for (DotId d : f.box(b).ins) visit(d);
    for (DotId d : f.box(b).outs) visit(d);
  }
  std::vector<DotId> rest;
  for (DotId d = 0; d < f.dot_count(); ++d)
    if (renumber[d] == unset) rest.push_back(d);
  std::stable_sort(rest.begin(), rest.end(),
                   [&](DotId a, DotId b) { return f.dot_label(a) < f.dot_label(b); });
  for (DotId d : rest) renumber[d] = next++;

  std::vector<std::string> labels(f.dot_count());
  for (DotId d = 0; d < f.dot_count(); ++d) labels[renumber[d]] = f.dot_label(d);
  const auto map_all = [&](const std::vector<DotId>& dots) {
    std::vector<DotId> out;
    for (DotId d : dots) out.push_back(renumber[d]);
    return out;
  };
  std::vector<Box> boxes;
  for (BoxId b : order) boxes.push_back({f.box(b).label, map_all(f.box(b).ins), map_all(f.box(b).outs)});
  return DotDiagram(std::move(labels), std::move(boxes), map_all(f.inputs()), map_all(f.outputs()));
}

}  // namespace hypercat
