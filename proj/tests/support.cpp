#include "support.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

namespace hypercat::testing {

Signature two_generator_signature() {
  return Signature::build({"A", "B"}, {{"f", {"A"}, {"A"}, {}}, {"g", {"A", "A"}, {"B"}, {}}}, false);
}

Signature dagger_test_signature() {
  return Signature::build({"A", "B"},
                          {{"h", {"A"}, {"A"}, "h"}, {"k", {"A"}, {"B"}, "kd"}, {"kd", {"B"}, {"A"}, "k"}}, true);
}

namespace {

// Cheap isomorphism invariant used to bucket diagrams before exact checks.
using Invariant = std::tuple<std::vector<std::string>, std::vector<std::pair<std::string, std::size_t>>,
                             std::vector<DotId>, std::vector<DotId>>;

Invariant invariant(const DotDiagram& f) {
  std::vector<std::string> boxes;
  for (const auto& b : f.boxes()) boxes.push_back(b.label);
  std::sort(boxes.begin(), boxes.end());
  std::vector<std::size_t> degree(f.dot_count(), 0);
  for (const auto& b : f.boxes()) {
    for (DotId d : b.ins) ++degree[d];
    for (DotId d : b.outs) ++degree[d];
  }
  std::vector<std::pair<std::string, std::size_t>> dots;
  for (DotId d = 0; d < f.dot_count(); ++d) dots.emplace_back(f.dot_label(d), degree[d]);
  std::sort(dots.begin(), dots.end());
  return {boxes, dots, std::vector<DotId>(f.inputs().size()), std::vector<DotId>(f.outputs().size())};
}

// Calls `visit` with every non-decreasing sequence of length `k` over [0, n).
void multisets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    if (cur.size() == k) {
      visit(cur);
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      cur.push_back(i);
      go(i);
      cur.pop_back();
    }
  };
  go(0);
}

Term pad(const Word& prefix, const Term& op, const Word& suffix) {
  Term t = op;
  if (!prefix.empty()) t = Term::par(Term::id(prefix), t);
  if (!suffix.empty()) t = Term::par(t, Term::id(suffix));
  return t;
}

bool matches(const Word& w, std::size_t pos, const Word& sub) {
  if (pos + sub.size() > w.size()) return false;
  return std::equal(sub.begin(), sub.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
}

struct Placed {
  std::size_t pos;
  std::size_t consumed;
  Term op;
};

// Appends one random layer to `t` chosen from `candidates`; returns false if none fits.
bool add_layer(Term& t, const std::vector<Placed>& candidates, Rng& rng) {
  if (candidates.empty()) return false;
  const Placed& c = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
  const Word& w = t.cod();
  const Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(c.pos));
  const Word suffix(w.begin() + static_cast<std::ptrdiff_t>(c.pos + c.consumed), w.end());
  t = Term::seq(t, pad(prefix, c.op, suffix));
  return true;
}

void structural_candidates(const Word& w, const std::vector<std::string>& objects, std::size_t max_width,
                           std::vector<Placed>& out) {
  const std::size_t n = w.size();
  for (std::size_t p = 0; p < n; ++p) {
    if (p + 1 < n) {
      out.push_back({p, 2, Term::swap(w[p], w[p + 1])});
      if (w[p] == w[p + 1]) {
        out.push_back({p, 2, Term::mu(w[p])});
        out.push_back({p, 2, Term::cup(w[p])});
      }
    }
    if (n + 1 <= max_width) out.push_back({p, 1, Term::delta(w[p])});
    out.push_back({p, 1, Term::eps(w[p])});
  }
  for (std::size_t p = 0; p <= n; ++p)
    for (const auto& obj : objects) {
      if (n + 1 <= max_width) out.push_back({p, 0, Term::eta(obj)});
      if (n + 2 <= max_width) out.push_back({p, 0, Term::cap(obj)});
    }
}

}  // namespace

std::vector<DotDiagram> dedupe_up_to_iso(const std::vector<DotDiagram>& diagrams) {
  std::map<Invariant, std::vector<std::size_t>> buckets;
  std::vector<DotDiagram> out;
  for (const auto& f : diagrams) {
    auto& bucket = buckets[invariant(f)];
    const bool seen = std::any_of(bucket.begin(), bucket.end(),
                                  [&](std::size_t k) { return is_isomorphic(out[k], f).has_value(); });
    if (seen) continue;
    bucket.push_back(out.size());
    out.push_back(f);
  }
  return out;
}

std::vector<DotDiagram> enumerate_simple_closed(const Signature& sig, std::size_t max_boxes, std::size_t max_dots) {
  std::vector<std::string> names;
  for (const auto& [name, _] : sig.generators()) names.push_back(name);
  const auto& objects = sig.objects();

  std::vector<DotDiagram> all;
  for (std::size_t nb = 0; nb <= max_boxes; ++nb) {
    multisets(names.size(), nb, [&](const std::vector<std::size_t>& box_choice) {
      // Port objects in order: each box's inputs, then its outputs.
      std::vector<std::string> ports;
      for (std::size_t i : box_choice) {
        const auto& g = sig.generator(names[i]);
        ports.insert(ports.end(), g.dom.begin(), g.dom.end());
        ports.insert(ports.end(), g.cod.begin(), g.cod.end());
      }
      for (std::size_t nd = 0; nd <= max_dots; ++nd) {
        multisets(objects.size(), nd, [&](const std::vector<std::size_t>& dot_choice) {
          std::vector<std::string> labels;
          for (std::size_t i : dot_choice) labels.push_back(objects[i]);
          std::vector<DotId> assign(ports.size());
          std::vector<std::size_t> hits(nd, 0);
          std::function<void(std::size_t)> wire = [&](std::size_t p) {
            if (p == ports.size()) {
              if (std::find(hits.begin(), hits.end(), 0) != hits.end()) return;
              std::vector<Box> boxes;
              std::size_t k = 0;
              for (std::size_t i : box_choice) {
                const auto& g = sig.generator(names[i]);
                Box b{names[i], {}, {}};
                for (std::size_t j = 0; j < g.dom.size(); ++j) b.ins.push_back(assign[k++]);
                for (std::size_t j = 0; j < g.cod.size(); ++j) b.outs.push_back(assign[k++]);
                boxes.push_back(std::move(b));
              }
              all.emplace_back(labels, std::move(boxes), std::vector<DotId>{}, std::vector<DotId>{});
              return;
            }
            for (DotId d = 0; d < nd; ++d) {
              if (labels[d] != ports[p]) continue;
              assign[p] = d;
              ++hits[d];
              wire(p + 1);
              --hits[d];
            }
          };
          wire(0);
        });
      }
    });
  }
  return dedupe_up_to_iso(all);
}

DotDiagram permute(const DotDiagram& f, const std::vector<BoxId>& box_perm, const std::vector<DotId>& dot_perm) {
  std::vector<std::string> labels(f.dot_count());
  for (DotId d = 0; d < f.dot_count(); ++d) labels[dot_perm[d]] = f.dot_label(d);
  std::vector<Box> boxes(f.box_count());
  for (BoxId b = 0; b < f.box_count(); ++b) {
    Box nb{f.box(b).label, {}, {}};
    for (DotId d : f.box(b).ins) nb.ins.push_back(dot_perm[d]);
    for (DotId d : f.box(b).outs) nb.outs.push_back(dot_perm[d]);
    boxes[box_perm[b]] = std::move(nb);
  }
  std::vector<DotId> ins, outs;
  for (DotId d : f.inputs()) ins.push_back(dot_perm[d]);
  for (DotId d : f.outputs()) outs.push_back(dot_perm[d]);
  return DotDiagram(std::move(labels), std::move(boxes), std::move(ins), std::move(outs));
}

DotDiagram shuffle(const DotDiagram& f, Rng& rng) {
  std::vector<BoxId> bp(f.box_count());
  std::vector<DotId> dp(f.dot_count());
  std::iota(bp.begin(), bp.end(), 0);
  std::iota(dp.begin(), dp.end(), 0);
  std::shuffle(bp.begin(), bp.end(), rng);
  std::shuffle(dp.begin(), dp.end(), rng);
  return permute(f, bp, dp);
}

DotDiagram random_simple_closed(const Signature& sig, std::size_t boxes, std::size_t dots, Rng& rng) {
  std::vector<std::string> names;
  for (const auto& [name, _] : sig.generators()) names.push_back(name);
  const auto& objects = sig.objects();
  std::uniform_int_distribution<std::size_t> pick_name(0, names.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_obj(0, objects.size() - 1);

  while (true) {
    std::vector<std::string> box_labels(boxes);
    std::size_t port_count = 0;
    for (auto& l : box_labels) {
      l = names[pick_name(rng)];
      port_count += sig.generator(l).dom.size() + sig.generator(l).cod.size();
    }
    const std::size_t nd = std::uniform_int_distribution<std::size_t>(0, std::min(dots, port_count))(rng);
    std::vector<std::string> labels(nd);
    for (auto& l : labels) l = objects[pick_obj(rng)];

    std::vector<std::size_t> hits(nd, 0);
    bool ok = true;
    const auto pick_dot = [&](const std::string& obj) -> DotId {
      std::vector<DotId> fits;
      for (DotId d = 0; d < nd; ++d)
        if (labels[d] == obj) fits.push_back(d);
      if (fits.empty()) {
        ok = false;
        return 0;
      }
      const DotId d = fits[std::uniform_int_distribution<std::size_t>(0, fits.size() - 1)(rng)];
      ++hits[d];
      return d;
    };
    std::vector<Box> bs;
    for (const auto& l : box_labels) {
      const auto& g = sig.generator(l);
      Box b{l, {}, {}};
      for (const auto& obj : g.dom) b.ins.push_back(pick_dot(obj));
      for (const auto& obj : g.cod) b.outs.push_back(pick_dot(obj));
      bs.push_back(std::move(b));
    }
    if (!ok || std::find(hits.begin(), hits.end(), 0) != hits.end()) continue;
    return DotDiagram(labels, std::move(bs), {}, {});
  }
}

DotDiagram with_free_dots(const DotDiagram& f, const std::string& object, std::size_t n) {
  std::vector<std::string> labels = f.dot_labels();
  labels.insert(labels.end(), n, object);
  return DotDiagram(std::move(labels), f.boxes(), f.inputs(), f.outputs());
}

Term random_term(const Signature& sig, const Word& dom, std::size_t layers, std::size_t max_width, Rng& rng) {
  Term t = Term::id(dom);
  for (std::size_t layer = 0; layer < layers; ++layer) {
    const Word w = t.cod();
    std::vector<Placed> candidates;
    for (const auto& [name, g] : sig.generators()) {
      for (std::size_t p = 0; p <= w.size(); ++p) {
        if (matches(w, p, g.dom) && w.size() - g.dom.size() + g.cod.size() <= max_width)
          candidates.push_back({p, g.dom.size(), Term::box(sig, name)});
        if (sig.is_dagger() && matches(w, p, g.cod) && w.size() - g.cod.size() + g.dom.size() <= max_width)
          candidates.push_back({p, g.cod.size(), Term::dag(Term::box(sig, name))});
      }
    }
    // Weight boxes and structure about equally.
    const std::size_t box_candidates = candidates.size();
    std::vector<Placed> structural;
    structural_candidates(w, sig.objects(), max_width, structural);
    if (box_candidates == 0 || std::bernoulli_distribution(0.35)(rng))
      candidates.insert(candidates.end(), structural.begin(), structural.end());
    add_layer(t, candidates, rng);
  }
  return t;
}

Term random_scfa_term(const std::string& object, std::size_t layers, std::size_t max_width, Rng& rng) {
  const std::size_t m = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
  Term t = Term::id(Word(m, object));
  for (std::size_t layer = 0; layer < layers; ++layer) {
    const Word w = t.cod();
    std::vector<Placed> candidates;
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (p + 1 < w.size()) {
        candidates.push_back({p, 2, Term::swap(object, object)});
        candidates.push_back({p, 2, Term::mu(object)});
        candidates.push_back({p, 2, Term::mu(object)});
      }
      if (w.size() + 1 <= max_width) candidates.push_back({p, 1, Term::delta(object)});
      candidates.push_back({p, 1, Term::eps(object)});
    }
    for (std::size_t p = 0; p <= w.size(); ++p)
      if (w.size() + 1 <= max_width) candidates.push_back({p, 0, Term::eta(object)});
    add_layer(t, candidates, rng);
  }
  return t;
}

bool string_diagram_connected(const Term& t) {
  std::vector<std::size_t> parent;
  const auto node = [&] {
    parent.push_back(parent.size());
    return parent.size() - 1;
  };
  const std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  struct Ports {
    std::vector<std::size_t> ins, outs;
  };
  const std::function<Ports(const Term&)> build = [&](const Term& s) -> Ports {
    using Kind = Term::Kind;
    Ports p;
    switch (s.kind()) {
      case Kind::Id:
        for (std::size_t k = 0; k < s.dom().size(); ++k) {
          const std::size_t v = node();
          p.ins.push_back(v);
          p.outs.push_back(v);
        }
        return p;
      case Kind::Swap: {
        const std::size_t a = node(), b = node();
        return {{a, b}, {b, a}};
      }
      case Kind::Seq: {
        Ports l = build(s.lhs()), r = build(s.rhs());
        for (std::size_t k = 0; k < l.outs.size(); ++k) parent[find(l.outs[k])] = find(r.ins[k]);
        return {l.ins, r.outs};
      }
      case Kind::Par: {
        Ports l = build(s.lhs()), r = build(s.rhs());
        l.ins.insert(l.ins.end(), r.ins.begin(), r.ins.end());
        l.outs.insert(l.outs.end(), r.outs.begin(), r.outs.end());
        return l;
      }
      case Kind::Dag: {
        Ports inner = build(s.operand());
        return {inner.outs, inner.ins};
      }
      default: {
        const std::size_t v = node();
        return {std::vector<std::size_t>(s.dom().size(), v), std::vector<std::size_t>(s.cod().size(), v)};
      }
    }
  };
  build(t);
  if (parent.empty()) return false;
  const std::size_t root = find(0);
  for (std::size_t v = 0; v < parent.size(); ++v)
    if (find(v) != root) return false;
  return true;
}

Model<Integer> random_integer_model(const Signature& sig, std::size_t max_size, Rng& rng) {
  Model<Integer> m(sig);
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  std::uniform_int_distribution<long> entry(-2, 2);
  for (const auto& obj : sig.objects()) m.set_object(obj, IndexSet::of_size(size(rng)));
  for (const auto& [name, g] : sig.generators()) {
    Matrix<Integer> mat(m.dim(g.cod), m.dim(g.dom));
    for (Eigen::Index r = 0; r < mat.rows(); ++r)
      for (Eigen::Index c = 0; c < mat.cols(); ++c) mat(r, c) = entry(rng);
    m.set_generator(name, std::move(mat));
  }
  return m;
}

Model<GaussianRational> random_dagger_model(const Signature& sig, std::size_t max_size, Rng& rng) {
  Model<GaussianRational> m(sig);
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  std::uniform_int_distribution<long> entry(-2, 2);
  for (const auto& obj : sig.objects()) m.set_object(obj, IndexSet::of_size(size(rng)));
  for (const auto& [name, g] : sig.generators()) {
    if (m.generators().count(name)) continue;
    Matrix<GaussianRational> mat(m.dim(g.cod), m.dim(g.dom));
    for (Eigen::Index r = 0; r < mat.rows(); ++r)
      for (Eigen::Index c = 0; c < mat.cols(); ++c)
        mat(r, c) = GaussianRational(Rational(entry(rng)), Rational(entry(rng)));
    if (!sig.is_dagger()) {
      m.set_generator(name, std::move(mat));
    } else if (*g.dagger_of == name) {
      m.set_generator(name, (mat + dagger_mat(mat)).eval());
    } else {
      m.set_generator(*g.dagger_of, dagger_mat(mat));
      m.set_generator(name, std::move(mat));
    }
  }
  return m;
}

}  // namespace hypercat::testing
