#include "hypercat/term.hpp"

#include <algorithm>

namespace hypercat {

namespace {

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

Term Term::box(const Signature& sig, std::string_view name) {
  const GeneratorDecl& g = sig.generator(name);
  Term t;
  t.kind_ = Kind::Box;
  t.name_ = g.name;
  t.dom_ = g.dom;
  t.cod_ = g.cod;
  t.has_boxes_ = true;
  return t;
}

Term Term::id(Word w) {
  Term t;
  t.kind_ = Kind::Id;
  t.dom_ = w;
  t.cod_ = w;
  t.objects_ = std::move(w);
  return t;
}

Term Term::swap(std::string a, std::string b) {
  Term t;
  t.kind_ = Kind::Swap;
  t.dom_ = {a, b};
  t.cod_ = {b, a};
  t.objects_ = {std::move(a), std::move(b)};
  return t;
}

#define HYPERCAT_SPIDER_CONSTANT(fn, KIND, IN, OUT) \
  Term Term::fn(std::string a) {                    \
    Term t;                                         \
    t.kind_ = Kind::KIND;                           \
    t.dom_ = Word(IN, a);                           \
    t.cod_ = Word(OUT, a);                          \
    t.objects_ = {std::move(a)};                    \
    return t;                                       \
  }

HYPERCAT_SPIDER_CONSTANT(mu, Mu, 2, 1)
HYPERCAT_SPIDER_CONSTANT(eta, Eta, 0, 1)
HYPERCAT_SPIDER_CONSTANT(delta, Delta, 1, 2)
HYPERCAT_SPIDER_CONSTANT(eps, Eps, 1, 0)
HYPERCAT_SPIDER_CONSTANT(cap, Cap, 0, 2)
HYPERCAT_SPIDER_CONSTANT(cup, Cup, 2, 0)

#undef HYPERCAT_SPIDER_CONSTANT

Term Term::seq(Term s, Term t) {
  if (s.cod() != t.dom())
    throw TypeError("type mismatch in ';': " + to_string(s.cod()) + " vs " + to_string(t.dom()));
  Term out;
  out.kind_ = Kind::Seq;
  out.dom_ = s.dom();
  out.cod_ = t.cod();
  out.has_boxes_ = s.has_boxes_ || t.has_boxes_;
  out.lhs_ = std::make_shared<const Term>(std::move(s));
  out.rhs_ = std::make_shared<const Term>(std::move(t));
  return out;
}

Term Term::par(Term s, Term t) {
  Term out;
  out.kind_ = Kind::Par;
  out.dom_ = concat(s.dom(), t.dom());
  out.cod_ = concat(s.cod(), t.cod());
  out.has_boxes_ = s.has_boxes_ || t.has_boxes_;
  out.lhs_ = std::make_shared<const Term>(std::move(s));
  out.rhs_ = std::make_shared<const Term>(std::move(t));
  return out;
}

Term Term::dag(Term t) {
  Term out;
  out.kind_ = Kind::Dag;
  out.dom_ = t.cod();
  out.cod_ = t.dom();
  out.has_boxes_ = t.has_boxes_;
  out.lhs_ = std::make_shared<const Term>(std::move(t));
  return out;
}

std::size_t Term::generator_count() const {
  switch (kind_) {
    case Kind::Id:
      return 0;
    case Kind::Seq:
    case Kind::Par:
      return lhs().generator_count() + rhs().generator_count();
    case Kind::Dag:
      return operand().generator_count();
    default:
      return 1;
  }
}

bool operator==(const Term& a, const Term& b) {
  if (a.kind_ != b.kind_ || a.name_ != b.name_ || a.objects_ != b.objects_) return false;
  if (a.lhs_ && !(*a.lhs_ == *b.lhs_)) return false;
  if (a.rhs_ && !(*a.rhs_ == *b.rhs_)) return false;
  return true;
}

// ---- printing ----

namespace {

// 0: sequence level, 1: tensor level, 2: postfix/atom level.
std::string print(const Term& t, int context) {
  using Kind = Term::Kind;
  const auto join = [](const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + w[i];
    return out;
  };
  const auto wrap = [&](std::string s, int level) { return level < context ? "(" + s + ")" : s; };
  switch (t.kind()) {
    case Kind::Box:
      return t.name();
    case Kind::Id:
      return "id[" + join(t.objects()) + "]";
    case Kind::Swap:
      return "swap[" + join(t.objects()) + "]";
    case Kind::Mu:
      return "mu[" + t.objects()[0] + "]";
    case Kind::Eta:
      return "eta[" + t.objects()[0] + "]";
    case Kind::Delta:
      return "delta[" + t.objects()[0] + "]";
    case Kind::Eps:
      return "eps[" + t.objects()[0] + "]";
    case Kind::Cap:
      return "cap[" + t.objects()[0] + "]";
    case Kind::Cup:
      return "cup[" + t.objects()[0] + "]";
    case Kind::Seq:
      return wrap(print(t.lhs(), 0) + " ; " + print(t.rhs(), 1), 0);
    case Kind::Par:
      return wrap(print(t.lhs(), 1) + " * " + print(t.rhs(), 2), 1);
    case Kind::Dag:
      return print(t.operand(), 2) + "^";
  }
  return {};
}

}  // namespace

std::string to_string(const Term& t) { return print(t, 0); }

// ---- elaboration ----

Morphism elaborate(const Term& t, const Signature& sig) {
  using Kind = Term::Kind;
  switch (t.kind()) {
    case Kind::Box:
      return box_diagram(sig, t.name());
    case Kind::Id:
      return identity_diagram(t.objects());
    case Kind::Swap:
      return swap_diagram(t.objects()[0], t.objects()[1]);
    case Kind::Mu:
      return spider_diagram(2, 1, t.objects()[0]);
    case Kind::Eta:
      return spider_diagram(0, 1, t.objects()[0]);
    case Kind::Delta:
      return spider_diagram(1, 2, t.objects()[0]);
    case Kind::Eps:
      return spider_diagram(1, 0, t.objects()[0]);
    case Kind::Cap: {
      const auto& a = t.objects()[0];
      return compose(spider_diagram(0, 1, a), spider_diagram(1, 2, a));
    }
    case Kind::Cup: {
      const auto& a = t.objects()[0];
      return compose(spider_diagram(2, 1, a), spider_diagram(1, 0, a));
    }
    case Kind::Seq:
      return compose(elaborate(t.lhs(), sig), elaborate(t.rhs(), sig));
    case Kind::Par:
      return tensor(elaborate(t.lhs(), sig), elaborate(t.rhs(), sig));
    case Kind::Dag:
      return dagger(elaborate(t.operand(), sig), sig);
  }
  throw Error("unreachable term kind");
}

// ---- expansion ----

namespace {

bool is_identity(const Term& t) { return t.kind() == Term::Kind::Id; }

Term seq_skip_ids(const Term& a, const Term& b) {
  if (is_identity(a)) return b;
  if (is_identity(b)) return a;
  return Term::seq(a, b);
}

/// Tensor of a layer, merging neighbouring identities into one `id[...]`.
Term par_all(const std::vector<Term>& parts) {
  std::vector<Term> merged;
  for (const auto& p : parts) {
    if (is_identity(p)) {
      if (p.objects().empty()) continue;
      if (!merged.empty() && is_identity(merged.back())) {
        Word w = merged.back().objects();
        w.insert(w.end(), p.objects().begin(), p.objects().end());
        merged.back() = Term::id(std::move(w));
        continue;
      }
    }
    merged.push_back(p);
  }
  if (merged.empty()) return Term::id({});
  Term out = merged.front();
  for (std::size_t i = 1; i < merged.size(); ++i) out = Term::par(out, merged[i]);
  return out;
}

/// A term of swaps taking wires `source` to the order where output position k
/// carries input wire `perm[k]`. Realised by adjacent transpositions.
Term permutation_term(const Word& source, std::vector<std::size_t> perm) {
  // Bubble sort the current arrangement into the target, recording swaps.
  std::vector<std::size_t> current(source.size());
  for (std::size_t i = 0; i < current.size(); ++i) current[i] = i;
  std::vector<std::size_t> target_pos(source.size());
  for (std::size_t k = 0; k < perm.size(); ++k) target_pos[perm[k]] = k;

  Term out = Term::id(source);
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < current.size(); ++i) {
      if (target_pos[current[i]] <= target_pos[current[i + 1]]) continue;
      Word before, after;
      for (std::size_t k = 0; k < i; ++k) before.push_back(source[current[k]]);
      for (std::size_t k = i + 2; k < current.size(); ++k) after.push_back(source[current[k]]);
      Term layer = par_all({Term::id(before), Term::swap(source[current[i]], source[current[i + 1]]),
                            Term::id(after)});
      out = seq_skip_ids(out, layer);
      std::swap(current[i], current[i + 1]);
      swapped = true;
    }
  }
  return out;
}

Word permuted(const Word& w, const std::vector<std::size_t>& perm) {
  Word out;
  for (std::size_t k : perm) out.push_back(w[k]);
  return out;
}

}  // namespace

Term spider_term(std::size_t m, std::size_t n, const std::string& object) {
  Term tree = m == 0 ? Term::eta(object) : m == 1 ? Term::id({object}) : Term::mu(object);
  for (std::size_t k = 3; k <= m; ++k) tree = Term::seq(Term::par(tree, Term::id({object})), Term::mu(object));
  Term cotree = n == 0 ? Term::eps(object) : n == 1 ? Term::id({object}) : Term::delta(object);
  for (std::size_t k = 3; k <= n; ++k)
    cotree = Term::seq(Term::delta(object), Term::par(cotree, Term::id({object})));
  if (m == 1 && n == 1) return Term::id({object});
  return seq_skip_ids(tree, cotree);
}

Term expand(const Morphism& f, const Signature& sig) {
  const DotDiagram& F = f.rep();
  const std::size_t dots = F.dot_count();

  // Stage 1: group the domain wires by dot.
  std::vector<std::vector<std::size_t>> inputs_at(dots);
  for (std::size_t i = 0; i < F.inputs().size(); ++i) inputs_at[F.inputs()[i]].push_back(i);
  std::vector<std::size_t> group_perm;
  for (DotId d = 0; d < dots; ++d)
    group_perm.insert(group_perm.end(), inputs_at[d].begin(), inputs_at[d].end());
  const Word dom = F.dom();
  Term result = permutation_term(dom, group_perm);

  // Stage 2: one spider per dot. Its legs, in order: box inputs, box outputs,
  // boundary outputs. Each leg gets a slot in the final wire layout below.
  enum class Leg { BoxIn, BoxOut, Boundary };
  struct Slot {
    Leg leg;
    std::size_t position;
  };
  std::vector<std::vector<Slot>> legs(dots);
  std::size_t box_in_total = 0, box_out_total = 0;
  for (const auto& b : F.boxes()) {
    for (DotId d : b.ins) legs[d].push_back({Leg::BoxIn, box_in_total++});
  }
  for (const auto& b : F.boxes()) {
    for (DotId d : b.outs) legs[d].push_back({Leg::BoxOut, box_out_total++});
  }
  for (std::size_t j = 0; j < F.outputs().size(); ++j) legs[F.outputs()[j]].push_back({Leg::Boundary, j});

  std::vector<Term> spiders;
  Word spider_cod;
  std::vector<std::size_t> slot_of_wire;
  for (DotId d = 0; d < dots; ++d) {
    spiders.push_back(spider_term(inputs_at[d].size(), legs[d].size(), F.dot_label(d)));
    for (const auto& s : legs[d]) {
      spider_cod.push_back(F.dot_label(d));
      const std::size_t offset = s.leg == Leg::BoxIn    ? 0
                                 : s.leg == Leg::BoxOut ? box_in_total
                                                        : box_in_total + box_out_total;
      slot_of_wire.push_back(offset + s.position);
    }
  }
  result = seq_skip_ids(result, par_all(spiders));

  // Stage 3: route the legs to [box inputs | box-output legs | codomain].
  std::vector<std::size_t> route(slot_of_wire.size());
  for (std::size_t w = 0; w < slot_of_wire.size(); ++w) route[slot_of_wire[w]] = w;
  result = seq_skip_ids(result, permutation_term(spider_cod, route));
  const Word routed = permuted(spider_cod, route);

  // Stage 4: all boxes in parallel, then each box output is cupped with its leg.
  if (F.box_count() == 0) return result;
  std::vector<Term> layer;
  Word box_cods;
  for (const auto& b : F.boxes()) {
    layer.push_back(Term::box(sig, b.label));
    const auto& cod = sig.generator(b.label).cod;
    box_cods.insert(box_cods.end(), cod.begin(), cod.end());
  }
  const Word rest(routed.begin() + static_cast<std::ptrdiff_t>(box_in_total), routed.end());
  layer.push_back(Term::id(rest));
  result = seq_skip_ids(result, par_all(layer));

  if (box_out_total == 0) return result;
  const Word after_boxes = [&] {
    Word w = box_cods;
    w.insert(w.end(), rest.begin(), rest.end());
    return w;
  }();
  std::vector<std::size_t> interleave;
  for (std::size_t k = 0; k < box_out_total; ++k) {
    interleave.push_back(k);
    interleave.push_back(box_out_total + k);
  }
  for (std::size_t k = 2 * box_out_total; k < after_boxes.size(); ++k) interleave.push_back(k);
  result = seq_skip_ids(result, permutation_term(after_boxes, interleave));

  std::vector<Term> cups;
  for (std::size_t k = 0; k < box_out_total; ++k) cups.push_back(Term::cup(box_cods[k]));
  cups.push_back(Term::id(Word(after_boxes.begin() + static_cast<std::ptrdiff_t>(2 * box_out_total),
                               after_boxes.end())));
  return seq_skip_ids(result, par_all(cups));
}

}  // namespace hypercat
