#include <algorithm>
#include <map>

#include "hypercat/diagram.hpp"

namespace hypercat {

namespace {

constexpr std::size_t kUnmapped = static_cast<std::size_t>(-1);

struct PortRef {
  BoxId box;
  bool output;
  std::size_t index;
};

/// Backtracking search for homomorphisms F -> G.
///
/// Boundary dots are bound first, then boxes are placed one at a time in an
/// order that keeps each new box adjacent to already-bound dots, so candidate
/// images are read off G's incidence lists. Dots touched by nothing are
/// matched last, by label.
class HomSearch {
 public:
  HomSearch(const DotDiagram& f, const DotDiagram& g, HomKind kind,
            const std::function<bool(const Hom&)>& visit)
      : f_(f), g_(g), kind_(kind), visit_(visit) {
    dot_map_.assign(f.dot_count(), kUnmapped);
    dot_preimage_.assign(g.dot_count(), kUnmapped);
    box_map_.assign(f.box_count(), kUnmapped);
    box_used_.assign(g.box_count(), false);
    incidence_.resize(g.dot_count());
    for (BoxId b = 0; b < g.box_count(); ++b) {
      const Box& box = g.box(b);
      for (std::size_t i = 0; i < box.ins.size(); ++i) incidence_[box.ins[i]].push_back({b, false, i});
      for (std::size_t j = 0; j < box.outs.size(); ++j) incidence_[box.outs[j]].push_back({b, true, j});
    }
    plan_box_order();
  }

  void run() {
    if (!compatible()) return;
    std::vector<DotId> trail;
    bool ok = true;
    for (std::size_t i = 0; ok && i < f_.inputs().size(); ++i) ok = bind(f_.inputs()[i], g_.inputs()[i], trail);
    for (std::size_t j = 0; ok && j < f_.outputs().size(); ++j)
      ok = bind(f_.outputs()[j], g_.outputs()[j], trail);
    if (ok) place_box(0);
    undo(trail);
  }

 private:
  bool injective() const { return kind_ != HomKind::Any; }
  bool dot_injective() const { return kind_ == HomKind::Iso; }

  bool compatible() const {
    if (f_.inputs().size() != g_.inputs().size() || f_.outputs().size() != g_.outputs().size()) return false;
    if (injective() && f_.box_count() != g_.box_count()) return false;
    if (dot_injective() && f_.dot_count() != g_.dot_count()) return false;
    if (injective()) {
      std::map<std::string, long> balance;
      for (const auto& b : f_.boxes()) ++balance[b.label];
      for (const auto& b : g_.boxes()) --balance[b.label];
      for (const auto& [_, n] : balance)
        if (n != 0) return false;
    }
    if (dot_injective()) {
      std::map<std::string, long> balance;
      for (const auto& l : f_.dot_labels()) ++balance[l];
      for (const auto& l : g_.dot_labels()) --balance[l];
      for (const auto& [_, n] : balance)
        if (n != 0) return false;
    }
    return true;
  }

  void plan_box_order() {
    std::map<std::string, std::size_t> label_freq;
    for (const auto& b : g_.boxes()) ++label_freq[b.label];

    std::vector<bool> dot_seen(f_.dot_count(), false), placed(f_.box_count(), false);
    for (DotId d : f_.inputs()) dot_seen[d] = true;
    for (DotId d : f_.outputs()) dot_seen[d] = true;
    const auto touches_seen = [&](BoxId b) {
      const Box& box = f_.box(b);
      return std::any_of(box.ins.begin(), box.ins.end(), [&](DotId d) { return dot_seen[d]; }) ||
             std::any_of(box.outs.begin(), box.outs.end(), [&](DotId d) { return dot_seen[d]; });
    };
    while (order_.size() < f_.box_count()) {
      BoxId best = kUnmapped;
      for (BoxId b = 0; b < f_.box_count(); ++b) {
        if (placed[b]) continue;
        if (best == kUnmapped) {
          best = b;
          continue;
        }
        const bool tb = touches_seen(b), tbest = touches_seen(best);
        if (tb != tbest) {
          if (tb) best = b;
        } else if (label_freq[f_.box(b).label] < label_freq[f_.box(best).label]) {
          best = b;
        }
      }
      placed[best] = true;
      order_.push_back(best);
      for (DotId d : f_.box(best).ins) dot_seen[d] = true;
      for (DotId d : f_.box(best).outs) dot_seen[d] = true;
    }
    for (DotId d = 0; d < f_.dot_count(); ++d)
      if (!dot_seen[d]) loose_dots_.push_back(d);
  }

  bool bind(DotId fd, DotId gd, std::vector<DotId>& trail) {
    if (dot_map_[fd] != kUnmapped) return dot_map_[fd] == gd;
    if (f_.dot_label(fd) != g_.dot_label(gd)) return false;
    if (dot_injective() && dot_preimage_[gd] != kUnmapped) return false;
    dot_map_[fd] = gd;
    if (dot_injective()) dot_preimage_[gd] = fd;
    trail.push_back(fd);
    return true;
  }

  void undo(std::vector<DotId>& trail) {
    for (DotId fd : trail) {
      if (dot_injective()) dot_preimage_[dot_map_[fd]] = kUnmapped;
      dot_map_[fd] = kUnmapped;
    }
    trail.clear();
  }

  std::vector<BoxId> candidates(const Box& fb) const {
    for (std::size_t i = 0; i < fb.ins.size(); ++i) {
      DotId gd = dot_map_[fb.ins[i]];
      if (gd == kUnmapped) continue;
      std::vector<BoxId> out;
      for (const auto& p : incidence_[gd])
        if (!p.output && p.index == i) out.push_back(p.box);
      return out;
    }
    for (std::size_t j = 0; j < fb.outs.size(); ++j) {
      DotId gd = dot_map_[fb.outs[j]];
      if (gd == kUnmapped) continue;
      std::vector<BoxId> out;
      for (const auto& p : incidence_[gd])
        if (p.output && p.index == j) out.push_back(p.box);
      return out;
    }
    std::vector<BoxId> all(g_.box_count());
    for (BoxId b = 0; b < all.size(); ++b) all[b] = b;
    return all;
  }

  bool place_box(std::size_t k) {
    if (k == order_.size()) return place_loose(0);
    const BoxId fb = order_[k];
    const Box& fbox = f_.box(fb);
    for (BoxId gb : candidates(fbox)) {
      const Box& gbox = g_.box(gb);
      if (gbox.label != fbox.label) continue;
      if (injective() && box_used_[gb]) continue;
      if (gbox.ins.size() != fbox.ins.size() || gbox.outs.size() != fbox.outs.size()) continue;
      std::vector<DotId> trail;
      bool ok = true;
      for (std::size_t i = 0; ok && i < fbox.ins.size(); ++i) ok = bind(fbox.ins[i], gbox.ins[i], trail);
      for (std::size_t j = 0; ok && j < fbox.outs.size(); ++j) ok = bind(fbox.outs[j], gbox.outs[j], trail);
      if (ok) {
        box_map_[fb] = gb;
        box_used_[gb] = true;
        const bool go_on = place_box(k + 1);
        box_used_[gb] = false;
        box_map_[fb] = kUnmapped;
        if (!go_on) {
          undo(trail);
          return false;
        }
      }
      undo(trail);
    }
    return true;
  }

  bool place_loose(std::size_t k) {
    if (k == loose_dots_.size()) return visit_(Hom{box_map_, dot_map_});
    const DotId fd = loose_dots_[k];
    for (DotId gd = 0; gd < g_.dot_count(); ++gd) {
      std::vector<DotId> trail;
      if (!bind(fd, gd, trail)) continue;
      const bool go_on = place_loose(k + 1);
      undo(trail);
      if (!go_on) return false;
    }
    return true;
  }

  const DotDiagram& f_;
  const DotDiagram& g_;
  HomKind kind_;
  const std::function<bool(const Hom&)>& visit_;

  std::vector<DotId> dot_map_;
  std::vector<DotId> dot_preimage_;
  std::vector<BoxId> box_map_;
  std::vector<bool> box_used_;
  std::vector<std::vector<PortRef>> incidence_;
  std::vector<BoxId> order_;
  std::vector<DotId> loose_dots_;
};

}  // namespace

bool is_hom(const DotDiagram& f, const DotDiagram& g, const Hom& h) {
  if (h.box_map.size() != f.box_count() || h.dot_map.size() != f.dot_count()) return false;
  if (f.inputs().size() != g.inputs().size() || f.outputs().size() != g.outputs().size()) return false;
  for (DotId d = 0; d < f.dot_count(); ++d)
    if (h.dot_map[d] >= g.dot_count() || g.dot_label(h.dot_map[d]) != f.dot_label(d)) return false;
  for (BoxId b = 0; b < f.box_count(); ++b) {
    if (h.box_map[b] >= g.box_count()) return false;
    const Box& fb = f.box(b);
    const Box& gb = g.box(h.box_map[b]);
    if (fb.label != gb.label || fb.ins.size() != gb.ins.size() || fb.outs.size() != gb.outs.size())
      return false;
    for (std::size_t i = 0; i < fb.ins.size(); ++i)
      if (gb.ins[i] != h.dot_map[fb.ins[i]]) return false;
    for (std::size_t j = 0; j < fb.outs.size(); ++j)
      if (gb.outs[j] != h.dot_map[fb.outs[j]]) return false;
  }
  for (std::size_t i = 0; i < f.inputs().size(); ++i)
    if (h.dot_map[f.inputs()[i]] != g.inputs()[i]) return false;
  for (std::size_t j = 0; j < f.outputs().size(); ++j)
    if (h.dot_map[f.outputs()[j]] != g.outputs()[j]) return false;
  return true;
}

void for_each_hom(const DotDiagram& f, const DotDiagram& g, HomKind kind,
                  const std::function<bool(const Hom&)>& visit) {
  HomSearch(f, g, kind, visit).run();
}

std::vector<Hom> enumerate_homs(const DotDiagram& f, const DotDiagram& g, HomKind kind) {
  std::vector<Hom> out;
  for_each_hom(f, g, kind, [&](const Hom& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

std::size_t count_homs(const DotDiagram& f, const DotDiagram& g, HomKind kind) {
  std::size_t n = 0;
  for_each_hom(f, g, kind, [&](const Hom&) {
    ++n;
    return true;
  });
  return n;
}

std::optional<Hom> is_isomorphic(const DotDiagram& f, const DotDiagram& g) {
  std::optional<Hom> found;
  for_each_hom(f, g, HomKind::Iso, [&](const Hom& h) {
    found = h;
    return false;
  });
  return found;
}

std::size_t automorphism_count(const DotDiagram& f) { return count_homs(f, f, HomKind::Iso); }

}  // namespace hypercat
