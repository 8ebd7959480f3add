#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hypercat/diagram.hpp"
#include "hypercat/error.hpp"
#include "hypercat/scalar.hpp"
#include "hypercat/signature.hpp"
#include "hypercat/term.hpp"

namespace hypercat {

/// A morphism I -> J of Mat(S): rows indexed by J, columns by I. Index sets
/// of object words are flattened with the first object most significant, so
/// that Kronecker products line up with Eigen's `kroneckerProduct` layout.
template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

/// A finite index set with display labels; elements are 0..size()-1.
struct IndexSet {
  std::vector<std::string> labels;

  static IndexSet of_size(std::size_t n) {
    IndexSet s;
    for (std::size_t i = 0; i < n; ++i) s.labels.push_back(std::to_string(i));
    return s;
  }
  std::size_t size() const { return labels.size(); }
  bool operator==(const IndexSet&) const = default;
};

// ---- elementary matrices ----

template <class S>
Matrix<S> zero_matrix(std::size_t rows, std::size_t cols) {
  return Matrix<S>::Constant(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols),
                             SemiringTraits<S>::zero());
}

template <class S>
Matrix<S> identity_matrix(std::size_t n) {
  Matrix<S> m = zero_matrix<S>(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = SemiringTraits<S>::one();
  return m;
}

/// `g` after `f`: the product g·f, summing over the shared middle index.
template <class S>
Matrix<S> compose_mat(const Matrix<S>& f, const Matrix<S>& g) {
  if (g.cols() != f.rows())
    throw ShapeError("cannot compose " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                     " with " + std::to_string(g.rows()) + "x" + std::to_string(g.cols()));
  Matrix<S> out = zero_matrix<S>(g.rows(), f.cols());
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index k = 0; k < g.cols(); ++k) {
      if (is_zero(g(i, k))) continue;
      for (Eigen::Index j = 0; j < f.cols(); ++j) out(i, j) += g(i, k) * f(k, j);
    }
  return out;
}

template <class S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> out = zero_matrix<S>(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          b.unaryExpr([&](const S& x) -> S { return a(i, j) * x; });
    }
  return out;
}

/// Conjugate transpose.
template <class S>
Matrix<S> dagger_mat(const Matrix<S>& f) {
  Matrix<S> out(f.cols(), f.rows());
  for (Eigen::Index i = 0; i < f.rows(); ++i)
    for (Eigen::Index j = 0; j < f.cols(); ++j) out(j, i) = involute(f(i, j));
  return out;
}

/// Generalised Kronecker delta from idx^m to idx^n: the sum over k of the
/// entry where every input and output index equals k. For m + n > 0 this is
/// the 0/1 indicator; S_0^0 = eta ; eps is the scalar |idx|.
template <class S>
Matrix<S> spider_matrix(std::size_t m, std::size_t n, std::size_t size) {
  const auto power = [size](std::size_t e) {
    std::size_t p = 1;
    for (std::size_t k = 0; k < e; ++k) p *= size;
    return p;
  };
  const auto diagonal = [size](std::size_t e, std::size_t k) {
    std::size_t flat = 0;
    for (std::size_t r = 0; r < e; ++r) flat = flat * size + k;
    return flat;
  };
  Matrix<S> out = zero_matrix<S>(power(n), power(m));
  for (std::size_t k = 0; k < size; ++k) out(diagonal(n, k), diagonal(m, k)) += SemiringTraits<S>::one();
  return out;
}

/// Symmetry (A, B) -> (B, A).
template <class S>
Matrix<S> swap_matrix(std::size_t size_a, std::size_t size_b) {
  Matrix<S> out = zero_matrix<S>(size_a * size_b, size_a * size_b);
  for (std::size_t a = 0; a < size_a; ++a)
    for (std::size_t b = 0; b < size_b; ++b) out(b * size_a + a, a * size_b + b) = SemiringTraits<S>::one();
  return out;
}

// ---- models ----

/// A hypergraph functor out of the free category on a signature: an index
/// set per object and a matrix per generator (rows: codomain word, columns:
/// domain word).
template <class S>
class Model {
 public:
  Model() = default;
  explicit Model(Signature sig) : sig_(std::move(sig)) {}

  const Signature& signature() const { return sig_; }
  const std::map<std::string, IndexSet>& objects() const { return objects_; }
  const std::map<std::string, Matrix<S>>& generators() const { return generators_; }

  void set_object(const std::string& name, IndexSet set) {
    if (!sig_.has_object(name)) throw SignatureError("unknown object '" + name + "'");
    objects_[name] = std::move(set);
  }
  void set_generator(const std::string& name, Matrix<S> m) {
    if (!sig_.has_generator(name)) throw SignatureError("unknown generator '" + name + "'");
    generators_[name] = std::move(m);
  }

  const IndexSet& object(const std::string& name) const {
    auto it = objects_.find(name);
    if (it == objects_.end()) throw ShapeError("model assigns no index set to '" + name + "'");
    return it->second;
  }
  std::size_t size_of(const std::string& name) const { return object(name).size(); }
  const Matrix<S>& generator(const std::string& name) const {
    auto it = generators_.find(name);
    if (it == generators_.end()) throw ShapeError("model assigns no matrix to '" + name + "'");
    return it->second;
  }

  std::size_t dim(const Word& w) const {
    std::size_t d = 1;
    for (const auto& obj : w) d *= size_of(obj);
    return d;
  }

  /// Checks shapes against the signature, and dagger compatibility
  /// (M(f†) = M(f)†) when `require_dagger` is set.
  void validate(bool require_dagger = false) const {
    for (const auto& obj : sig_.objects()) object(obj);
    for (const auto& [name, g] : sig_.generators()) {
      const Matrix<S>& m = generator(name);
      if (static_cast<std::size_t>(m.rows()) != dim(g.cod) || static_cast<std::size_t>(m.cols()) != dim(g.dom))
        throw ShapeError("matrix of '" + name + "' is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected " + std::to_string(dim(g.cod)) + "x" +
                         std::to_string(dim(g.dom)));
      if (require_dagger && sig_.is_dagger() && generator(*g.dagger_of) != dagger_mat(m))
        throw ShapeError("model is not dagger-compatible at '" + name + "'");
    }
  }

 private:
  Signature sig_;
  std::map<std::string, IndexSet> objects_;
  std::map<std::string, Matrix<S>> generators_;
};

/// Applies `fn` entrywise to every generator matrix (e.g. an evaluation
/// homomorphism Z[X] -> K).
template <class T, class S, class Fn>
Model<T> map_model(const Model<S>& m, Fn fn) {
  Model<T> out(m.signature());
  for (const auto& [name, set] : m.objects()) out.set_object(name, set);
  for (const auto& [name, mat] : m.generators())
    out.set_generator(name, mat.unaryExpr([&](const S& x) -> T { return fn(x); }).eval());
  return out;
}

/// Pointwise product functor: P(A) = M(A) × N(A), P(f) = M(f) ⊗ N(f), with
/// P(A)'s element (a, b) flattened as a·|N(A)| + b.
template <class S>
Model<S> product_model(const Model<S>& m, const Model<S>& n) {
  const Signature& sig = m.signature();
  Model<S> out(sig);
  for (const auto& obj : sig.objects()) {
    IndexSet set;
    for (const auto& a : m.object(obj).labels)
      for (const auto& b : n.object(obj).labels) set.labels.push_back("(" + a + "," + b + ")");
    out.set_object(obj, std::move(set));
  }

  // Flat P-index of a word from the flat M- and N-indices.
  const auto combine = [&](const Word& w, std::size_t mi, std::size_t ni) {
    std::vector<std::size_t> ms(w.size()), ns(w.size());
    for (std::size_t k = w.size(); k-- > 0;) {
      ms[k] = mi % m.size_of(w[k]);
      mi /= m.size_of(w[k]);
      ns[k] = ni % n.size_of(w[k]);
      ni /= n.size_of(w[k]);
    }
    std::size_t flat = 0;
    for (std::size_t k = 0; k < w.size(); ++k) flat = flat * out.size_of(w[k]) + ms[k] * n.size_of(w[k]) + ns[k];
    return flat;
  };

  for (const auto& [name, g] : sig.generators()) {
    const Matrix<S>& a = m.generator(name);
    const Matrix<S>& b = n.generator(name);
    Matrix<S> p = zero_matrix<S>(out.dim(g.cod), out.dim(g.dom));
    for (Eigen::Index ar = 0; ar < a.rows(); ++ar)
      for (Eigen::Index ac = 0; ac < a.cols(); ++ac) {
        if (is_zero(a(ar, ac))) continue;
        for (Eigen::Index br = 0; br < b.rows(); ++br)
          for (Eigen::Index bc = 0; bc < b.cols(); ++bc)
            p(combine(g.cod, ar, br), combine(g.dom, ac, bc)) = a(ar, ac) * b(br, bc);
      }
    out.set_generator(name, std::move(p));
  }
  return out;
}

// ---- evaluation ----

/// Structural evaluation of a term: `;` is matrix composition, `*` the
/// Kronecker product, `^` the conjugate transpose, and constants are spider
/// and permutation matrices.
template <class S>
Matrix<S> eval_compositional(const Model<S>& model, const Term& t) {
  using Kind = Term::Kind;
  const auto size = [&](std::size_t k) { return model.size_of(t.objects()[k]); };
  switch (t.kind()) {
    case Kind::Box:
      return model.generator(t.name());
    case Kind::Id:
      return identity_matrix<S>(model.dim(t.objects()));
    case Kind::Swap:
      return swap_matrix<S>(size(0), size(1));
    case Kind::Mu:
      return spider_matrix<S>(2, 1, size(0));
    case Kind::Eta:
      return spider_matrix<S>(0, 1, size(0));
    case Kind::Delta:
      return spider_matrix<S>(1, 2, size(0));
    case Kind::Eps:
      return spider_matrix<S>(1, 0, size(0));
    case Kind::Cap:
      return compose_mat(spider_matrix<S>(0, 1, size(0)), spider_matrix<S>(1, 2, size(0)));
    case Kind::Cup:
      return compose_mat(spider_matrix<S>(2, 1, size(0)), spider_matrix<S>(1, 0, size(0)));
    case Kind::Seq:
      return compose_mat(eval_compositional(model, t.lhs()), eval_compositional(model, t.rhs()));
    case Kind::Par:
      return kron(eval_compositional(model, t.lhs()), eval_compositional(model, t.rhs()));
    case Kind::Dag:
      return dagger_mat(eval_compositional(model, t.operand()));
  }
  throw Error("unreachable term kind");
}

/// Direct tensor contraction: the sum over indexing functions φ (one index
/// per dot) of the product of generator entries selected by φ at each box.
/// Boundary ports leave their dots' indices free; the result has one row per
/// assignment of the output dots and one column per assignment of the input
/// dots. Dots untouched by any box contribute a factor |M(A)|.
template <class S>
Matrix<S> eval_contraction(const Model<S>& model, const DotDiagram& f) {
  using Traits = SemiringTraits<S>;
  Matrix<S> result = zero_matrix<S>(model.dim(f.cod()), model.dim(f.dom()));

  // Visit dots box by box so that each box's factor is applied as soon as all
  // of its dots carry an index.
  const std::size_t unset = f.dot_count();
  std::vector<std::size_t> position(f.dot_count(), unset);
  std::vector<DotId> order;
  const auto visit = [&](DotId d) {
    if (position[d] == unset) {
      position[d] = order.size();
      order.push_back(d);
    }
  };
  for (const auto& b : f.boxes()) {
    for (DotId d : b.ins) visit(d);
    for (DotId d : b.outs) visit(d);
  }
  for (DotId d : f.inputs()) visit(d);
  for (DotId d : f.outputs()) visit(d);
  for (DotId d = 0; d < f.dot_count(); ++d) visit(d);

  std::vector<std::vector<BoxId>> ready(f.dot_count() + 1);  // slot 0: nullary boxes
  for (BoxId b = 0; b < f.box_count(); ++b) {
    std::size_t level = 0;
    for (DotId d : f.box(b).ins) level = std::max(level, position[d] + 1);
    for (DotId d : f.box(b).outs) level = std::max(level, position[d] + 1);
    ready[level].push_back(b);
  }

  std::vector<std::size_t> sizes(f.dot_count());
  for (DotId d = 0; d < f.dot_count(); ++d) sizes[d] = model.size_of(f.dot_label(d));

  std::vector<std::size_t> phi(f.dot_count(), 0);
  const auto flat = [&](const std::vector<DotId>& dots) {
    std::size_t idx = 0;
    for (DotId d : dots) idx = idx * sizes[d] + phi[d];
    return idx;
  };
  const auto factor = [&](const S& acc, std::size_t level) {
    S value = acc;
    for (BoxId b : ready[level]) {
      const Box& box = f.box(b);
      value = value * model.generator(box.label)(flat(box.outs), flat(box.ins));
      if (Traits::is_zero(value)) break;
    }
    return value;
  };

  std::function<void(std::size_t, const S&)> recurse = [&](std::size_t k, const S& acc) {
    if (k == order.size()) {
      result(flat(f.outputs()), flat(f.inputs())) += acc;
      return;
    }
    const DotId d = order[k];
    for (std::size_t i = 0; i < sizes[d]; ++i) {
      phi[d] = i;
      const S next = factor(acc, k + 1);
      if (!Traits::is_zero(next)) recurse(k + 1, next);
    }
  };
  const S start = factor(Traits::one(), 0);
  if (!Traits::is_zero(start)) recurse(0, start);
  return result;
}

}  // namespace hypercat
