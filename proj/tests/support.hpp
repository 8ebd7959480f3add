#pragma once

// Generators and oracles shared by the unit tests and the acceptance binary.

#include <cstdint>
#include <random>
#include <vector>

#include "hypercat/complete.hpp"
#include "hypercat/diagram.hpp"
#include "hypercat/matsem.hpp"
#include "hypercat/term.hpp"

namespace hypercat::testing {

using Rng = std::mt19937_64;

/// Objects A, B; f : A -> A, g : A A -> B.
Signature two_generator_signature();

/// Objects A, B; h : A -> A self-dagger, k : A -> B paired with kd : B -> A.
Signature dagger_test_signature();

/// Every simple closed diagram with at most `max_boxes` boxes and `max_dots`
/// dots, one representative per isomorphism class.
std::vector<DotDiagram> enumerate_simple_closed(const Signature& sig, std::size_t max_boxes, std::size_t max_dots);

/// Drops diagrams isomorphic to an earlier one.
std::vector<DotDiagram> dedupe_up_to_iso(const std::vector<DotDiagram>& diagrams);

/// Renumbers boxes and dots: box b becomes box_perm[b], dot d becomes dot_perm[d].
DotDiagram permute(const DotDiagram& f, const std::vector<BoxId>& box_perm, const std::vector<DotId>& dot_perm);

/// A random relabelling of `f`, isomorphic to it.
DotDiagram shuffle(const DotDiagram& f, Rng& rng);

/// A random simple closed diagram with exactly `boxes` boxes and at most `dots` dots.
DotDiagram random_simple_closed(const Signature& sig, std::size_t boxes, std::size_t dots, Rng& rng);

/// Adds `n` free dots labelled `object`.
DotDiagram with_free_dots(const DotDiagram& f, const std::string& object, std::size_t n);

/// A random well-typed term with domain `dom`, built from `layers` random
/// layers (generators, spiders, swaps, caps, cups and, in dagger signatures,
/// daggered boxes) with wires kept to at most `max_width`.
Term random_term(const Signature& sig, const Word& dom, std::size_t layers, std::size_t max_width, Rng& rng);

/// A random term over the SCFA constants and swaps on `object` alone.
Term random_scfa_term(const std::string& object, std::size_t layers, std::size_t max_width, Rng& rng);

/// Connectivity of the string diagram drawn by `t`, computed on the term
/// itself: every constant is a node, and wires join nodes along `;`.
/// Terms without any node (identities only) count as disconnected unless
/// they have a single wire.
bool string_diagram_connected(const Term& t);

/// Random integer model with object sizes in [1, max_size] and entries in [-2, 2].
Model<Integer> random_integer_model(const Signature& sig, std::size_t max_size, Rng& rng);

/// Random dagger-compatible Gaussian-rational model: each pair gets a random
/// matrix and its conjugate transpose, self-dagger generators get M + M†.
Model<GaussianRational> random_dagger_model(const Signature& sig, std::size_t max_size, Rng& rng);

}  // namespace hypercat::testing
