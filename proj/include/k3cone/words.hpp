#pragma once

#include <string>
#include <vector>

#include "k3cone/cone.hpp"
#include "k3cone/lattice.hpp"
#include "k3cone/linalg.hpp"

namespace k3cone {

struct LabeledMatrix {
    std::string label;
    IntMat matrix;
};

/// Deduplicated set of group elements with one witness word each.
/// Contains the identity (empty word, printed "e"); witness words are
/// shortest because enumeration is breadth-first.
struct WordSet {
    std::vector<IntMat> matrices;
    std::vector<std::string> words;
};

/// All products of at most max_len generators (and inverses when
/// requested), deduplicated by matrix entries. Generators must be
/// unimodular.
WordSet enumerate_words(const std::vector<LabeledMatrix>& generators, unsigned max_len,
                        bool include_inverses);

/// Halfspace normals of D(x, S) = { y : x.y <= x.(g y) for all g in S }:
/// (g - I)^T . gram . x, primitive, deduplicated, zero normals dropped.
std::vector<IntVec> dirichlet_halfspaces(const IntLattice& l, const IntVec& x,
                                         const WordSet& words);

struct DirichletDomain {
    Cone cone;
    /// No constraints at all: the domain is the whole space.
    bool improper;
    /// Rays with negative self-intersection (outside the closed positive
    /// cone); the polyhedral domain is reported as-is and the rounding is
    /// left to the caller.
    std::vector<IntVec> rays_outside_positive;
};

DirichletDomain dirichlet_domain(const IntLattice& l, const IntVec& x,
                                 const std::vector<LabeledMatrix>& generators, unsigned max_len,
                                 bool include_inverses = true);

} // namespace k3cone
