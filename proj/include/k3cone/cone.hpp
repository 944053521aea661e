#pragma once

#include <optional>
#include <vector>

#include "k3cone/linalg.hpp"

namespace k3cone {

/// Rational polyhedral cone carrying both representations.
///
/// rays:      extreme rays as primitive integer vectors, sorted
///            lexicographically. With nontrivial lineality each ray is the
///            primitive orthogonal projection away from the lineality
///            space, which makes the set canonical.
/// lineality: primitive rows of the reduced row echelon basis of the
///            lineality space (canonical for the subspace).
/// facets:    primitive inequality normals; a non-full-dimensional cone
///            carries equality constraints as +-pairs. Canonical: the
///            extreme rays (and +- lineality basis) of the dual cone.
///
/// Cones are immutable after construction; all operations are pure.
class Cone {
public:
    static Cone from_rays(std::vector<IntVec> generators, std::size_t ambient_dim);
    static Cone from_facets(std::vector<IntVec> inequalities, std::size_t ambient_dim);

    std::size_t ambient_dim() const { return dim_; }
    const std::vector<IntVec>& rays() const { return rays_; }
    const std::vector<IntVec>& lineality() const { return lin_; }
    const std::vector<IntVec>& facets() const { return facets_; }

    /// dim of the linear span; dim 0 is the zero cone.
    std::size_t dim() const;
    bool is_pointed() const { return lin_.empty(); }
    /// The whole ambient space (no constraints at all).
    bool is_improper() const { return facets_.empty(); }

    bool member(const IntVec& v) const;
    bool member(const RatVec& v) const;
    bool contains_cone(const Cone& other) const;
    bool operator==(const Cone& other) const;
    bool operator!=(const Cone& other) const { return !(*this == other); }

    /// Sum of the extreme rays: a relative-interior point (zero vector for
    /// a pure lineality space, whose relative interior it is).
    IntVec interior_point() const;

    /// { y : x^T . pairing . y >= 0 for all x in this cone }.
    Cone dual(const RatMat& pairing) const;

    /// Image cone under a full-row-rank linear map (zero images dropped).
    Cone quotient_image(const RatMat& surjection) const;

private:
    Cone(std::size_t dim) : dim_(dim) {}
    std::size_t dim_;
    std::vector<IntVec> rays_;
    std::vector<IntVec> lin_;
    std::vector<IntVec> facets_;
};

struct CoverageVerdict {
    bool covered;
    std::optional<IntVec> witness; // interior point of an uncovered cell
};

/// Exact coverage test: splits target along every facet hyperplane of
/// every piece and tests a relative-interior point of each full-
/// dimensional leaf cell for membership in some piece.
CoverageVerdict covers(const Cone& target, const std::vector<Cone>& pieces);

} // namespace k3cone
