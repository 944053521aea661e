#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3cone/linalg.hpp"
#include "k3cone/quadsurd.hpp"

namespace k3cone {

/// Free Z-module with a nondegenerate symmetric bilinear form given by an
/// integer Gram matrix. Vectors are integer coordinate vectors in the
/// implied basis.
class IntLattice {
public:
    explicit IntLattice(IntMat gram);

    std::size_t rank() const { return gram_.rows(); }
    const IntMat& gram() const { return gram_; }
    bool is_even() const { return even_; }

    /// x^T * gram * y.
    Int eval_form(const IntVec& x, const IntVec& y) const;
    Int norm(const IntVec& x) const { return eval_form(x, x); }

    /// M^T * gram * M == gram.
    bool is_isometry(const IntMat& m) const;

private:
    IntMat gram_;
    bool even_;
};

/// L*/L presented by its nontrivial invariant factors d_1 | d_2 | ... and
/// rational representatives g_i in L* (coordinates in the lattice basis)
/// with d_i * g_i in L.
struct DiscGroup {
    IntVec factors;
    std::vector<RatVec> generators;
    Int order;
};

DiscGroup discriminant_group(const IntLattice& l);

enum class DiscAction { PlusId, MinusId, Other };

std::string to_string(DiscAction a);

/// Action of an isometry on the discriminant group: the matrix of
/// generator images in generator coordinates (entry (i,j) taken mod
/// factors[i]), and its classification.
struct DiscActionResult {
    IntMat matrix; // factors.size() x factors.size(); empty for trivial group
    DiscAction kind;
};

DiscActionResult disc_action(const IntLattice& l, const IntMat& m);

/// nullopt means infinite order; otherwise the minimal k with M^k = I.
/// Complete for unimodular integer matrices: M has finite order iff
/// M^L = I where L = lcm{ m : phi(m) <= n }.
std::optional<long> element_order(const IntMat& m);

/// All integer vectors v with |v_i| <= bound and v.G.v = norm, sorted
/// lexicographically. Both signs of each solution appear.
std::vector<IntVec> find_norm_vectors(const IntLattice& l, const Int& norm, long bound);

/// Smallest modulus m <= max_modulus such that v.G.v != norm (mod m) for
/// every residue vector v, or nullopt if no such modulus exists in range.
std::optional<long> certify_no_norm(const IntLattice& l, const Int& norm, long max_modulus);

/// Boundary slopes of {q > 0} for an indefinite rank-2 form: the two
/// roots s of g00 s^2 + 2 g01 s + g11 = 0, ascending. A class a*e1 + b*e2
/// is isotropic iff a = s*b. Requires g00 != 0.
std::pair<QuadSurd, QuadSurd> positive_cone_boundary(const IntLattice& l);

/// Isometry x -> x + (x.f) y + m(x) f for isotropic f with f.y = 0 and
/// y.y even, where m(x) = -(x.y) - (x.f)(y.y)/2. Columns are the images
/// of the basis vectors.
IntMat translation_isometry(const IntLattice& l, const IntVec& f, const IntVec& y);

enum class TorelliKind { Induces, PowerInduces, Fails };

std::string to_string(TorelliKind k);

struct TorelliVerdict {
    TorelliKind kind;
    DiscAction disc;
    /// For PowerInduces: smallest e >= 1 with disc_action(M^e) in {+-Id}.
    std::optional<long> power;
    std::string reason; // set when kind == Fails
};

/// Lattice-theoretic automorphism criterion: M must permute the nodal set
/// (as given rays, not up to sign); +-Id discriminant action then gives
/// Induces, anything else PowerInduces.
TorelliVerdict torelli_check(const IntLattice& l, const IntMat& m,
                             const std::vector<IntVec>& nodal_classes);

} // namespace k3cone
