#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "k3cone/linalg.hpp"

namespace k3cone {

using Exponents = std::vector<unsigned>;

/// Graded polynomial quotient with monomial vanishing relations and a
/// top-degree valuation. A degree-n monomial not listed in the valuation
/// table valuates to 0; monomials of degree > n vanish for dimension
/// reasons, as does anything divisible by a relation monomial.
class ChowRing {
public:
    ChowRing(std::vector<std::string> variables, unsigned dim,
             std::vector<Exponents> relations, std::map<Exponents, Int> valuation);

    const std::vector<std::string>& variables() const { return vars_; }
    unsigned dim() const { return dim_; }
    const std::vector<Exponents>& relations() const { return relations_; }
    const std::map<Exponents, Int>& valuation() const { return valuation_; }

    std::size_t var_index(const std::string& name) const; // throws on unknown
    bool killed(const Exponents& mono) const;

private:
    std::vector<std::string> vars_;
    unsigned dim_;
    std::vector<Exponents> relations_;
    std::map<Exponents, Int> valuation_;
};

using ChowRingPtr = std::shared_ptr<const ChowRing>;

/// Element of a ChowRing: reduced sparse sum of monomials.
class ChowClass {
public:
    explicit ChowClass(ChowRingPtr ring);
    ChowClass(ChowRingPtr ring, std::map<Exponents, Int> terms);

    static ChowClass variable(ChowRingPtr ring, std::size_t index);
    static ChowClass constant(ChowRingPtr ring, Int value);

    const ChowRingPtr& ring() const { return ring_; }
    const std::map<Exponents, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// True when every term has the same total degree; degree of the zero
    /// class is reported as 0/homogeneous.
    bool homogeneous(unsigned* degree = nullptr) const;

    ChowClass operator+(const ChowClass& o) const;
    ChowClass operator-(const ChowClass& o) const;
    ChowClass operator*(const ChowClass& o) const;
    ChowClass pow(unsigned k) const; // repeated squaring
    bool operator==(const ChowClass& o) const;

    std::string str() const; // graded-lex term order, parseable back

private:
    ChowRingPtr ring_;
    std::map<Exponents, Int> terms_;
    void reduce();
    void check_same_ring(const ChowClass& o) const;
};

/// Grammar: integer literals, variable names, +, -, * and ^ with
/// nonnegative integer exponents, parentheses. '^' binds tighter than '*'
/// binds tighter than '+'/'-'. Throws ParseError with position.
ChowClass parse_class(const std::string& text, ChowRingPtr ring);

/// Valuation of a homogeneous degree-n class; anything else is an error.
Int top_value(const ChowClass& c);

/// Entry (i,j) = top_value(basis[i] * basis[j] * H^(n-2)).
IntMat fiber_gram(const std::vector<ChowClass>& basis, const ChowClass& h);

/// H^(n-1), the class of the base curve of the fibration.
ChowClass base_curve_class(const ChowClass& h);

/// g with H^n = 2g - 2, i.e. top_value(H^n)/2 + 1; the top value must be
/// even and nonnegative.
Int curve_genus(const ChowClass& h);

} // namespace k3cone
