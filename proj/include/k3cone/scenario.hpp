#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k3cone/chow.hpp"
#include "k3cone/cone.hpp"
#include "k3cone/lattice.hpp"
#include "k3cone/words.hpp"

namespace k3cone {

// Declarative description of one geometric case: the N^1 data, the fiber
// lattice, the claimed cones and group elements, and the golden values the
// verification pipeline checks them against. Loaded from JSON (//-comments
// allowed) or from the builtin corpus.

struct ChowData {
    std::vector<std::string> vars;
    unsigned dim = 0;
    std::vector<Exponents> relations;
    std::map<Exponents, Int> valuation;
    std::string h_expr;
};

struct CurveData {
    std::string name;
    IntVec pairing; // functional on divisor coordinates
    bool k_trivial = false;
};

struct N1Data {
    std::vector<std::string> labels;
    std::optional<IntVec> anticanonical; // else derived as (n-2)*(H,1)
    std::vector<CurveData> curves;
};

struct SqmData {
    std::string name;
    std::vector<IntVec> nef_rays;
    std::vector<std::string> dual_curves; // names into n1.curves
};

struct QuotientData {
    IntMat matrix;
    IntVec kernel_ray;
};

struct GroupData {
    std::vector<LabeledMatrix> generators;
    bool include_inverses = true;
    std::optional<unsigned> word_length; // "k"; Dirichlet runs when set
    IntVec base_point;                   // "x"
};

struct MovExpectation {
    bool exact = true; // else upper-bound mode: containment + flagged gap
    std::vector<IntVec> inequalities;
    std::vector<IntVec> rays;
    // per claimed ray: indices of the inequalities that must be tight
    std::optional<std::vector<std::vector<std::size_t>>> tight;
    std::optional<IntVec> witness; // expected gap witness (upper-bound)
};

struct BoundaryExpectation {
    Int d;
    Rat a, b; // roots a - b*sqrt(d) and a + b*sqrt(d), b >= 0
};

struct SpotExpectation {
    std::string label;
    IntVec input, image;
};

struct TranslationExpectation {
    IntVec f, y;
    IntMat matrix;
};

struct CoveringExpectation {
    std::vector<IntVec> target_rays;
    bool covered = true;
};

struct Expected {
    std::optional<IntMat> gram;
    std::optional<Int> genus;
    std::optional<std::string> curve_class;
    std::optional<MovExpectation> mov;
    std::optional<long> minus_two_bound;
    std::optional<std::vector<IntVec>> minus_two_classes;
    bool has_certificate = false; // "certificate" key present (value may be null)
    std::optional<long> certificate;
    long certificate_max = 16;
    std::optional<IntVec> disc_factors;
    std::optional<BoundaryExpectation> boundary;
    std::map<std::string, std::optional<long>> orders; // nullopt = infinite
    std::map<std::string, DiscAction> disc_actions;
    std::map<std::string, std::pair<TorelliKind, DiscAction>> torelli;
    std::vector<SpotExpectation> spots;
    std::optional<TranslationExpectation> translation;
    std::optional<std::size_t> word_count;
    std::optional<std::vector<IntVec>> domain_rays;
    std::optional<CoveringExpectation> covering;
};

struct Scenario {
    std::string name;
    std::optional<ChowData> chow;
    std::optional<N1Data> n1;
    std::optional<IntMat> fiber_gram;
    std::vector<SqmData> sqms;
    std::optional<QuotientData> quotient;
    std::optional<GroupData> group;
    Expected expected;

    ChowRingPtr make_ring() const;       // requires chow
    IntLattice make_lattice() const;     // explicit gram, else derived from chow
    IntVec anticanonical_vector() const; // explicit, else (n-2)*(H coeffs, 1)
    const CurveData& curve(const std::string& name) const;
};

enum class CheckStatus { Pass, Fail, Flagged };

std::string to_string(CheckStatus s);

struct CheckRecord {
    std::string id;
    CheckStatus status;
    std::string details;
};

struct Report {
    std::string scenario;
    std::vector<CheckRecord> checks;

    bool overall_pass() const; // flagged entries do not fail the report
    std::string to_text() const;
    std::string to_json() const; // {"scenario", "checks":[...], "overall"}
};

Scenario load_scenario_string(const std::string& text);
Scenario load_scenario_file(const std::string& path);

const std::vector<std::string>& builtin_names();
Scenario builtin_scenario(const std::string& name);

// Verification sections. Each returns the check records of its section;
// sections requiring data the scenario does not carry return nothing.
std::vector<CheckRecord> verify_chow(const Scenario& s);
std::vector<CheckRecord> verify_nef_duality(const Scenario& s);
std::vector<CheckRecord> verify_finite_case(const Scenario& s);
std::vector<CheckRecord> verify_infinite_case(const Scenario& s);
std::vector<CheckRecord> verify_lifting_conditions(const Scenario& s);

/// All applicable sections in the fixed order chow, lattice, nef, mov,
/// group, domain, lift.
Report run_scenario(const Scenario& s);
Report run_builtin(const std::string& name);

} // namespace k3cone
