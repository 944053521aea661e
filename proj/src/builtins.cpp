#include "k3cone/scenario.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

// Builtin scenario corpus. Every expected value carries its provenance in
// a comment: either the geometric source statement or the oracle it was
// derived from. Coordinate conventions are stated per scenario; all cone
// data is raw coordinate vectors.

namespace k3cone {

using nlohmann::json;

namespace {

// Mukai manifold of Picard rank one (modeled on a quartic fourfold,
// L^4 = 4). The blowup has rank two and Nef(X) = Mov(X) = <L, L-F>.
// Divisor coordinates (a, c) stand for a*L - c*F.
const char* RANK1 = R"json({
  "name": "rank1",
  "chow": {
    "vars": ["L"], "dim": 4, "relations": [],
    "valuation": [{"monomial": [4], "value": 4}],   // quartic fourfold: L^4 = 4
    "H": "L"
  },
  "n1": {
    "labels": ["L", "F"],
    "curves": [
      {"name": "f",   "pairing": [0, 1],  "k_trivial": false},  // line in a fiber of F -> C
      {"name": "sec", "pairing": [1, -1], "k_trivial": true}    // curve meeting the base curve once
    ]
  },
  "fiber_lattice": {"gram": [[4]]},                 // lambda^2 = L^2.H^2 = L^4 = 4
  "sqms": [
    {"name": "X", "nef_rays": [[1, 0], [1, 1]], "dual_curves": ["f", "sec"]}
  ],
  "quotient": {"matrix": [[1, -1]], "kernel_ray": [1, 1]},  // L - F restricts to 0 on fibers
  "expected": {
    "gram": [[4]],
    "genus": 3,                                     // H^4/2 + 1 = 4/2 + 1
    "curve_class": "L^3",
    "mov": {"mode": "exact",
            "inequalities": [[0, 1], [1, -1]],      // f >= 0, sec >= 0
            "rays": [[1, 0], [1, 1]]},              // <L, L-F>: rank-one case, Nef = Mov
    "minus_two": {"bound": 10, "classes": []},      // 4a^2 = -2 has no solutions
    "certificate": 4,                               // 4a^2 = 0 mod 4, -2 = 2 mod 4
    "disc_factors": [4],
    "covering": {"target_rays": [[1]], "covered": true}  // single relative nef ray
  }
})json";

// Divisor coordinates (a, b, c) stand for a*L1 + b*L2 - c*F.
const char* P1XP3 = R"json({
  "name": "p1xp3",
  "chow": {
    "vars": ["L1", "L2"], "dim": 4,
    "relations": [[2, 0], [0, 4]],                  // Z[L1,L2]/(L1^2, L2^4)
    "valuation": [{"monomial": [1, 3], "value": 1}],
    "H": "L1 + 2*L2"                                // O(1,2), -K_Z = 2H
  },
  "n1": {
    "labels": ["L1", "L2", "F"],
    "curves": [
      {"name": "l1",      "pairing": [1, 0, 0],  "k_trivial": false},
      {"name": "l2",      "pairing": [0, 1, 0],  "k_trivial": false},
      {"name": "f",       "pairing": [0, 0, 1],  "k_trivial": false},
      {"name": "sec1_l1", "pairing": [1, 0, -1], "k_trivial": true},  // l1-line meeting C once
      {"name": "sec2_l2", "pairing": [0, 1, -2], "k_trivial": true}   // 2-secant l2-line of C
    ]
  },
  "fiber_lattice": {"gram": [[0, 4], [4, 4]]},      // lambda1^2 = 0, lambda1.lambda2 = lambda2^2 = 4
  "sqms": [
    {"name": "X", "nef_rays": [[0, 1, 0], [1, 0, 0], [1, 2, 1]],
     "dual_curves": ["f", "sec2_l2", "sec1_l1"]}    // Nef(X) = <L1, L2, H-F>
  ],
  "expected": {
    "gram": [[0, 4], [4, 4]],
    "genus": 17,
    "curve_class": "12*L1*L2^2 + 8*L2^3",
    "mov": {"mode": "exact",
            // a,b,c >= 0; b >= 2c and 2a+b >= 4c from the two sweeping elliptic families
            "inequalities": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 1, -2], [2, 1, -4]],
            "rays": [[0, 1, 0], [0, 4, 1], [1, 0, 0], [1, 2, 1]]},  // <L1, L2, L1+2L2-F, 4L2-F>
    "minus_two": {"bound": 50, "classes": []},      // 4(2ab + b^2) never equals -2
    "certificate": 4,                               // the form is divisible by 4
    "disc_factors": [4, 4]                          // |det| = 16, gcd of entries 4 (SNF oracle)
  }
})json";

// Blowup of the cone over a quadric threefold at the vertex. L.E = 0 in
// the Chow ring, top values L^4 = 2, E^4 = -2, H = 2L - E.
// Divisor coordinates (a, b, c) stand for a*L - b*E - c*F.
const char* QUADRIC_CONE = R"json({
  "name": "quadric-cone",
  "chow": {
    "vars": ["L", "E"], "dim": 4,
    "relations": [[1, 1]],
    "valuation": [{"monomial": [4, 0], "value": 2}, {"monomial": [0, 4], "value": -2}],
    "H": "2*L - E"
  },
  "n1": {
    "labels": ["L", "E", "F"],
    "anticanonical": [4, 2, 2],                     // -K_X = 2(2L - E - F), explicit because of the sign convention
    "curves": [
      {"name": "f",      "pairing": [0, 0, 1],   "k_trivial": false},
      {"name": "conic2", "pairing": [0, 1, -1],  "k_trivial": true},  // conic in E through 2 points of C
      {"name": "vsec",   "pairing": [1, -1, -1], "k_trivial": true}   // line through the vertex meeting C once
    ]
  },
  "fiber_lattice": {"gram": [[8, 0], [0, -2]]},
  "sqms": [
    {"name": "X", "nef_rays": [[1, 0, 0], [1, 1, 0], [2, 1, 1]],
     "dual_curves": ["f", "conic2", "vsec"]}        // Nef(X) = <L, L-E, 2L-E-F>
  ],
  "expected": {
    "gram": [[8, 0], [0, -2]],
    "genus": 16,                                    // H^4 = 16*2 + (-2) = 30
    "curve_class": "8*L^3 - E^3",                   // (2L-E)^3 with the mixed terms killed by L.E = 0
    "mov": {"mode": "exact",
            // lines, vertex lines, E-conics through C, fiber lines, elliptic lambda-2e
            "inequalities": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, -1, 0], [0, 1, -1], [2, -1, -3]],
            "rays": [[1, 0, 0], [1, 1, 0], [2, 1, 1], [3, 3, 1]]},  // <L, L-E, 2L-E-F, 3L-3E-F>
    "minus_two": {"bound": 10, "classes": [[0, -1], [0, 1]]},  // 8a^2 - 2b^2 = -2 only at a=0, b=+-1
    "certificate": null,                            // solutions exist, no modulus can certify
    "boundary": {"d": 1, "a": 0, "b": "1/2"},       // 8a^2 = 2b^2: rational slopes +-1/2
    "disc_factors": [2, 8]                          // SNF oracle on diag(8,-2)
  }
})json";

// Double cover of P2 x P2 branched along a (2,2) divisor:
// L1^3 = L2^3 = 0, L1^2 L2^2 = 2, H = L1 + L2.
const char* DOUBLE_COVER = R"json({
  "name": "double-cover-p2p2",
  "chow": {
    "vars": ["L1", "L2"], "dim": 4,
    "relations": [[3, 0], [0, 3]],
    "valuation": [{"monomial": [2, 2], "value": 2}],
    "H": "L1 + L2"
  },
  "fiber_lattice": {"gram": [[2, 4], [4, 2]]},
  "group": {
    "generators": [{"label": "alpha", "matrix": [[15, 4], [-4, -1]]}],
    "include_inverses": true,
    "k": 1,
    "x": [1, 1]
  },
  "expected": {
    "gram": [[2, 4], [4, 2]],
    "genus": 7,                                     // H^4 = 6*2 = 12
    "curve_class": "3*L1^2*L2 + 3*L1*L2^2",
    "minus_two": {"bound": 10, "classes": []},      // mod-8 obstruction
    "certificate": 8,                               // mod 4 fails (value 2 is attained), mod 8 certifies
    "disc_factors": [2, 6],                         // SNF oracle, |det| = 12
    "boundary": {"d": 3, "a": -2, "b": 1},          // a = b(-2 +- sqrt(3))
    "orders": {"alpha": "infinite"},                // eigenvalues are not roots of unity
    "disc_action": {"alpha": "plus_id"},            // alpha g - g is integral on both SNF generators
    "torelli": {"alpha": {"kind": "induces", "disc": "plus_id"}},
    "word_count": 3,                                // {I, alpha, alpha^-1}
    "domain_rays": [[-1, 5], [5, -1]]               // D(x,{alpha,alpha^-1}), halfspaces (5,1),(1,5); oracle by hand
  }
})json";

// Divisor coordinates (a, b, c) stand for a*H1 + b*H2 - c*F.
const char* P3XP3 = R"json({
  "name": "p3xp3",
  "chow": {
    "vars": ["L1", "L2"], "dim": 6,
    "relations": [[4, 0], [0, 4]],                  // Z[L1,L2]/(L1^4, L2^4)
    "valuation": [{"monomial": [3, 3], "value": 1}],
    "H": "L1 + L2"
  },
  "n1": {
    "labels": ["H1", "H2", "F"],
    "curves": [
      {"name": "l1",  "pairing": [1, 0, 0],  "k_trivial": false},
      {"name": "l2",  "pairing": [0, 1, 0],  "k_trivial": false},
      {"name": "f",   "pairing": [0, 0, 1],  "k_trivial": false},
      {"name": "b1",  "pairing": [1, 0, -1], "k_trivial": true},   // l1-line meeting C once
      {"name": "b2",  "pairing": [0, 1, -1], "k_trivial": true},
      // the flopped fiber-exceptional curve; the source statement writes
      // l_i - e in the statement and l_i - f in the proof, one class is used
      {"name": "fl1", "pairing": [-1, 0, 1], "k_trivial": true},
      {"name": "fl2", "pairing": [0, -1, 1], "k_trivial": true},
      {"name": "t1",  "pairing": [3, 1, -4], "k_trivial": true},   // 4-secant (3,1)-curve: 3l1 + l2 - 4f
      {"name": "t2",  "pairing": [1, 3, -4], "k_trivial": true}
    ]
  },
  "fiber_lattice": {"gram": [[4, 6], [6, 4]]},
  "sqms": [
    {"name": "X",  "nef_rays": [[0, 1, 0], [1, 0, 0], [1, 1, 1]],
     "dual_curves": ["b1", "b2", "f"]},             // <H1, H2, H1+H2-F>
    {"name": "X1", "nef_rays": [[0, 1, 0], [0, 4, 1], [1, 1, 1]],
     "dual_curves": ["l1", "fl1", "t1"]},           // <H2, 4H2-F, H1+H2-F>
    {"name": "X2", "nef_rays": [[1, 0, 0], [4, 0, 1], [1, 1, 1]],
     "dual_curves": ["l2", "fl2", "t2"]}
  ],
  "quotient": {"matrix": [[1, 0, -1], [0, 1, -1]], "kernel_ray": [1, 1, 1]},
  "group": {
    "generators": [{"label": "M", "matrix": [[21, 8], [-8, -3]]}],
    "include_inverses": true,
    "k": 1,
    "x": [1, 1]
  },
  "expected": {
    "gram": [[4, 6], [6, 4]],                       // L_i^2.H^4 = 4, L1L2.H^4 = 6
    "genus": 11,                                    // H^6 = 20
    "curve_class": "10*L1^3*L2^2 + 10*L1^2*L2^3",
    "minus_two": {"bound": 50, "classes": []},      // 4a^2+12ab+4b^2 = -2 impossible mod 4
    "certificate": 4,
    "disc_factors": [2, 10],                        // order 20 group Z/2 + Z/10
    "boundary": {"d": 5, "a": "-3/2", "b": "1/2"},  // a = b/2(-3 +- sqrt(5))
    "orders": {"M": "infinite"},
    "disc_action": {"M": "minus_id"},
    "torelli": {"M": {"kind": "induces", "disc": "minus_id"}},
    "spot": [{"label": "M", "input": [-1, 3], "image": [3, -1]}],  // M maps one V-ray to the other
    "word_count": 3,
    "domain_rays": [[-1, 3], [3, -1]],              // D(x,{M,M^-1}) = V; halfspaces (3,1),(1,3) by hand
    "covering": {"target_rays": [[-1, 3], [3, -1]], "covered": true}
  }
})json";

// P1 x V for a del Pezzo threefold V of degree d: gram [[0,d],[d,2d]],
// genus 2d+1. d = 1 is the exact case with the (-2)-curve lambda2-2lambda1;
// d > 1 runs in upper-bound mode: the stated inequalities define a cone
// strictly larger than the claimed <L1, L2, L1+L2-F, 2L2-F> (witness
// (0,1,1)), which is flagged rather than repaired.
// Divisor coordinates (a, b, c) stand for a*L1 + b*L2 - c*F.
json p1xv_scenario(int d) {
    json j;
    j["name"] = "p1xV:" + std::to_string(d);
    j["chow"] = {{"vars", {"L1", "L2"}},
                 {"dim", 4},
                 {"relations", {{2, 0}, {0, 4}}},
                 {"valuation", json::array({{{"monomial", {1, 3}}, {"value", d}}})},
                 {"H", "L1 + L2"}};
    j["n1"] = {{"labels", {"L1", "L2", "F"}},
               {"curves",
                json::array({{{"name", "l1"}, {"pairing", {1, 0, 0}}, {"k_trivial", false}},
                             {{"name", "l2"}, {"pairing", {0, 1, 0}}, {"k_trivial", false}},
                             {{"name", "f"}, {"pairing", {0, 0, 1}}, {"k_trivial", false}},
                             {{"name", "sec_l1"}, {"pairing", {1, 0, -1}}, {"k_trivial", true}},
                             {{"name", "sec_l2"}, {"pairing", {0, 1, -1}}, {"k_trivial", true}}})}};
    j["fiber_lattice"] = {{"gram", {{0, d}, {d, 2 * d}}}};
    j["sqms"] = json::array({{{"name", "X"},
                              {"nef_rays", {{0, 1, 0}, {1, 0, 0}, {1, 1, 1}}},
                              {"dual_curves", {"f", "sec_l2", "sec_l1"}}}});
    json& e = j["expected"];
    e["gram"] = {{0, d}, {d, 2 * d}};
    e["genus"] = 2 * d + 1;
    e["curve_class"] = "3*L1*L2^2 + L2^3";
    if (d == 1) {
        e["mov"] = {{"mode", "exact"},
                    {"inequalities", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, -1}, {0, 1, -1}}},
                    {"rays", {{0, 1, 0}, {1, 0, 0}, {1, 1, 1}}}};
        // 2ab + 2b^2 = -2 exactly at +-(-2, 1); the (-2)-curve lambda2 - 2lambda1
        e["minus_two"] = {{"bound", 10}, {"classes", {{-2, 1}, {2, -1}}}};
        e["certificate"] = nullptr; // solutions exist
        e["disc_factors"] = json::array(); // unimodular
    } else {
        e["mov"] = {{"mode", "upper_bound"},
                    {"inequalities", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, -1}, {1, 1, -1}}},
                    {"rays", {{0, 1, 0}, {0, 2, 1}, {1, 0, 0}, {1, 1, 1}}},
                    {"tight", {{0, 2}, {0}, {1, 2, 3}, {3}}},
                    {"witness", {0, 1, 1}}};
        e["minus_two"] = {{"bound", 10}, {"classes", json::array()}};
        // 2d b(a+b) = -2 fails: mod 4 for d = 2, 4; mod d for d = 3, 5
        e["certificate"] = (d == 2 || d == 4) ? 4 : d;
        e["disc_factors"] = {d, d};
    }
    return j;
}

// The set of 4x4 permutation matrices, labeled by one-line notation.
json s4_generators() {
    json gens = json::array();
    int perm[4] = {0, 1, 2, 3};
    do {
        std::string label = "s";
        for (int j = 0; j < 4; ++j) label += static_cast<char>('1' + perm[j]);
        json m = json::array();
        for (int i = 0; i < 4; ++i) {
            json row = json::array();
            for (int j = 0; j < 4; ++j) row.push_back(perm[j] == i ? 1 : 0);
            m.push_back(row);
        }
        gens.push_back({{"label", label}, {"matrix", m}});
    } while (std::next_permutation(perm, perm + 4));
    return gens;
}

// (P1)^4: rank-4 fiber lattice 2(J - I), the translation and involution
// isometries of the four elliptic fibrations, and the word-length-2
// Dirichlet domain V with rays {e_i} and {1 - 2e_i}.
// Divisor coordinates (a1..a4, c) stand for sum a_i H_i - c*F.
json p1_4_scenario() {
    json j;
    j["name"] = "p1^4";
    j["chow"] = {{"vars", {"L1", "L2", "L3", "L4"}},
                 {"dim", 4},
                 {"relations", {{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}},
                 {"valuation", json::array({{{"monomial", {1, 1, 1, 1}}, {"value", 1}}})},
                 {"H", "L1 + L2 + L3 + L4"}};

    json curves = json::array();
    auto curve = [&](const std::string& name, std::vector<int> pairing, bool kt) {
        curves.push_back({{"name", name}, {"pairing", pairing}, {"k_trivial", kt}});
    };
    for (int i = 0; i < 4; ++i) {
        std::vector<int> p(5, 0);
        p[i] = 1;
        curve("l" + std::to_string(i + 1), p, false);
    }
    curve("f", {0, 0, 0, 0, 1}, false);
    for (int i = 0; i < 4; ++i) { // l_i meeting the base curve once
        std::vector<int> p(5, 0);
        p[i] = 1;
        p[4] = -1;
        curve("b" + std::to_string(i + 1), p, true);
    }
    for (int i = 0; i < 4; ++i) { // flopped fiber-exceptional curve f - l_i
        std::vector<int> p(5, 0);
        p[i] = -1;
        p[4] = 1;
        curve("fl" + std::to_string(i + 1), p, true);
    }
    for (int i = 0; i < 4; ++i) // (1,1)-curves in S_ij through 2 points of C
        for (int k = i + 1; k < 4; ++k) {
            std::vector<int> p(5, 0);
            p[i] = 1;
            p[k] = 1;
            p[4] = -2;
            curve("c" + std::to_string(i + 1) + std::to_string(k + 1), p, true);
        }
    j["n1"] = {{"labels", {"H1", "H2", "H3", "H4", "F"}}, {"curves", curves}};

    json sqms = json::array();
    {
        json rays = json::array();
        for (int i = 3; i >= 0; --i) {
            std::vector<int> r(5, 0);
            r[i] = 1;
            rays.push_back(r);
        }
        rays.push_back({1, 1, 1, 1, 1});
        sqms.push_back({{"name", "X"},
                        {"nef_rays", rays},
                        {"dual_curves", {"b1", "b2", "b3", "b4", "f"}}});
    }
    for (int i = 0; i < 4; ++i) {
        // Nef(X_i) = <H_j (j != i), D_i, -K/2> with D_i = 2 sum_{k != i} H_k - F
        json rays = json::array();
        std::vector<std::vector<int>> rs;
        for (int k = 0; k < 4; ++k) {
            if (k == i) continue;
            std::vector<int> r(5, 0);
            r[k] = 1;
            rs.push_back(r);
        }
        std::vector<int> di(5, 2);
        di[i] = 0;
        di[4] = 1;
        rs.push_back(di);
        rs.push_back({1, 1, 1, 1, 1});
        std::sort(rs.begin(), rs.end());
        for (const auto& r : rs) rays.push_back(r);
        std::vector<std::string> duals = {"l" + std::to_string(i + 1), "fl" + std::to_string(i + 1)};
        for (int k = 0; k < 4; ++k) {
            if (k == i) continue;
            int lo = std::min(i, k) + 1, hi = std::max(i, k) + 1;
            duals.push_back("c" + std::to_string(lo) + std::to_string(hi));
        }
        sqms.push_back({{"name", "X" + std::to_string(i + 1)},
                        {"nef_rays", rays},
                        {"dual_curves", duals}});
    }
    j["sqms"] = sqms;
    j["quotient"] = {{"matrix",
                      {{1, 0, 0, 0, -1}, {0, 1, 0, 0, -1}, {0, 0, 1, 0, -1}, {0, 0, 0, 1, -1}}},
                     {"kernel_ray", {1, 1, 1, 1, 1}}};

    json gens = s4_generators();
    // translation by L3 - L2 on the first elliptic fibration
    gens.push_back({{"label", "M132"},
                    {"matrix", {{1, 2, 6, 4}, {0, -1, -2, -2}, {0, 2, 3, 2}, {0, 0, 0, 1}}}});
    // hyperelliptic involution of the first fibration fixing L2
    gens.push_back({{"label", "H12"},
                    {"matrix", {{1, 0, 2, 2}, {0, 1, 2, 2}, {0, 0, -1, 0}, {0, 0, 0, -1}}}});
    j["group"] = {{"generators", gens}, {"include_inverses", true}, {"k", 2}, {"x", {1, 1, 1, 1}}};

    json& e = j["expected"];
    e["gram"] = {{0, 2, 2, 2}, {2, 0, 2, 2}, {2, 2, 0, 2}, {2, 2, 2, 0}};
    e["genus"] = 13; // H^4 = 24
    e["curve_class"] = "6*L1*L2*L3 + 6*L1*L2*L4 + 6*L1*L3*L4 + 6*L2*L3*L4"; // multidegree (6,6,6,6)
    e["minus_two"] = {{"bound", 6}, {"classes", json::array()}}; // 4 sum_{i<j} a_i a_j never -2
    e["certificate"] = 4;
    e["disc_factors"] = {2, 2, 2, 6}; // 2 * SNF(J - I) with diag (1,1,1,3); |det| = 48
    e["orders"] = {{"M132", "infinite"}, {"H12", 2}};
    // reproduces the displayed matrix of the translation isometry
    e["translation"] = {{"f", {1, 0, 0, 0}},
                        {"y", {0, -1, 1, 0}},
                        {"matrix", {{1, 2, 6, 4}, {0, -1, -2, -2}, {0, 2, 3, 2}, {0, 0, 0, 1}}}};
    e["word_count"] = 657; // golden: frozen from the first enumeration run
    json v_rays = json::array();
    std::vector<std::vector<int>> vr;
    for (int i = 0; i < 4; ++i) {
        std::vector<int> r(4, 0);
        r[i] = 1;
        vr.push_back(r);
        std::vector<int> s(4, 1);
        s[i] = -1;
        vr.push_back(s);
    }
    std::sort(vr.begin(), vr.end());
    for (const auto& r : vr) v_rays.push_back(r);
    e["domain_rays"] = v_rays; // D^{G(2)}_x = V with the 8 rays {e_i} u {1 - 2e_i}
    e["covering"] = {{"target_rays", v_rays}, {"covered", true}};
    return j;
}

// F(1,3;4) and the bi-(1,1) section of P3 x P3 reuse the p3xp3 lattice,
// group and cone data; only the anticanonical degree differs and the Chow
// layer is omitted.
json restriction_of_p3xp3(const std::string& name, int index) {
    json j = json::parse(P3XP3, nullptr, true, /*ignore_comments=*/true);
    j["name"] = name;
    j.erase("chow");
    j["n1"]["anticanonical"] = {index, index, index}; // -K_X = (n-2)(H1 + H2 - F)
    j["expected"].erase("gram");
    j["expected"].erase("genus");
    j["expected"].erase("curve_class");
    return j;
}

std::map<std::string, json> build_corpus() {
    std::map<std::string, json> m;
    auto put = [&](const char* text) {
        json j = json::parse(text, nullptr, true, /*ignore_comments=*/true);
        m[j["name"].get<std::string>()] = std::move(j);
    };
    put(RANK1);
    put(P1XP3);
    put(QUADRIC_CONE);
    put(DOUBLE_COVER);
    put(P3XP3);
    for (int d = 1; d <= 5; ++d) {
        json j = p1xv_scenario(d);
        m[j["name"].get<std::string>()] = std::move(j);
    }
    m["f134"] = restriction_of_p3xp3("f134", 3);          // F(1,3;4) is a fivefold
    m["bilinear-p3p3"] = restriction_of_p3xp3("bilinear-p3p3", 2); // the fourfold section
    {
        json j = p1_4_scenario();
        m["p1^4"] = std::move(j);
    }
    return m;
}

const std::map<std::string, json>& corpus() {
    static const std::map<std::string, json> c = build_corpus();
    return c;
}

} // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {
        "rank1",         "p1xp3", "p1xV:1", "p1xV:2", "p1xV:3",
        "p1xV:4",        "p1xV:5", "quadric-cone", "double-cover-p2p2", "p3xp3",
        "f134",          "bilinear-p3p3", "p1^4"};
    return names;
}

Scenario builtin_scenario(const std::string& name) {
    auto it = corpus().find(name);
    if (it == corpus().end()) throw DomainError("unknown builtin scenario '" + name + "'");
    return load_scenario_string(it->second.dump());
}

} // namespace k3cone
