#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "k3cone/words.hpp"

using namespace k3cone;

namespace {

IntMat M2(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<Int>> v;
    for (auto& r : rows) v.emplace_back(r.begin(), r.end());
    return IntMat::from_rows(v);
}

IntMat p14_gram() {
    IntMat g(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) g(i, j) = i == j ? 0 : 2;
    return g;
}

std::vector<LabeledMatrix> s4() {
    std::vector<LabeledMatrix> gens;
    int perm[4] = {0, 1, 2, 3};
    do {
        IntMat m(4, 4);
        for (int j = 0; j < 4; ++j) m(perm[j], j) = 1;
        std::string label = "s";
        for (int j = 0; j < 4; ++j) label += static_cast<char>('1' + perm[j]);
        gens.push_back({label, m});
    } while (std::next_permutation(perm, perm + 4));
    return gens;
}

const IntMat M132 = M2({{1, 2, 6, 4}, {0, -1, -2, -2}, {0, 2, 3, 2}, {0, 0, 0, 1}});
const IntMat H12 = M2({{1, 0, 2, 2}, {0, 1, 2, 2}, {0, 0, -1, 0}, {0, 0, 0, -1}});

} // namespace

TEST_CASE("cyclic enumeration") {
    IntMat m = M2({{21, 8}, {-8, -3}});
    WordSet w = enumerate_words({{"M", m}}, 2, true);
    CHECK(w.matrices.size() == 5); // I, M, M^-1, M^2, M^-2
    CHECK(w.words[0] == "e");
    CHECK(std::count(w.words.begin(), w.words.end(), "M") == 1);
    CHECK(std::count(w.words.begin(), w.words.end(), "M^-1*M^-1") == 1);

    WordSet no_inv = enumerate_words({{"M", m}}, 2, false);
    CHECK(no_inv.matrices.size() == 3); // I, M, M^2
}

TEST_CASE("the 24 permutation matrices close at word length one") {
    WordSet w = enumerate_words(s4(), 1, true);
    CHECK(w.matrices.size() == 24); // the identity is among the generators
    WordSet w2 = enumerate_words(s4(), 3, true);
    CHECK(w2.matrices.size() == 24); // already a group
}

TEST_CASE("monotone growth in word length") {
    std::vector<LabeledMatrix> gens = s4();
    gens.push_back({"M132", M132});
    gens.push_back({"H12", H12});
    WordSet w1 = enumerate_words(gens, 1, true);
    WordSet w2 = enumerate_words(gens, 2, true);
    CHECK(w1.matrices.size() < w2.matrices.size());
    // every length-1 element appears among the length-2 elements
    for (const auto& m : w1.matrices)
        CHECK(std::find(w2.matrices.begin(), w2.matrices.end(), m) != w2.matrices.end());
}

TEST_CASE("non-invertible generators are rejected") {
    CHECK_THROWS_AS(enumerate_words({{"bad", M2({{2, 0}, {0, 1}})}}, 1, true), DomainError);
}

TEST_CASE("dirichlet halfspaces") {
    IntLattice l(p14_gram());
    IntVec x{1, 1, 1, 1};
    WordSet w;
    w.matrices = {IntMat::identity(4), H12};
    w.words = {"e", "H12"};
    auto normals = dirichlet_halfspaces(l, x, w);
    CHECK(normals == std::vector<IntVec>{{0, 0, 1, 1}}); // (H12 - I)^T.G.x, primitive

    // a transposition fixes the symmetric base point: zero normal dropped
    IntMat swap12(4, 4);
    swap12(1, 0) = 1;
    swap12(0, 1) = 1;
    swap12(2, 2) = 1;
    swap12(3, 3) = 1;
    WordSet ws;
    ws.matrices = {IntMat::identity(4), swap12};
    ws.words = {"e", "s2134"};
    CHECK(dirichlet_halfspaces(l, x, ws).empty());
}

TEST_CASE("dirichlet domain for the rank-2 double-cover lattice") {
    // golden rays from the two-halfspace oracle: normals (5,1) and (1,5)
    IntLattice l(IntMat::from_rows({{2, 4}, {4, 2}}));
    DirichletDomain d = dirichlet_domain(l, {1, 1}, {{"alpha", M2({{15, 4}, {-4, -1}})}}, 1);
    CHECK_FALSE(d.improper);
    CHECK(d.cone.rays() == std::vector<IntVec>{{-1, 5}, {5, -1}});
    CHECK(d.rays_outside_positive.empty());
    CHECK(d.cone.member(IntVec{1, 1}));
}

TEST_CASE("dirichlet domain with trivial words is improper") {
    IntLattice l(IntMat::from_rows({{2, 4}, {4, 2}}));
    DirichletDomain d = dirichlet_domain(l, {1, 1}, {{"id", IntMat::identity(2)}}, 2);
    CHECK(d.improper);
    CHECK(d.cone.is_improper());
}

TEST_CASE("dirichlet domains shrink as the word length grows") {
    std::vector<LabeledMatrix> gens = s4();
    gens.push_back({"M132", M132});
    gens.push_back({"H12", H12});
    IntLattice l(p14_gram());
    IntVec x{1, 1, 1, 1};
    DirichletDomain d1 = dirichlet_domain(l, x, gens, 1);
    DirichletDomain d2 = dirichlet_domain(l, x, gens, 2);
    CHECK(d1.cone.contains_cone(d2.cone));
    CHECK(d2.cone.member(x));
    // facet sets grow monotonically
    WordSet w1 = enumerate_words(gens, 1, true);
    WordSet w2 = enumerate_words(gens, 2, true);
    auto n1 = dirichlet_halfspaces(l, x, w1);
    auto n2 = dirichlet_halfspaces(l, x, w2);
    for (const auto& n : n1)
        CHECK(std::find(n2.begin(), n2.end(), n) != n2.end());
}
