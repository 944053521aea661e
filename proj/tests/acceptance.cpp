// Acceptance suite: one line per criterion, exit code = number of failures.
// Everything is exact arithmetic; "tolerance" is equality throughout.

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "k3cone/chow.hpp"
#include "k3cone/cone.hpp"
#include "k3cone/lattice.hpp"
#include "k3cone/scenario.hpp"
#include "k3cone/words.hpp"

using namespace k3cone;

namespace {

int failures = 0;

void criterion(int num, const char* label, bool ok, const std::string& note = "") {
    std::printf("[%2d] %s  %s%s%s\n", num, ok ? "PASS" : "FAIL", label,
                note.empty() ? "" : " -- ", note.c_str());
    if (!ok) ++failures;
}

template <typename F>
void guarded(int num, const char* label, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        criterion(num, label, false, std::string("exception: ") + e.what());
    }
}

IntMat M(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<Int>> v;
    for (auto& r : rows) v.emplace_back(r.begin(), r.end());
    return IntMat::from_rows(v);
}

std::vector<IntVec> V(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<IntVec> v;
    for (auto& r : rows) v.emplace_back(r.begin(), r.end());
    return v;
}

ChowRingPtr ring_of(const Scenario& s) { return s.make_ring(); }

ChowClass h_of(const Scenario& s, const ChowRingPtr& r) {
    return parse_class(s.chow->h_expr, r);
}

IntMat derived_gram(const Scenario& s) {
    ChowRingPtr r = ring_of(s);
    std::vector<ChowClass> basis;
    for (std::size_t i = 0; i < s.chow->vars.size(); ++i)
        basis.push_back(ChowClass::variable(r, i));
    return fiber_gram(basis, h_of(s, r));
}

const CheckRecord* find_check(const std::vector<CheckRecord>& checks, const std::string& id) {
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

const IntMat M132_MAT = M({{1, 2, 6, 4}, {0, -1, -2, -2}, {0, 2, 3, 2}, {0, 0, 0, 1}});
const IntMat H12_MAT = M({{1, 0, 2, 2}, {0, 1, 2, 2}, {0, 0, -1, 0}, {0, 0, 0, -1}});

std::vector<LabeledMatrix> p14_generators() {
    return builtin_scenario("p1^4").group->generators;
}

IntMat p14_gram() {
    IntMat g(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) g(i, j) = i == j ? 0 : 2;
    return g;
}

} // namespace

int main() {
    // 1. fiber Gram matrices
    guarded(1, "fiber Gram matrices from the Chow data", [] {
        bool ok = derived_gram(builtin_scenario("p1xp3")) == M({{0, 4}, {4, 4}});
        for (int d = 1; d <= 5; ++d)
            ok = ok && derived_gram(builtin_scenario("p1xV:" + std::to_string(d))) ==
                           M({{0, d}, {d, 2 * d}});
        ok = ok && derived_gram(builtin_scenario("quadric-cone")) == M({{8, 0}, {0, -2}});
        ok = ok && derived_gram(builtin_scenario("double-cover-p2p2")) == M({{2, 4}, {4, 2}});
        ok = ok && derived_gram(builtin_scenario("p3xp3")) == M({{4, 6}, {6, 4}});
        ok = ok && derived_gram(builtin_scenario("p1^4")) == p14_gram();
        criterion(1, "fiber Gram matrices from the Chow data", ok);
    });

    // 2. genera and base curve classes
    guarded(2, "curve genera and base curve classes", [] {
        bool ok = true;
        auto genus_of = [&](const char* name) {
            Scenario s = builtin_scenario(name);
            ChowRingPtr r = ring_of(s);
            return curve_genus(h_of(s, r));
        };
        ok = ok && genus_of("p1xp3") == 17;
        for (int d = 1; d <= 5; ++d)
            ok = ok && genus_of(("p1xV:" + std::to_string(d)).c_str()) == 2 * d + 1;
        ok = ok && genus_of("quadric-cone") == 16;
        ok = ok && genus_of("double-cover-p2p2") == 7;
        ok = ok && genus_of("p3xp3") == 11;
        ok = ok && genus_of("p1^4") == 13;

        auto curve_of = [&](const char* name, const char* expr) {
            Scenario s = builtin_scenario(name);
            ChowRingPtr r = ring_of(s);
            return base_curve_class(h_of(s, r)) == parse_class(expr, r);
        };
        ok = ok && curve_of("p1xp3", "12*L1*L2^2 + 8*L2^3");
        ok = ok && curve_of("p3xp3", "10*L1^2*L2^3 + 10*L1^3*L2^2");
        ok = ok && curve_of("p1^4", "6*L1*L2*L3 + 6*L1*L2*L4 + 6*L1*L3*L4 + 6*L2*L3*L4");
        criterion(2, "curve genera and base curve classes", ok);
    });

    // 3. movable cones by double description
    guarded(3, "movable cones (exact sets; d>1 flagged with witness)", [] {
        bool ok = true;
        Cone p1xp3 = Cone::from_facets(
            V({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, -2}, {2, 1, -4}}), 3);
        ok = ok && p1xp3.rays() == V({{0, 1, 0}, {0, 4, 1}, {1, 0, 0}, {1, 2, 1}});
        Cone quadric = Cone::from_facets(
            V({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {0, 1, -1}, {2, -1, -3}}), 3);
        ok = ok && quadric.rays() == V({{1, 0, 0}, {1, 1, 0}, {2, 1, 1}, {3, 3, 1}});
        Cone d1 = Cone::from_facets(
            V({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, -1}, {0, 1, -1}}), 3);
        ok = ok && d1.rays() == V({{0, 1, 0}, {1, 0, 0}, {1, 1, 1}});
        for (int d = 2; d <= 5; ++d) {
            Report r = run_builtin("p1xV:" + std::to_string(d));
            ok = ok && r.overall_pass();
            const CheckRecord* gap = find_check(r.checks, "mov.gap");
            ok = ok && gap && gap->status == CheckStatus::Flagged &&
                 gap->details.find("[0, 1, 1]") != std::string::npos;
        }
        criterion(3, "movable cones (exact sets; d>1 flagged with witness)", ok);
    });

    // 4. (-2)-class analysis
    guarded(4, "(-2)-class certificates and solution sets", [] {
        bool ok = true;
        ok = ok && certify_no_norm(IntLattice(M({{0, 4}, {4, 4}})), Int(-2), 16) == 4;
        ok = ok && certify_no_norm(IntLattice(M({{4, 6}, {6, 4}})), Int(-2), 16) == 4;
        ok = ok && certify_no_norm(IntLattice(M({{2, 4}, {4, 2}})), Int(-2), 16) == 8;
        long expected_mod[] = {0, 0, 4, 3, 4, 5}; // index by d; divisors of 2d
        for (int d = 2; d <= 5; ++d)
            ok = ok && certify_no_norm(IntLattice(M({{0, d}, {d, 2 * d}})), Int(-2), 16) ==
                           expected_mod[d];
        ok = ok && find_norm_vectors(IntLattice(M({{8, 0}, {0, -2}})), Int(-2), 10) ==
                       V({{0, -1}, {0, 1}});
        ok = ok && find_norm_vectors(IntLattice(M({{0, 1}, {1, 2}})), Int(-2), 10) ==
                       V({{-2, 1}, {2, -1}});
        criterion(4, "(-2)-class certificates and solution sets", ok);
    });

    // 5. isometries and orders
    guarded(5, "isometry membership and element orders", [] {
        IntMat alpha = M({{15, 4}, {-4, -1}});
        IntMat m = M({{21, 8}, {-8, -3}});
        bool ok = IntLattice(M({{2, 4}, {4, 2}})).is_isometry(alpha) &&
                  IntLattice(M({{4, 6}, {6, 4}})).is_isometry(m) &&
                  !element_order(alpha).has_value() && !element_order(m).has_value() &&
                  element_order(H12_MAT) == 2;
        criterion(5, "isometry membership and element orders", ok);
    });

    // 6. discriminant layer
    guarded(6, "discriminant group, action and Torelli verdict", [] {
        IntLattice l(M({{4, 6}, {6, 4}}));
        IntMat m = M({{21, 8}, {-8, -3}});
        DiscGroup g = discriminant_group(l);
        TorelliVerdict t = torelli_check(l, m, {});
        bool ok = g.factors == IntVec{2, 10} && g.order == 20 &&
                  disc_action(l, m).kind == DiscAction::MinusId &&
                  t.kind == TorelliKind::Induces && t.disc == DiscAction::MinusId;
        criterion(6, "discriminant group, action and Torelli verdict", ok);
    });

    // 7. fundamental domain spot check
    guarded(7, "fundamental domain spot check", [] {
        IntLattice l(M({{4, 6}, {6, 4}}));
        IntMat m = M({{21, 8}, {-8, -3}});
        bool ok = m.apply(IntVec{-1, 3}) == IntVec{3, -1} &&
                  l.eval_form({-1, 3}, {-1, 3}) == 4 && l.eval_form({3, -1}, {3, -1}) == 4;
        criterion(7, "fundamental domain spot check", ok);
    });

    // 8. translation builder
    guarded(8, "translation isometry reproduces the displayed matrix", [] {
        IntLattice l(p14_gram());
        criterion(8, "translation isometry reproduces the displayed matrix",
                  translation_isometry(l, {1, 0, 0, 0}, {0, -1, 1, 0}) == M132_MAT);
    });

    // 9. Dirichlet domain at word length two
    guarded(9, "Dirichlet domain D(x, G(2)) equals V within 60 s", [] {
        auto start = std::chrono::steady_clock::now();
        IntLattice l(p14_gram());
        DirichletDomain d = dirichlet_domain(l, {1, 1, 1, 1}, p14_generators(), 2, true);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::vector<IntVec> want = V({{-1, 1, 1, 1},
                                      {0, 0, 0, 1},
                                      {0, 0, 1, 0},
                                      {0, 1, 0, 0},
                                      {1, -1, 1, 1},
                                      {1, 0, 0, 0},
                                      {1, 1, -1, 1},
                                      {1, 1, 1, -1}});
        bool ok = d.cone.rays() == want && d.rays_outside_positive.empty() && secs < 60.0;
        std::ostringstream note;
        note << d.cone.rays().size() << " rays in " << secs << " s";
        criterion(9, "Dirichlet domain D(x, G(2)) equals V within 60 s", ok, note.str());
    });

    // 10. lifting checklist
    guarded(10, "lifting conditions for the covering-domain cases", [] {
        bool ok = true;
        std::string note;
        for (const char* name : {"p3xp3", "f134", "bilinear-p3p3", "p1^4"}) {
            Scenario s = builtin_scenario(name);
            auto checks = verify_lifting_conditions(s);
            bool saw_b = false, saw_c = false, saw_d = false;
            for (const auto& c : checks) {
                if (c.status != CheckStatus::Pass) {
                    ok = false;
                    note += std::string(name) + ":" + c.id + " ";
                }
                if (c.id.rfind("lift.b", 0) == 0) saw_b = true;
                if (c.id.rfind("lift.c", 0) == 0) saw_c = true;
                if (c.id == "lift.d") saw_d = true;
            }
            ok = ok && saw_b && saw_c && saw_d;
        }
        criterion(10, "lifting conditions for the covering-domain cases", ok, note);
    });

    // 11. randomized property suites
    guarded(11, "property suites (500 cones, 500 classes, sampled coverage)", [] {
        bool ok = true;
        std::mt19937_64 rng(2026);

        // double-description roundtrip and dual-dual identity on 500 cones
        int built = 0;
        while (built < 500) {
            std::size_t dim = 2 + static_cast<std::size_t>(built) % 4; // 2..5
            std::size_t count = 2 + static_cast<std::size_t>(built) % 5;
            std::vector<IntVec> gens;
            for (std::size_t i = 0; i < count; ++i) {
                IntVec v(dim);
                for (auto& x : v) x = std::uniform_int_distribution<int>(-3, 3)(rng);
                if (!is_zero(v)) gens.push_back(v);
            }
            if (gens.empty()) continue;
            ++built;
            Cone c = Cone::from_rays(gens, dim);
            Cone back = Cone::from_facets(c.facets(), dim);
            ok = ok && back == c && back.facets() == c.facets();
            RatMat id = RatMat::identity(dim);
            ok = ok && c.dual(id).dual(id) == c;
        }

        // ring laws and reduction idempotence on 500 classes
        {
            Scenario s = builtin_scenario("p3xp3");
            ChowRingPtr r = ring_of(s);
            std::uniform_int_distribution<int> coeff(-4, 4);
            std::uniform_int_distribution<unsigned> expo(0, 4);
            auto random_class = [&] {
                std::map<Exponents, Int> t;
                for (int k = 0; k < 3; ++k) t[{expo(rng), expo(rng)}] = coeff(rng);
                return ChowClass(r, std::move(t));
            };
            for (int t = 0; t < 500; ++t) {
                ChowClass a = random_class(), b = random_class(), c2 = random_class();
                ok = ok && a * b == b * a && (a * b) * c2 == a * (b * c2) &&
                     a * (b + c2) == a * b + a * c2 && ChowClass(r, a.terms()) == a;
            }
        }

        // isometry form preservation on random vectors
        {
            IntLattice l(p14_gram());
            for (int t = 0; t < 500; ++t) {
                IntVec v(4);
                for (auto& x : v) x = std::uniform_int_distribution<int>(-9, 9)(rng);
                for (const IntMat* iso : {&M132_MAT, &H12_MAT})
                    ok = ok && l.eval_form(iso->apply(v), iso->apply(v)) == l.eval_form(v, v);
            }
        }

        // covers() against 1000-sample membership on every builtin coverage instance
        for (const char* name : {"rank1", "p3xp3", "f134", "bilinear-p3p3", "p1^4"}) {
            Scenario s = builtin_scenario(name);
            RatMat q = to_rat(s.quotient->matrix);
            std::vector<Cone> pieces;
            for (const auto& model : s.sqms)
                pieces.push_back(
                    Cone::from_rays(model.nef_rays, s.n1->labels.size()).quotient_image(q));
            Cone target =
                Cone::from_rays(s.expected.covering->target_rays, s.quotient->matrix.rows());
            ok = ok && covers(target, pieces).covered;
            std::uniform_int_distribution<int> coeff(0, 7);
            for (int t = 0; t < 1000; ++t) {
                IntVec p(target.ambient_dim(), Int(0));
                for (const auto& r : target.rays()) p = add(p, scale(Int(coeff(rng)), r));
                bool inside = false;
                for (const auto& piece : pieces)
                    if (piece.member(p)) inside = true;
                ok = ok && inside;
            }
        }
        criterion(11, "property suites (500 cones, 500 classes, sampled coverage)", ok);
    });

    std::printf("%s (%d failure%s)\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                failures, failures == 1 ? "" : "s");
    return failures;
}
