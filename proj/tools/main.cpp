// Command-line front end: exact lattice, cone, Chow-ring and covering-domain
// computations plus the builtin verification corpus.
//
// Exit codes: 0 success / overall pass, 1 failed verification check,
// 2 usage or input errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "k3cone/chow.hpp"
#include "k3cone/cone.hpp"
#include "k3cone/lattice.hpp"
#include "k3cone/scenario.hpp"
#include "k3cone/words.hpp"

using namespace k3cone;
using nlohmann::json;

namespace {

json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw Error(what + ": " + e.what());
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

IntVec vec_of(const json& j, const std::string& what) {
    if (!j.is_array()) throw Error(what + ": expected an integer array");
    IntVec v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw Error(what + ": expected integer entries");
        v.push_back(Int(x.get<long>()));
    }
    return v;
}

IntVec parse_vec(const std::string& text, const std::string& what) {
    return vec_of(parse_json_text(text, what), what);
}

std::vector<IntVec> vecs_of(const json& j, const std::string& what) {
    if (!j.is_array()) throw Error(what + ": expected an array of integer vectors");
    std::vector<IntVec> out;
    for (const auto& r : j) out.push_back(vec_of(r, what));
    return out;
}

std::vector<IntVec> parse_vecs(const std::string& text, const std::string& what) {
    return vecs_of(parse_json_text(text, what), what);
}

IntMat mat_of(const json& j, const std::string& what) {
    auto rows = vecs_of(j, what);
    if (rows.empty()) throw Error(what + ": expected a nonempty matrix");
    IntMat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw Error(what + ": ragged matrix");
        for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = rows[i][c];
    }
    return m;
}

IntMat parse_mat(const std::string& text, const std::string& what) {
    return mat_of(parse_json_text(text, what), what);
}

// {"ambient_dim": n, "rays": [...]} or {"ambient_dim": n, "facets": [...]}
Cone cone_of_json(const json& j, const std::string& what) {
    if (!j.is_object()) throw Error(what + ": expected a cone object");
    if (!j.contains("ambient_dim")) throw Error(what + ": missing ambient_dim");
    auto dim = j["ambient_dim"].get<long>();
    if (dim < 1) throw Error(what + ": ambient_dim must be >= 1");
    bool has_rays = j.contains("rays"), has_facets = j.contains("facets");
    if (has_rays == has_facets) throw Error(what + ": give exactly one of rays/facets");
    if (has_rays)
        return Cone::from_rays(vecs_of(j["rays"], what + ".rays"), static_cast<std::size_t>(dim));
    return Cone::from_facets(vecs_of(j["facets"], what + ".facets"), static_cast<std::size_t>(dim));
}

void print_cone(const Cone& c) {
    std::cout << "ambient_dim: " << c.ambient_dim() << "\n";
    std::cout << "rays:";
    for (const auto& r : c.rays()) std::cout << " " << to_string(r);
    std::cout << "\n";
    if (!c.lineality().empty()) {
        std::cout << "lineality:";
        for (const auto& b : c.lineality()) std::cout << " " << to_string(b);
        std::cout << "\n";
    }
    std::cout << "facets:";
    for (const auto& f : c.facets()) std::cout << " " << to_string(f);
    std::cout << "\n";
}

// Flags describing one cone input (inline rays/facets need --dim).
struct ConeInput {
    std::string rays, facets, file;
    long dim = 0;

    void attach(CLI::App* cmd, const std::string& prefix = "") {
        std::string p = prefix.empty() ? "--" : "--" + prefix + "-";
        cmd->add_option(p + "rays", rays, "inline generator list [[..],..]");
        cmd->add_option(p + "facets", facets, "inline inequality list [[..],..]");
        cmd->add_option(p + "file", file, "cone JSON file");
        if (prefix.empty()) cmd->add_option("--dim", dim, "ambient dimension for inline input");
    }

    Cone build(long shared_dim) const {
        int given = (!rays.empty()) + (!facets.empty()) + (!file.empty());
        if (given != 1) throw Error("give exactly one of rays/facets/file for each cone");
        if (!file.empty()) return cone_of_json(load_json_file(file), file);
        if (shared_dim < 1) throw Error("--dim is required with inline cone input");
        auto d = static_cast<std::size_t>(shared_dim);
        if (!rays.empty()) return Cone::from_rays(parse_vecs(rays, "--rays"), d);
        return Cone::from_facets(parse_vecs(facets, "--facets"), d);
    }
};

ChowRingPtr ring_from_json(const json& j, std::string* h_expr) {
    if (!j.is_object()) throw Error("ring file: expected an object");
    for (const auto& [key, value] : j.items())
        if (key != "vars" && key != "dim" && key != "relations" && key != "valuation" && key != "H")
            throw Error("ring file: unknown key '" + key + "'");
    std::vector<std::string> vars;
    for (const auto& v : j.at("vars")) vars.push_back(v.get<std::string>());
    unsigned dim = j.at("dim").get<unsigned>();
    std::vector<Exponents> relations;
    if (j.contains("relations"))
        for (const auto& r : j["relations"]) {
            Exponents e;
            for (const auto& x : r) e.push_back(x.get<unsigned>());
            relations.push_back(std::move(e));
        }
    std::map<Exponents, Int> valuation;
    if (j.contains("valuation"))
        for (const auto& entry : j["valuation"]) {
            Exponents e;
            for (const auto& x : entry.at("monomial")) e.push_back(x.get<unsigned>());
            valuation[e] = Int(entry.at("value").get<long>());
        }
    if (h_expr && j.contains("H")) *h_expr = j["H"].get<std::string>();
    return std::make_shared<const ChowRing>(std::move(vars), dim, std::move(relations),
                                            std::move(valuation));
}

std::vector<LabeledMatrix> generators_from_file(const std::string& path) {
    json j = load_json_file(path);
    if (!j.is_array()) throw Error(path + ": expected an array of {label, matrix}");
    std::vector<LabeledMatrix> gens;
    for (const auto& g : j)
        gens.push_back({g.at("label").get<std::string>(), mat_of(g.at("matrix"), path)});
    return gens;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice, cone and Chow-ring computations with a builtin "
                 "verification corpus"};
    app.require_subcommand(1);

    // ---- chow ----
    auto* chow = app.add_subcommand("chow", "graded quotient ring computations");
    chow->require_subcommand(1);
    std::string ring_path, expr, h_override;
    for (const char* name : {"eval", "gram", "curve", "genus"}) {
        auto* sub = chow->add_subcommand(name);
        sub->add_option("--ring", ring_path, "ring JSON file")->required();
        if (std::string(name) == "eval")
            sub->add_option("--expr", expr, "class expression")->required();
        else
            sub->add_option("--H", h_override, "polarization expression (overrides the file)");
    }

    // ---- lattice ----
    auto* lattice = app.add_subcommand("lattice", "integer lattices with bilinear forms");
    lattice->require_subcommand(1);
    std::string gram_text, matrix_text, x_text, y_text, f_text, nodal_text, action_text;
    long bound = 10;
    std::optional<long> certify_max;
    auto* l_form = lattice->add_subcommand("form", "evaluate the bilinear form");
    l_form->add_option("--gram", gram_text)->required();
    l_form->add_option("--x", x_text)->required();
    l_form->add_option("--y", y_text)->required();
    auto* l_disc = lattice->add_subcommand("disc", "discriminant group (and an isometry's action)");
    l_disc->add_option("--gram", gram_text)->required();
    l_disc->add_option("--action", action_text, "isometry whose discriminant action to classify");
    auto* l_iso = lattice->add_subcommand("isometry", "test M^T.G.M = G");
    l_iso->add_option("--gram", gram_text)->required();
    l_iso->add_option("--matrix", matrix_text)->required();
    auto* l_order = lattice->add_subcommand("order", "finite or infinite order of a unimodular matrix");
    l_order->add_option("--matrix", matrix_text)->required();
    auto* l_m2 = lattice->add_subcommand("minus-two", "(-2)-classes in a box, with optional certificate");
    l_m2->add_option("--gram", gram_text)->required();
    l_m2->add_option("--bound", bound, "coordinate box bound")->required();
    l_m2->add_option("--certify", certify_max, "largest modulus to try for a certificate");
    auto* l_bd = lattice->add_subcommand("boundary", "isotropic slopes of an indefinite rank-2 form");
    l_bd->add_option("--gram", gram_text)->required();
    auto* l_tr = lattice->add_subcommand("translation", "translation isometry from an isotropic class");
    l_tr->add_option("--gram", gram_text)->required();
    l_tr->add_option("--f", f_text)->required();
    l_tr->add_option("--y", y_text)->required();
    auto* l_to = lattice->add_subcommand("torelli", "automorphism criterion for an isometry");
    l_to->add_option("--gram", gram_text)->required();
    l_to->add_option("--matrix", matrix_text)->required();
    l_to->add_option("--nodal", nodal_text, "nodal classes [[..],..]");

    // ---- cone ----
    auto* cone = app.add_subcommand("cone", "rational polyhedral cone calculus");
    cone->require_subcommand(1);
    ConeInput cone_in, cone_b;
    std::string point_text, pairing_text, qmatrix_text, pieces_path;
    auto* c_rays = cone->add_subcommand("rays", "extreme rays from inequalities");
    cone_in.attach(c_rays);
    auto* c_facets = cone->add_subcommand("facets", "facet inequalities from generators");
    cone_in.attach(c_facets);
    auto* c_member = cone->add_subcommand("member", "point membership");
    cone_in.attach(c_member);
    c_member->add_option("--point", point_text)->required();
    auto* c_dual = cone->add_subcommand("dual", "dual cone under a pairing");
    cone_in.attach(c_dual);
    c_dual->add_option("--pairing", pairing_text)->required();
    auto* c_equal = cone->add_subcommand("equal", "equality of two cones");
    cone_in.attach(c_equal, "a");
    cone_b.attach(c_equal, "b");
    c_equal->add_option("--dim", cone_in.dim, "ambient dimension for inline input");
    auto* c_quot = cone->add_subcommand("quotient", "image under a full-row-rank map");
    cone_in.attach(c_quot);
    c_quot->add_option("--matrix", qmatrix_text)->required();
    auto* c_cover = cone->add_subcommand("cover", "exact coverage by a union of cones");
    cone_in.attach(c_cover);
    c_cover->add_option("--pieces-file", pieces_path, "JSON array of cone objects")->required();

    // ---- domain ----
    auto* domain = app.add_subcommand("domain", "group words and Dirichlet domains");
    domain->require_subcommand(1);
    std::string gens_path;
    long word_len = 1;
    bool no_inverses = false;
    auto* d_words = domain->add_subcommand("words", "Cayley ball of a matrix group");
    auto* d_half = domain->add_subcommand("halfspaces", "Dirichlet halfspace normals");
    auto* d_comp = domain->add_subcommand("compute", "Dirichlet domain cone");
    for (auto* sub : {d_words, d_half, d_comp}) {
        sub->add_option("--generators", gens_path, "JSON array of {label, matrix}")->required();
        sub->add_option("--k", word_len, "maximal word length")->required();
        sub->add_flag("--no-inverses", no_inverses, "do not add generator inverses");
    }
    for (auto* sub : {d_half, d_comp}) {
        sub->add_option("--gram", gram_text)->required();
        sub->add_option("--x", x_text, "interior base point")->required();
    }

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run a scenario's verification checklist");
    std::string builtin, scenario_file, format = "text", section;
    bool list_builtins = false;
    verify->add_option("file", scenario_file, "scenario JSON file");
    verify->add_option("--builtin", builtin, "builtin scenario name");
    verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--section", section, "only run checks whose id starts with this prefix");
    verify->add_flag("--list", list_builtins, "list builtin scenario names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (chow->parsed()) {
            std::string h_expr;
            ChowRingPtr ring = ring_from_json(load_json_file(ring_path), &h_expr);
            if (!h_override.empty()) h_expr = h_override;
            auto polarization = [&] {
                if (h_expr.empty()) throw Error("no H expression: give --H or an \"H\" key");
                return parse_class(h_expr, ring);
            };
            if (chow->get_subcommand("eval")->parsed()) {
                std::cout << parse_class(expr, ring).str() << "\n";
            } else if (chow->get_subcommand("gram")->parsed()) {
                std::vector<ChowClass> basis;
                for (std::size_t i = 0; i < ring->variables().size(); ++i)
                    basis.push_back(ChowClass::variable(ring, i));
                std::cout << to_string(fiber_gram(basis, polarization())) << "\n";
            } else if (chow->get_subcommand("curve")->parsed()) {
                std::cout << base_curve_class(polarization()).str() << "\n";
            } else {
                std::cout << curve_genus(polarization()).get_str() << "\n";
            }
        } else if (lattice->parsed()) {
            if (l_order->parsed()) {
                auto k = element_order(parse_mat(matrix_text, "--matrix"));
                std::cout << (k ? "finite of order " + std::to_string(*k) : "infinite") << "\n";
                return 0;
            }
            IntLattice lat(parse_mat(gram_text, "--gram"));
            if (l_form->parsed()) {
                std::cout << lat.eval_form(parse_vec(x_text, "--x"), parse_vec(y_text, "--y")).get_str()
                          << "\n";
            } else if (l_disc->parsed()) {
                DiscGroup g = discriminant_group(lat);
                std::cout << "factors: " << to_string(g.factors) << "\n";
                std::cout << "order: " << g.order.get_str() << "\n";
                for (const auto& gen : g.generators) {
                    std::cout << "generator:";
                    for (const auto& q : gen) std::cout << " " << to_string(q);
                    std::cout << "\n";
                }
                if (!action_text.empty()) {
                    DiscActionResult a = disc_action(lat, parse_mat(action_text, "--action"));
                    std::cout << "action: " << to_string(a.kind) << "\n";
                }
            } else if (l_iso->parsed()) {
                std::cout << (lat.is_isometry(parse_mat(matrix_text, "--matrix")) ? "true" : "false")
                          << "\n";
            } else if (l_m2->parsed()) {
                auto sols = find_norm_vectors(lat, Int(-2), bound);
                if (sols.empty()) std::cout << "no solutions";
                else {
                    std::cout << "solutions:";
                    for (const auto& v : sols) std::cout << " " << to_string(v);
                }
                if (certify_max) {
                    auto m = certify_no_norm(lat, Int(-2), *certify_max);
                    if (m) std::cout << "; certificate mod " << *m;
                    else std::cout << "; no certificate up to " << *certify_max;
                }
                std::cout << "\n";
            } else if (l_bd->parsed()) {
                auto [lo, hi] = positive_cone_boundary(lat);
                std::cout << "slopes: " << lo.str() << " and " << hi.str() << "\n";
            } else if (l_tr->parsed()) {
                std::cout << to_string(translation_isometry(lat, parse_vec(f_text, "--f"),
                                                            parse_vec(y_text, "--y")))
                          << "\n";
            } else if (l_to->parsed()) {
                std::vector<IntVec> nodal;
                if (!nodal_text.empty()) nodal = parse_vecs(nodal_text, "--nodal");
                TorelliVerdict v = torelli_check(lat, parse_mat(matrix_text, "--matrix"), nodal);
                std::cout << to_string(v.kind) << " (disc action " << to_string(v.disc) << ")";
                if (v.power) std::cout << " power " << *v.power;
                if (!v.reason.empty()) std::cout << ": " << v.reason;
                std::cout << "\n";
            }
        } else if (cone->parsed()) {
            if (c_rays->parsed() || c_facets->parsed()) {
                print_cone(cone_in.build(cone_in.dim));
            } else if (c_member->parsed()) {
                Cone c = cone_in.build(cone_in.dim);
                std::cout << (c.member(parse_vec(point_text, "--point")) ? "true" : "false") << "\n";
            } else if (c_dual->parsed()) {
                Cone c = cone_in.build(cone_in.dim);
                print_cone(c.dual(to_rat(parse_mat(pairing_text, "--pairing"))));
            } else if (c_equal->parsed()) {
                Cone a = cone_in.build(cone_in.dim);
                Cone b = cone_b.build(cone_in.dim);
                std::cout << (a == b ? "true" : "false") << "\n";
            } else if (c_quot->parsed()) {
                Cone c = cone_in.build(cone_in.dim);
                print_cone(c.quotient_image(to_rat(parse_mat(qmatrix_text, "--matrix"))));
            } else if (c_cover->parsed()) {
                Cone target = cone_in.build(cone_in.dim);
                json pj = load_json_file(pieces_path);
                if (!pj.is_array()) throw Error(pieces_path + ": expected an array of cones");
                std::vector<Cone> pieces;
                for (std::size_t i = 0; i < pj.size(); ++i)
                    pieces.push_back(cone_of_json(pj[i], pieces_path + "[" + std::to_string(i) + "]"));
                CoverageVerdict v = covers(target, pieces);
                if (v.covered) std::cout << "covered\n";
                else std::cout << "not covered; witness " << to_string(*v.witness) << "\n";
            }
        } else if (domain->parsed()) {
            auto gens = generators_from_file(gens_path);
            if (d_words->parsed()) {
                WordSet w = enumerate_words(gens, static_cast<unsigned>(word_len), !no_inverses);
                std::cout << w.matrices.size() << " elements\n";
                for (std::size_t i = 0; i < w.matrices.size(); ++i)
                    std::cout << w.words[i] << ": " << to_string(w.matrices[i]) << "\n";
            } else {
                IntLattice lat(parse_mat(gram_text, "--gram"));
                IntVec x = parse_vec(x_text, "--x");
                WordSet w = enumerate_words(gens, static_cast<unsigned>(word_len), !no_inverses);
                if (d_half->parsed()) {
                    for (const auto& n : dirichlet_halfspaces(lat, x, w))
                        std::cout << to_string(n) << "\n";
                } else {
                    auto normals = dirichlet_halfspaces(lat, x, w);
                    Cone dom = Cone::from_facets(normals, lat.rank());
                    if (normals.empty()) std::cout << "improper domain (no constraints)\n";
                    print_cone(dom);
                    std::vector<IntVec> outside;
                    for (const auto& r : dom.rays())
                        if (lat.norm(r) < 0) outside.push_back(r);
                    if (!outside.empty()) {
                        std::cout << "rays outside the positive cone:";
                        for (const auto& r : outside) std::cout << " " << to_string(r);
                        std::cout << "\n";
                    }
                }
            }
        } else if (verify->parsed()) {
            if (list_builtins) {
                for (const auto& n : builtin_names()) std::cout << n << "\n";
                return 0;
            }
            if (builtin.empty() == scenario_file.empty())
                throw Error("give exactly one of --builtin NAME or a scenario file");
            Scenario s = builtin.empty() ? load_scenario_file(scenario_file)
                                         : builtin_scenario(builtin);
            Report r = run_scenario(s);
            if (!section.empty()) {
                std::vector<CheckRecord> kept;
                for (const auto& c : r.checks)
                    if (c.id.rfind(section, 0) == 0) kept.push_back(c);
                r.checks = std::move(kept);
            }
            std::cout << (format == "json" ? r.to_json() + "\n" : r.to_text());
            return r.overall_pass() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
