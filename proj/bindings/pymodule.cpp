// Python bindings for the main operations. Integers cross the boundary as
// python ints (arbitrary precision, via decimal strings), rationals as
// fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "k3cone/chow.hpp"
#include "k3cone/cone.hpp"
#include "k3cone/lattice.hpp"
#include "k3cone/linalg.hpp"
#include "k3cone/quadsurd.hpp"
#include "k3cone/scenario.hpp"
#include "k3cone/words.hpp"

namespace py = pybind11;
using namespace k3cone;

namespace {

py::int_ to_py(const Int& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

Int int_from_py(const py::handle& h) {
    return Int(py::str(h).cast<std::string>());
}

py::object to_py(const Rat& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(q.get_num()), to_py(q.get_den()));
}

py::list to_py(const IntVec& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

py::list to_py(const IntMat& m) {
    py::list out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py(m(i, j)));
        out.append(row);
    }
    return out;
}

py::list to_py(const RatMat& m) {
    py::list out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py(m(i, j)));
        out.append(row);
    }
    return out;
}

py::list to_py(const std::vector<IntVec>& vs) {
    py::list out;
    for (const auto& v : vs) out.append(to_py(v));
    return out;
}

IntVec vec_from_py(const py::sequence& seq) {
    IntVec v;
    for (const auto& x : seq) v.push_back(int_from_py(x));
    return v;
}

std::vector<IntVec> vecs_from_py(const py::sequence& seq) {
    std::vector<IntVec> out;
    for (const auto& r : seq) out.push_back(vec_from_py(r.cast<py::sequence>()));
    return out;
}

IntMat mat_from_py(const py::sequence& seq) {
    auto rows = vecs_from_py(seq);
    if (rows.empty()) throw DimensionError("empty matrix");
    IntMat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw DimensionError("ragged matrix");
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<LabeledMatrix> gens_from_py(const py::sequence& seq) {
    std::vector<LabeledMatrix> gens;
    for (const auto& item : seq) {
        auto pair = item.cast<py::sequence>();
        gens.push_back({pair[0].cast<std::string>(), mat_from_py(pair[1].cast<py::sequence>())});
    }
    return gens;
}

py::object surd_to_py(const QuadSurd& s) {
    return py::make_tuple(to_py(s.rational_part()), to_py(s.surd_part()), to_py(s.radicand()));
}

py::dict report_to_py(const Report& r) {
    py::dict out;
    out["scenario"] = r.scenario;
    py::list checks;
    for (const auto& c : r.checks) {
        py::dict d;
        d["id"] = c.id;
        d["status"] = to_string(c.status);
        d["details"] = c.details;
        checks.append(d);
    }
    out["checks"] = checks;
    out["overall"] = r.overall_pass() ? "pass" : "fail";
    return out;
}

py::dict cone_to_py(const Cone& c) {
    py::dict d;
    d["ambient_dim"] = c.ambient_dim();
    d["rays"] = to_py(c.rays());
    d["lineality"] = to_py(c.lineality());
    d["facets"] = to_py(c.facets());
    return d;
}

// pybind11 holders must be non-const; hand out a handle instead.
struct RingHandle {
    ChowRingPtr ptr;
};

} // namespace

PYBIND11_MODULE(k3cone, m) {
    m.doc() = "exact lattice, cone and Chow-ring computations";

    py::register_exception<Error>(m, "K3ConeError");

    // exact linear algebra
    m.def("snf", [](const py::sequence& a) {
        SmithForm f = snf(mat_from_py(a));
        py::dict d;
        d["diag"] = to_py(f.diag);
        d["left"] = to_py(f.left);
        d["right"] = to_py(f.right);
        return d;
    });
    m.def("char_poly", [](const py::sequence& a) { return to_py(char_poly(mat_from_py(a))); });
    m.def("det", [](const py::sequence& a) { return to_py(det(mat_from_py(a))); });
    m.def("inverse", [](const py::sequence& a) { return to_py(inverse(mat_from_py(a))); });

    // lattices
    py::class_<IntLattice>(m, "Lattice")
        .def(py::init([](const py::sequence& gram) { return IntLattice(mat_from_py(gram)); }))
        .def_property_readonly("rank", &IntLattice::rank)
        .def_property_readonly("even", &IntLattice::is_even)
        .def("eval_form",
             [](const IntLattice& l, const py::sequence& x, const py::sequence& y) {
                 return to_py(l.eval_form(vec_from_py(x), vec_from_py(y)));
             })
        .def("is_isometry",
             [](const IntLattice& l, const py::sequence& mat) {
                 return l.is_isometry(mat_from_py(mat));
             })
        .def("discriminant_group",
             [](const IntLattice& l) {
                 DiscGroup g = discriminant_group(l);
                 py::dict d;
                 d["factors"] = to_py(g.factors);
                 d["order"] = to_py(g.order);
                 py::list gens;
                 for (const auto& gen : g.generators) {
                     py::list row;
                     for (const auto& q : gen) row.append(to_py(q));
                     gens.append(row);
                 }
                 d["generators"] = gens;
                 return d;
             })
        .def("disc_action",
             [](const IntLattice& l, const py::sequence& mat) {
                 return to_string(disc_action(l, mat_from_py(mat)).kind);
             })
        .def("find_norm_vectors",
             [](const IntLattice& l, long norm, long bound) {
                 return to_py(find_norm_vectors(l, Int(norm), bound));
             })
        .def("certify_no_norm",
             [](const IntLattice& l, long norm, long max_modulus) -> py::object {
                 auto r = certify_no_norm(l, Int(norm), max_modulus);
                 if (!r) return py::none();
                 return py::int_(*r);
             })
        .def("positive_cone_boundary",
             [](const IntLattice& l) {
                 auto [lo, hi] = positive_cone_boundary(l);
                 return py::make_tuple(surd_to_py(lo), surd_to_py(hi));
             })
        .def("translation_isometry",
             [](const IntLattice& l, const py::sequence& f, const py::sequence& y) {
                 return to_py(translation_isometry(l, vec_from_py(f), vec_from_py(y)));
             })
        .def("torelli_check",
             [](const IntLattice& l, const py::sequence& mat, const py::sequence& nodal) {
                 TorelliVerdict v = torelli_check(l, mat_from_py(mat), vecs_from_py(nodal));
                 py::dict d;
                 d["kind"] = to_string(v.kind);
                 d["disc"] = to_string(v.disc);
                 d["power"] = v.power ? py::object(py::int_(*v.power)) : py::object(py::none());
                 d["reason"] = v.reason;
                 return d;
             });

    m.def("element_order", [](const py::sequence& mat) -> py::object {
        auto r = element_order(mat_from_py(mat));
        if (!r) return py::none();
        return py::int_(*r);
    });

    // cones
    py::class_<Cone>(m, "Cone")
        .def_static("from_rays",
                    [](const py::sequence& rays, std::size_t dim) {
                        return Cone::from_rays(vecs_from_py(rays), dim);
                    })
        .def_static("from_facets",
                    [](const py::sequence& facets, std::size_t dim) {
                        return Cone::from_facets(vecs_from_py(facets), dim);
                    })
        .def_property_readonly("ambient_dim", &Cone::ambient_dim)
        .def_property_readonly("rays", [](const Cone& c) { return to_py(c.rays()); })
        .def_property_readonly("lineality", [](const Cone& c) { return to_py(c.lineality()); })
        .def_property_readonly("facets", [](const Cone& c) { return to_py(c.facets()); })
        .def("dim", &Cone::dim)
        .def("is_pointed", &Cone::is_pointed)
        .def("is_improper", &Cone::is_improper)
        .def("member", [](const Cone& c, const py::sequence& v) { return c.member(vec_from_py(v)); })
        .def("contains_cone", &Cone::contains_cone)
        .def("__eq__", [](const Cone& a, const Cone& b) { return a == b; })
        .def("dual",
             [](const Cone& c, const py::sequence& pairing) {
                 return c.dual(to_rat(mat_from_py(pairing)));
             })
        .def("quotient_image",
             [](const Cone& c, const py::sequence& mat) {
                 return c.quotient_image(to_rat(mat_from_py(mat)));
             })
        .def("as_dict", [](const Cone& c) { return cone_to_py(c); });

    m.def("covers", [](const Cone& target, const std::vector<Cone>& pieces) {
        CoverageVerdict v = covers(target, pieces);
        py::dict d;
        d["covered"] = v.covered;
        d["witness"] = v.witness ? py::object(to_py(*v.witness)) : py::object(py::none());
        return d;
    });

    // words and Dirichlet domains
    m.def(
        "enumerate_words",
        [](const py::sequence& gens, unsigned k, bool inverses) {
            WordSet w = enumerate_words(gens_from_py(gens), k, inverses);
            py::list out;
            for (std::size_t i = 0; i < w.matrices.size(); ++i)
                out.append(py::make_tuple(w.words[i], to_py(w.matrices[i])));
            return out;
        },
        py::arg("generators"), py::arg("k"), py::arg("include_inverses") = true);
    m.def(
        "dirichlet_domain",
        [](const IntLattice& l, const py::sequence& x, const py::sequence& gens, unsigned k,
           bool inverses) {
            DirichletDomain d = dirichlet_domain(l, vec_from_py(x), gens_from_py(gens), k, inverses);
            py::dict out;
            out["cone"] = cone_to_py(d.cone);
            out["improper"] = d.improper;
            out["rays_outside_positive"] = to_py(d.rays_outside_positive);
            return out;
        },
        py::arg("lattice"), py::arg("x"), py::arg("generators"), py::arg("k"),
        py::arg("include_inverses") = true);

    // Chow rings
    py::class_<RingHandle>(m, "ChowRing")
        .def(py::init([](const std::vector<std::string>& vars, unsigned dim,
                         const py::sequence& relations, const py::sequence& valuation) {
            std::vector<Exponents> rels;
            for (const auto& r : relations) {
                Exponents e;
                for (const auto& x : r.cast<py::sequence>()) e.push_back(x.cast<unsigned>());
                rels.push_back(std::move(e));
            }
            std::map<Exponents, Int> val;
            for (const auto& item : valuation) {
                auto pair = item.cast<py::sequence>();
                Exponents e;
                for (const auto& x : pair[0].cast<py::sequence>()) e.push_back(x.cast<unsigned>());
                val[e] = int_from_py(pair[1]);
            }
            return RingHandle{std::make_shared<const ChowRing>(vars, dim, std::move(rels),
                                                               std::move(val))};
        }))
        .def_property_readonly("variables",
                               [](const RingHandle& r) { return r.ptr->variables(); })
        .def_property_readonly("dim", [](const RingHandle& r) { return r.ptr->dim(); });

    m.def("parse_class", [](const std::string& text, const RingHandle& ring) {
        return parse_class(text, ring.ptr).str();
    });
    m.def("top_value", [](const std::string& text, const RingHandle& ring) {
        return to_py(top_value(parse_class(text, ring.ptr)));
    });
    m.def("fiber_gram", [](const RingHandle& ring, const std::string& h) {
        std::vector<ChowClass> basis;
        for (std::size_t i = 0; i < ring.ptr->variables().size(); ++i)
            basis.push_back(ChowClass::variable(ring.ptr, i));
        return to_py(fiber_gram(basis, parse_class(h, ring.ptr)));
    });
    m.def("base_curve_class", [](const RingHandle& ring, const std::string& h) {
        return base_curve_class(parse_class(h, ring.ptr)).str();
    });
    m.def("curve_genus", [](const RingHandle& ring, const std::string& h) {
        return to_py(curve_genus(parse_class(h, ring.ptr)));
    });

    // scenarios
    m.def("builtin_names", [] { return builtin_names(); });
    m.def("run_builtin", [](const std::string& name) { return report_to_py(run_builtin(name)); });
    m.def("verify_file", [](const std::string& path) {
        return report_to_py(run_scenario(load_scenario_file(path)));
    });
}
