#include "k3cone/scenario.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace k3cone {

using nlohmann::json;

// -- scenario helpers -------------------------------------------------------

ChowRingPtr Scenario::make_ring() const {
    if (!chow) throw DomainError("scenario '" + name + "' has no chow data");
    return std::make_shared<const ChowRing>(chow->vars, chow->dim, chow->relations,
                                            chow->valuation);
}

IntLattice Scenario::make_lattice() const {
    if (fiber_gram) return IntLattice(*fiber_gram);
    if (chow) {
        ChowRingPtr ring = make_ring();
        std::vector<ChowClass> basis;
        for (std::size_t i = 0; i < chow->vars.size(); ++i)
            basis.push_back(ChowClass::variable(ring, i));
        return IntLattice(k3cone::fiber_gram(basis, parse_class(chow->h_expr, ring)));
    }
    throw DomainError("scenario '" + name + "' has no fiber lattice data");
}

IntVec Scenario::anticanonical_vector() const {
    if (!n1) throw DomainError("scenario '" + name + "' has no n1 data");
    if (n1->anticanonical) return *n1->anticanonical;
    if (!chow) throw DomainError("scenario '" + name + "': anticanonical needs chow data");
    if (n1->labels.size() != chow->vars.size() + 1)
        throw DomainError("scenario '" + name + "': cannot derive anticanonical (basis mismatch)");
    ChowRingPtr ring = make_ring();
    ChowClass h = parse_class(chow->h_expr, ring);
    Int index = Int(chow->dim) - 2;
    IntVec v(n1->labels.size(), Int(0));
    for (const auto& [e, c] : h.terms()) {
        for (std::size_t i = 0; i < chow->vars.size(); ++i)
            if (e[i] == 1) v[i] = index * c;
    }
    v.back() = index; // F carries coefficient -(n-2); coordinates are (a_i, c) for sum a_i L_i - c F
    return v;
}

const CurveData& Scenario::curve(const std::string& cname) const {
    if (!n1) throw DomainError("scenario '" + name + "' has no n1 data");
    for (const auto& c : n1->curves)
        if (c.name == cname) return c;
    throw DomainError("scenario '" + name + "': unknown curve '" + cname + "'");
}

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "flagged";
    }
}

bool Report::overall_pass() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::Fail) return false;
    return true;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "scenario: " << scenario << "\n";
    for (const auto& c : checks) {
        std::string tag = to_string(c.status);
        for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        os << tag;
        for (std::size_t i = tag.size(); i < 8; ++i) os << ' ';
        os << c.id;
        if (!c.details.empty()) os << "  -- " << c.details;
        os << "\n";
    }
    os << "overall: " << (overall_pass() ? "pass" : "fail") << "\n";
    return os.str();
}

std::string Report::to_json() const {
    json j;
    j["scenario"] = scenario;
    j["checks"] = json::array();
    for (const auto& c : checks)
        j["checks"].push_back({{"id", c.id}, {"status", to_string(c.status)}, {"details", c.details}});
    j["overall"] = overall_pass() ? "pass" : "fail";
    return j.dump(2);
}

// -- JSON loading -----------------------------------------------------------

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw SchemaError(path + ": " + msg, path);
}

void check_keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) fail(path, "expected an object");
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) fail(path, "unknown key '" + key + "'");
    }
}

const json& require(const json& j, const char* key, const std::string& path) {
    if (!j.contains(key)) fail(path, std::string("missing key '") + key + "'");
    return j.at(key);
}

long get_long(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<long>();
}

Int get_int(const json& j, const std::string& path) { return Int(get_long(j, path)); }

bool get_bool(const json& j, const std::string& path) {
    if (!j.is_boolean()) fail(path, "expected a boolean");
    return j.get<bool>();
}

std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

Rat get_rat(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) {
        try {
            Rat q;
            q.set_str(j.get<std::string>(), 10);
            q.canonicalize();
            return q;
        } catch (const std::invalid_argument&) {
            fail(path, "expected a rational like \"-3/2\"");
        }
    }
    fail(path, "expected an integer or a rational string");
}

IntVec get_vec(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of integers");
    IntVec v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(get_int(j[i], path + "[" + std::to_string(i) + "]"));
    return v;
}

std::vector<IntVec> get_vecs(const json& j, const std::string& path, std::size_t dim = 0) {
    if (!j.is_array()) fail(path, "expected an array of integer vectors");
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(get_vec(j[i], path + "[" + std::to_string(i) + "]"));
        if (dim && out.back().size() != dim)
            fail(path + "[" + std::to_string(i) + "]", "expected length " + std::to_string(dim));
    }
    return out;
}

IntMat get_mat(const json& j, const std::string& path) {
    auto rows = get_vecs(j, path);
    if (rows.empty()) fail(path, "expected a nonempty matrix");
    std::size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) fail(path, "ragged matrix");
    IntMat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = rows[i][c];
    return m;
}

Exponents get_exponents(const json& j, const std::string& path, std::size_t arity) {
    if (!j.is_array()) fail(path, "expected an exponent array");
    if (j.size() != arity) fail(path, "expected " + std::to_string(arity) + " exponents");
    Exponents e;
    for (std::size_t i = 0; i < j.size(); ++i) {
        long v = get_long(j[i], path + "[" + std::to_string(i) + "]");
        if (v < 0) fail(path + "[" + std::to_string(i) + "]", "exponents must be nonnegative");
        e.push_back(static_cast<unsigned>(v));
    }
    return e;
}

ChowData parse_chow(const json& j, const std::string& path) {
    check_keys(j, path, {"vars", "dim", "relations", "valuation", "H"});
    ChowData c;
    for (const auto& v : require(j, "vars", path))
        c.vars.push_back(get_string(v, path + ".vars"));
    long dim = get_long(require(j, "dim", path), path + ".dim");
    if (dim < 1) fail(path + ".dim", "dimension must be >= 1");
    c.dim = static_cast<unsigned>(dim);
    for (std::size_t i = 0; i < require(j, "relations", path).size(); ++i)
        c.relations.push_back(
            get_exponents(j["relations"][i], path + ".relations[" + std::to_string(i) + "]", c.vars.size()));
    const json& val = require(j, "valuation", path);
    for (std::size_t i = 0; i < val.size(); ++i) {
        std::string vp = path + ".valuation[" + std::to_string(i) + "]";
        check_keys(val[i], vp, {"monomial", "value"});
        Exponents mono = get_exponents(require(val[i], "monomial", vp), vp + ".monomial", c.vars.size());
        c.valuation[mono] = get_int(require(val[i], "value", vp), vp + ".value");
    }
    c.h_expr = get_string(require(j, "H", path), path + ".H");
    return c;
}

N1Data parse_n1(const json& j, const std::string& path) {
    check_keys(j, path, {"labels", "anticanonical", "curves"});
    N1Data n;
    for (const auto& l : require(j, "labels", path))
        n.labels.push_back(get_string(l, path + ".labels"));
    if (n.labels.empty()) fail(path + ".labels", "expected at least one label");
    if (j.contains("anticanonical")) {
        n.anticanonical = get_vec(j["anticanonical"], path + ".anticanonical");
        if (n.anticanonical->size() != n.labels.size())
            fail(path + ".anticanonical", "length must match labels");
    }
    const json& curves = require(j, "curves", path);
    for (std::size_t i = 0; i < curves.size(); ++i) {
        std::string cp = path + ".curves[" + std::to_string(i) + "]";
        check_keys(curves[i], cp, {"name", "pairing", "k_trivial"});
        CurveData c;
        c.name = get_string(require(curves[i], "name", cp), cp + ".name");
        c.pairing = get_vec(require(curves[i], "pairing", cp), cp + ".pairing");
        if (c.pairing.size() != n.labels.size()) fail(cp + ".pairing", "length must match labels");
        if (curves[i].contains("k_trivial"))
            c.k_trivial = get_bool(curves[i]["k_trivial"], cp + ".k_trivial");
        for (const auto& prev : n.curves)
            if (prev.name == c.name) fail(cp + ".name", "duplicate curve name '" + c.name + "'");
        n.curves.push_back(std::move(c));
    }
    return n;
}

MovExpectation parse_mov(const json& j, const std::string& path) {
    check_keys(j, path, {"mode", "inequalities", "rays", "tight", "witness"});
    MovExpectation m;
    std::string mode = get_string(require(j, "mode", path), path + ".mode");
    if (mode == "exact") m.exact = true;
    else if (mode == "upper_bound") m.exact = false;
    else fail(path + ".mode", "expected \"exact\" or \"upper_bound\"");
    m.inequalities = get_vecs(require(j, "inequalities", path), path + ".inequalities");
    if (m.inequalities.empty()) fail(path + ".inequalities", "expected at least one inequality");
    std::size_t dim = m.inequalities[0].size();
    m.rays = get_vecs(require(j, "rays", path), path + ".rays", dim);
    if (j.contains("tight")) {
        std::vector<std::vector<std::size_t>> tight;
        const json& t = j["tight"];
        if (!t.is_array() || t.size() != m.rays.size())
            fail(path + ".tight", "expected one index list per claimed ray");
        for (std::size_t i = 0; i < t.size(); ++i) {
            std::vector<std::size_t> idx;
            for (const auto& e : t[i]) {
                long v = get_long(e, path + ".tight[" + std::to_string(i) + "]");
                if (v < 0 || static_cast<std::size_t>(v) >= m.inequalities.size())
                    fail(path + ".tight[" + std::to_string(i) + "]", "inequality index out of range");
                idx.push_back(static_cast<std::size_t>(v));
            }
            tight.push_back(std::move(idx));
        }
        m.tight = std::move(tight);
    }
    if (j.contains("witness")) m.witness = get_vec(j["witness"], path + ".witness");
    return m;
}

Expected parse_expected(const json& j, const std::string& path) {
    check_keys(j, path,
               {"gram", "genus", "curve_class", "mov", "minus_two", "certificate",
                "certificate_max", "disc_factors", "boundary", "orders", "disc_action", "torelli",
                "spot", "translation", "word_count", "domain_rays", "covering"});
    Expected e;
    if (j.contains("gram")) e.gram = get_mat(j["gram"], path + ".gram");
    if (j.contains("genus")) e.genus = get_int(j["genus"], path + ".genus");
    if (j.contains("curve_class")) e.curve_class = get_string(j["curve_class"], path + ".curve_class");
    if (j.contains("mov")) e.mov = parse_mov(j["mov"], path + ".mov");
    if (j.contains("minus_two")) {
        std::string mp = path + ".minus_two";
        check_keys(j["minus_two"], mp, {"bound", "classes"});
        e.minus_two_bound = get_long(require(j["minus_two"], "bound", mp), mp + ".bound");
        e.minus_two_classes = get_vecs(require(j["minus_two"], "classes", mp), mp + ".classes");
    }
    if (j.contains("certificate")) {
        e.has_certificate = true;
        if (!j["certificate"].is_null())
            e.certificate = get_long(j["certificate"], path + ".certificate");
    }
    if (j.contains("certificate_max"))
        e.certificate_max = get_long(j["certificate_max"], path + ".certificate_max");
    if (j.contains("disc_factors")) e.disc_factors = get_vec(j["disc_factors"], path + ".disc_factors");
    if (j.contains("boundary")) {
        std::string bp = path + ".boundary";
        check_keys(j["boundary"], bp, {"d", "a", "b"});
        BoundaryExpectation b;
        b.d = get_int(require(j["boundary"], "d", bp), bp + ".d");
        b.a = get_rat(require(j["boundary"], "a", bp), bp + ".a");
        b.b = get_rat(require(j["boundary"], "b", bp), bp + ".b");
        if (b.b < 0) fail(bp + ".b", "expected b >= 0");
        e.boundary = b;
    }
    if (j.contains("orders")) {
        for (const auto& [label, v] : j["orders"].items()) {
            std::string op = path + ".orders." + label;
            if (v.is_string()) {
                if (v.get<std::string>() != "infinite") fail(op, "expected \"infinite\" or an integer");
                e.orders[label] = std::nullopt;
            } else {
                e.orders[label] = get_long(v, op);
            }
        }
    }
    auto parse_action = [&](const json& v, const std::string& ap) {
        std::string a = get_string(v, ap);
        if (a == "plus_id") return DiscAction::PlusId;
        if (a == "minus_id") return DiscAction::MinusId;
        if (a == "other") return DiscAction::Other;
        fail(ap, "expected plus_id|minus_id|other");
    };
    if (j.contains("disc_action"))
        for (const auto& [label, v] : j["disc_action"].items())
            e.disc_actions[label] = parse_action(v, path + ".disc_action." + label);
    if (j.contains("torelli")) {
        for (const auto& [label, v] : j["torelli"].items()) {
            std::string tp = path + ".torelli." + label;
            check_keys(v, tp, {"kind", "disc"});
            std::string kind = get_string(require(v, "kind", tp), tp + ".kind");
            TorelliKind k;
            if (kind == "induces") k = TorelliKind::Induces;
            else if (kind == "power_induces") k = TorelliKind::PowerInduces;
            else if (kind == "fails") k = TorelliKind::Fails;
            else fail(tp + ".kind", "expected induces|power_induces|fails");
            e.torelli[label] = {k, parse_action(require(v, "disc", tp), tp + ".disc")};
        }
    }
    if (j.contains("spot")) {
        const json& sp = j["spot"];
        for (std::size_t i = 0; i < sp.size(); ++i) {
            std::string pp = path + ".spot[" + std::to_string(i) + "]";
            check_keys(sp[i], pp, {"label", "input", "image"});
            SpotExpectation s;
            s.label = get_string(require(sp[i], "label", pp), pp + ".label");
            s.input = get_vec(require(sp[i], "input", pp), pp + ".input");
            s.image = get_vec(require(sp[i], "image", pp), pp + ".image");
            e.spots.push_back(std::move(s));
        }
    }
    if (j.contains("translation")) {
        std::string tp = path + ".translation";
        check_keys(j["translation"], tp, {"f", "y", "matrix"});
        TranslationExpectation t;
        t.f = get_vec(require(j["translation"], "f", tp), tp + ".f");
        t.y = get_vec(require(j["translation"], "y", tp), tp + ".y");
        t.matrix = get_mat(require(j["translation"], "matrix", tp), tp + ".matrix");
        e.translation = std::move(t);
    }
    if (j.contains("word_count")) {
        long c = get_long(j["word_count"], path + ".word_count");
        if (c < 1) fail(path + ".word_count", "expected a positive count");
        e.word_count = static_cast<std::size_t>(c);
    }
    if (j.contains("domain_rays")) e.domain_rays = get_vecs(j["domain_rays"], path + ".domain_rays");
    if (j.contains("covering")) {
        std::string cp = path + ".covering";
        check_keys(j["covering"], cp, {"target_rays", "covered"});
        CoveringExpectation c;
        c.target_rays = get_vecs(require(j["covering"], "target_rays", cp), cp + ".target_rays");
        c.covered = get_bool(require(j["covering"], "covered", cp), cp + ".covered");
        e.covering = std::move(c);
    }
    return e;
}

Scenario parse_scenario(const json& j) {
    check_keys(j, "$",
               {"name", "chow", "n1", "fiber_lattice", "sqms", "quotient", "group", "expected"});
    Scenario s;
    s.name = get_string(require(j, "name", "$"), "$.name");

    if (j.contains("chow")) s.chow = parse_chow(j["chow"], "chow");
    if (j.contains("n1")) s.n1 = parse_n1(j["n1"], "n1");
    if (j.contains("fiber_lattice")) {
        check_keys(j["fiber_lattice"], "fiber_lattice", {"gram"});
        s.fiber_gram = get_mat(require(j["fiber_lattice"], "gram", "fiber_lattice"), "fiber_lattice.gram");
        if (!s.fiber_gram->square()) fail("fiber_lattice.gram", "expected a square matrix");
        for (std::size_t a = 0; a < s.fiber_gram->rows(); ++a)
            for (std::size_t b = 0; b < a; ++b)
                if ((*s.fiber_gram)(a, b) != (*s.fiber_gram)(b, a))
                    fail("fiber_lattice.gram", "expected a symmetric matrix");
    }
    if (j.contains("sqms")) {
        if (!s.n1) fail("sqms", "sqms require n1 data");
        const json& sq = j["sqms"];
        for (std::size_t i = 0; i < sq.size(); ++i) {
            std::string sp = "sqms[" + std::to_string(i) + "]";
            check_keys(sq[i], sp, {"name", "nef_rays", "dual_curves"});
            SqmData m;
            m.name = get_string(require(sq[i], "name", sp), sp + ".name");
            m.nef_rays = get_vecs(require(sq[i], "nef_rays", sp), sp + ".nef_rays", s.n1->labels.size());
            for (const auto& c : require(sq[i], "dual_curves", sp))
                m.dual_curves.push_back(get_string(c, sp + ".dual_curves"));
            if (m.dual_curves.size() != s.n1->labels.size())
                fail(sp + ".dual_curves", "expected one curve per divisor basis element");
            for (const auto& cname : m.dual_curves) {
                bool found = false;
                for (const auto& c : s.n1->curves)
                    if (c.name == cname) found = true;
                if (!found) fail(sp + ".dual_curves", "unknown curve '" + cname + "'");
            }
            s.sqms.push_back(std::move(m));
        }
    }
    if (j.contains("quotient")) {
        if (!s.n1) fail("quotient", "quotient requires n1 data");
        check_keys(j["quotient"], "quotient", {"matrix", "kernel_ray"});
        QuotientData q;
        q.matrix = get_mat(require(j["quotient"], "matrix", "quotient"), "quotient.matrix");
        q.kernel_ray = get_vec(require(j["quotient"], "kernel_ray", "quotient"), "quotient.kernel_ray");
        if (q.matrix.cols() != s.n1->labels.size())
            fail("quotient.matrix", "columns must match n1 labels");
        if (q.kernel_ray.size() != q.matrix.cols())
            fail("quotient.kernel_ray", "length must match matrix columns");
        if (!is_zero(q.matrix.apply(q.kernel_ray)))
            fail("quotient.kernel_ray", "kernel ray does not map to zero");
        s.quotient = std::move(q);
    }
    if (j.contains("group")) {
        check_keys(j["group"], "group", {"generators", "include_inverses", "k", "x"});
        GroupData g;
        const json& gens = require(j["group"], "generators", "group");
        for (std::size_t i = 0; i < gens.size(); ++i) {
            std::string gp = "group.generators[" + std::to_string(i) + "]";
            check_keys(gens[i], gp, {"label", "matrix"});
            LabeledMatrix lm;
            lm.label = get_string(require(gens[i], "label", gp), gp + ".label");
            lm.matrix = get_mat(require(gens[i], "matrix", gp), gp + ".matrix");
            if (!lm.matrix.square()) fail(gp + ".matrix", "expected a square matrix");
            g.generators.push_back(std::move(lm));
        }
        if (g.generators.empty()) fail("group.generators", "expected at least one generator");
        if (j["group"].contains("include_inverses"))
            g.include_inverses = get_bool(j["group"]["include_inverses"], "group.include_inverses");
        if (j["group"].contains("k")) {
            long k = get_long(j["group"]["k"], "group.k");
            if (k < 0) fail("group.k", "expected k >= 0");
            g.word_length = static_cast<unsigned>(k);
        }
        g.base_point = get_vec(require(j["group"], "x", "group"), "group.x");
        std::size_t n = g.generators.front().matrix.rows();
        for (const auto& lm : g.generators)
            if (lm.matrix.rows() != n) fail("group.generators", "generator sizes differ");
        if (g.base_point.size() != n) fail("group.x", "length must match generator size");
        s.group = std::move(g);
    }
    if (j.contains("expected")) s.expected = parse_expected(j["expected"], "expected");
    return s;
}

} // namespace

Scenario load_scenario_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& err) {
        throw ParseError(std::string("scenario JSON: ") + err.what(), 0);
    }
    return parse_scenario(j);
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open scenario file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return load_scenario_string(buf.str());
}

// -- verification sections ----------------------------------------------------

namespace {

void add(std::vector<CheckRecord>& out, std::string id, bool ok, std::string details) {
    out.push_back({std::move(id), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(details)});
}

std::string rays_str(const std::vector<IntVec>& rays) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (i) os << ", ";
        os << to_string(rays[i]);
    }
    os << "}";
    return os.str();
}

std::vector<IntVec> canonical_ray_set(std::vector<IntVec> rays) {
    for (auto& r : rays) r = primitive(r);
    std::sort(rays.begin(), rays.end(), lex_less);
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    return rays;
}

bool lattice_available(const Scenario& s) { return s.fiber_gram || s.chow; }

std::vector<CheckRecord> section_lattice(const Scenario& s) {
    std::vector<CheckRecord> out;
    if (!lattice_available(s)) return out;
    const Expected& e = s.expected;
    if (!e.minus_two_classes && !e.has_certificate && !e.disc_factors && !e.boundary) return out;
    IntLattice lat = s.make_lattice();

    if (e.minus_two_classes) {
        long bound = e.minus_two_bound.value_or(10);
        auto got = find_norm_vectors(lat, Int(-2), bound);
        auto want = canonical_ray_set(*e.minus_two_classes);
        add(out, "lattice.minus_two", got == want,
            "(-2)-classes in box " + std::to_string(bound) + ": " + rays_str(got));
    }
    if (e.has_certificate) {
        auto got = certify_no_norm(lat, Int(-2), e.certificate_max);
        bool ok = (got == e.certificate);
        std::string detail = got ? "no value -2 mod " + std::to_string(*got)
                                 : "no modular certificate up to " + std::to_string(e.certificate_max);
        add(out, "lattice.certificate", ok, detail);
    }
    if (e.disc_factors) {
        DiscGroup g = discriminant_group(lat);
        add(out, "lattice.disc", g.factors == *e.disc_factors,
            "invariant factors " + to_string(g.factors) + ", order " + g.order.get_str());
    }
    if (e.boundary) {
        auto [lo, hi] = positive_cone_boundary(lat);
        QuadSurd want_lo(e.boundary->a, -e.boundary->b, e.boundary->d);
        QuadSurd want_hi(e.boundary->a, e.boundary->b, e.boundary->d);
        add(out, "lattice.boundary", lo == want_lo && hi == want_hi,
            "isotropic slopes " + lo.str() + " and " + hi.str());
    }
    return out;
}

std::vector<CheckRecord> section_nef(const Scenario& s) {
    std::vector<CheckRecord> out;
    if (!s.n1 || s.sqms.empty()) return out;
    const std::size_t dim = s.n1->labels.size();
    std::vector<IntVec> orthant_facets;
    for (std::size_t i = 0; i < dim; ++i) {
        IntVec e(dim, Int(0));
        e[i] = 1;
        orthant_facets.push_back(std::move(e));
    }
    Cone orthant = Cone::from_facets(orthant_facets, dim);
    for (const auto& model : s.sqms) {
        RatMat pairing(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            const CurveData& c = s.curve(model.dual_curves[i]);
            for (std::size_t j = 0; j < dim; ++j) pairing(i, j) = c.pairing[j];
        }
        Cone dual_cone = orthant.dual(pairing);
        Cone claimed = Cone::from_rays(model.nef_rays, dim);
        add(out, "nef.duality." + model.name, dual_cone == claimed,
            "dual of the curve cone = " + rays_str(dual_cone.rays()));
    }
    return out;
}

std::vector<CheckRecord> section_mov(const Scenario& s) {
    std::vector<CheckRecord> out;
    if (!s.expected.mov) return out;
    const MovExpectation& m = *s.expected.mov;
    const std::size_t dim = m.inequalities[0].size();
    Cone ineq_cone = Cone::from_facets(m.inequalities, dim);
    Cone claimed = Cone::from_rays(m.rays, dim);

    if (m.exact) {
        add(out, "mov.cone", ineq_cone == claimed,
            "inequality cone rays " + rays_str(ineq_cone.rays()));
        return out;
    }

    add(out, "mov.upper_bound", ineq_cone.contains_cone(claimed),
        "claimed cone lies inside the inequality cone");
    if (m.tight) {
        bool ok = true;
        std::string bad;
        for (std::size_t i = 0; i < m.rays.size() && ok; ++i) {
            for (std::size_t f = 0; f < m.inequalities.size() && ok; ++f) {
                Int v = dot(m.inequalities[f], m.rays[i]);
                bool listed = std::find((*m.tight)[i].begin(), (*m.tight)[i].end(), f) !=
                              (*m.tight)[i].end();
                if (listed ? v != 0 : v <= 0) {
                    ok = false;
                    bad = to_string(m.rays[i]) + " vs inequality " + std::to_string(f);
                }
            }
        }
        add(out, "mov.tightness", ok,
            ok ? "every claimed ray meets its stated tight inequalities" : bad);
    }
    // the gap between the two cones is a paper-side discrepancy: flag it
    std::optional<IntVec> gap;
    for (const auto& r : ineq_cone.rays())
        if (!claimed.member(r)) {
            gap = r;
            break;
        }
    if (!gap) {
        bool expected_gap = m.witness.has_value();
        add(out, "mov.gap", !expected_gap, "inequality cone equals the claimed cone");
    } else if (m.witness && *gap != *m.witness) {
        add(out, "mov.gap", false,
            "gap witness " + to_string(*gap) + " differs from expected " + to_string(*m.witness));
    } else {
        out.push_back({"mov.gap", CheckStatus::Flagged,
                       "inequality cone is strictly larger; witness " + to_string(*gap) +
                           " satisfies the inequalities but is outside the claimed cone"});
    }
    return out;
}

const IntMat* find_generator(const Scenario& s, const std::string& label) {
    for (const auto& g : s.group->generators)
        if (g.label == label) return &g.matrix;
    return nullptr;
}

std::vector<CheckRecord> section_group(const Scenario& s) {
    std::vector<CheckRecord> out;
    if (!s.group || !lattice_available(s)) return out;
    IntLattice lat = s.make_lattice();
    const Expected& e = s.expected;

    {
        std::vector<std::string> bad;
        for (const auto& g : s.group->generators)
            if (!lat.is_isometry(g.matrix)) bad.push_back(g.label);
        std::string detail = bad.empty()
                                 ? std::to_string(s.group->generators.size()) +
                                       " generators preserve the form"
                                 : "not isometries:";
        for (const auto& b : bad) detail += " " + b;
        add(out, "group.isometry", bad.empty(), detail);
    }

    for (const auto& [label, want] : e.orders) {
        const IntMat* m = find_generator(s, label);
        if (!m) {
            add(out, "group.order." + label, false, "unknown generator label");
            continue;
        }
        auto got = element_order(*m);
        std::string detail = got ? "finite of order " + std::to_string(*got) : "infinite order";
        add(out, "group.order." + label, got == want, detail);
    }
    for (const auto& [label, want] : e.disc_actions) {
        const IntMat* m = find_generator(s, label);
        if (!m) {
            add(out, "group.disc_action." + label, false, "unknown generator label");
            continue;
        }
        DiscActionResult got = disc_action(lat, *m);
        add(out, "group.disc_action." + label, got.kind == want,
            "acts by " + to_string(got.kind) + " on the discriminant group");
    }
    for (const auto& [label, want] : e.torelli) {
        const IntMat* m = find_generator(s, label);
        if (!m) {
            add(out, "group.torelli." + label, false, "unknown generator label");
            continue;
        }
        std::vector<IntVec> nodal =
            e.minus_two_classes ? *e.minus_two_classes : std::vector<IntVec>{};
        TorelliVerdict v = torelli_check(lat, *m, nodal);
        bool ok = v.kind == want.first && v.disc == want.second;
        std::string detail = to_string(v.kind) + " with " + to_string(v.disc) + " action";
        if (v.power) detail += " (power " + std::to_string(*v.power) + ")";
        add(out, "group.torelli." + label, ok, detail);
    }
    for (const auto& spot : e.spots) {
        const IntMat* m = find_generator(s, spot.label);
        if (!m) {
            add(out, "group.spot." + spot.label, false, "unknown generator label");
            continue;
        }
        IntVec got = m->apply(spot.input);
        add(out, "group.spot." + spot.label, got == spot.image,
            spot.label + " . " + to_string(spot.input) + " = " + to_string(got));
    }
    if (e.translation) {
        IntMat t = translation_isometry(lat, e.translation->f, e.translation->y);
        add(out, "group.translation", t == e.translation->matrix,
            "translation by " + to_string(e.translation->y) + " along " +
                to_string(e.translation->f) + " = " + to_string(t));
    }
    return out;
}

std::vector<CheckRecord> section_domain(const Scenario& s) {
    std::vector<CheckRecord> out;
    if (!s.group || !s.group->word_length || !lattice_available(s)) return out;
    const Expected& e = s.expected;
    if (!e.word_count && !e.domain_rays) return out;
    IntLattice lat = s.make_lattice();
    WordSet words =
        enumerate_words(s.group->generators, *s.group->word_length, s.group->include_inverses);
    if (e.word_count)
        add(out, "domain.words", words.matrices.size() == *e.word_count,
            std::to_string(words.matrices.size()) + " distinct elements at word length " +
                std::to_string(*s.group->word_length));
    if (e.domain_rays) {
        auto normals = dirichlet_halfspaces(lat, s.group->base_point, words);
        Cone dom = Cone::from_facets(normals, lat.rank());
        std::vector<IntVec> outside;
        for (const auto& r : dom.rays())
            if (lat.norm(r) < 0) outside.push_back(r);
        auto want = canonical_ray_set(*e.domain_rays);
        bool ok = dom.rays() == want && outside.empty() && !normals.empty();
        std::string detail = std::to_string(normals.size()) + " halfspaces, rays " +
                             rays_str(dom.rays());
        if (!outside.empty()) detail += "; rays outside the positive cone " + rays_str(outside);
        add(out, "domain.dirichlet", ok, detail);
    }
    return out;
}

std::vector<CheckRecord> section_lift(const Scenario& s) {
    std::vector<CheckRecord> out;
    if (!s.n1 || s.sqms.empty() || !s.quotient || !s.expected.covering) return out;
    const std::size_t dim = s.n1->labels.size();
    IntVec anti = s.anticanonical_vector();

    std::vector<Cone> nef_cones;
    for (const auto& model : s.sqms) {
        Cone c = Cone::from_rays(model.nef_rays, dim);
        add(out, "lift.a." + model.name, c.rays() == canonical_ray_set(model.nef_rays),
            std::to_string(c.rays().size()) + " extreme rays, double description stable");
        nef_cones.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < s.sqms.size(); ++i)
        add(out, "lift.b." + s.sqms[i].name, nef_cones[i].member(anti),
            "-K = " + to_string(anti) + " is nef");
    for (const auto& c : s.n1->curves) {
        if (!c.k_trivial) continue;
        Int v = dot(c.pairing, anti);
        add(out, "lift.c." + c.name, v == 0, "-K pairing = " + v.get_str());
    }

    RatMat q = to_rat(s.quotient->matrix);
    std::vector<Cone> pieces;
    for (const auto& c : nef_cones) pieces.push_back(c.quotient_image(q));
    Cone target = Cone::from_rays(s.expected.covering->target_rays, s.quotient->matrix.rows());
    CoverageVerdict verdict = covers(target, pieces);
    bool ok = verdict.covered == s.expected.covering->covered;
    std::string detail = verdict.covered
                             ? "target covered by " + std::to_string(pieces.size()) + " image cones"
                             : "uncovered witness " + to_string(*verdict.witness);
    add(out, "lift.d", ok, detail);
    return out;
}

std::vector<CheckRecord> section_chow(const Scenario& s) {
    std::vector<CheckRecord> out;
    if (!s.chow) return out;
    ChowRingPtr ring = s.make_ring();
    ChowClass h = parse_class(s.chow->h_expr, ring);
    std::vector<ChowClass> basis;
    for (std::size_t i = 0; i < s.chow->vars.size(); ++i)
        basis.push_back(ChowClass::variable(ring, i));
    IntMat derived = k3cone::fiber_gram(basis, h);

    bool gram_ok = true;
    if (s.fiber_gram && derived != *s.fiber_gram) gram_ok = false;
    if (s.expected.gram && derived != *s.expected.gram) gram_ok = false;
    add(out, "chow.gram", gram_ok, "derived fiber Gram " + to_string(derived));

    if (s.expected.curve_class) {
        ChowClass want = parse_class(*s.expected.curve_class, ring);
        ChowClass got = base_curve_class(h);
        add(out, "chow.curve_class", got == want, "H^(n-1) = " + got.str());
    }
    if (s.expected.genus) {
        Int got = curve_genus(h);
        add(out, "chow.genus", got == *s.expected.genus, "genus " + got.get_str());
    }
    return out;
}

} // namespace

std::vector<CheckRecord> verify_chow(const Scenario& s) { return section_chow(s); }
std::vector<CheckRecord> verify_nef_duality(const Scenario& s) { return section_nef(s); }
std::vector<CheckRecord> verify_finite_case(const Scenario& s) { return section_mov(s); }

std::vector<CheckRecord> verify_infinite_case(const Scenario& s) {
    std::vector<CheckRecord> out = section_lattice(s);
    auto g = section_group(s);
    out.insert(out.end(), g.begin(), g.end());
    auto d = section_domain(s);
    out.insert(out.end(), d.begin(), d.end());
    return out;
}

std::vector<CheckRecord> verify_lifting_conditions(const Scenario& s) { return section_lift(s); }

Report run_scenario(const Scenario& s) {
    Report r;
    r.scenario = s.name;
    for (auto* section : {&section_chow, &section_lattice, &section_nef, &section_mov,
                          &section_group, &section_domain, &section_lift}) {
        auto recs = (*section)(s);
        r.checks.insert(r.checks.end(), recs.begin(), recs.end());
    }
    return r;
}

Report run_builtin(const std::string& name) { return run_scenario(builtin_scenario(name)); }

} // namespace k3cone
