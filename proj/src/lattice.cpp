#include "k3cone/lattice.hpp"

#include <algorithm>

namespace k3cone {

IntLattice::IntLattice(IntMat gram) : gram_(std::move(gram)) {
    if (!gram_.square()) throw DimensionError("IntLattice: Gram matrix not square");
    if (gram_.rows() == 0) throw DimensionError("IntLattice: empty Gram matrix");
    for (std::size_t i = 0; i < gram_.rows(); ++i)
        for (std::size_t j = i + 1; j < gram_.cols(); ++j)
            if (gram_(i, j) != gram_(j, i))
                throw DomainError("IntLattice: Gram matrix not symmetric");
    if (det(gram_) == 0) throw DomainError("IntLattice: degenerate Gram matrix");
    even_ = true;
    for (std::size_t i = 0; i < gram_.rows(); ++i)
        if (gram_(i, i) % 2 != 0) even_ = false;
}

Int IntLattice::eval_form(const IntVec& x, const IntVec& y) const {
    if (x.size() != rank() || y.size() != rank())
        throw DimensionError("eval_form: vector length != rank");
    return dot(x, gram_.apply(y));
}

bool IntLattice::is_isometry(const IntMat& m) const {
    if (!m.square() || m.rows() != rank())
        throw DimensionError("is_isometry: matrix size != rank");
    return m.transpose() * gram_ * m == gram_;
}

DiscGroup discriminant_group(const IntLattice& l) {
    SmithForm sf = snf(l.gram());
    DiscGroup g;
    g.order = 1;
    for (std::size_t i = 0; i < sf.diag.size(); ++i) {
        g.order *= sf.diag[i];
        if (sf.diag[i] <= 1) continue;
        g.factors.push_back(sf.diag[i]);
        // L* has basis (right column i)/d_i; columns with d_i = 1 lie in L.
        RatVec gen(l.rank());
        for (std::size_t r = 0; r < l.rank(); ++r)
            gen[r] = Rat(sf.right(r, i), sf.diag[i]);
        g.generators.push_back(std::move(gen));
    }
    return g;
}

std::string to_string(DiscAction a) {
    switch (a) {
        case DiscAction::PlusId: return "plus_id";
        case DiscAction::MinusId: return "minus_id";
        default: return "other";
    }
}

namespace {

Int mod_nonneg(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

// Coordinates of v in the L* basis (right columns over diag); integral
// exactly when v lies in L*.
IntVec dual_coordinates(const SmithForm& sf, const RatVec& v) {
    std::size_t n = v.size();
    RatMat rhs(n, 1);
    for (std::size_t i = 0; i < n; ++i) rhs(i, 0) = v[i];
    RatMat c = solve(to_rat(sf.right), rhs);
    IntVec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat ci = c(i, 0) * Rat(sf.diag[i]);
        if (ci.get_den() != 1) throw DomainError("vector is not in the dual lattice");
        out[i] = ci.get_num();
    }
    return out;
}

} // namespace

DiscActionResult disc_action(const IntLattice& l, const IntMat& m) {
    if (!l.is_isometry(m)) throw DomainError("disc_action: matrix is not an isometry");
    SmithForm sf = snf(l.gram());

    std::vector<std::size_t> idx; // positions with d_i > 1
    for (std::size_t i = 0; i < sf.diag.size(); ++i)
        if (sf.diag[i] > 1) idx.push_back(i);

    DiscActionResult res;
    res.matrix = IntMat(idx.size(), idx.size());
    RatMat mq = to_rat(m);
    for (std::size_t jj = 0; jj < idx.size(); ++jj) {
        std::size_t j = idx[jj];
        RatVec gen(l.rank());
        for (std::size_t r = 0; r < l.rank(); ++r) gen[r] = Rat(sf.right(r, j), sf.diag[j]);
        RatVec img = mq.apply(gen);
        IntVec coords = dual_coordinates(sf, img);
        for (std::size_t ii = 0; ii < idx.size(); ++ii)
            res.matrix(ii, jj) = mod_nonneg(coords[idx[ii]], sf.diag[idx[ii]]);
    }

    auto matches = [&](int sign) {
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) {
                Int want = (i == j) ? Int(sign) : Int(0);
                const Int& di = sf.diag[idx[i]];
                if (mod_nonneg(res.matrix(i, j) - want, di) != 0) return false;
            }
        return true;
    };
    if (matches(1)) res.kind = DiscAction::PlusId;
    else if (matches(-1)) res.kind = DiscAction::MinusId;
    else res.kind = DiscAction::Other;
    return res;
}

std::optional<long> element_order(const IntMat& m) {
    if (!m.square()) throw DimensionError("element_order: matrix not square");
    Int d = det(m);
    if (d != 1 && d != -1) throw DomainError("element_order: |det| != 1");
    const std::size_t n = m.rows();

    auto phi = [](long v) {
        long result = v;
        for (long p = 2; p * p <= v; ++p) {
            if (v % p) continue;
            while (v % p == 0) v /= p;
            result -= result / p;
        }
        if (v > 1) result -= result / v;
        return result;
    };
    // L_n = lcm{ k : phi(k) <= n }; phi(k) > sqrt(k)/2 bounds the search.
    long bound = static_cast<long>(4 * n * n + 8);
    Int l_n = 1;
    for (long k = 1; k <= bound; ++k)
        if (phi(k) <= static_cast<long>(n)) l_n = lcm(l_n, Int(k));

    const IntMat id = IntMat::identity(n);
    auto power = [&](long e) {
        IntMat base = m, acc = id;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return acc;
    };

    long big = l_n.get_si();
    if (power(big) != id) return std::nullopt;
    for (long k = 1; k <= big; ++k)
        if (big % k == 0 && power(k) == id) return k;
    return big; // unreachable; big itself divides big
}

std::vector<IntVec> find_norm_vectors(const IntLattice& l, const Int& norm, long bound) {
    if (bound < 1) throw DomainError("find_norm_vectors: bound must be >= 1");
    const std::size_t n = l.rank();
    std::vector<IntVec> out;
    IntVec v(n, Int(-bound));
    while (true) {
        if (!is_zero(v) && l.norm(v) == norm) out.push_back(v);
        std::size_t i = 0;
        while (i < n && v[i] == bound) {
            v[i] = -bound;
            ++i;
        }
        if (i == n) break;
        v[i] += 1;
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::optional<long> certify_no_norm(const IntLattice& l, const Int& norm, long max_modulus) {
    if (max_modulus < 2) throw DomainError("certify_no_norm: max_modulus must be >= 2");
    const std::size_t n = l.rank();
    for (long m = 2; m <= max_modulus; ++m) {
        Int target = mod_nonneg(norm, m);
        bool hit = false;
        IntVec v(n, Int(0));
        while (!hit) {
            if (mod_nonneg(l.norm(v), m) == target) {
                hit = true;
                break;
            }
            std::size_t i = 0;
            while (i < n && v[i] == m - 1) {
                v[i] = 0;
                ++i;
            }
            if (i == n) break;
            v[i] += 1;
        }
        if (!hit) return m;
    }
    return std::nullopt;
}

std::pair<QuadSurd, QuadSurd> positive_cone_boundary(const IntLattice& l) {
    if (l.rank() != 2) throw DimensionError("positive_cone_boundary: rank must be 2");
    if (det(l.gram()) >= 0) throw DomainError("positive_cone_boundary: form not indefinite");
    Int p = l.gram()(0, 0), q = l.gram()(0, 1), r = l.gram()(1, 1);
    if (p == 0)
        throw DomainError("positive_cone_boundary: leading coefficient is zero (root at infinity)");
    if (p < 0) { // normalize so the roots come out ascending as -+ sqrt
        p = -p;
        q = -q;
        r = -r;
    }
    Int disc = q * q - p * r; // positive since det < 0
    auto [s, f] = squarefree_split(disc);
    QuadSurd minus(Rat(-q, p), Rat(-s, p), f);
    QuadSurd plus(Rat(-q, p), Rat(s, p), f);
    return {minus, plus};
}

IntMat translation_isometry(const IntLattice& l, const IntVec& f, const IntVec& y) {
    const std::size_t n = l.rank();
    if (f.size() != n || y.size() != n)
        throw DimensionError("translation_isometry: vector length != rank");
    if (l.norm(f) != 0) throw DomainError("translation_isometry: f is not isotropic");
    if (l.eval_form(f, y) != 0) throw DomainError("translation_isometry: f.y != 0");
    Int yy = l.norm(y);
    if (yy % 2 != 0) throw DomainError("translation_isometry: y.y is odd");
    Int half_yy = yy / 2;

    IntMat t(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        IntVec e(n, Int(0));
        e[k] = 1;
        Int ef = l.eval_form(e, f);
        Int ey = l.eval_form(e, y);
        Int mk = -ey - ef * half_yy;
        for (std::size_t r = 0; r < n; ++r) t(r, k) = e[r] + ef * y[r] + mk * f[r];
    }
    return t;
}

std::string to_string(TorelliKind k) {
    switch (k) {
        case TorelliKind::Induces: return "induces";
        case TorelliKind::PowerInduces: return "power_induces";
        default: return "fails";
    }
}

TorelliVerdict torelli_check(const IntLattice& l, const IntMat& m,
                             const std::vector<IntVec>& nodal_classes) {
    if (!l.is_isometry(m)) throw DomainError("torelli_check: matrix is not an isometry");

    std::vector<IntVec> nodal = nodal_classes;
    std::sort(nodal.begin(), nodal.end(), lex_less);
    std::vector<IntVec> image;
    image.reserve(nodal.size());
    for (const auto& v : nodal) image.push_back(m.apply(v));
    std::sort(image.begin(), image.end(), lex_less);

    TorelliVerdict verdict;
    DiscActionResult act = disc_action(l, m);
    verdict.disc = act.kind;
    if (image != nodal) {
        verdict.kind = TorelliKind::Fails;
        verdict.reason = "nodal set is not preserved";
        return verdict;
    }
    if (verdict.disc != DiscAction::Other) {
        verdict.kind = TorelliKind::Induces;
        return verdict;
    }
    verdict.kind = TorelliKind::PowerInduces;
    // Power the finite discriminant action until it reaches +-Id; the
    // action's own order always does, so this terminates. Row i of the
    // action matrix is reduced mod factors[i], which is consistent under
    // composition (valid homs satisfy d_i | A(i,k) d_k).
    DiscGroup dg = discriminant_group(l);
    auto reduce = [&](IntMat& a) {
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                a(i, j) = mod_nonneg(a(i, j), dg.factors[i]);
    };
    auto is_pm_id = [&](const IntMat& a) {
        for (int sign : {1, -1}) {
            bool ok = true;
            for (std::size_t i = 0; ok && i < a.rows(); ++i)
                for (std::size_t j = 0; ok && j < a.cols(); ++j) {
                    Int want = (i == j) ? Int(sign) : Int(0);
                    if (mod_nonneg(a(i, j) - want, dg.factors[i]) != 0) ok = false;
                }
            if (ok) return true;
        }
        return false;
    };
    IntMat pw = act.matrix;
    for (long e = 2;; ++e) {
        pw = pw * act.matrix;
        reduce(pw);
        if (is_pm_id(pw)) {
            verdict.power = e;
            break;
        }
    }
    return verdict;
}

} // namespace k3cone
