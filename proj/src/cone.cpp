#include "k3cone/cone.hpp"

#include <algorithm>
#include <set>

namespace k3cone {

namespace {

// Incremental double description: maintains generators (rays + lineality
// basis) of the intersection of the halfspaces inserted so far, starting
// from the whole space. rank(inserted rows) == dim - lin.size() is an
// invariant, which the adjacency test below relies on.
struct DoubleDescription {
    std::size_t dim;
    std::vector<IntVec> rays;
    std::vector<IntVec> lin;
    std::vector<IntVec> inserted;

    explicit DoubleDescription(std::size_t dim_) : dim(dim_) {
        for (std::size_t i = 0; i < dim; ++i) {
            IntVec e(dim, Int(0));
            e[i] = 1;
            lin.push_back(std::move(e));
        }
    }

    void insert(const IntVec& a) {
        // pivot on a lineality vector if the hyperplane cuts the space
        std::size_t piv = lin.size();
        for (std::size_t i = 0; i < lin.size(); ++i)
            if (dot(a, lin[i]) != 0) {
                piv = i;
                break;
            }
        if (piv != lin.size()) {
            IntVec b0 = lin[piv];
            Int ab0 = dot(a, b0);
            if (ab0 < 0) {
                for (auto& x : b0) x = -x;
                ab0 = -ab0;
            }
            std::vector<IntVec> newlin;
            for (std::size_t i = 0; i < lin.size(); ++i) {
                if (i == piv) continue;
                Int c = dot(a, lin[i]);
                newlin.push_back(primitive(sub(scale(ab0, lin[i]), scale(c, b0))));
            }
            std::vector<IntVec> newrays;
            for (const auto& r : rays) {
                Int c = dot(a, r);
                IntVec adj = primitive(sub(scale(ab0, r), scale(c, b0)));
                if (!is_zero(adj)) newrays.push_back(std::move(adj));
            }
            rays = std::move(newrays);
            rays.push_back(std::move(b0));
            lin = std::move(newlin);
            inserted.push_back(a);
            return;
        }

        std::vector<Int> val(rays.size());
        bool any_neg = false;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(a, rays[i]);
            if (val[i] < 0) any_neg = true;
        }
        if (!any_neg) {
            inserted.push_back(a);
            return;
        }

        std::vector<IntVec> next;
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (val[i] >= 0) next.push_back(rays[i]);

        const std::size_t full_rank = dim - lin.size();
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (val[i] <= 0) continue;
            for (std::size_t j = 0; j < rays.size(); ++j) {
                if (val[j] >= 0) continue;
                if (!adjacent(rays[i], rays[j], full_rank)) continue;
                // positive combination vanishing on the new hyperplane
                IntVec w = primitive(sub(scale(val[i], rays[j]), scale(val[j], rays[i])));
                next.push_back(std::move(w));
            }
        }
        rays = std::move(next);
        inserted.push_back(a);
    }

    bool adjacent(const IntVec& r1, const IntVec& r2, std::size_t full_rank) const {
        if (full_rank < 2) return false; // cannot host two distinct rays
        std::vector<IntVec> tight;
        for (const auto& row : inserted)
            if (dot(row, r1) == 0 && dot(row, r2) == 0) tight.push_back(row);
        if (tight.size() + 2 < full_rank) return false;
        return rank_of_rows(tight, dim) == full_rank - 2;
    }

    // Drop rays that are not extreme (tight-set rank < rank(inserted)-1)
    // and duplicates.
    void minimize() {
        const std::size_t full_rank = dim - lin.size();
        std::vector<IntVec> keep;
        for (const auto& r : rays) {
            if (is_zero(r)) continue;
            std::vector<IntVec> tight;
            for (const auto& row : inserted)
                if (dot(row, r) == 0) tight.push_back(row);
            if (full_rank == 0) continue;
            if (tight.size() + 1 < full_rank) continue;
            if (rank_of_rows(tight, dim) != full_rank - 1) continue;
            keep.push_back(r);
        }
        std::sort(keep.begin(), keep.end(), lex_less);
        keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
        rays = std::move(keep);
    }
};

// Orthogonal projection of each ray away from span(lin), scaled to a
// primitive integer vector; canonical representative of the ray modulo
// lineality. Rays inside the lineality space project to zero and are
// dropped.
std::vector<IntVec> canonical_rays(const std::vector<IntVec>& rays,
                                   const std::vector<IntVec>& lin, std::size_t dim) {
    std::vector<IntVec> out;
    if (lin.empty()) {
        for (const auto& r : rays) out.push_back(primitive(r));
    } else {
        const std::size_t k = lin.size();
        RatMat gram(k, k); // lin * lin^T, invertible (independent rows)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(lin[i], lin[j]);
        RatMat gram_inv = inverse(gram);
        for (const auto& r : rays) {
            RatMat rhs(k, 1);
            for (std::size_t i = 0; i < k; ++i) rhs(i, 0) = dot(lin[i], r);
            RatMat coef = gram_inv * rhs;
            RatVec proj(dim);
            for (std::size_t c = 0; c < dim; ++c) {
                proj[c] = r[c];
                for (std::size_t i = 0; i < k; ++i) proj[c] -= coef(i, 0) * Rat(lin[i][c]);
            }
            bool zero = true;
            for (const auto& x : proj)
                if (x != 0) zero = false;
            if (zero) continue;
            out.push_back(primitive(proj));
        }
    }
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<IntVec> prepare_normals(std::vector<IntVec> input, std::size_t dim, const char* what) {
    for (auto& v : input) {
        if (v.size() != dim) throw DimensionError(std::string(what) + ": vector length != ambient dim");
        if (is_zero(v)) throw DomainError(std::string(what) + ": zero vectors rejected");
        v = primitive(v);
    }
    std::sort(input.begin(), input.end(), lex_less);
    input.erase(std::unique(input.begin(), input.end()), input.end());
    return input;
}

// Run DD on the given halfspaces; returns canonical (rays, lineality).
std::pair<std::vector<IntVec>, std::vector<IntVec>> dd_solve(const std::vector<IntVec>& normals,
                                                             std::size_t dim) {
    DoubleDescription dd(dim);
    for (const auto& a : normals) dd.insert(a);
    dd.minimize();
    std::vector<IntVec> lin = rref_basis(dd.lin, dim);
    std::vector<IntVec> rays = canonical_rays(dd.rays, lin, dim);
    return {std::move(rays), std::move(lin)};
}

} // namespace

Cone Cone::from_facets(std::vector<IntVec> inequalities, std::size_t ambient_dim) {
    if (ambient_dim == 0) throw DimensionError("Cone: ambient dimension must be >= 1");
    auto normals = prepare_normals(std::move(inequalities), ambient_dim, "from_facets");

    Cone c(ambient_dim);
    auto [rays, lin] = dd_solve(normals, ambient_dim);
    c.rays_ = std::move(rays);
    c.lin_ = std::move(lin);

    // canonical facets: extreme rays of the dual cone, with the dual's
    // lineality contributing equality pairs
    std::vector<IntVec> dual_normals = c.rays_;
    for (const auto& b : c.lin_) {
        dual_normals.push_back(b);
        IntVec neg(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) neg[i] = -b[i];
        dual_normals.push_back(std::move(neg));
    }
    dual_normals = prepare_normals(std::move(dual_normals), ambient_dim, "from_facets");
    auto [drays, dlin] = dd_solve(dual_normals, ambient_dim);
    std::vector<IntVec> facets = std::move(drays);
    for (const auto& b : dlin) {
        facets.push_back(b);
        IntVec neg(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) neg[i] = -b[i];
        facets.push_back(std::move(neg));
    }
    std::sort(facets.begin(), facets.end(), lex_less);
    c.facets_ = std::move(facets);
    return c;
}

Cone Cone::from_rays(std::vector<IntVec> generators, std::size_t ambient_dim) {
    if (ambient_dim == 0) throw DimensionError("Cone: ambient dimension must be >= 1");
    auto gens = prepare_normals(std::move(generators), ambient_dim, "from_rays");

    // facets of cone(gens) = extreme rays / lineality of its dual
    auto [drays, dlin] = dd_solve(gens, ambient_dim);
    std::vector<IntVec> facets = std::move(drays);
    for (const auto& b : dlin) {
        facets.push_back(b);
        IntVec neg(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) neg[i] = -b[i];
        facets.push_back(std::move(neg));
    }
    return from_facets(std::move(facets), ambient_dim);
}

std::size_t Cone::dim() const {
    std::vector<IntVec> span = rays_;
    span.insert(span.end(), lin_.begin(), lin_.end());
    if (span.empty()) return 0;
    return rank_of_rows(span, dim_);
}

bool Cone::member(const IntVec& v) const {
    if (v.size() != dim_) throw DimensionError("member: vector length != ambient dim");
    for (const auto& f : facets_)
        if (dot(f, v) < 0) return false;
    return true;
}

bool Cone::member(const RatVec& v) const {
    if (v.size() != dim_) throw DimensionError("member: vector length != ambient dim");
    for (const auto& f : facets_) {
        Rat s = 0;
        for (std::size_t i = 0; i < dim_; ++i) s += Rat(f[i]) * v[i];
        if (s < 0) return false;
    }
    return true;
}

bool Cone::contains_cone(const Cone& other) const {
    if (other.dim_ != dim_) throw DimensionError("contains_cone: ambient dim mismatch");
    for (const auto& r : other.rays_)
        if (!member(r)) return false;
    for (const auto& b : other.lin_) {
        if (!member(b)) return false;
        IntVec neg(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) neg[i] = -b[i];
        if (!member(neg)) return false;
    }
    return true;
}

bool Cone::operator==(const Cone& other) const {
    return dim_ == other.dim_ && rays_ == other.rays_ && lin_ == other.lin_;
}

IntVec Cone::interior_point() const {
    IntVec p(dim_, Int(0));
    for (const auto& r : rays_) p = add(p, r);
    return p;
}

Cone Cone::dual(const RatMat& pairing) const {
    if (!pairing.square() || pairing.rows() != dim_)
        throw DimensionError("dual: pairing must be square of ambient dim");
    if (det(pairing) == 0) throw SingularError("dual: singular pairing");
    RatMat pt = pairing.transpose();
    std::vector<IntVec> normals;
    auto push = [&](const IntVec& x, bool both_signs) {
        RatVec img(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            img[i] = 0;
            for (std::size_t j = 0; j < dim_; ++j) img[i] += pt(i, j) * Rat(x[j]);
        }
        normals.push_back(primitive(img));
        if (both_signs) {
            IntVec neg(dim_);
            for (std::size_t i = 0; i < dim_; ++i) neg[i] = -normals.back()[i];
            normals.push_back(std::move(neg));
        }
    };
    for (const auto& r : rays_) push(r, false);
    for (const auto& b : lin_) push(b, true);
    if (normals.empty()) {
        // dual of the zero cone is the whole space
        return Cone::from_facets({}, dim_);
    }
    return Cone::from_facets(std::move(normals), dim_);
}

Cone Cone::quotient_image(const RatMat& surjection) const {
    if (surjection.cols() != dim_) throw DimensionError("quotient_image: matrix cols != ambient dim");
    {
        RatMat probe = surjection;
        std::vector<IntVec> rows;
        for (std::size_t i = 0; i < probe.rows(); ++i) {
            RatVec row(dim_);
            for (std::size_t j = 0; j < dim_; ++j) row[j] = probe(i, j);
            rows.push_back(primitive(row));
        }
        if (rank_of_rows(rows, dim_) != surjection.rows())
            throw DomainError("quotient_image: matrix is not full row rank");
    }
    auto image_of = [&](const IntVec& v) {
        RatVec img(surjection.rows());
        for (std::size_t i = 0; i < surjection.rows(); ++i)
            for (std::size_t j = 0; j < dim_; ++j) img[i] += surjection(i, j) * Rat(v[j]);
        return img;
    };
    auto rat_zero = [](const RatVec& v) {
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    };
    std::vector<IntVec> gens;
    for (const auto& r : rays_) {
        RatVec img = image_of(r);
        if (!rat_zero(img)) gens.push_back(primitive(img));
    }
    for (const auto& b : lin_) {
        RatVec img = image_of(b);
        if (rat_zero(img)) continue;
        IntVec pos = primitive(img);
        IntVec neg(pos.size());
        for (std::size_t i = 0; i < pos.size(); ++i) neg[i] = -pos[i];
        gens.push_back(std::move(pos));
        gens.push_back(std::move(neg));
    }
    if (gens.empty()) {
        // zero cone in the image space
        std::vector<IntVec> facets;
        for (std::size_t i = 0; i < surjection.rows(); ++i) {
            IntVec e(surjection.rows(), Int(0));
            e[i] = 1;
            facets.push_back(e);
            e[i] = -1;
            facets.push_back(e);
        }
        return Cone::from_facets(std::move(facets), surjection.rows());
    }
    return Cone::from_rays(std::move(gens), surjection.rows());
}

CoverageVerdict covers(const Cone& target, const std::vector<Cone>& pieces) {
    for (const auto& p : pieces)
        if (p.ambient_dim() != target.ambient_dim())
            throw DimensionError("covers: ambient dim mismatch");

    const std::size_t target_dim = target.dim();
    if (target_dim == 0) {
        // the zero cone: its only point is the origin
        IntVec zero(target.ambient_dim(), Int(0));
        for (const auto& p : pieces)
            if (p.member(zero)) return {true, std::nullopt};
        return {false, zero};
    }

    // hyperplanes of the arrangement, one canonical sign each
    std::set<IntVec, bool (*)(const IntVec&, const IntVec&)> hyperplanes(lex_less);
    for (const auto& p : pieces)
        for (auto f : p.facets()) {
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (f[i] == 0) continue;
                if (f[i] < 0)
                    for (auto& x : f) x = -x;
                break;
            }
            hyperplanes.insert(f);
        }

    struct Cell {
        Cone cone;
        std::vector<IntVec> constraints;
    };
    std::vector<Cell> cells;
    cells.push_back({target, target.facets()});

    for (const auto& h : hyperplanes) {
        std::vector<Cell> next;
        for (auto& cell : cells) {
            bool has_pos = false, has_neg = false;
            for (const auto& r : cell.cone.rays()) {
                Int s = dot(h, r);
                if (s > 0) has_pos = true;
                if (s < 0) has_neg = true;
            }
            for (const auto& b : cell.cone.lineality()) {
                if (dot(h, b) != 0) {
                    has_pos = true;
                    has_neg = true;
                    break;
                }
            }
            if (!(has_pos && has_neg)) {
                next.push_back(std::move(cell));
                continue;
            }
            IntVec hneg(h.size());
            for (std::size_t i = 0; i < h.size(); ++i) hneg[i] = -h[i];
            for (const IntVec& side : {h, hneg}) {
                auto constraints = cell.constraints;
                constraints.push_back(side);
                Cone sub = Cone::from_facets(constraints, target.ambient_dim());
                if (sub.dim() == target_dim) next.push_back({std::move(sub), std::move(constraints)});
            }
        }
        cells = std::move(next);
    }

    for (const auto& cell : cells) {
        IntVec p = cell.cone.interior_point();
        bool inside = false;
        for (const auto& piece : pieces)
            if (piece.member(p)) {
                inside = true;
                break;
            }
        if (!inside) return {false, p};
    }
    return {true, std::nullopt};
}

} // namespace k3cone
