#include "k3cone/words.hpp"

#include <algorithm>
#include <map>

namespace k3cone {

namespace {

std::vector<Int> flatten(const IntMat& m) {
    std::vector<Int> f;
    f.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) f.push_back(m(i, j));
    return f;
}

} // namespace

WordSet enumerate_words(const std::vector<LabeledMatrix>& generators, unsigned max_len,
                        bool include_inverses) {
    if (generators.empty()) throw DomainError("enumerate_words: no generators");
    const std::size_t n = generators.front().matrix.rows();
    std::vector<LabeledMatrix> gens;
    for (const auto& g : generators) {
        if (!g.matrix.square() || g.matrix.rows() != n)
            throw DimensionError("enumerate_words: generator size mismatch");
        Int d = det(g.matrix);
        if (d != 1 && d != -1)
            throw DomainError("enumerate_words: generator '" + g.label + "' is not unimodular");
        gens.push_back(g);
        if (include_inverses) {
            IntMat inv = unimodular_inverse(g.matrix);
            if (inv != g.matrix) gens.push_back({g.label + "^-1", std::move(inv)});
        }
    }

    WordSet out;
    std::map<std::vector<Int>, std::size_t> seen;
    const IntMat id = IntMat::identity(n);
    out.matrices.push_back(id);
    out.words.push_back("e");
    seen.emplace(flatten(id), 0);

    std::size_t level_begin = 0;
    for (unsigned len = 1; len <= max_len; ++len) {
        std::size_t level_end = out.matrices.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (const auto& g : gens) {
                IntMat prod = out.matrices[i] * g.matrix;
                auto key = flatten(prod);
                if (seen.count(key)) continue;
                seen.emplace(std::move(key), out.matrices.size());
                out.words.push_back(out.words[i] == "e" ? g.label : out.words[i] + "*" + g.label);
                out.matrices.push_back(std::move(prod));
            }
        level_begin = level_end;
        if (level_begin == out.matrices.size()) break; // closed under products
    }
    return out;
}

std::vector<IntVec> dirichlet_halfspaces(const IntLattice& l, const IntVec& x,
                                         const WordSet& words) {
    if (x.size() != l.rank()) throw DimensionError("dirichlet_halfspaces: base point length != rank");
    IntVec gx = l.gram().apply(x);
    std::vector<IntVec> normals;
    for (const auto& g : words.matrices) {
        if (g.rows() != l.rank()) throw DimensionError("dirichlet_halfspaces: word size != rank");
        // (g - I)^T . gram . x
        IntVec n = g.transpose().apply(gx);
        n = sub(n, gx);
        if (is_zero(n)) continue;
        normals.push_back(primitive(n));
    }
    std::sort(normals.begin(), normals.end(), lex_less);
    normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
    return normals;
}

DirichletDomain dirichlet_domain(const IntLattice& l, const IntVec& x,
                                 const std::vector<LabeledMatrix>& generators, unsigned max_len,
                                 bool include_inverses) {
    WordSet words = enumerate_words(generators, max_len, include_inverses);
    std::vector<IntVec> normals = dirichlet_halfspaces(l, x, words);
    DirichletDomain d{Cone::from_facets(normals, l.rank()), normals.empty(), {}};
    for (const auto& r : d.cone.rays())
        if (l.norm(r) < 0) d.rays_outside_positive.push_back(r);
    return d;
}

} // namespace k3cone
