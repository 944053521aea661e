#include "k3cone/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace k3cone {

IntMat to_int(const RatMat& m) {
    IntMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1)
                throw DomainError("matrix entry is not an integer");
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

RatMat to_rat(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return r;
}

Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw DimensionError("add: length mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw DimensionError("sub: length mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVec scale(const Int& c, const IntVec& v) {
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

bool is_zero(const IntVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

IntVec primitive(const IntVec& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g == 0 || g == 1) return v;
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

IntVec primitive(const RatVec& v) {
    Int den = 1;
    for (const auto& q : v) den = lcm(den, q.get_den());
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].get_num() * (den / v[i].get_den());
    return primitive(r);
}

bool lex_less(const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(const IntVec& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].get_str();
    }
    os << "]";
    return os.str();
}

std::string to_string(const IntMat& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << ", ";
        os << to_string(m.row(i));
    }
    os << "]";
    return os.str();
}

std::string to_string(const Rat& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

std::string to_string(const RatMat& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << ", ";
        os << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << to_string(m(i, j));
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

// Row echelon over Q, in place. Returns rank.
std::size_t echelon(RatMat& m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            Rat f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

} // namespace

std::size_t rank(const IntMat& m) {
    RatMat q = to_rat(m);
    return echelon(q);
}

std::size_t rank_of_rows(const std::vector<IntVec>& rows, std::size_t cols) {
    RatMat q(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionError("rank_of_rows: ragged input");
        for (std::size_t j = 0; j < cols; ++j) q(i, j) = rows[i][j];
    }
    return echelon(q);
}

Rat det(const RatMat& m) {
    if (!m.square()) throw DimensionError("det: matrix not square");
    RatMat a = m;
    Rat d = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        std::size_t p = c;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) return Rat(0);
        if (p != c) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(c, j));
            d = -d;
        }
        d *= a(c, c);
        for (std::size_t i = c + 1; i < a.rows(); ++i) {
            if (a(i, c) == 0) continue;
            Rat f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(c, j);
        }
    }
    return d;
}

Int det(const IntMat& m) {
    Rat d = det(to_rat(m));
    return d.get_num(); // denominator is 1 for integral input
}

RatMat inverse(const RatMat& m) {
    if (!m.square()) throw DimensionError("inverse: matrix not square");
    std::size_t n = m.rows();
    RatMat a = m;
    RatMat inv = RatMat::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) throw SingularError("inverse: singular matrix");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        Rat piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            Rat f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

RatMat inverse(const IntMat& m) { return inverse(to_rat(m)); }

IntMat unimodular_inverse(const IntMat& m) {
    Int d = det(m);
    if (d != 1 && d != -1) throw DomainError("unimodular_inverse: |det| != 1");
    return to_int(inverse(m));
}

RatMat solve(const RatMat& a, const RatMat& b) {
    if (!a.square()) throw DimensionError("solve: matrix not square");
    if (a.rows() != b.rows()) throw DimensionError("solve: right-hand side shape mismatch");
    return inverse(a) * b;
}

std::vector<IntVec> rref_basis(const std::vector<IntVec>& rows, std::size_t cols) {
    RatMat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionError("rref_basis: ragged input");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        Rat piv = m(r, c);
        for (std::size_t j = 0; j < cols; ++j) m(r, j) /= piv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (std::size_t j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    std::vector<IntVec> basis;
    for (std::size_t i = 0; i < r; ++i) {
        RatVec row(cols);
        for (std::size_t j = 0; j < cols; ++j) row[j] = m(i, j);
        basis.push_back(primitive(row)); // leading entry 1 stays positive
    }
    return basis;
}

// -- Smith normal form ----------------------------------------------------

namespace {

struct SnfState {
    IntMat a, left, right;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(i, k), a(j, k));
        for (std::size_t k = 0; k < left.cols(); ++k) std::swap(left(i, k), left(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < a.rows(); ++k) std::swap(a(k, i), a(k, j));
        for (std::size_t k = 0; k < right.rows(); ++k) std::swap(right(k, i), right(k, j));
    }
    // row i -= f * row j
    void add_row(std::size_t i, std::size_t j, const Int& f) {
        for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) -= f * a(j, k);
        for (std::size_t k = 0; k < left.cols(); ++k) left(i, k) -= f * left(j, k);
    }
    void add_col(std::size_t i, std::size_t j, const Int& f) {
        for (std::size_t k = 0; k < a.rows(); ++k) a(k, i) -= f * a(k, j);
        for (std::size_t k = 0; k < right.rows(); ++k) right(k, i) -= f * right(k, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) = -a(i, k);
        for (std::size_t k = 0; k < left.cols(); ++k) left(i, k) = -left(i, k);
    }
};

} // namespace

SmithForm snf(const IntMat& input) {
    const std::size_t m = input.rows(), n = input.cols();
    SnfState s{input, IntMat::identity(m), IntMat::identity(n)};
    const std::size_t t = std::min(m, n);

    for (std::size_t k = 0; k < t; ++k) {
        // pivot: minimal nonzero absolute value in the trailing block
        std::size_t pi = k, pj = k;
        Int best = 0;
        for (std::size_t i = k; i < m; ++i)
            for (std::size_t j = k; j < n; ++j) {
                if (s.a(i, j) == 0) continue;
                Int v = abs(s.a(i, j));
                if (best == 0 || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break; // trailing block is zero
        s.swap_rows(k, pi);
        s.swap_cols(k, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = k + 1; i < m; ++i) {
                if (s.a(i, k) == 0) continue;
                Int q = s.a(i, k) / s.a(k, k); // truncated division
                s.add_row(i, k, q);
                if (s.a(i, k) != 0) {
                    s.swap_rows(k, i); // remainder is smaller; restart
                    clean = false;
                }
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (s.a(k, j) == 0) continue;
                Int q = s.a(k, j) / s.a(k, k);
                s.add_col(j, k, q);
                if (s.a(k, j) != 0) {
                    s.swap_cols(k, j);
                    clean = false;
                }
            }
        }
    }

    // enforce the divisibility chain d_k | d_{k+1}
    for (std::size_t k = 0; k + 1 < t; ++k) {
        if (s.a(k, k) == 0) break; // zeros are trailing
        for (std::size_t j = k + 1; j < t; ++j) {
            if (s.a(j, j) == 0) continue;
            if (s.a(j, j) % s.a(k, k) == 0) continue;
            // fold a(j,j) into column k, then re-reduce the 2x2 corner
            s.add_col(k, j, Int(-1));
            bool clean = false;
            while (!clean) {
                clean = true;
                if (s.a(j, k) != 0) {
                    Int q = s.a(j, k) / s.a(k, k);
                    s.add_row(j, k, q);
                    if (s.a(j, k) != 0) {
                        s.swap_rows(k, j);
                        clean = false;
                        continue;
                    }
                }
                if (s.a(k, j) != 0) {
                    Int q = s.a(k, j) / s.a(k, k);
                    s.add_col(j, k, q);
                    if (s.a(k, j) != 0) {
                        s.swap_cols(k, j);
                        clean = false;
                    }
                }
            }
        }
    }

    for (std::size_t k = 0; k < t; ++k)
        if (s.a(k, k) < 0) s.negate_row(k);

    SmithForm out;
    out.diag.resize(t);
    for (std::size_t k = 0; k < t; ++k) out.diag[k] = s.a(k, k);
    out.left = std::move(s.left);
    out.right = std::move(s.right);
    return out;
}

IntVec char_poly(const IntMat& m) {
    if (!m.square()) throw DimensionError("char_poly: matrix not square");
    const std::size_t n = m.rows();
    // Faddeev-LeVerrier; every division below is exact.
    IntVec c(n + 1);
    c[0] = 1;
    IntMat acc = IntMat::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        acc = m * acc;
        Int tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += acc(i, i);
        Int ck;
        mpz_divexact(ck.get_mpz_t(), Int(-tr).get_mpz_t(), Int(k).get_mpz_t());
        c[k] = ck;
        if (k < n)
            for (std::size_t i = 0; i < n; ++i) acc(i, i) += ck;
    }
    return c;
}

} // namespace k3cone
