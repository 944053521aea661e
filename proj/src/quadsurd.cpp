#include "k3cone/quadsurd.hpp"

#include <sstream>

namespace k3cone {

std::pair<Int, Int> squarefree_split(const Int& n) {
    if (n <= 0) throw DomainError("squarefree_split: need a positive integer");
    Int s = 1, f = 1, m = n;
    for (Int p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        for (unsigned i = 0; i + 1 < e; i += 2) s *= p;
        if (e % 2) f *= p;
    }
    f *= m;
    return {s, f};
}

QuadSurd::QuadSurd(Rat a, Rat b, const Int& d) : a_(std::move(a)), b_(std::move(b)) {
    if (d <= 0) throw DomainError("QuadSurd: radicand must be positive");
    auto [s, f] = squarefree_split(d);
    b_ *= s;
    d_ = f;
    if (d_ == 1) { // sqrt(1) = 1
        a_ += b_;
        b_ = 0;
    }
    if (b_ == 0) d_ = 1;
}

QuadSurd QuadSurd::sqrt_of(const Int& n) {
    if (n == 0) return QuadSurd(Rat(0));
    return QuadSurd(Rat(0), Rat(1), n);
}

Int QuadSurd::common_radicand(const QuadSurd& o) const {
    if (b_ == 0) return o.d_;
    if (o.b_ == 0) return d_;
    if (d_ != o.d_) throw DomainError("QuadSurd: incompatible radicands");
    return d_;
}

QuadSurd QuadSurd::operator+(const QuadSurd& o) const {
    Int d = common_radicand(o);
    return QuadSurd(a_ + o.a_, b_ + o.b_, d);
}

QuadSurd QuadSurd::operator-(const QuadSurd& o) const {
    Int d = common_radicand(o);
    return QuadSurd(a_ - o.a_, b_ - o.b_, d);
}

QuadSurd QuadSurd::operator-() const { return QuadSurd(-a_, -b_, d_); }

QuadSurd QuadSurd::operator*(const QuadSurd& o) const {
    Int d = common_radicand(o);
    return QuadSurd(a_ * o.a_ + b_ * o.b_ * Rat(d), a_ * o.b_ + b_ * o.a_, d);
}

bool QuadSurd::operator==(const QuadSurd& o) const {
    return a_ == o.a_ && b_ == o.b_ && d_ == o.d_;
}

int QuadSurd::sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 against b^2 d; equality is impossible
    // for squarefree d > 1
    Rat lhs = a_ * a_, rhs = b_ * b_ * Rat(d_);
    return lhs > rhs ? sa : sb;
}

std::string QuadSurd::str() const {
    if (b_ == 0) return to_string(a_);
    std::ostringstream os;
    if (a_ != 0) os << to_string(a_) << (b_ > 0 ? " + " : " - ");
    else if (b_ < 0) os << "-";
    Rat ab = abs(b_);
    if (ab != 1) os << to_string(ab) << "*";
    os << "sqrt(" << d_.get_str() << ")";
    return os.str();
}

} // namespace k3cone
