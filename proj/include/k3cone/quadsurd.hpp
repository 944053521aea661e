#pragma once

#include <string>

#include "k3cone/linalg.hpp"

namespace k3cone {

/// Exact value a + b*sqrt(d) with rational a, b and squarefree d >= 1.
/// d = 1 encodes plain rationals (b is folded into a). Supports +, -, *,
/// equality and sign; mixing two distinct irrational radicands throws.
class QuadSurd {
public:
    QuadSurd() : a_(0), b_(0), d_(1) {}
    QuadSurd(Rat a) : a_(std::move(a)), b_(0), d_(1) {}
    QuadSurd(Rat a, Rat b, const Int& d);

    static QuadSurd sqrt_of(const Int& n); // n >= 0

    const Rat& rational_part() const { return a_; }
    const Rat& surd_part() const { return b_; }
    const Int& radicand() const { return d_; }
    bool is_rational() const { return b_ == 0; }

    QuadSurd operator+(const QuadSurd& o) const;
    QuadSurd operator-(const QuadSurd& o) const;
    QuadSurd operator-() const;
    QuadSurd operator*(const QuadSurd& o) const;
    bool operator==(const QuadSurd& o) const;
    bool operator!=(const QuadSurd& o) const { return !(*this == o); }

    /// -1, 0 or +1.
    int sign() const;
    bool operator<(const QuadSurd& o) const { return (*this - o).sign() < 0; }

    std::string str() const;

private:
    Rat a_, b_;
    Int d_;

    Int common_radicand(const QuadSurd& o) const;
};

/// Split n > 0 as s^2 * f with f squarefree; returns {s, f}.
std::pair<Int, Int> squarefree_split(const Int& n);

} // namespace k3cone
