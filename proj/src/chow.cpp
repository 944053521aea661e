#include "k3cone/chow.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace k3cone {

namespace {

unsigned degree(const Exponents& e) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
}

bool divisible(const Exponents& mono, const Exponents& by) {
    for (std::size_t i = 0; i < mono.size(); ++i)
        if (mono[i] < by[i]) return false;
    return true;
}

// graded lex, highest first when used for printing
bool grlex_less(const Exponents& a, const Exponents& b) {
    unsigned da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

ChowRing::ChowRing(std::vector<std::string> variables, unsigned dim,
                   std::vector<Exponents> relations, std::map<Exponents, Int> valuation)
    : vars_(std::move(variables)), dim_(dim), relations_(std::move(relations)),
      valuation_(std::move(valuation)) {
    if (vars_.empty()) throw DomainError("ChowRing: no variables");
    if (dim_ == 0) throw DomainError("ChowRing: dimension must be >= 1");
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j]) throw DomainError("ChowRing: duplicate variable " + vars_[i]);
    for (const auto& r : relations_) {
        if (r.size() != vars_.size()) throw DimensionError("ChowRing: relation arity mismatch");
        if (degree(r) == 0 || degree(r) > dim_)
            throw DomainError("ChowRing: relation degree out of range");
    }
    for (const auto& [mono, val] : valuation_) {
        if (mono.size() != vars_.size()) throw DimensionError("ChowRing: valuation arity mismatch");
        if (degree(mono) != dim_)
            throw DomainError("ChowRing: valuation keys must have degree dim");
        if (val != 0)
            for (const auto& r : relations_)
                if (divisible(mono, r))
                    throw DomainError("ChowRing: valuation contradicts a vanishing relation");
    }
}

std::size_t ChowRing::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    throw DomainError("ChowRing: unknown variable " + name);
}

bool ChowRing::killed(const Exponents& mono) const {
    if (degree(mono) > dim_) return true;
    for (const auto& r : relations_)
        if (divisible(mono, r)) return true;
    return false;
}

ChowClass::ChowClass(ChowRingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw DomainError("ChowClass: null ring");
}

ChowClass::ChowClass(ChowRingPtr ring, std::map<Exponents, Int> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    if (!ring_) throw DomainError("ChowClass: null ring");
    reduce();
}

ChowClass ChowClass::variable(ChowRingPtr ring, std::size_t index) {
    Exponents e(ring->variables().size(), 0);
    e[index] = 1;
    std::map<Exponents, Int> t;
    t.emplace(std::move(e), 1);
    return ChowClass(std::move(ring), std::move(t));
}

ChowClass ChowClass::constant(ChowRingPtr ring, Int value) {
    std::map<Exponents, Int> t;
    if (value != 0) t.emplace(Exponents(ring->variables().size(), 0), std::move(value));
    return ChowClass(std::move(ring), std::move(t));
}

void ChowClass::reduce() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0 || ring_->killed(it->first)) it = terms_.erase(it);
        else ++it;
    }
}

void ChowClass::check_same_ring(const ChowClass& o) const {
    if (ring_ != o.ring_) throw DomainError("ChowClass: ring mismatch");
}

bool ChowClass::homogeneous(unsigned* deg) const {
    if (terms_.empty()) {
        if (deg) *deg = 0;
        return true;
    }
    unsigned d = degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (degree(e) != d) return false;
    if (deg) *deg = d;
    return true;
}

ChowClass ChowClass::operator+(const ChowClass& o) const {
    check_same_ring(o);
    std::map<Exponents, Int> t = terms_;
    for (const auto& [e, c] : o.terms_) t[e] += c;
    return ChowClass(ring_, std::move(t));
}

ChowClass ChowClass::operator-(const ChowClass& o) const {
    check_same_ring(o);
    std::map<Exponents, Int> t = terms_;
    for (const auto& [e, c] : o.terms_) t[e] -= c;
    return ChowClass(ring_, std::move(t));
}

ChowClass ChowClass::operator*(const ChowClass& o) const {
    check_same_ring(o);
    std::map<Exponents, Int> t;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            if (ring_->killed(e)) continue;
            t[std::move(e)] += c1 * c2;
        }
    return ChowClass(ring_, std::move(t));
}

ChowClass ChowClass::pow(unsigned k) const {
    ChowClass acc = ChowClass::constant(ring_, 1);
    ChowClass base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

bool ChowClass::operator==(const ChowClass& o) const {
    return ring_ == o.ring_ && terms_ == o.terms_;
}

std::string ChowClass::str() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Exponents, Int>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](auto* a, auto* b) { return grlex_less(b->first, a->first); });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        const auto& [e, c] = *t;
        Int a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_vars = degree(e) > 0;
        if (a != 1 || !has_vars) {
            os << a.get_str();
            if (has_vars) os << "*";
        }
        bool first_var = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << ring_->variables()[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

// -- parser ---------------------------------------------------------------

namespace {

struct Parser {
    const std::string& src;
    std::size_t pos = 0;
    ChowRingPtr ring;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < src.size() && src[pos] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    ChowClass expr() {
        bool neg = false;
        skip_ws();
        while (peek('+') || peek('-')) {
            if (eat('-')) neg = !neg;
            else eat('+');
        }
        ChowClass acc = term();
        if (neg) acc = ChowClass(ring) - acc;
        while (true) {
            skip_ws();
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else break;
        }
        return acc;
    }

    ChowClass term() {
        ChowClass acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    ChowClass factor() {
        ChowClass base = atom();
        if (eat('^')) {
            skip_ws();
            if (pos < src.size() && src[pos] == '-') fail("negative exponent");
            if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
                fail("expected a nonnegative integer exponent");
            unsigned long e = 0;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
                e = e * 10 + static_cast<unsigned long>(src[pos] - '0');
                if (e > 1000000) fail("exponent too large");
                ++pos;
            }
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    ChowClass atom() {
        skip_ws();
        if (pos >= src.size()) fail("unexpected end of expression");
        char c = src[pos];
        if (c == '(') {
            ++pos;
            ChowClass inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
                num += src[pos++];
            return ChowClass::constant(ring, Int(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
                name += src[pos++];
            std::size_t idx;
            try {
                idx = ring->var_index(name);
            } catch (const DomainError&) {
                throw ParseError("unknown variable '" + name + "'", pos - name.size());
            }
            return ChowClass::variable(ring, idx);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

ChowClass parse_class(const std::string& text, ChowRingPtr ring) {
    Parser p{text, 0, std::move(ring)};
    ChowClass c = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return c;
}

// -- derived quantities -----------------------------------------------------

Int top_value(const ChowClass& c) {
    unsigned deg = 0;
    if (!c.homogeneous(&deg)) throw DomainError("top_value: class is not homogeneous");
    if (!c.is_zero() && deg != c.ring()->dim())
        throw DomainError("top_value: class degree != ring dimension");
    Int v = 0;
    const auto& table = c.ring()->valuation();
    for (const auto& [e, coeff] : c.terms()) {
        auto it = table.find(e);
        if (it != table.end()) v += coeff * it->second;
    }
    return v;
}

IntMat fiber_gram(const std::vector<ChowClass>& basis, const ChowClass& h) {
    if (basis.empty()) throw DomainError("fiber_gram: empty basis");
    const auto& ring = h.ring();
    if (ring->dim() < 4) throw DomainError("fiber_gram: ring dimension must be >= 4");
    unsigned deg = 0;
    if (!h.homogeneous(&deg) || deg != 1) throw DomainError("fiber_gram: H must have degree 1");
    for (const auto& b : basis) {
        if (b.ring() != ring) throw DomainError("fiber_gram: basis ring mismatch");
        if (!b.homogeneous(&deg) || deg != 1)
            throw DomainError("fiber_gram: basis classes must have degree 1");
    }
    ChowClass hpow = h.pow(ring->dim() - 2);
    IntMat g(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) {
            Int v = top_value(basis[i] * basis[j] * hpow);
            g(i, j) = v;
            g(j, i) = v;
        }
    return g;
}

ChowClass base_curve_class(const ChowClass& h) {
    unsigned deg = 0;
    if (!h.homogeneous(&deg) || deg != 1)
        throw DomainError("base_curve_class: H must have degree 1");
    return h.pow(h.ring()->dim() - 1);
}

Int curve_genus(const ChowClass& h) {
    unsigned deg = 0;
    if (!h.homogeneous(&deg) || deg != 1) throw DomainError("curve_genus: H must have degree 1");
    Int top = top_value(h.pow(h.ring()->dim()));
    if (top < 0 || top % 2 != 0)
        throw DomainError("curve_genus: H^n must be even and nonnegative");
    return top / 2 + 1;
}

} // namespace k3cone
