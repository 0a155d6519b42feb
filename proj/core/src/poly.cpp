#include "altseq/poly.hpp"

#include <sstream>

#include "altseq/errors.hpp"

namespace altseq {

Poly::Poly(const BigRat& constant) {
    if (sgn(constant) != 0) c_.push_back(constant);
}

Poly::Poly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const BigRat& coeff, int degree) {
    if (sgn(coeff) == 0) return Poly();
    std::vector<BigRat> c(static_cast<size_t>(degree) + 1, BigRat(0));
    c.back() = coeff;
    return Poly(std::move(c));
}

Poly Poly::one_plus_t() { return Poly({BigRat(1), BigRat(1)}); }

BigRat Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return BigRat(0);
    return c_[i];
}

void Poly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<BigRat> r(std::max(c_.size(), o.c_.size()), BigRat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<BigRat> r(c_.size() + o.c_.size() - 1, BigRat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly Poly::operator*(const BigRat& s) const {
    if (sgn(s) == 0) return Poly();
    Poly r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw ZeroPolynomial("polynomial division by zero");
    if (p.degree() < q.degree()) return {Poly(), p};
    std::vector<BigRat> rem = p.c_;
    std::vector<BigRat> quot(static_cast<size_t>(p.degree() - q.degree()) + 1, BigRat(0));
    const BigRat& lead = q.c_.back();
    for (int d = p.degree(); d >= q.degree(); --d) {
        BigRat f = rem[d] / lead;
        if (sgn(f) == 0) continue;
        quot[d - q.degree()] = f;
        for (int j = 0; j <= q.degree(); ++j)
            rem[d - q.degree() + j] -= f * q.c_[j];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::div_exact(const Poly& q) const {
    auto [quot, rem] = divmod(*this, q);
    if (!rem.is_zero())
        throw NonzeroRemainder("exact polynomial division left remainder " + rem.str());
    return quot;
}

Poly Poly::derivative() const {
    if (degree() < 1) return Poly();
    std::vector<BigRat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * BigRat(static_cast<long>(i));
    return Poly(std::move(r));
}

BigRat Poly::eval(const BigRat& x) const {
    BigRat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::pow(unsigned e) const {
    Poly acc(BigRat(1));
    Poly base(*this);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

BigRat Poly::content() const {
    if (is_zero()) return BigRat(0);
    BigInt num_gcd(0), den_lcm(1);
    for (const auto& x : c_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
    }
    BigRat c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return *this;
    BigRat c = content();
    Poly r(*this);
    for (auto& x : r.c_) x /= c;
    return r;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        BigRat a = c_[i];
        if (first) {
            if (sgn(a) < 0) { os << "-"; a = -a; }
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        bool unit = (a == 1);
        if (i == 0) os << to_string(a);
        else {
            if (!unit) os << to_string(a) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
    // Rational Euclid with content removal each step to hold coefficient
    // growth down; result normalized primitive with positive leading term.
    Poly u = a, v = b;
    while (!v.is_zero()) {
        Poly r = Poly::divmod(u, v).second;
        if (!r.is_zero()) r = r.primitive_part();
        u = v;
        v = r;
    }
    if (u.is_zero()) return u;
    u = u.primitive_part();
    if (sgn(u.coeff(u.degree())) < 0) u = -u;
    return u;
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomial("squarefree part of zero polynomial");
    if (p.degree() == 0) return Poly(BigRat(1));
    Poly g = gcd(p, p.derivative());
    return p.div_exact(g).primitive_part();
}

std::vector<Poly> squarefree_decomposition(const Poly& p) {
    // Yun's algorithm over Q; characteristic zero so no separability snags.
    if (p.is_zero()) throw ZeroPolynomial("squarefree decomposition of zero polynomial");
    std::vector<Poly> out;
    if (p.degree() == 0) return out;
    Poly d = p.derivative();
    Poly a = gcd(p, d);
    Poly b = p.div_exact(a);
    Poly c = d.div_exact(a) - b.derivative();
    while (b.degree() > 0) {
        Poly f = gcd(b, c);
        out.push_back(f);
        b = b.div_exact(f);
        c = c.div_exact(f) - b.derivative();
    }
    return out;
}

} // namespace altseq
