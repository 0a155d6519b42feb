#pragma once

#include <string>
#include <utility>
#include <vector>

#include "altseq/rational.hpp"

namespace altseq {

// Dense univariate polynomial in t over BigRat. Trailing zeros are trimmed;
// the zero polynomial has degree kZeroDegree. Degrees in this project stay
// small (a few hundred at most), so dense storage is the right trade.
class Poly {
public:
    static constexpr int kZeroDegree = -1;

    Poly() = default;
    explicit Poly(const BigRat& constant);
    explicit Poly(std::vector<BigRat> coeffs);

    static Poly monomial(const BigRat& coeff, int degree);
    // 1 + t, (1+t)^e and friends come up constantly in this theory.
    static Poly one_plus_t();

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    // Coefficient of t^i; zero beyond the degree.
    BigRat coeff(int i) const;
    const std::vector<BigRat>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const BigRat& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    // Euclidean division; divisor must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& p, const Poly& q);
    // Exact division: throws NonzeroRemainder if q does not divide p.
    Poly div_exact(const Poly& q) const;

    Poly derivative() const;
    BigRat eval(const BigRat& x) const;
    Poly pow(unsigned e) const;

    // Content = gcd of numerators / lcm of denominators, taken positive, so
    // dividing by it preserves all signs. Primitive part has coprime integer
    // coefficients. Zero polynomial maps to itself.
    BigRat content() const;
    Poly primitive_part() const;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<BigRat> c_;
};

Poly gcd(const Poly& a, const Poly& b);           // primitive, positive leading coefficient
Poly squarefree_part(const Poly& p);              // p / gcd(p, p')
std::vector<Poly> squarefree_decomposition(const Poly& p); // Yun: result[e-1] holds multiplicity-e factors

} // namespace altseq
