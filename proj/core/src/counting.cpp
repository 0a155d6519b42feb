#include "altseq/counting.hpp"

#include <ostream>

#include "altseq/errors.hpp"
#include "altseq/permstat.hpp"

namespace altseq {

CountTable::CountTable(int max_n) {
    if (max_n < 0) throw OutOfRange("table size must be nonnegative");
    rows_.resize(static_cast<size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) rows_[n].assign(static_cast<size_t>(n) + 1, BigInt(0));
}

const BigInt& CountTable::a(int n, int k) const {
    if (n < 0 || n > max_n()) throw OutOfRange("row " + std::to_string(n) + " outside table");
    if (k < 0 || k > n) throw OutOfRange("a_k(n) needs 0 <= k <= n");
    return rows_[n][k];
}

BigInt& CountTable::a_mut(int n, int k) {
    return const_cast<BigInt&>(static_cast<const CountTable*>(this)->a(n, k));
}

BigInt CountTable::b(int n, int k) const {
    if (n < 0 || n > max_n()) throw OutOfRange("row " + std::to_string(n) + " outside table");
    if (k < 0) throw OutOfRange("b_k(n) needs k >= 0");
    // #{w : as(w) <= k}; includes a_0, so b_k(0) = 1 as B(x,t) demands.
    BigInt s(0);
    for (int i = 0; i <= std::min(k, n); ++i) s += rows_[n][i];
    return s;
}

BigInt CountTable::row_sum(int n) const { return b(n, n); }

CountTable build_a_table(int max_n) {
    CountTable t(max_n);
    t.a_mut(0, 0) = 1;
    for (int n = 0; n < max_n; ++n) {
        // Row n+1 from rows 0..n. For fixed j the inner sum over 2r+s = k-1
        // is a convolution of E_j[r] = a_{2r}(j)+a_{2r+1}(j) with row n-j.
        for (int j = 0; j <= n; ++j) {
            BigInt binom = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j));
            for (int r = 0; 2 * r <= j; ++r) {
                BigInt e = t.a(j, 2 * r);
                if (2 * r + 1 <= j) e += t.a(j, 2 * r + 1);
                if (sgn(e) == 0) continue;
                e *= binom;
                for (int s = 0; s <= n - j; ++s) {
                    const BigInt& as = t.a(n - j, s);
                    if (sgn(as) == 0) continue;
                    t.a_mut(n + 1, 2 * r + s + 1) += e * as;
                }
            }
        }
    }
    return t;
}

CountTable a_table_bruteforce(int max_n) {
    if (max_n > 8) throw SizeLimitExceeded("brute-force table limited to n <= 8");
    CountTable t(max_n);
    for (int n = 0; n <= max_n; ++n)
        for_each_permutation(n, [&](const Permutation& w) { ++t.a_mut(n, as_len(w)); });
    return t;
}

BigInt b_closed(long k, long n) {
    if (k < 1 || n < 1) throw OutOfRange("closed form b_k(n) needs k, n >= 1");
    BigInt sum(0);
    for (long r = (k % 2 == 0) ? 0 : 1; r <= k; r += 2) {
        BigInt rn; // r^n with 0^n = [n = 0]; here n >= 1, so the r = 0 term drops
        if (r == 0) continue;
        rn = pow_int(BigInt(r), static_cast<unsigned long>(n));
        for (long s = 0; r + 2 * s <= k; ++s) {
            BigInt term = binomial(static_cast<unsigned long>(k - s),
                                   static_cast<unsigned long>((k + r) / 2)) *
                          binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(s)) *
                          rn;
            if (s % 2 == 1) term = -term;
            // (-2)^s contributes the sign above and a factor 2^s
            mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
            sum += term;
        }
    }
    BigRat q(sum, pow_int(BigInt(2), static_cast<unsigned long>(k - 1)));
    q.canonicalize();
    if (q.get_den() != 1)
        throw NonIntegerResult("b_" + std::to_string(k) + "(" + std::to_string(n) +
                               ") came out non-integral: " + to_string(q));
    return q.get_num();
}

namespace {

std::vector<BigInt> g_row(const CountTable& t, int n) {
    // g_0(n) = 0 anchors the inversion of a_k = (g_{k-1} + g_k)/2.
    std::vector<BigInt> g(static_cast<size_t>(n) + 1, BigInt(0));
    for (int k = 1; k <= n; ++k) {
        g[k] = 2 * t.a(n, k) - g[k - 1];
        if (sgn(g[k]) < 0)
            throw NegativeEntry("g_" + std::to_string(k) + "(" + std::to_string(n) +
                                ") negative: inconsistent a-table");
    }
    return g;
}

} // namespace

std::vector<std::vector<BigInt>> g_table(const CountTable& t) {
    std::vector<std::vector<BigInt>> g(static_cast<size_t>(t.max_n()) + 1);
    for (int n = 2; n <= t.max_n(); ++n) g[n] = g_row(t, n);
    return g;
}

Poly T_poly(const CountTable& t, int n) {
    std::vector<BigRat> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[k] = BigRat(t.a(n, k));
    return Poly(std::move(c));
}

Poly G_poly(const CountTable& t, int n) {
    if (n < 2) throw OutOfRange("G_n is defined from the run relation for n >= 2");
    auto g = g_row(t, n);
    std::vector<BigRat> c(g.size());
    for (size_t k = 0; k < g.size(); ++k) c[k] = BigRat(g[k]);
    return Poly(std::move(c));
}

UPolyResult U_poly(const CountTable& t, int n) {
    Poly tn = T_poly(t, n);
    Poly u = tn.div_exact(Poly::one_plus_t().pow(static_cast<unsigned>(n / 2)));
    return {u, u.eval(BigRat(-1))};
}

std::vector<BigInt> euler_numbers(int max_n) {
    if (max_n < 0) throw OutOfRange("euler_numbers needs N >= 0");
    std::vector<BigInt> e;
    e.reserve(static_cast<size_t>(max_n) + 1);
    std::vector<BigInt> row = {BigInt(1)};
    e.push_back(row[0]);
    for (int n = 1; n <= max_n; ++n) {
        std::vector<BigInt> next(static_cast<size_t>(n) + 1, BigInt(0));
        for (int i = 1; i <= n; ++i) next[i] = next[i - 1] + row[n - i];
        e.push_back(next[n]);
        row = std::move(next);
    }
    return e;
}

Poly eulerian_poly(int n) {
    if (n < 1) throw OutOfRange("Eulerian polynomial defined here for n >= 1");
    // A(n,k) = #{w in S_n : des(w) = k}; A_n(t) = sum_k A(n,k) t^{k+1}.
    std::vector<BigInt> row = {BigInt(1)}; // n = 1
    for (int m = 2; m <= n; ++m) {
        std::vector<BigInt> next(static_cast<size_t>(m), BigInt(0));
        for (int k = 0; k < m; ++k) {
            next[k] = BigInt(k + 1) * (k < m - 1 ? row[k] : BigInt(0));
            if (k >= 1) next[k] += BigInt(m - k) * row[k - 1];
        }
        row = std::move(next);
    }
    std::vector<BigRat> c(row.size() + 1);
    c[0] = BigRat(0);
    for (size_t k = 0; k < row.size(); ++k) c[k + 1] = BigRat(row[k]);
    return Poly(std::move(c));
}

bool david_barton_check(const CountTable& t, int n, std::span<const BigRat> w_points) {
    if (n < 2) throw OutOfRange("David-Barton relation is stated for n >= 2");
    Poly gn = G_poly(t, n);
    Poly an = eulerian_poly(n);
    for (const BigRat& w : w_points) {
        if (sgn(w) < 0)
            throw std::invalid_argument("radical parameter w must be >= 0");
        BigRat w2 = w * w;
        BigRat tv = (BigRat(1) - w2) / (BigRat(1) + w2);
        BigRat lhs = gn.eval(tv);
        BigRat half_1pt = (BigRat(1) + tv) / 2;
        BigRat u = (BigRat(1) - w) / (BigRat(1) + w);
        BigRat rhs = pow_rat(half_1pt, static_cast<unsigned long>(n - 1)) *
                     pow_rat(BigRat(1) + w, static_cast<unsigned long>(n + 1)) * an.eval(u);
        if (lhs != rhs)
            throw MismatchAt("David-Barton identity fails for n = " + std::to_string(n),
                             "w = " + to_string(w));
    }
    return true;
}

MomentValue factorial_moment(const CountTable& t, int j, int n) {
    if (j < 0) throw OutOfRange("moment order must be nonnegative");
    BigInt sum(0);
    for (int k = 0; k <= n; ++k) {
        BigInt falling(1);
        for (int i = 0; i < j; ++i) falling *= BigInt(k - i);
        sum += t.a(n, k) * falling;
    }
    BigRat v(sum, factorial(static_cast<unsigned long>(n)));
    v.canonicalize();
    return {j, n, v};
}

BigRat mean_closed(long n) {
    if (n < 2) throw OutOfValidityRange("mean closed form (4n+1)/6 holds for n >= 2");
    BigRat r(4 * n + 1, 6);
    r.canonicalize();
    return r;
}

BigRat var_closed(long n) {
    if (n < 4) throw OutOfValidityRange("variance closed form (32n-13)/180 holds for n >= 4");
    BigRat r(32 * n - 13, 180);
    r.canonicalize();
    return r;
}

int nu_polynomiality_threshold(const CountTable& t, int j) {
    const int N = t.max_n();
    if (N < j + 1) return -1;
    std::vector<BigRat> nu(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) nu[n] = factorial_moment(t, j, n).value;
    auto diff_is_zero = [&](int n) {
        BigRat d(0);
        for (int i = 0; i <= j + 1; ++i) {
            BigRat term = BigRat(binomial(static_cast<unsigned long>(j) + 1,
                                          static_cast<unsigned long>(i))) * nu[n + i];
            d += (i % 2 == 0) ? term : -term;
        }
        return sgn(d) == 0;
    };
    int threshold = -1;
    for (int n = N - j - 1; n >= 0; --n) {
        if (!diff_is_zero(n)) break;
        threshold = n;
    }
    return threshold;
}

void export_csv(const CountTable& t, std::ostream& os, bool col_a, bool col_b, bool col_g) {
    os << "n,k";
    if (col_a) os << ",a";
    if (col_b) os << ",b";
    if (col_g) os << ",g";
    os << "\n";
    auto g = col_g ? g_table(t) : std::vector<std::vector<BigInt>>{};
    for (int n = 0; n <= t.max_n(); ++n) {
        BigInt prefix(0);
        for (int k = 0; k <= n; ++k) {
            prefix += t.a(n, k);
            os << n << "," << k;
            if (col_a) os << "," << to_string(t.a(n, k));
            if (col_b) os << "," << to_string(prefix);
            if (col_g) {
                os << ",";
                if (n >= 2) os << to_string(g[n][k]);
            }
            os << "\n";
        }
    }
}

void export_json(const CountTable& t, std::ostream& os, bool col_a, bool col_b, bool col_g) {
    auto emit_rows = [&](auto&& value_at, bool defined_from_2) {
        os << "[";
        for (int n = 0; n <= t.max_n(); ++n) {
            if (n) os << ",";
            os << "[";
            if (!defined_from_2 || n >= 2) {
                for (int k = 0; k <= n; ++k) {
                    if (k) os << ",";
                    os << "\"" << value_at(n, k) << "\"";
                }
            }
            os << "]";
        }
        os << "]";
    };
    os << "{\"max_n\":" << t.max_n();
    if (col_a) {
        os << ",\"a\":";
        emit_rows([&](int n, int k) { return to_string(t.a(n, k)); }, false);
    }
    if (col_b) {
        os << ",\"b\":";
        emit_rows([&](int n, int k) { return to_string(t.b(n, k)); }, false);
    }
    if (col_g) {
        auto g = g_table(t);
        os << ",\"g\":";
        emit_rows([&](int n, int k) { return to_string(g[n][k]); }, true);
    }
    os << "}\n";
}

} // namespace altseq
