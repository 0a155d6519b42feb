#pragma once

#include <vector>

#include "altseq/poly.hpp"

namespace altseq {

// Signed remainder sequence of the squarefree part of p and its derivative,
// content-normalized each step (division by a positive rational only, so all
// signs survive). With the zero-skipping convention, the variation count
// V(a) - V(b) equals the number of distinct real roots of p in (a, b].
class SturmChain {
public:
    static SturmChain build(const Poly& p); // throws ZeroPolynomial

    const std::vector<Poly>& sequence() const { return seq_; }
    const Poly& squarefree() const { return seq_.front(); }

    int variations_at(const BigRat& x) const;
    int variations_neg_inf() const;
    int variations_pos_inf() const;

    int count_whole_line() const;
    int count_in(const BigRat& a, const BigRat& b) const; // (a, b]

private:
    std::vector<Poly> seq_;
};

int sturm_real_root_count(const Poly& p);                                   // whole line
int sturm_real_root_count(const Poly& p, const BigRat& a, const BigRat& b); // (a, b]

// Half-open isolating interval (lo, hi] containing exactly one distinct root.
struct RootInterval {
    BigRat lo, hi;
    BigRat width() const { return hi - lo; }
};

// Disjoint sorted isolating intervals, one per distinct real root.
// Precondition (checked): every root of p is real.
std::vector<RootInterval> isolate_real_roots(const Poly& p);

// Bisect an isolating interval of the chain's polynomial down to the width.
RootInterval refine_root_interval(const SturmChain& chain, RootInterval iv, const BigRat& width);

// One distinct real root of p*q with its multiplicity in each polynomial.
struct SharedRootRecord {
    RootInterval where;
    int mult_p = 0;
    int mult_q = 0;
};

struct InterlaceReport {
    bool interlaces = false;
    int shared_root_count = 0;
    std::vector<SharedRootRecord> roots; // ascending by root value
};

// Exact certificate that the full root multisets of p (degree m) and q
// (degree m+1) interlace weakly: a_1 <= b_1 <= a_2 <= ... <= b_m <= a_{m+1}.
// Shared roots are identified exactly through the squarefree part of p*q, so
// the certificate handles common zeros (which T_n and T_{n+1} really have at
// 0 and -1) without trying to separate the inseparable. Throws
// NotAllRootsReal if either polynomial has a nonreal root.
InterlaceReport roots_interlace(const Poly& p, const Poly& q);

} // namespace altseq
