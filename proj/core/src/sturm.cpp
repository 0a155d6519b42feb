#include "altseq/sturm.hpp"

#include <algorithm>
#include <stdexcept>

#include "altseq/errors.hpp"

namespace altseq {

namespace {

int count_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

} // namespace

SturmChain SturmChain::build(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomial("Sturm chain of the zero polynomial");
    SturmChain chain;
    Poly sf = squarefree_part(p);
    chain.seq_.push_back(sf);
    if (sf.degree() >= 1) {
        chain.seq_.push_back(sf.derivative().primitive_part());
        while (chain.seq_.back().degree() >= 1) {
            const Poly& a = chain.seq_[chain.seq_.size() - 2];
            const Poly& b = chain.seq_.back();
            Poly r = -Poly::divmod(a, b).second;
            if (r.is_zero()) break; // squarefree input: last element is a nonzero constant
            chain.seq_.push_back(r.primitive_part());
        }
    }
    return chain;
}

int SturmChain::variations_at(const BigRat& x) const {
    std::vector<int> signs;
    signs.reserve(seq_.size());
    for (const auto& f : seq_) signs.push_back(sgn(f.eval(x)));
    return count_variations(signs);
}

int SturmChain::variations_pos_inf() const {
    std::vector<int> signs;
    signs.reserve(seq_.size());
    for (const auto& f : seq_) signs.push_back(f.is_zero() ? 0 : sgn(f.coeff(f.degree())));
    return count_variations(signs);
}

int SturmChain::variations_neg_inf() const {
    std::vector<int> signs;
    signs.reserve(seq_.size());
    for (const auto& f : seq_) {
        int s = f.is_zero() ? 0 : sgn(f.coeff(f.degree()));
        if (f.degree() % 2 != 0) s = -s;
        signs.push_back(s);
    }
    return count_variations(signs);
}

int SturmChain::count_whole_line() const { return variations_neg_inf() - variations_pos_inf(); }

int SturmChain::count_in(const BigRat& a, const BigRat& b) const {
    if (a >= b) throw std::invalid_argument("Sturm interval requires a < b");
    return variations_at(a) - variations_at(b);
}

int sturm_real_root_count(const Poly& p) { return SturmChain::build(p).count_whole_line(); }

int sturm_real_root_count(const Poly& p, const BigRat& a, const BigRat& b) {
    return SturmChain::build(p).count_in(a, b);
}

namespace {

// Cauchy bound: every root r of f satisfies |r| < 1 + max|c_i| / |c_d|.
BigRat cauchy_root_bound(const Poly& f) {
    BigRat lead = f.coeff(f.degree());
    if (sgn(lead) < 0) lead = -lead;
    BigRat mx(0);
    for (int i = 0; i < f.degree(); ++i) {
        BigRat a = f.coeff(i);
        if (sgn(a) < 0) a = -a;
        if (a > mx) mx = a;
    }
    return BigRat(1) + mx / lead;
}

} // namespace

std::vector<RootInterval> isolate_real_roots(const Poly& p) {
    SturmChain chain = SturmChain::build(p);
    const Poly& sf = chain.squarefree();
    if (sf.degree() == 0) return {};
    int total = chain.count_whole_line();
    if (total != sf.degree())
        throw NotAllRootsReal("polynomial has " + std::to_string(sf.degree() - total) +
                              " nonreal distinct roots");

    BigRat bound = cauchy_root_bound(sf);
    std::vector<RootInterval> out;
    struct Segment { BigRat lo, hi; int vlo, vhi; };
    std::vector<Segment> work;
    work.push_back({-bound, bound, chain.variations_at(-bound), chain.variations_at(bound)});
    while (!work.empty()) {
        Segment s = work.back();
        work.pop_back();
        int cnt = s.vlo - s.vhi;
        if (cnt == 0) continue;
        if (cnt == 1) {
            out.push_back({s.lo, s.hi});
            continue;
        }
        BigRat mid = (s.lo + s.hi) / 2;
        int vmid = chain.variations_at(mid);
        work.push_back({s.lo, mid, s.vlo, vmid});
        work.push_back({mid, s.hi, vmid, s.vhi});
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

RootInterval refine_root_interval(const SturmChain& chain, RootInterval iv, const BigRat& width) {
    int vlo = chain.variations_at(iv.lo);
    int vhi = chain.variations_at(iv.hi);
    if (vlo - vhi != 1)
        throw std::invalid_argument("interval does not isolate exactly one root");
    while (iv.hi - iv.lo > width) {
        BigRat mid = (iv.lo + iv.hi) / 2;
        int vmid = chain.variations_at(mid);
        if (vlo - vmid == 1) {
            iv.hi = mid;
            vhi = vmid;
        } else {
            iv.lo = mid;
            vlo = vmid;
        }
    }
    return iv;
}

InterlaceReport roots_interlace(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) throw ZeroPolynomial("interlacing of the zero polynomial");
    if (q.degree() != p.degree() + 1)
        throw std::invalid_argument("interlacing expects deg q = deg p + 1");

    // Real-rootedness of both inputs first (NotAllRootsReal otherwise).
    Poly sfp = squarefree_part(p);
    Poly sfq = squarefree_part(q);
    if (sturm_real_root_count(sfp) != sfp.degree())
        throw NotAllRootsReal("first polynomial has nonreal roots");
    if (sturm_real_root_count(sfq) != sfq.degree())
        throw NotAllRootsReal("second polynomial has nonreal roots");

    // One interval per distinct root of either polynomial; shared roots are
    // shared intervals, so no refinement ever has to split equal values.
    std::vector<RootInterval> positions = isolate_real_roots(p * q);

    auto yun_p = squarefree_decomposition(p);
    auto yun_q = squarefree_decomposition(q);
    auto multiplicity_in = [](const std::vector<Poly>& classes, const RootInterval& iv) {
        for (size_t e = 0; e < classes.size(); ++e) {
            if (classes[e].degree() < 1) continue;
            if (sturm_real_root_count(classes[e], iv.lo, iv.hi) == 1)
                return static_cast<int>(e) + 1;
        }
        return 0;
    };

    InterlaceReport report;
    int sum_p = 0, sum_q = 0;
    for (const auto& iv : positions) {
        SharedRootRecord rec;
        rec.where = iv;
        rec.mult_p = multiplicity_in(yun_p, iv);
        rec.mult_q = multiplicity_in(yun_q, iv);
        sum_p += rec.mult_p;
        sum_q += rec.mult_q;
        if (rec.mult_p > 0 && rec.mult_q > 0) ++report.shared_root_count;
        report.roots.push_back(std::move(rec));
    }
    if (sum_p != p.degree() || sum_q != q.degree())
        throw Error("interlacing: root multiplicities do not add up to the degrees");

    // Sorted multisets as ranks into the common position order.
    std::vector<int> alpha, beta; // q-roots, p-roots
    for (size_t i = 0; i < report.roots.size(); ++i) {
        alpha.insert(alpha.end(), report.roots[i].mult_q, static_cast<int>(i));
        beta.insert(beta.end(), report.roots[i].mult_p, static_cast<int>(i));
    }
    bool ok = true;
    for (size_t i = 0; i < beta.size(); ++i)
        if (!(alpha[i] <= beta[i] && beta[i] <= alpha[i + 1])) { ok = false; break; }
    report.interlaces = ok;
    return report;
}

} // namespace altseq
