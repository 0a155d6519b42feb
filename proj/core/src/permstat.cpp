#include "altseq/permstat.hpp"

#include <algorithm>
#include <stdexcept>

#include "altseq/errors.hpp"

namespace altseq {

DescentWord DescentWord::parse(std::string_view text) {
    DescentWord w;
    int pos = 0;
    for (char c : text) {
        ++pos;
        if (c == 'U' || c == 'u') w.up_.push_back(true);
        else if (c == 'D' || c == 'd') w.up_.push_back(false);
        else throw ParseError(std::string("descent word letter must be U or D, got '") + c + "'", pos);
    }
    return w;
}

DescentWord DescentWord::of_length(int len, bool descents) {
    DescentWord w;
    w.up_.assign(static_cast<size_t>(len), !descents);
    return w;
}

std::string DescentWord::str() const {
    std::string s;
    for (bool u : up_) s += u ? 'U' : 'D';
    return s;
}

DescentWord DescentWord::of_sequence(const std::vector<int>& values) {
    DescentWord w;
    for (size_t i = 0; i + 1 < values.size(); ++i) w.up_.push_back(values[i] < values[i + 1]);
    return w;
}

RunDecomposition runs(const Permutation& w) {
    const int n = w.size();
    if (n == 0) throw EmptyPermutation("run decomposition of the empty permutation");
    RunDecomposition d;
    if (n == 1) {
        d.runs.push_back({0, 0, RunDir::increasing});
        return d;
    }
    d.first_descent = w[0] > w[1];
    int start = 0;
    bool up = w[0] < w[1];
    for (int i = 1; i < n - 1; ++i) {
        bool next_up = w[i] < w[i + 1];
        if (next_up != up) {
            d.runs.push_back({start, i, up ? RunDir::increasing : RunDir::decreasing});
            start = i; // boundary element belongs to both runs
            up = next_up;
        }
    }
    d.runs.push_back({start, n - 1, up ? RunDir::increasing : RunDir::decreasing});
    return d;
}

int as_len(const Permutation& w) {
    const int n = w.size();
    if (n <= 1) return n;
    RunDecomposition d = runs(w);
    return d.count() + (d.first_descent ? 1 : 0);
}

int as_len_dp(const Permutation& w) {
    const int n = w.size();
    if (n == 0) return 0;
    // odd: best odd-length subsequence (singleton or ending on an ascent),
    // even: best even-length one (ending on a descent). A valid alternating
    // subsequence starts with a descent, so an ascent may only follow even.
    int odd = 1, even = 0;
    for (int i = 1; i < n; ++i) {
        if (w[i - 1] > w[i]) even = std::max(even, odd + 1);
        else if (even > 0) odd = std::max(odd, even + 1);
    }
    return std::max(odd, even);
}

std::set<int> descent_set(const Permutation& w) {
    std::set<int> d;
    for (int i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) d.insert(i + 1);
    return d;
}

int is_len(const Permutation& w) {
    std::vector<int> tails; // tails[j] = least tail value of an increasing subsequence of length j+1
    for (int i = 0; i < w.size(); ++i) {
        auto it = std::lower_bound(tails.begin(), tails.end(), w[i]);
        if (it == tails.end()) tails.push_back(w[i]);
        else *it = w[i];
    }
    return static_cast<int>(tails.size());
}

int len_sigma(const Permutation& w, const DescentWord& sigma) {
    if (sigma.empty()) throw EmptySigma("len_sigma requires a nonempty word");
    const int n = w.size();
    if (n == 0) return 0;
    const int none_min = n + 1, none_max = 0;
    // Per achieved length: least and greatest last value over subsequences
    // ending at already-processed positions. A U-extension only asks for the
    // minimum, a D-extension only for the maximum.
    std::vector<int> mn(static_cast<size_t>(n) + 1, none_min);
    std::vector<int> mx(static_cast<size_t>(n) + 1, none_max);
    int best = 0;
    std::vector<int> reached;
    for (int j = 0; j < n; ++j) {
        const int x = w[j];
        reached.clear();
        reached.push_back(1);
        for (int len = 2; len <= best + 1; ++len) {
            bool up = sigma.is_up_cyclic(len - 2); // comparison len-1 of sigma^infty
            bool ok = up ? (mn[len - 1] < x) : (mx[len - 1] > x);
            if (ok) reached.push_back(len);
        }
        for (int len : reached) { // apply after scanning: position j is used once
            mn[len] = std::min(mn[len], x);
            mx[len] = std::max(mx[len], x);
            best = std::max(best, len);
        }
    }
    return best;
}

int max_as_containing_value(const Permutation& w, int v) {
    const int n = w.size();
    int p = -1;
    for (int i = 0; i < n; ++i)
        if (w[i] == v) { p = i; break; }
    if (p < 0) throw ValueAbsent("value " + std::to_string(v) + " does not occur");

    // Forward: best odd/even valid alternating subsequence ending at i.
    std::vector<int> odd_at(n, 1), even_at(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            if (w[j] > w[i] && odd_at[j] >= 1) even_at[i] = std::max(even_at[i], odd_at[j] + 1);
            if (w[j] < w[i] && even_at[j] >= 2) odd_at[i] = std::max(odd_at[i], even_at[j] + 1);
        }
    // Backward: how many elements can still be appended from state
    // "next comparison is a descent" / "next is an ascent".
    std::vector<int> need_desc(n, 0), need_asc(n, 0);
    for (int i = n - 1; i >= 0; --i)
        for (int j = i + 1; j < n; ++j) {
            if (w[j] < w[i]) need_desc[i] = std::max(need_desc[i], 1 + need_asc[j]);
            if (w[j] > w[i]) need_asc[i] = std::max(need_asc[i], 1 + need_desc[j]);
        }
    int result = odd_at[p] + need_desc[p];
    if (even_at[p] >= 2) result = std::max(result, even_at[p] + need_asc[p]);
    return result;
}

namespace {

bool contains_pattern_from(const Permutation& w, const Permutation& v, int q, int from,
                           std::vector<int>& chosen) {
    const int n = w.size(), k = v.size();
    if (q == k) return true;
    for (int p = from; p <= n - (k - q); ++p) {
        bool ok = true;
        for (int m = 0; m < q && ok; ++m)
            if ((v[m] < v[q]) != (chosen[m] < w[p])) ok = false;
        if (!ok) continue;
        chosen[q] = w[p];
        if (contains_pattern_from(w, v, q + 1, p + 1, chosen)) return true;
    }
    return false;
}

} // namespace

bool avoids(const Permutation& w, const Permutation& v) {
    if (v.size() == 0) throw std::invalid_argument("pattern must be nonempty");
    if (v.size() > w.size()) return true;
    std::vector<int> chosen(v.size());
    return !contains_pattern_from(w, v, 0, 0, chosen);
}

std::vector<Permutation> patterns_with_descent_set(int k, const std::set<int>& S) {
    std::vector<Permutation> out;
    for_each_permutation(k, [&](const Permutation& v) {
        if (descent_set(v) == S) out.push_back(v);
    });
    return out;
}

BigInt count_avoiders_descent_class(int n, int k, const std::set<int>& S) {
    if (n < 0 || n > 12)
        throw SizeLimitExceeded("descent-class avoidance is brute force, n must be in 0..12");
    if (k < 1 || k > 6)
        throw SizeLimitExceeded("descent-class avoidance requires 1 <= k <= 6");
    for (int s : S)
        if (s < 1 || s >= k)
            throw std::invalid_argument("descent set must be a subset of [k-1]");
    std::vector<Permutation> patterns = patterns_with_descent_set(k, S);
    BigInt count(0);
    for_each_permutation(n, [&](const Permutation& w) {
        for (const auto& v : patterns)
            if (!avoids(w, v)) return;
        ++count;
    });
    return count;
}

} // namespace altseq
