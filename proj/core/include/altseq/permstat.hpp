#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "altseq/permutation.hpp"
#include "altseq/rational.hpp"

namespace altseq {

enum class RunDir { increasing, decreasing };

// Maximal monotone factor w_begin..w_end (0-based, inclusive). Consecutive
// runs share their boundary element, as in 64283157 -> 642, 28, 831, 157.
struct Run {
    int begin = 0;
    int end = 0;
    RunDir dir = RunDir::increasing;
};

struct RunDecomposition {
    std::vector<Run> runs;
    bool first_descent = false; // w_1 > w_2 (false when n < 2)
    int count() const { return static_cast<int>(runs.size()); }
};

// Word over {U, D}; a word of length m-1 describes sequences of length m.
class DescentWord {
public:
    DescentWord() = default;
    // Accepts strings like "DU" or "UUD"; anything else is a ParseError.
    static DescentWord parse(std::string_view text);
    static DescentWord of_length(int len, bool descents); // U^len or D^len

    int size() const { return static_cast<int>(up_.size()); }
    bool empty() const { return up_.empty(); }
    bool is_up(int i) const { return up_[i]; } // i-th letter, 0-based
    // Letter of the infinite repetition sigma^infty at 0-based index i.
    bool is_up_cyclic(int i) const { return up_[i % up_.size()]; }
    std::string str() const;

    // Descent word of a sequence of distinct values (length m -> word m-1).
    static DescentWord of_sequence(const std::vector<int>& values);

private:
    std::vector<bool> up_;
};

// Length of the longest alternating subsequence w_{i1} > w_{i2} < w_{i3} > ...
// O(n) from the run decomposition: g(w) + 1 if w starts with a descent.
int as_len(const Permutation& w);

// Independent O(n) oracle: single sweep over adjacent comparisons carrying
// (best odd length, best even length) of a valid alternating subsequence.
int as_len_dp(const Permutation& w);

RunDecomposition runs(const Permutation& w); // throws EmptyPermutation

// D(w) = { i : w_i > w_{i+1} }, 1-based positions in [n-1].
std::set<int> descent_set(const Permutation& w);

// Longest increasing subsequence via patience sorting, O(n log n).
int is_len(const Permutation& w);

// Longest subsequence whose descent word is a prefix of sigma^infty.
// O(n^2): per length, the reachable "last value" minimum and maximum are all
// that extensions by U or D ever consult. Throws EmptySigma.
int len_sigma(const Permutation& w, const DescentWord& sigma);

// Longest alternating subsequence constrained to pass through the entry with
// value v. Throws ValueAbsent.
int max_as_containing_value(const Permutation& w, int v);

// True iff w has no subsequence order-isomorphic to v. DFS with monotone
// pruning; intended for |v| <= 6, n <= 12.
bool avoids(const Permutation& w, const Permutation& v);

// All v in S_k with descent set exactly S.
std::vector<Permutation> patterns_with_descent_set(int k, const std::set<int>& S);

// Number of w in S_n avoiding every v in S_k with D(v) = S. Guarded brute
// force: throws SizeLimitExceeded beyond n = 12 or k outside 1..6.
BigInt count_avoiders_descent_class(int n, int k, const std::set<int>& S);

} // namespace altseq
