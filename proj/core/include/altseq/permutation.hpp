#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace altseq {

// Permutation of {1..n} in one-line notation. Construction validates the
// bijection property; everything downstream may rely on it.
class Permutation {
public:
    Permutation() = default;
    static Permutation identity(int n);
    static Permutation reverse_identity(int n);
    // Validates values as a bijection on {1..n}; ParseError on violation.
    static Permutation from_values(std::vector<int> values);
    // Whitespace- or comma-separated one-line notation, e.g. "6 4 2 8 3 1 5 7".
    static Permutation parse(std::string_view text);
    // No validation: for samplers that construct bijections by shuffling.
    static Permutation unchecked(std::vector<int> values);

    int size() const { return static_cast<int>(v_.size()); }
    int operator[](int pos) const { return v_[pos]; } // 0-based position, value in 1..n
    const std::vector<int>& values() const { return v_; }

    Permutation complement() const; // w_i -> n+1-w_i

    // Lexicographic successor; false after wrapping past the last one.
    bool next_lex();

    std::string str() const;
    bool operator==(const Permutation& o) const { return v_ == o.v_; }

private:
    std::vector<int> v_;
};

// Apply fn to every permutation of S_n in lexicographic order.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    Permutation w = Permutation::identity(n);
    do {
        fn(const_cast<const Permutation&>(w));
    } while (w.next_lex());
}

} // namespace altseq
