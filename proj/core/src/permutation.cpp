#include "altseq/permutation.hpp"

#include <algorithm>
#include <sstream>

#include "altseq/errors.hpp"

namespace altseq {

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return unchecked(std::move(v));
}

Permutation Permutation::reverse_identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return unchecked(std::move(v));
}

Permutation Permutation::unchecked(std::vector<int> values) {
    Permutation w;
    w.v_ = std::move(values);
    return w;
}

Permutation Permutation::from_values(std::vector<int> values) {
    const int n = static_cast<int>(values.size());
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int i = 0; i < n; ++i) {
        int x = values[i];
        if (x < 1 || x > n)
            throw ParseError("value " + std::to_string(x) + " outside 1.." + std::to_string(n),
                             i + 1);
        if (seen[x])
            throw ParseError("duplicate value " + std::to_string(x) + ", not a bijection", i + 1);
        seen[x] = true;
    }
    return unchecked(std::move(values));
}

Permutation Permutation::parse(std::string_view text) {
    std::string buf(text);
    for (auto& ch : buf)
        if (ch == ',') ch = ' ';
    std::istringstream is(buf);
    std::vector<int> vals;
    std::string tok;
    int pos = 0;
    while (is >> tok) {
        ++pos;
        try {
            size_t used = 0;
            int x = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            vals.push_back(x);
        } catch (const std::exception&) {
            throw ParseError("cannot read integer from \"" + tok + "\"", pos);
        }
    }
    return from_values(std::move(vals));
}

Permutation Permutation::complement() const {
    const int n = size();
    std::vector<int> v(v_.size());
    for (size_t i = 0; i < v_.size(); ++i) v[i] = n + 1 - v_[i];
    return unchecked(std::move(v));
}

bool Permutation::next_lex() { return std::next_permutation(v_.begin(), v_.end()); }

std::string Permutation::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < v_.size(); ++i) {
        if (i) os << ' ';
        os << v_[i];
    }
    return os.str();
}

} // namespace altseq
