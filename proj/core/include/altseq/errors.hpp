#pragma once

#include <stdexcept>
#include <string>

namespace altseq {

// Common base so callers can catch everything from this library at once.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// exact arithmetic kernel
class NonzeroRemainder : public Error { public: using Error::Error; };
class NonInvertible : public Error { public: using Error::Error; };
class BadConstantTerm : public Error { public: using Error::Error; };
class NonzeroConstant : public Error { public: using Error::Error; };
class OrderMismatch : public Error { public: using Error::Error; };
class ZeroPolynomial : public Error { public: using Error::Error; };
class NotAllRootsReal : public Error { public: using Error::Error; };

// permutation statistics
class ParseError : public Error {
public:
    ParseError(const std::string& what, int position)
        : Error(what + " (at token " + std::to_string(position) + ")"), position_(position) {}
    int position() const { return position_; }
private:
    int position_;
};
class EmptyPermutation : public Error { public: using Error::Error; };
class EmptySigma : public Error { public: using Error::Error; };
class ValueAbsent : public Error { public: using Error::Error; };
class SizeLimitExceeded : public Error { public: using Error::Error; };

// counting
class NonIntegerResult : public Error { public: using Error::Error; };
class OutOfRange : public Error { public: using Error::Error; };
class NegativeEntry : public Error { public: using Error::Error; };
class OutOfValidityRange : public Error { public: using Error::Error; };
class MismatchAt : public Error {
public:
    MismatchAt(const std::string& what, const std::string& point)
        : Error(what + " at point " + point), point_(point) {}
    const std::string& point() const { return point_; }
private:
    std::string point_;
};

// CLI / sampling
class CapExceeded : public Error { public: using Error::Error; };
class BudgetExceeded : public Error { public: using Error::Error; };

} // namespace altseq
