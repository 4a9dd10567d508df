#pragma once

#include <stdexcept>
#include <string>

namespace apery {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input errors (CLI exit code 1)
struct EmptyInput : Error {
    EmptyInput() : Error("generator list is empty") {}
};
struct NonCofinite : Error {
    explicit NonCofinite(const std::string& what) : Error(what) {}
};
struct NotInSemigroup : Error {
    explicit NotInSemigroup(long long x)
        : Error(std::to_string(x) + " is not an element of the semigroup") {}
};
struct NotInApery : Error {
    explicit NotInApery(long long x)
        : Error(std::to_string(x) + " is not an Apery element") {}
};
struct NotCoprime : Error {
    explicit NotCoprime(const std::string& what) : Error(what) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};
struct IOError : Error {
    explicit IOError(const std::string& what) : Error(what) {}
};

// Internal failures (CLI exit code 2). These signal implementation bugs,
// never invalid input.
struct InternalInconsistency : Error {
    explicit InternalInconsistency(const std::string& what) : Error(what) {}
};
struct RankDisagreement : Error {
    explicit RankDisagreement(const std::string& what) : Error(what) {}
};
struct NoAlternativeRepresentation : Error {
    explicit NoAlternativeRepresentation(const std::string& what) : Error(what) {}
};
struct OracleMismatch : Error {
    explicit OracleMismatch(const std::string& what) : Error(what) {}
};

}  // namespace apery
