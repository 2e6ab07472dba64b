#pragma once

#include <stdexcept>
#include <string>

namespace shadowsum {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonAdmissible : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct BoundExceeded : Error {
    using Error::Error;
};

struct OddIndex : Error {
    using Error::Error;
};

struct OpenEndpoints : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct MissingDecoration : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

struct Divergent : Error {
    using Error::Error;
};

}  // namespace shadowsum
