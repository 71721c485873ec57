#pragma once

#include <stdexcept>
#include <string>

namespace homcover {

// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text (graph, morphism, walk or chain files).
class ParseError : public Error {
public:
    using Error::Error;
};

// A structurally valid request that violates an operation's precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

}  // namespace homcover
