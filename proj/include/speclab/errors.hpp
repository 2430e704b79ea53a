#pragma once

#include <stdexcept>
#include <string>

namespace speclab {

// Error taxonomy mirrored by the CLI exit codes:
//   ConfigError -> 1, NumericError -> 2, HypothesisError -> 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class NumericError : public Error {
public:
    explicit NumericError(const std::string& msg, long index = -1)
        : Error(msg), index_(index) {}
    // Index of the offending row/eigenvalue when the failure is localized.
    long index() const { return index_; }

private:
    long index_;
};

// A mathematical hypothesis of the method is violated by the input
// (e.g. a level set with more than two crossings), as opposed to a
// numerical breakdown.
class HypothesisError : public Error {
public:
    using Error::Error;
};

} // namespace speclab
