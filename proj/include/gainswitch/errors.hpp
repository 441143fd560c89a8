#pragma once

#include <stdexcept>
#include <string>

namespace gainswitch {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad graph, bad file, bad face list, mismatched groups.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An enumeration-based routine was asked to run above its configured cap.
class TooLargeError : public Error {
public:
    TooLargeError(const std::string& what, long long size, long long cap)
        : Error(what + ": instance too large (" + std::to_string(size) + " > cap " +
                std::to_string(cap) + ")"),
          size_(size),
          cap_(cap) {}

    long long size() const noexcept { return size_; }
    long long cap() const noexcept { return cap_; }

private:
    long long size_;
    long long cap_;
};

/// Floating point routine failed to converge or drifted off an exact value.
class NumericError : public Error {
public:
    using Error::Error;
};

}  // namespace gainswitch
