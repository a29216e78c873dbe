#pragma once

#include <stdexcept>
#include <string>

namespace hcara {

/// Malformed input: bad dimensions, unparsable literals, zero normals.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called outside its domain (e.g. a point not in the hull).
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// A cone witness set B failed to cover H, so B does not realize the cone number.
class NotMaximalError : public PreconditionError {
public:
    explicit NotMaximalError(const std::string& what) : PreconditionError("NOT-MAXIMAL-B: " + what) {}
};

/// A self-check on an exact computation failed. Indicates a bug.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// Random instance generation exhausted its rejection budget.
class SamplingError : public std::runtime_error {
public:
    explicit SamplingError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hcara
