#pragma once

#include <stdexcept>
#include <string>

namespace rwa {

// Base class for all library errors. The CLI maps FileNotFoundError (and
// other I/O failures) to exit code 2 and every other Error to exit code 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class FileNotFoundError : public Error {
public:
    using Error::Error;
};

/// Missing or unknown column/field, wrong field count; carries a row/line locus.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// A value violates a domain invariant (negative count, zero holders, ...).
class ValueError : public Error {
public:
    using Error::Error;
};

class DuplicateTickerError : public Error {
public:
    using Error::Error;
};

class EmptyDistributionError : public Error {
public:
    using Error::Error;
};

class AllZeroWeightsError : public Error {
public:
    using Error::Error;
};

class EmptyReferenceSetError : public Error {
public:
    using Error::Error;
};

class UnknownMetricError : public Error {
public:
    using Error::Error;
};

class InvalidWeightsError : public Error {
public:
    using Error::Error;
};

class ZeroAssetValueError : public Error {
public:
    using Error::Error;
};

}  // namespace rwa
