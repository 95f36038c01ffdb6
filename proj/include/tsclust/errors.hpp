#pragma once

#include <stdexcept>
#include <string>

namespace tsclust {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MalformedLine final : public Error {
public:
    using Error::Error;
};

class EmptySelection final : public Error {
public:
    using Error::Error;
};

class RaggedLengths final : public Error {
public:
    using Error::Error;
};

class NonFiniteInput final : public Error {
public:
    using Error::Error;
};

class DivergedTraining final : public Error {
public:
    using Error::Error;
};

class InsufficientHistory final : public Error {
public:
    using Error::Error;
};

class SeriesTooShort final : public Error {
public:
    using Error::Error;
};

class KTooLarge final : public Error {
public:
    using Error::Error;
};

class LengthMismatch final : public Error {
public:
    using Error::Error;
};

class SingleCluster final : public Error {
public:
    using Error::Error;
};

class ReportWriteFailure final : public Error {
public:
    using Error::Error;
};

} // namespace tsclust
