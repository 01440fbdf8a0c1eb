#pragma once

#include <stdexcept>
#include <string>

namespace zka {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define ZKA_DEFINE_ERROR(name)                      \
    class name : public Error {                     \
    public:                                         \
        using Error::Error;                         \
    }

// parameter and shape violations
ZKA_DEFINE_ERROR(BadParameters);
ZKA_DEFINE_ERROR(SizeMismatch);
ZKA_DEFINE_ERROR(IndexOutOfRange);
ZKA_DEFINE_ERROR(DuplicateIndex);
ZKA_DEFINE_ERROR(TooSmall);
ZKA_DEFINE_ERROR(TooLarge);
ZKA_DEFINE_ERROR(CoverageMismatch);
ZKA_DEFINE_ERROR(MalformedValue);

// modular arithmetic
ZKA_DEFINE_ERROR(BadModulus);
ZKA_DEFINE_ERROR(NotPrime);

// protocol engine
ZKA_DEFINE_ERROR(UnsupportedChallenge);
ZKA_DEFINE_ERROR(InvalidKeyPair);
ZKA_DEFINE_ERROR(MalformedTranscript);
ZKA_DEFINE_ERROR(NotBothAccepting);
ZKA_DEFINE_ERROR(NonInvertibleResponse);
ZKA_DEFINE_ERROR(ExtractionFailed);

// wire and transport
ZKA_DEFINE_ERROR(WireError);
class UnknownTag : public WireError {
public:
    using WireError::WireError;
};
class InvalidChallengeByte : public WireError {
public:
    using WireError::WireError;
};
ZKA_DEFINE_ERROR(PayloadTooLarge);
ZKA_DEFINE_ERROR(ProtocolViolation);
ZKA_DEFINE_ERROR(Timeout);
ZKA_DEFINE_ERROR(TransportClosed);
ZKA_DEFINE_ERROR(StatementMismatch);

// key files
ZKA_DEFINE_ERROR(KeyFileError);

#undef ZKA_DEFINE_ERROR

}  // namespace zka
