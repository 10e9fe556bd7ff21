// SPDX-FileCopyrightText: 2026 The povmkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

namespace povmkit {

// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The caller supplied data that violates a precondition or domain invariant.
// Maps to status/exit code 2.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// An operation ran to completion but its result violates a semantic
// contract (e.g. reconstructed operator is not a density operator).
// Maps to status/exit code 3.
class SemanticError : public Error {
public:
    using Error::Error;
};

#define POVMKIT_DEFINE_ERROR(NAME, BASE) \
    class NAME : public BASE {           \
    public:                              \
        using BASE::BASE;                \
    }

POVMKIT_DEFINE_ERROR(NotHermitianError, InvalidInput);
POVMKIT_DEFINE_ERROR(NotEffectError, InvalidInput);
POVMKIT_DEFINE_ERROR(DimensionMismatchError, InvalidInput);
POVMKIT_DEFINE_ERROR(IncompletePovmError, InvalidInput);
POVMKIT_DEFINE_ERROR(IncompleteVectorSetError, InvalidInput);
POVMKIT_DEFINE_ERROR(OutsideConeError, InvalidInput);
POVMKIT_DEFINE_ERROR(IndexOutOfRangeError, InvalidInput);
POVMKIT_DEFINE_ERROR(NotUnitVectorError, InvalidInput);
POVMKIT_DEFINE_ERROR(BadParameterError, InvalidInput);
POVMKIT_DEFINE_ERROR(UnknownNameError, InvalidInput);
POVMKIT_DEFINE_ERROR(RealityViolatedError, InvalidInput);
POVMKIT_DEFINE_ERROR(InvalidBlochVectorError, InvalidInput);
POVMKIT_DEFINE_ERROR(MissingSamplesError, InvalidInput);
POVMKIT_DEFINE_ERROR(ParseError, InvalidInput);
POVMKIT_DEFINE_ERROR(NotDensityError, SemanticError);

#undef POVMKIT_DEFINE_ERROR

} // namespace povmkit
