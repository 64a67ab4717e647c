// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The harmonic-certify Authors

#ifndef HCERT_ERROR_HPP
#define HCERT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hcert {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define HCERT_DEFINE_ERROR(Name)            \
    class Name : public Error {             \
    public:                                 \
        using Error::Error;                 \
    }

HCERT_DEFINE_ERROR(InvalidArgument);
HCERT_DEFINE_ERROR(DomainError);
HCERT_DEFINE_ERROR(AmbiguousMatch);
HCERT_DEFINE_ERROR(SeparationViolated);
HCERT_DEFINE_ERROR(ThresholdMismatch);
HCERT_DEFINE_ERROR(UnmatchedFrequencies);
HCERT_DEFINE_ERROR(ModelViolation);
HCERT_DEFINE_ERROR(PreconditionViolated);
HCERT_DEFINE_ERROR(DuplicateFrequency);
HCERT_DEFINE_ERROR(RankDeficient);
HCERT_DEFINE_ERROR(ConvergenceFailure);

#undef HCERT_DEFINE_ERROR

} // namespace hcert

#endif
