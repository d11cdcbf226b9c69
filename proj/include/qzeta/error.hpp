#pragma once

#include <stdexcept>
#include <string>

namespace qzeta {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A documented precondition was violated (bad literal, inadmissible
// composition, index out of range, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// The requested tolerance needs more summands than the configured cap.
class TruncationLimitError : public Error {
public:
    using Error::Error;
};

} // namespace qzeta
