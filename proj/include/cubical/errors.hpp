#pragma once

#include <stdexcept>
#include <string>

namespace cubical {

/// Position in a source file, 1-based. A zero line means "no location".
struct Span {
    int line = 0;
    int column = 0;
};

std::string to_string(Span span);

class Error : public std::runtime_error {
public:
    Error(const std::string& what, Span span = {}) : std::runtime_error(what), span_(span) {}
    [[nodiscard]] Span span() const { return span_; }

private:
    Span span_;
};

class ParseError : public Error {
    using Error::Error;
};

class ScopeError : public Error {
    using Error::Error;
};

class TypeError : public Error {
    using Error::Error;
};

/// An extent-type side condition failed; the message names the cofibration branch.
class BoundaryError : public TypeError {
    using TypeError::TypeError;
};

class CoverageError : public TypeError {
    using TypeError::TypeError;
};

class NotAPi : public TypeError {
    using TypeError::TypeError;
};

// The following signal bugs in the kernel: checked input never raises them.

class DomainError : public Error {
    using Error::Error;
};

class KanError : public Error {
    using Error::Error;
};

class SystemCoverageError : public DomainError {
    using DomainError::DomainError;
};

} // namespace cubical
