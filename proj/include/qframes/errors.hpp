#pragma once

#include <stdexcept>
#include <string>

namespace qframes {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class ZeroDivision : public Error {
public:
    explicit ZeroDivision(const std::string& what) : Error(what) {}
};

class NotHermitian : public Error {
public:
    explicit NotHermitian(const std::string& what) : Error(what) {}
};

class NotEmbeddable : public Error {
public:
    explicit NotEmbeddable(const std::string& what) : Error(what) {}
};

class NotAFrame : public Error {
public:
    explicit NotAFrame(const std::string& what) : Error(what) {}
};

class NotAKFrame : public Error {
public:
    explicit NotAKFrame(const std::string& what) : Error(what) {}
};

class NotKOrthonormal : public Error {
public:
    explicit NotKOrthonormal(const std::string& what) : Error(what) {}
};

class NotADual : public Error {
public:
    explicit NotADual(const std::string& what) : Error(what) {}
};

class CertificateInvalid : public Error {
public:
    explicit CertificateInvalid(const std::string& what) : Error(what) {}
};

class ComponentNotCertified : public Error {
public:
    explicit ComponentNotCertified(const std::string& what) : Error(what) {}
};

/// A numerically certified identity failed to hold; carries the violating residual.
class AssertionFailure : public Error {
public:
    AssertionFailure(const std::string& what, double violation)
        : Error(what + " (violation = " + std::to_string(violation) + ")"),
          violation_(violation) {}

    double violation() const noexcept { return violation_; }

private:
    double violation_;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace qframes
