#pragma once

#include <stdexcept>
#include <string>

namespace wif {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document (JSON or CSV syntax).
class ParseError : public Error {
public:
  using Error::Error;
};

/// File or directory could not be read or written.
class IoError : public Error {
public:
  using Error::Error;
};

/// Document parses but violates the dataset or table schema.
class SchemaError : public Error {
public:
  using Error::Error;
};

/// A reference that does not resolve, e.g. a citation to an unknown journal.
class IntegrityError : public Error {
public:
  using Error::Error;
};

/// Repeated (citing, cited, year) triple under strict loading.
class DuplicateError : public Error {
public:
  using Error::Error;
};

/// The article window of a journal is empty.
class ZeroDenominatorError : public Error {
public:
  using Error::Error;
};

/// An argument lies outside the domain of a formula.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Operation needs at least one element.
class EmptyInputError : public Error {
public:
  using Error::Error;
};

/// No citing journal carries the impact-factor field an indicator averages.
class NoEligibleCitationsError : public Error {
public:
  using Error::Error;
};

class LengthMismatchError : public Error {
public:
  using Error::Error;
};

/// Correlation input with zero variance or too few shared observations.
class DegenerateError : public Error {
public:
  using Error::Error;
};

class UnknownIndicatorError : public Error {
public:
  using Error::Error;
};

} // namespace wif
