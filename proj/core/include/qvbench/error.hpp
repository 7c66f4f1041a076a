#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qvb {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParameterArityError : public Error {
 public:
  using Error::Error;
};

class UnknownTargetError : public Error {
 public:
  using Error::Error;
};

/// Requested width exceeds what a dense or statevector routine can hold.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class NumericDomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Profile or result file failed schema validation. `fields()` names the offenders.
class LoadError : public Error {
 public:
  LoadError(const std::string& what, std::vector<std::string> fields = {})
      : Error(what), fields_(std::move(fields)) {}

  const std::vector<std::string>& fields() const noexcept { return fields_; }

 private:
  std::vector<std::string> fields_;
};

class LayoutError : public Error {
 public:
  using Error::Error;
};

class UndefinedResultError : public Error {
 public:
  using Error::Error;
};

class NoDataError : public Error {
 public:
  using Error::Error;
};

class IncompatibleSeriesError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qvb
