#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ramsey {

/// Base class for every error raised by the library. The kind tag is what
/// the CLI uses to pick a diagnostic prefix.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    parameter,
    structure,
    parse,
    precondition,
    lookup,
    resource,
    unsupported,
    format,
  };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

const char* kind_name(Error::Kind kind) noexcept;

class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& what) : Error(Kind::parameter, what) {}
};

class StructureError : public Error {
 public:
  explicit StructureError(const std::string& what) : Error(Kind::structure, what) {}
};

/// Input file could not be parsed; line is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(Kind::parse, line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(Kind::precondition, what) {}
};

class LookupError : public Error {
 public:
  explicit LookupError(const std::string& what) : Error(Kind::lookup, what) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(Kind::resource, what) {}
};

class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& what) : Error(Kind::unsupported, what) {}
};

class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what) : Error(Kind::format, what) {}
};

}  // namespace ramsey
