#pragma once

#include <stdexcept>
#include <string>

namespace cloneseek {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed manifest, annotations, pairs, query or stopword file.
class ParseError : public Error {
 public:
  ParseError(const std::string& path, std::size_t line, const std::string& what)
      : Error(path + ":" + std::to_string(line) + ": " + what), path_(path), line_(line) {}

  const std::string& path() const noexcept { return path_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string path_;
  std::size_t line_;
};

/// A method reference that cannot be resolved against the source tree.
class TraceError : public Error {
 public:
  using Error::Error;
};

/// A contract precondition was violated (e.g. df > J).
class InvariantError : public Error {
 public:
  using Error::Error;
};

class BuildError : public Error {
 public:
  using Error::Error;
};

/// The index file is unreadable, truncated, tampered with or of another version.
class IndexLoadError : public Error {
 public:
  using Error::Error;
};

class EvalError : public Error {
 public:
  using Error::Error;
};

}  // namespace cloneseek
