#pragma once
#include <stdexcept>
#include <string>

namespace fmk {

// Error taxonomy mirrors the CLI exit codes: 2 config/validation, 3 numeric, 4 I/O.
class Error : public std::runtime_error {
public:
  enum class Kind { config = 2, numeric = 3, io = 4 };
  Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
  Kind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }
private:
  Kind kind_;
};

class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& msg) : Error(Kind::config, msg) {}
};

class NumericError : public Error {
public:
  explicit NumericError(const std::string& msg) : Error(Kind::numeric, msg) {}
};

class IoError : public Error {
public:
  explicit IoError(const std::string& msg) : Error(Kind::io, msg) {}
};

} // namespace fmk
