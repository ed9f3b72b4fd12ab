#pragma once

#include <stdexcept>
#include <string>

namespace residx {

enum class ErrorKind {
  parse,          // malformed base text
  excluded_base,  // g in {-1, 0, 1}
  bound,          // sieve limit out of range
  domain,         // argument outside the mathematical domain
  capability,     // input too large for the available tables
  invariant,      // internal consistency check failed
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace residx
