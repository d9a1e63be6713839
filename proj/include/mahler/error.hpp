#pragma once

#include <stdexcept>
#include <string>

namespace mahler {

enum class ErrorKind {
  kInvalidInput,       // unparsable text, zero polynomial, bad parameters
  kPrecondition,       // caller must transform the input first (strip, normalize)
  kNotApplicable,      // bound hypotheses (k exists, 2k <= n) not met
  kNumericFailure,     // precision exhausted before the requested accuracy
  kResourceExhausted,  // memory budget exceeded (Graeffe coefficient growth)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mahler
