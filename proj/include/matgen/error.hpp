#ifndef MATGEN_ERROR_HPP
#define MATGEN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace matgen {

enum class Err {
  DivisionByZero,
  FieldMismatch,
  InfiniteField,
  DimensionMismatch,
  AmbientMismatch,
  NotSquare,
  NotGenerating,
  NotIrredundant,
  NotSplit,
  Inconclusive,
  CapExceeded,
  BadSize,
  UnsupportedField,
  DegenerateAlpha,
  SingularConjugator,
  ZeroScale,
  CentralizerTooBig,
  InternalPatternFailure,
  BadInput,
  Internal,
};

const char* err_name(Err e);

class MatgenError : public std::runtime_error {
public:
  MatgenError(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) {
  throw MatgenError(code, msg);
}

inline void require(bool cond, Err code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

} // namespace matgen

#endif
