#ifndef FROBSPLIT_ERROR_HPP
#define FROBSPLIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace frobsplit {

enum class Err {
  DivisionByZero,
  RingMismatch,
  Overflow,
  BadIndex,
  ParseError,
  NotPrime,
  DuplicateVar,
  BadOrder,
  UnknownVar,
  BadExponent,
  NeedsGB,
  TooManyVars,
  NotZeroDim,
  UnitIdeal,
  TooLarge,
  NotFPure,
  NoStabilize,
  BadWitness,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::RingMismatch: return "RingMismatch";
    case Err::Overflow: return "Overflow";
    case Err::BadIndex: return "BadIndex";
    case Err::ParseError: return "ParseError";
    case Err::NotPrime: return "NotPrime";
    case Err::DuplicateVar: return "DuplicateVar";
    case Err::BadOrder: return "BadOrder";
    case Err::UnknownVar: return "UnknownVar";
    case Err::BadExponent: return "BadExponent";
    case Err::NeedsGB: return "NeedsGB";
    case Err::TooManyVars: return "TooManyVars";
    case Err::NotZeroDim: return "NotZeroDim";
    case Err::UnitIdeal: return "UnitIdeal";
    case Err::TooLarge: return "TooLarge";
    case Err::NotFPure: return "NotFPure";
    case Err::NoStabilize: return "NoStabilize";
    case Err::BadWitness: return "BadWitness";
  }
  return "Unknown";
}

// 1-based position of an offending token in parser input.
struct SourcePos {
  int line = 1;
  int col = 1;
};

class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(Err code, std::string msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg),
        code_(code),
        msg_(std::move(msg)) {}

  AlgebraError(Err code, SourcePos pos, std::string msg)
      : std::runtime_error(std::string(err_name(code)) + " at " + std::to_string(pos.line) + ":" +
                           std::to_string(pos.col) + ": " + msg),
        code_(code),
        msg_(std::move(msg)),
        pos_(pos),
        has_pos_(true) {}

  Err code() const { return code_; }
  bool has_pos() const { return has_pos_; }
  SourcePos pos() const { return pos_; }
  const std::string& msg() const { return msg_; }

 private:
  Err code_;
  std::string msg_;
  SourcePos pos_{};
  bool has_pos_ = false;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw AlgebraError(code, msg); }

[[noreturn]] inline void fail_at(Err code, SourcePos pos, const std::string& msg) {
  throw AlgebraError(code, pos, msg);
}

}  // namespace frobsplit

#endif
