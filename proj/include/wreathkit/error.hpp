#ifndef WREATHKIT_ERROR_HPP_
#define WREATHKIT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wreathkit {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // words
  class InvalidLetter : public Error {
   public:
    using Error::Error;
  };
  class AlphabetMismatch : public Error {
   public:
    using Error::Error;
  };
  class NotCyclicallyReduced : public Error {
   public:
    using Error::Error;
  };

  // stallings
  class NotInSubgroup : public Error {
   public:
    using Error::Error;
  };

  // smallcanc
  class EmptyRelator : public Error {
   public:
    using Error::Error;
  };
  class PreconditionViolated : public Error {
   public:
    using Error::Error;
  };
  class CannotEliminate : public Error {
   public:
    using Error::Error;
  };

  // cosetenum / fingrp
  class NotClosed : public Error {
   public:
    using Error::Error;
  };
  class NotAGroup : public Error {
   public:
    using Error::Error;
  };
  class NotNormal : public Error {
   public:
    using Error::Error;
  };
  class NotASubgroup : public Error {
   public:
    using Error::Error;
  };
  class NotAHomomorphism : public Error {
   public:
    using Error::Error;
  };
  class TooLarge : public Error {
   public:
    using Error::Error;
  };
  class GroupMismatch : public Error {
   public:
    using Error::Error;
  };

  // wlp
  class NotInBase : public Error {
   public:
    using Error::Error;
  };
  class RequiresAbelianBase : public Error {
   public:
    using Error::Error;
  };
  class BaseNotContained : public Error {
   public:
    using Error::Error;
  };

  // clyndon
  class RequiresFiniteFactors : public Error {
   public:
    using Error::Error;
  };
  class InvalidSplit : public Error {
   public:
    using Error::Error;
  };
  class NotATransversal : public Error {
   public:
    using Error::Error;
  };

  // builders
  class InvalidParameter : public Error {
   public:
    using Error::Error;
  };
  class DuplicateSlotWord : public Error {
   public:
    using Error::Error;
  };
  class WrongLetterClass : public Error {
   public:
    using Error::Error;
  };

  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  // Text formats. Line and column are 1-based; 0 means "not applicable".
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t line = 0, std::size_t col = 0)
        : Error(locate(msg, line, col)), _line(line), _col(col) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _col;
    }

   private:
    static std::string locate(std::string const& msg, std::size_t line, std::size_t col) {
      if (line == 0) {
        return msg;
      }
      return std::to_string(line) + ":" + std::to_string(col) + ": " + msg;
    }

    std::size_t _line;
    std::size_t _col;
  };

  class UnknownGenerator : public ParseError {
   public:
    using ParseError::ParseError;
  };

}  // namespace wreathkit

#endif  // WREATHKIT_ERROR_HPP_
