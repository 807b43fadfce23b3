#pragma once

#include <stdexcept>
#include <string>

namespace chinese {

  // Base of every error thrown by the library. The CLI maps these to exit
  // status 2 (usage) except where noted.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class ParseError : public Error {
   public:
    using Error::Error;
  };

  class PreconditionViolated : public Error {
   public:
    using Error::Error;
  };

  // The breadth-first oracle generated more class members than allowed.
  class ClassCapExceeded : public Error {
   public:
    using Error::Error;
  };

  // Raised when a congruence class has zero or several staircase members.
  // Either outcome contradicts uniqueness of the canonical form.
  class NoStaircaseMember : public Error {
   public:
    using Error::Error;
  };

  class MultipleStaircaseMembers : public Error {
   public:
    using Error::Error;
  };

  class IndexConstraintViolated : public Error {
   public:
    using Error::Error;
  };

  class ArithmeticOverflow : public Error {
   public:
    using Error::Error;
  };

  class RankTooSmall : public Error {
   public:
    using Error::Error;
  };

  class MalformedDiagram : public Error {
   public:
    using Error::Error;
  };

  class NotALeaf : public Error {
   public:
    using Error::Error;
  };

  class NotAnArcStep : public Error {
   public:
    using Error::Error;
  };

  class UnknownSuite : public Error {
   public:
    using Error::Error;
  };

  class BoundsExceeded : public Error {
   public:
    using Error::Error;
  };

}  // namespace chinese
