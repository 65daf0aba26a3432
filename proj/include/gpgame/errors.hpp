#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gpgame {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input text does not match the expected grammar or file format.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& expected)
      : Error("parse error at byte " + std::to_string(offset) + ": expected " +
              expected),
        offset_(offset),
        expected_(expected) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

// A family parameter is outside its valid range (wrong arity counts too).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Construction would exceed the configured vertex cap.
class CapError : public Error {
 public:
  using Error::Error;
};

// A search exceeded its node or state budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// An argument violated a documented precondition (e.g. a set that must be
// in general position is not).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotATreeError : public Error {
 public:
  using Error::Error;
};

// Cache file is malformed or belongs to a different graph/rule.
class CacheError : public Error {
 public:
  using Error::Error;
};

class UnknownSuiteError : public Error {
 public:
  explicit UnknownSuiteError(const std::string& name)
      : Error("unknown suite: " + name) {}
};

enum class MoveViolation {
  kAlreadyPlayed,
  // The chosen vertex lies on a shortest path between two played vertices.
  kConditionI,
  // A played vertex lies strictly inside a shortest path from the chosen
  // vertex to another played vertex.
  kConditionII,
};

inline const char* describe(MoveViolation v) {
  switch (v) {
    case MoveViolation::kAlreadyPlayed:
      return "vertex is already played";
    case MoveViolation::kConditionI:
      return "condition (i): the vertex lies on a shortest path between two "
             "played vertices";
    case MoveViolation::kConditionII:
      return "condition (ii): a played vertex lies inside a shortest path "
             "from the vertex to another played vertex";
  }
  return "illegal move";
}

class IllegalMoveError : public Error {
 public:
  IllegalMoveError(int vertex, MoveViolation violation)
      : Error("illegal move " + std::to_string(vertex) + ": " +
              describe(violation)),
        vertex_(vertex),
        violation_(violation) {}

  int vertex() const { return vertex_; }
  MoveViolation violation() const { return violation_; }

 private:
  int vertex_;
  MoveViolation violation_;
};

}  // namespace gpgame
