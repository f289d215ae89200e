#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bipow {

/// Base of every error raised by the library.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public GraphError {
 public:
  using GraphError::GraphError;
};

class Unreachable : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Raised by bipartition(); carries a simple odd cycle as certificate.
class OddCycle : public GraphError {
 public:
  explicit OddCycle(std::vector<int> cycle);
  const std::vector<int>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<int> cycle_;
};

class ParseError : public GraphError {
 public:
  ParseError(int line, const std::string& what);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class InvalidExponent : public GraphError {
 public:
  using GraphError::GraphError;
};

class EvenExponent : public InvalidExponent {
 public:
  using InvalidExponent::InvalidExponent;
};

class NotBipartite : public GraphError {
 public:
  using GraphError::GraphError;
};

class TooLarge : public GraphError {
 public:
  using GraphError::GraphError;
};

class EmptyBag : public GraphError {
 public:
  using GraphError::GraphError;
};

class BagCollision : public GraphError {
 public:
  using GraphError::GraphError;
};

class NotInduced : public GraphError {
 public:
  using GraphError::GraphError;
};

class HoleNotInduced : public GraphError {
 public:
  using GraphError::GraphError;
};

class HoleTooShort : public GraphError {
 public:
  using GraphError::GraphError;
};

class PathTooLong : public GraphError {
 public:
  using GraphError::GraphError;
};

/// A proof step that must hold did not. `claim()` names the step ("claim1", ...).
class ClaimViolation : public GraphError {
 public:
  ClaimViolation(std::string claim, const std::string& detail);
  const std::string& claim() const noexcept { return claim_; }

 private:
  std::string claim_;
};

}  // namespace bipow
