#ifndef TILING_DISC_ERRORS_H_
#define TILING_DISC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace tiling_disc {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arguments outside an operation's admissible range (divisibility, sizes,
// malformed permutations, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// An edge was looked up outside the domain of a labeling.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Input violates a structural requirement: a non-clique where a clique is
// needed, a non-complete host, overlapping tiles.
class StructureError : public Error {
 public:
  using Error::Error;
};

// Template size and host order are incompatible (s * r not divisible by |F|).
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// The graph admits no perfect tiling.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Search stopped because it hit the configured node budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed text graph input.
class FormatError : public Error {
 public:
  FormatError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace tiling_disc

#endif  // TILING_DISC_ERRORS_H_
