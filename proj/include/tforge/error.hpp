#ifndef TFORGE_ERROR_HPP
#define TFORGE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tforge {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mixing values from incompatible coefficient domains or variable counts.
struct DomainMismatch : Error {
  explicit DomainMismatch(const std::string& msg) : Error(msg) {}
};

// Text that does not conform to the polynomial grammar; carries a position.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

// divide_exact asked to perform a division that leaves a remainder.
struct InexactDivision : Error {
  std::string witness;  // leading remainder term that failed to cancel
  InexactDivision(const std::string& msg, std::string witness_term)
      : Error(msg + "; remainder witness: " + witness_term),
        witness(std::move(witness_term)) {}
};

// An operation that requires a (skew-)symmetric or stabilizer-invariant input.
struct InvarianceError : Error {
  explicit InvarianceError(const std::string& msg) : Error(msg) {}
};

// Cases the construction does not cover (e.g. sextics in characteristic 2).
struct UnsupportedCase : Error {
  std::string code;
  UnsupportedCase(std::string c, const std::string& msg)
      : Error(c + ": " + msg), code(std::move(c)) {}
};

// A bounded deterministic search ran out of candidates.
struct SearchExhausted : Error {
  explicit SearchExhausted(const std::string& msg) : Error(msg) {}
};

}  // namespace tforge

#endif
