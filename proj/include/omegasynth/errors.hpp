#pragma once

#include <stdexcept>
#include <string>

namespace omegasynth {

/// Error while reading HOA text. `line` is 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

private:
  int line_;
};

/// HOA input uses an acceptance condition other than Buchi `1 Inf(0)`.
class UnsupportedAcceptanceError : public ParseError {
public:
  UnsupportedAcceptanceError(int line, const std::string& what) : ParseError(line, what) {}
};

/// Error while parsing expression concrete syntax. `position` is a 0-based
/// byte offset into the input.
class SyntaxError : public std::runtime_error {
public:
  SyntaxError(int position, const std::string& what)
      : std::runtime_error("syntax error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  int position() const { return position_; }

private:
  int position_;
};

/// JSON document violates the automaton schema. `field` names the offending
/// entry, e.g. "transitions[3].dst".
class SchemaError : public std::runtime_error {
public:
  explicit SchemaError(const std::string& field, const std::string& what)
      : std::runtime_error("schema error: " + field + ": " + what), field_(field) {}

  const std::string& field() const { return field_; }

private:
  std::string field_;
};

class TimeoutError : public std::runtime_error {
public:
  explicit TimeoutError(const std::string& phase)
      : std::runtime_error("timeout during " + phase), phase_(phase) {}

  const std::string& phase() const { return phase_; }

private:
  std::string phase_;
};

}  // namespace omegasynth
