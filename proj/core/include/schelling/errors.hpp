#pragma once

#include <stdexcept>
#include <string>

namespace schelling {

// Closed vocabulary of domain error conditions. The CLI maps each to exit
// code 1 with name() on stderr, so names are part of the tool's interface.
enum class Errc {
  Disconnected,
  NotSimple,
  TooManyAgents,
  NodeEmpty,
  InvalidPlacement,
  BadParameters,
  ParseError,
  Exhausted,
  InfeasiblePrefix,
  TooLarge,
  NotATree,
  PreconditionViolated,
  NotRegular,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) +
                           (detail.empty() ? "" : ": " + detail)),
        code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace schelling
