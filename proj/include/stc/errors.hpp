#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stc {

enum class ErrorCode {
  MalformedHeader,
  MalformedLine,
  DuplicateEdge,
  SelfLoop,
  VertexOutOfRange,
  EdgeCountMismatch,
  EmptySet,
  MissingEdge,
  InvalidParams,
  GenerationFailed,
  NotSpanningTree,
  TreeEdgeNotInGraph,
  DisconnectedHost,
  DisconnectedInput,
  BudgetExceeded,
  EmptyMarkSet,
  TooLarge,
  TooSmall,
  SingleVertex,
  OracleFailure,
  Exhausted,
  EdgelessGraph,
  VerificationFailed,
  InternalError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code; every library failure is one of these.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace stc
