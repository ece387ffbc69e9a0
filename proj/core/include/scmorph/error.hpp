#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace scmorph {

enum class Errc {
  EmptyInput,
  NotClosed,
  InvalidSimplex,
  NotInAmbient,
  AmbientMismatch,
  DimOutOfRange,
  NotPureSlice,
  InvalidRange,
  LevelOutOfRange,
  ValueOutOfRange,
  DomainMismatch,
  NotSubcomplex,
  NotSimplicialStack,
  InvalidSpec,
  InvariantViolation,
  ShapeMismatch,
  ParseError,
  NonTriangleFace,
  DegenerateInterval,
  IoError,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Receives non-fatal diagnostics (e.g. filters applied to a 0-complex).
/// The default handler writes to std::clog.
using WarningHandler = void (*)(std::string_view);
WarningHandler set_warning_handler(WarningHandler handler) noexcept;
void warn(std::string_view message);

}  // namespace scmorph
