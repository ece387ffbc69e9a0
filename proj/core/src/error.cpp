#include "scmorph/error.hpp"

#include <atomic>
#include <iostream>

namespace scmorph {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::NotClosed: return "NotClosed";
    case Errc::InvalidSimplex: return "InvalidSimplex";
    case Errc::NotInAmbient: return "NotInAmbient";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::DimOutOfRange: return "DimOutOfRange";
    case Errc::NotPureSlice: return "NotPureSlice";
    case Errc::InvalidRange: return "InvalidRange";
    case Errc::LevelOutOfRange: return "LevelOutOfRange";
    case Errc::ValueOutOfRange: return "ValueOutOfRange";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::NotSubcomplex: return "NotSubcomplex";
    case Errc::NotSimplicialStack: return "NotSimplicialStack";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::NonTriangleFace: return "NonTriangleFace";
    case Errc::DegenerateInterval: return "DegenerateInterval";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

void clog_handler(std::string_view message) {
  std::clog << "warning: " << message << '\n';
}

std::atomic<WarningHandler> g_handler{&clog_handler};

}  // namespace

WarningHandler set_warning_handler(WarningHandler handler) noexcept {
  return g_handler.exchange(handler ? handler : &clog_handler);
}

void warn(std::string_view message) { g_handler.load()(message); }

}  // namespace scmorph
