#pragma once

#include <gtest/gtest.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "scmorph/scmorph.hpp"

namespace scmorph::test {

// The filled triangle on vertices 1, 2, 3.
inline ComplexPtr triangle() { return Complex::build({Simplex{1, 2, 3}}, Closure::Auto); }

// Path 1 - 2 - 3.
inline ComplexPtr path() {
  return Complex::build({Simplex{1, 2}, Simplex{2, 3}}, Closure::Auto);
}

inline SimplexSet set(const ComplexPtr& c, std::initializer_list<Simplex> members) {
  return SimplexSet::of(c, members);
}

inline SimplexSet slice_of(const ComplexPtr& c, int d) {
  return dim_slice(SimplexSet::full(c), d);
}

/// Runs `fn` and returns the error code it throws (fails the test otherwise).
template <class F>
Errc error_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an scmorph::Error";
  return Errc::InvariantViolation;
}

/// Collects warnings for the lifetime of the object.
class WarningCapture {
 public:
  WarningCapture() { previous_ = set_warning_handler(&WarningCapture::record); messages().clear(); }
  ~WarningCapture() { set_warning_handler(previous_); }
  const std::vector<std::string>& seen() const { return messages(); }

 private:
  static std::vector<std::string>& messages() {
    static std::vector<std::string> m;
    return m;
  }
  static void record(std::string_view msg) { messages().emplace_back(msg); }
  WarningHandler previous_;
};

}  // namespace scmorph::test
