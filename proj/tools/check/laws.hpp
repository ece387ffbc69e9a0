#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "scmorph/complex.hpp"
#include "scmorph/random.hpp"

namespace scmorph::check {

/// A law returns nullopt when it holds on the given complex, or a short
/// description of the first violation found.
using LawFn = std::function<std::optional<std::string>(const ComplexPtr&, random::Rng&)>;

struct Law {
  std::string name;
  std::string group;  // core, dimensional, weighted, filters, builders
  LawFn fn;
};

const std::vector<Law>& registry();

/// Runs one law on a complex with a fixed seed, turning exceptions into
/// failure messages.
std::optional<std::string> evaluate(const Law& law, const ComplexPtr& c, std::uint64_t seed);

/// Greedily drops maximal simplices while the law keeps failing with the
/// same seed. Returns the smallest complex reached.
ComplexPtr minimize(const Law& law, ComplexPtr c, std::uint64_t seed);

struct SuiteOptions {
  std::uint64_t seed = 0;
  int cases = 200;
  int max_vertices = 8;
  int max_dim = 3;
  std::vector<std::string> skip;  // law names or group names
  bool minimize = true;
};

struct LawFailure {
  std::string law;
  int first_case = 0;
  int count = 0;
  std::string detail;
  ComplexPtr witness;
};

struct SuiteReport {
  int cases = 0;
  int laws = 0;
  std::size_t evaluations = 0;
  std::vector<LawFailure> failures;
  bool ok() const noexcept { return failures.empty(); }
};

SuiteReport run_suite(const SuiteOptions& opts);

/// Human-readable report; counterexamples are printed in the text complex format.
void print_report(std::ostream& out, const SuiteReport& report);

/// Seed for case `index` of a run seeded with `seed`.
std::uint64_t case_seed(std::uint64_t seed, int index) noexcept;

}  // namespace scmorph::check
