#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "scmorph/simplex_set.hpp"

namespace scmorph {

using Value = std::int32_t;

/// The integer lattice K = [min, max] with 0 <= min < max.
struct ValueRange {
  Value min = 0;
  Value max = 255;

  /// Throws InvalidRange.
  static ValueRange make(Value lo, Value hi);
  bool contains(Value v) const noexcept { return v >= min && v <= max; }
  friend bool operator==(const ValueRange&, const ValueRange&) = default;
};

/// Where a ValueMap is defined: one dimension slice or the whole complex.
class Domain {
 public:
  static Domain whole() noexcept { return Domain(-1); }
  static Domain slice(int d) noexcept { return Domain(d); }

  bool is_whole() const noexcept { return dim_ < 0; }
  /// Only meaningful for slices.
  int dim() const noexcept { return dim_; }
  bool covers(int d) const noexcept { return dim_ < 0 || dim_ == d; }
  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  explicit Domain(int d) noexcept : dim_(d) {}
  int dim_;
};

/// A total map from the simplices of its domain to K.
class ValueMap {
 public:
  /// Every simplex of the domain receives `fill` (ValueOutOfRange if not in K).
  ValueMap(ComplexPtr ambient, ValueRange range, Domain domain, Value fill);
  ValueMap(ComplexPtr ambient, ValueRange range, Domain domain)
      : ValueMap(std::move(ambient), range, domain, range.min) {}

  const ComplexPtr& ambient_ptr() const noexcept { return ambient_; }
  const Complex& ambient() const noexcept { return *ambient_; }
  ValueRange range() const noexcept { return range_; }
  Domain domain() const noexcept { return domain_; }

  Value at(int d, Index i) const { return values_[d][i]; }
  /// Throws NotInAmbient or DomainMismatch.
  Value at(const Simplex& s) const;
  /// Throws ValueOutOfRange.
  void set(int d, Index i, Value v);
  void set(const Simplex& s, Value v);

  std::span<const Value> slice_values(int d) const noexcept { return values_[d]; }
  /// Replaces a whole slice; throws DomainMismatch / ShapeMismatch / ValueOutOfRange.
  void assign_slice(int d, std::vector<Value> values);

  /// Restriction to the slice of dimension d (DomainMismatch if not covered).
  ValueMap slice(int d) const;
  /// Same values, different lattice (ValueOutOfRange if a value falls outside).
  ValueMap with_range(ValueRange range) const;

  friend bool operator==(const ValueMap& a, const ValueMap& b);

 private:
  ComplexPtr ambient_;
  ValueRange range_;
  Domain domain_;
  std::vector<std::vector<Value>> values_;
};

/// The k-threshold {x : M(x) >= k}. Throws LevelOutOfRange unless k is in K.
SimplexSet threshold(const ValueMap& m, Value k);

using SetOperator = std::function<SimplexSet(const SimplexSet&)>;

/// Threshold decomposition and supremum reconstruction of an increasing
/// set operator: [alpha(M)](x) = max{k in K : x in alpha(M[k])}, with the
/// empty maximum equal to k_min. The result is defined on `target`.
ValueMap stack_extend(const SetOperator& alpha, const ValueMap& m, Domain target);

// Grayscale dimensional operators (closed forms of the stack extensions).
// Empty max -> k_min, empty min -> k_max. The input must cover the source
// slice; the output is defined on the target slice.

/// x in C_i  ->  max{M(y) : y in C_j, x subset of y}
ValueMap gray_delta_down(int j, int i, const ValueMap& m);
/// x in C_i  ->  min{M(y) : y in C_j, x subset of y}
ValueMap gray_epsilon_down(int j, int i, const ValueMap& m);
/// x in C_j  ->  max{M(y) : y in C_i, y subset of x}
ValueMap gray_delta_up(int i, int j, const ValueMap& m);
/// x in C_j  ->  min{M(y) : y in C_i, y subset of x}
ValueMap gray_epsilon_up(int i, int j, const ValueMap& m);

/// Stack extension of interior(): x -> min over the nonempty faces of x
/// (including x). Requires a whole-complex map.
ValueMap gray_interior(const ValueMap& m);

/// x -> k_max - M(x).
ValueMap dual_map(const ValueMap& m);

/// Faces carry values >= their cofaces, equivalently every threshold is a
/// subcomplex. Requires a whole-complex map (DomainMismatch otherwise).
bool is_simplicial_stack(const ValueMap& m);
/// Faces carry values <= their cofaces, equivalently every threshold is a star.
bool is_starred_stack(const ValueMap& m);

}  // namespace scmorph
