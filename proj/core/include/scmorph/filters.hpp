#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "scmorph/simplex_set.hpp"
#include "scmorph/weighted.hpp"

namespace scmorph {

// Morphological operators on the lattice of subcomplexes.
//
// The dilation acts on each dimension independently: an i-slice (i < n)
// goes up to dimension i+1 and back down, the n-slice goes down to n-1 and
// back up. The erosion is the dual construction followed by interior(), and
// the two form an adjunction on subcomplexes. The "_s" variants route each
// slice through the dimension below instead (the 0-slice still goes up).
//
// All binary operators throw NotSubcomplex on a non-subcomplex argument and
// are the identity (with a warning) on a 0-dimensional ambient complex.

SimplexSet dilate_g(const SimplexSet& x);
SimplexSet erode_g(const SimplexSet& x);
SimplexSet dilate_s(const SimplexSet& x);
SimplexSet erode_s(const SimplexSet& x);

/// dilate_g^size after erode_g^size. size 0 is the identity.
SimplexSet open_g(int size, const SimplexSet& x);
/// erode_g^size after dilate_g^size.
SimplexSet close_g(int size, const SimplexSet& x);
/// Stages (open_g(k) . close_g(k)) for k = 1 .. size, stage 1 applied first.
SimplexSet asf_g(int size, const SimplexSet& x);
/// Stages (close_g(k) . open_g(k)) for k = 1 .. size.
SimplexSet asf_g_prime(int size, const SimplexSet& x);

enum class FilterKind { Dilate, Erode, Open, Close, Asf, AsfPrime };
enum class Variant { Up, Down };

std::string_view to_string(FilterKind kind) noexcept;
/// Accepts dilate, erode, open, close, asf, asf-prime.
std::optional<FilterKind> parse_filter_kind(std::string_view name) noexcept;

/// One stage of a filter pipeline. For dilate/erode, `size` is the number
/// of repeated applications; Variant::Down selects the lower-intermediary
/// operators and is only valid for those two kinds.
struct FilterSpec {
  FilterKind kind = FilterKind::Asf;
  int size = 0;
  Variant variant = Variant::Up;

  /// Throws InvalidSpec.
  void validate() const;
  std::string to_string() const;
};

SimplexSet apply_filter(const FilterSpec& spec, const SimplexSet& x);

// Grayscale counterparts on simplicial stacks (whole-complex maps whose
// faces carry values >= their cofaces). Each equals the stack extension of
// its binary operator. Throw NotSimplicialStack / DomainMismatch.

ValueMap gray_dilate_g(const ValueMap& m);
ValueMap gray_erode_g(const ValueMap& m);
ValueMap gray_dilate_s(const ValueMap& m);
ValueMap gray_erode_s(const ValueMap& m);
ValueMap gray_filter(const FilterSpec& spec, const ValueMap& m);

}  // namespace scmorph
