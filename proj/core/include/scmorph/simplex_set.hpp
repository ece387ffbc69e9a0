#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "scmorph/complex.hpp"

namespace scmorph {

/// An arbitrary subset of an ambient complex, stored as one membership
/// vector per dimension. No closure requirement.
class SimplexSet {
 public:
  /// Empty set over `ambient`.
  explicit SimplexSet(ComplexPtr ambient);

  static SimplexSet full(ComplexPtr ambient);
  /// Throws NotInAmbient if a simplex is not part of the ambient complex.
  static SimplexSet of(ComplexPtr ambient, std::span<const Simplex> members);
  static SimplexSet of(ComplexPtr ambient, std::initializer_list<Simplex> members) {
    return of(std::move(ambient), std::span<const Simplex>(members.begin(), members.size()));
  }

  const ComplexPtr& ambient_ptr() const noexcept { return ambient_; }
  const Complex& ambient() const noexcept { return *ambient_; }

  bool contains(int d, Index i) const noexcept { return bits_[d][i] != 0; }
  bool contains(const Simplex& s) const;
  void insert(int d, Index i) noexcept { bits_[d][i] = 1; }
  void erase(int d, Index i) noexcept { bits_[d][i] = 0; }
  /// Throws NotInAmbient.
  void insert(const Simplex& s);

  std::size_t size() const noexcept;
  std::size_t size(int d) const noexcept;
  bool empty() const noexcept { return size() == 0; }

  /// Raw membership flags of dimension d (one byte per ambient d-simplex).
  std::span<const std::uint8_t> slice_bits(int d) const noexcept { return bits_[d]; }
  std::span<std::uint8_t> slice_bits(int d) noexcept { return bits_[d]; }

  /// The unique dimension of the members, or nullopt if mixed or empty.
  std::optional<int> pure_dim() const noexcept;

  std::vector<Simplex> members() const;
  std::vector<Simplex> members(int d) const;

  bool is_subset_of(const SimplexSet& other) const;

  SimplexSet& operator|=(const SimplexSet& other);
  SimplexSet& operator&=(const SimplexSet& other);
  SimplexSet& operator-=(const SimplexSet& other);
  friend SimplexSet operator|(SimplexSet a, const SimplexSet& b) { return a |= b; }
  friend SimplexSet operator&(SimplexSet a, const SimplexSet& b) { return a &= b; }
  friend SimplexSet operator-(SimplexSet a, const SimplexSet& b) { return a -= b; }

  /// Equal iff same ambient object and same members.
  friend bool operator==(const SimplexSet& a, const SimplexSet& b);

 private:
  void require_same_ambient(const SimplexSet& other) const;

  ComplexPtr ambient_;
  std::vector<std::vector<std::uint8_t>> bits_;
};

/// X_i: the members of dimension i. Throws DimOutOfRange unless 0 <= i <= n.
SimplexSet dim_slice(const SimplexSet& x, int i);
/// Every nonempty subset of a member.
SimplexSet closure(const SimplexSet& x);
/// Every ambient simplex containing a member.
SimplexSet star(const SimplexSet& x);
SimplexSet complement(const SimplexSet& x);
/// Largest subcomplex contained in x; the adjoint erosion of closure().
SimplexSet interior(const SimplexSet& x);

bool is_subcomplex(const SimplexSet& x);
/// True when the complement is a subcomplex.
bool is_star(const SimplexSet& x);

}  // namespace scmorph
