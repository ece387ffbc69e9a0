#include "scmorph/filters.hpp"

#include <sstream>

#include "incidence_kernels.hpp"
#include "scmorph/error.hpp"

namespace scmorph {

namespace {

enum class Route { Higher, Lower };

// Intermediate dimension used for slice d.
int via(Route route, int d, int n) {
  if (route == Route::Higher) return d < n ? d + 1 : n - 1;
  return d >= 1 ? d - 1 : 1;
}

// Per-slice composite: out_d = walk(m -> d)(walk(d -> m)(in_d)).
template <class T, class Op>
std::vector<std::vector<T>> slice_wise(const Complex& c, Route route,
                                       const std::vector<std::vector<T>>& in, T identity,
                                       Op op) {
  const int n = c.dim();
  std::vector<std::vector<T>> out(in.size());
  for (int d = 0; d <= n; ++d) {
    const int m = via(route, d, n);
    auto mid = detail::walk<T>(c, d, m, std::span<const T>(in[d]), identity, op);
    out[d] = detail::walk<T>(c, m, d, std::span<const T>(mid), identity, op);
  }
  return out;
}

std::vector<std::vector<std::uint8_t>> bits_of(const SimplexSet& x) {
  std::vector<std::vector<std::uint8_t>> out;
  for (int d = 0; d <= x.ambient().dim(); ++d) {
    auto b = x.slice_bits(d);
    out.emplace_back(b.begin(), b.end());
  }
  return out;
}

SimplexSet set_of(const ComplexPtr& ambient, const std::vector<std::vector<std::uint8_t>>& bits) {
  SimplexSet out(ambient);
  for (int d = 0; d <= ambient->dim(); ++d) {
    std::copy(bits[d].begin(), bits[d].end(), out.slice_bits(d).begin());
  }
  return out;
}

std::string dump(const SimplexSet& x) {
  std::ostringstream os;
  os << "ambient:";
  for (const auto& s : x.ambient().all_simplices()) os << ' ' << s.to_string();
  os << "\nset:";
  for (const auto& s : x.members()) os << ' ' << s.to_string();
  return os.str();
}

bool trivial_ambient(const Complex& c) {
  if (c.dim() > 0) return false;
  warn("morphological filters are the identity on a 0-dimensional complex");
  return true;
}

void require_subcomplex(const SimplexSet& x) {
  if (!is_subcomplex(x)) throw Error(Errc::NotSubcomplex, "argument is not a subcomplex");
}

SimplexSet dilate_unchecked(const SimplexSet& x, Route route) {
  auto bits = slice_wise<std::uint8_t>(x.ambient(), route, bits_of(x), 0, detail::Or{});
  SimplexSet out = set_of(x.ambient_ptr(), bits);
  if (!is_subcomplex(out)) {
    throw Error(Errc::InvariantViolation, "dilation left the subcomplex lattice\n" + dump(x));
  }
  return out;
}

SimplexSet erode_unchecked(const SimplexSet& x, Route route) {
  auto bits = slice_wise<std::uint8_t>(x.ambient(), route, bits_of(x), 1, detail::And{});
  return interior(set_of(x.ambient_ptr(), bits));
}

SimplexSet repeat(int times, SimplexSet x, SimplexSet (*op)(const SimplexSet&, Route)) {
  for (int k = 0; k < times; ++k) x = op(x, Route::Higher);
  return x;
}

SimplexSet open_unchecked(int size, const SimplexSet& x) {
  return repeat(size, repeat(size, x, erode_unchecked), dilate_unchecked);
}

SimplexSet close_unchecked(int size, const SimplexSet& x) {
  return repeat(size, repeat(size, x, dilate_unchecked), erode_unchecked);
}

void require_size(int size) {
  if (size < 0) throw Error(Errc::InvalidSpec, "filter size must be >= 0");
}

}  // namespace

SimplexSet dilate_g(const SimplexSet& x) {
  require_subcomplex(x);
  if (trivial_ambient(x.ambient())) return x;
  return dilate_unchecked(x, Route::Higher);
}

SimplexSet erode_g(const SimplexSet& x) {
  require_subcomplex(x);
  if (trivial_ambient(x.ambient())) return x;
  return erode_unchecked(x, Route::Higher);
}

SimplexSet dilate_s(const SimplexSet& x) {
  require_subcomplex(x);
  if (trivial_ambient(x.ambient())) return x;
  return dilate_unchecked(x, Route::Lower);
}

SimplexSet erode_s(const SimplexSet& x) {
  require_subcomplex(x);
  if (trivial_ambient(x.ambient())) return x;
  return erode_unchecked(x, Route::Lower);
}

SimplexSet open_g(int size, const SimplexSet& x) {
  require_size(size);
  require_subcomplex(x);
  if (size == 0 || trivial_ambient(x.ambient())) return x;
  return open_unchecked(size, x);
}

SimplexSet close_g(int size, const SimplexSet& x) {
  require_size(size);
  require_subcomplex(x);
  if (size == 0 || trivial_ambient(x.ambient())) return x;
  return close_unchecked(size, x);
}

SimplexSet asf_g(int size, const SimplexSet& x) {
  require_size(size);
  require_subcomplex(x);
  if (size == 0 || trivial_ambient(x.ambient())) return x;
  SimplexSet cur = x;
  for (int k = 1; k <= size; ++k) cur = open_unchecked(k, close_unchecked(k, cur));
  return cur;
}

SimplexSet asf_g_prime(int size, const SimplexSet& x) {
  require_size(size);
  require_subcomplex(x);
  if (size == 0 || trivial_ambient(x.ambient())) return x;
  SimplexSet cur = x;
  for (int k = 1; k <= size; ++k) cur = close_unchecked(k, open_unchecked(k, cur));
  return cur;
}

std::string_view to_string(FilterKind kind) noexcept {
  switch (kind) {
    case FilterKind::Dilate: return "dilate";
    case FilterKind::Erode: return "erode";
    case FilterKind::Open: return "open";
    case FilterKind::Close: return "close";
    case FilterKind::Asf: return "asf";
    case FilterKind::AsfPrime: return "asf-prime";
  }
  return "?";
}

std::optional<FilterKind> parse_filter_kind(std::string_view name) noexcept {
  for (auto k : {FilterKind::Dilate, FilterKind::Erode, FilterKind::Open, FilterKind::Close,
                 FilterKind::Asf, FilterKind::AsfPrime}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

void FilterSpec::validate() const {
  require_size(size);
  if (variant == Variant::Down && kind != FilterKind::Dilate && kind != FilterKind::Erode) {
    throw Error(Errc::InvalidSpec,
                "variant 'down' only applies to dilate and erode, not " +
                    std::string(scmorph::to_string(kind)));
  }
}

std::string FilterSpec::to_string() const {
  std::string s(scmorph::to_string(kind));
  s += " size=" + std::to_string(size);
  if (variant == Variant::Down) s += " variant=down";
  return s;
}

SimplexSet apply_filter(const FilterSpec& spec, const SimplexSet& x) {
  spec.validate();
  switch (spec.kind) {
    case FilterKind::Dilate:
    case FilterKind::Erode: {
      const bool dil = spec.kind == FilterKind::Dilate;
      const bool down = spec.variant == Variant::Down;
      auto op = dil ? (down ? dilate_s : dilate_g) : (down ? erode_s : erode_g);
      SimplexSet cur = x;
      require_subcomplex(cur);
      for (int k = 0; k < spec.size; ++k) cur = op(cur);
      return cur;
    }
    case FilterKind::Open: return open_g(spec.size, x);
    case FilterKind::Close: return close_g(spec.size, x);
    case FilterKind::Asf: return asf_g(spec.size, x);
    case FilterKind::AsfPrime: return asf_g_prime(spec.size, x);
  }
  return x;
}

// ---- grayscale ------------------------------------------------------------

namespace {

std::vector<std::vector<Value>> values_of(const ValueMap& m) {
  std::vector<std::vector<Value>> out;
  for (int d = 0; d <= m.ambient().dim(); ++d) {
    auto v = m.slice_values(d);
    out.emplace_back(v.begin(), v.end());
  }
  return out;
}

ValueMap map_of(const ValueMap& like, std::vector<std::vector<Value>> vals) {
  ValueMap out(like.ambient_ptr(), like.range(), Domain::whole());
  for (int d = 0; d <= like.ambient().dim(); ++d) out.assign_slice(d, std::move(vals[d]));
  return out;
}

ValueMap gray_dilate_unchecked(const ValueMap& m, Route route) {
  return map_of(m, slice_wise<Value>(m.ambient(), route, values_of(m), m.range().min,
                                     detail::Max{}));
}

ValueMap gray_erode_unchecked(const ValueMap& m, Route route) {
  return gray_interior(map_of(
      m, slice_wise<Value>(m.ambient(), route, values_of(m), m.range().max, detail::Min{})));
}

ValueMap gray_repeat(int times, ValueMap m, ValueMap (*op)(const ValueMap&, Route),
                     Route route = Route::Higher) {
  for (int k = 0; k < times; ++k) m = op(m, route);
  return m;
}

ValueMap gray_open(int size, const ValueMap& m) {
  return gray_repeat(size, gray_repeat(size, m, gray_erode_unchecked), gray_dilate_unchecked);
}

ValueMap gray_close(int size, const ValueMap& m) {
  return gray_repeat(size, gray_repeat(size, m, gray_dilate_unchecked), gray_erode_unchecked);
}

void require_stack(const ValueMap& m) {
  if (!m.domain().is_whole()) {
    throw Error(Errc::DomainMismatch, "grayscale filters need a whole-complex map");
  }
  if (!is_simplicial_stack(m)) {
    throw Error(Errc::NotSimplicialStack, "some face carries a smaller value than its coface");
  }
}

}  // namespace

ValueMap gray_dilate_g(const ValueMap& m) {
  require_stack(m);
  if (trivial_ambient(m.ambient())) return m;
  return gray_dilate_unchecked(m, Route::Higher);
}

ValueMap gray_erode_g(const ValueMap& m) {
  require_stack(m);
  if (trivial_ambient(m.ambient())) return m;
  return gray_erode_unchecked(m, Route::Higher);
}

ValueMap gray_dilate_s(const ValueMap& m) {
  require_stack(m);
  if (trivial_ambient(m.ambient())) return m;
  return gray_dilate_unchecked(m, Route::Lower);
}

ValueMap gray_erode_s(const ValueMap& m) {
  require_stack(m);
  if (trivial_ambient(m.ambient())) return m;
  return gray_erode_unchecked(m, Route::Lower);
}

ValueMap gray_filter(const FilterSpec& spec, const ValueMap& m) {
  spec.validate();
  require_stack(m);
  if (spec.size == 0 || trivial_ambient(m.ambient())) return m;
  const Route route = spec.variant == Variant::Down ? Route::Lower : Route::Higher;
  switch (spec.kind) {
    case FilterKind::Dilate: return gray_repeat(spec.size, m, gray_dilate_unchecked, route);
    case FilterKind::Erode: return gray_repeat(spec.size, m, gray_erode_unchecked, route);
    case FilterKind::Open: return gray_open(spec.size, m);
    case FilterKind::Close: return gray_close(spec.size, m);
    case FilterKind::Asf: {
      ValueMap cur = m;
      for (int k = 1; k <= spec.size; ++k) cur = gray_open(k, gray_close(k, cur));
      return cur;
    }
    case FilterKind::AsfPrime: {
      ValueMap cur = m;
      for (int k = 1; k <= spec.size; ++k) cur = gray_close(k, gray_open(k, cur));
      return cur;
    }
  }
  return m;
}

}  // namespace scmorph
