#include "scmorph/weighted.hpp"

#include <algorithm>
#include <string>

#include "incidence_kernels.hpp"
#include "scmorph/error.hpp"

namespace scmorph {

ValueRange ValueRange::make(Value lo, Value hi) {
  if (lo < 0 || lo >= hi) {
    throw Error(Errc::InvalidRange, "need 0 <= k_min < k_max, got [" + std::to_string(lo) +
                                        ", " + std::to_string(hi) + "]");
  }
  return ValueRange{lo, hi};
}

ValueMap::ValueMap(ComplexPtr ambient, ValueRange range, Domain domain, Value fill)
    : ambient_(std::move(ambient)), range_(range), domain_(domain) {
  if (!ambient_) throw Error(Errc::EmptyInput, "value map needs an ambient complex");
  range_ = ValueRange::make(range.min, range.max);
  if (!domain_.is_whole() && (domain_.dim() < 0 || domain_.dim() > ambient_->dim())) {
    throw Error(Errc::DimOutOfRange, "domain slice " + std::to_string(domain_.dim()));
  }
  if (!range_.contains(fill)) {
    throw Error(Errc::ValueOutOfRange, "fill value " + std::to_string(fill));
  }
  values_.resize(static_cast<std::size_t>(ambient_->dim()) + 1);
  for (int d = 0; d <= ambient_->dim(); ++d) {
    if (domain_.covers(d)) values_[d].assign(ambient_->size(d), fill);
  }
}

Value ValueMap::at(const Simplex& s) const {
  auto idx = ambient_->index_of(s);
  if (!idx) throw Error(Errc::NotInAmbient, s.to_string());
  if (!domain_.covers(s.dim())) throw Error(Errc::DomainMismatch, s.to_string());
  return values_[s.dim()][*idx];
}

void ValueMap::set(int d, Index i, Value v) {
  if (!range_.contains(v)) {
    throw Error(Errc::ValueOutOfRange, std::to_string(v) + " outside [" +
                                           std::to_string(range_.min) + ", " +
                                           std::to_string(range_.max) + "]");
  }
  if (!domain_.covers(d)) throw Error(Errc::DomainMismatch, "dimension " + std::to_string(d));
  values_[d][i] = v;
}

void ValueMap::set(const Simplex& s, Value v) {
  auto idx = ambient_->index_of(s);
  if (!idx) throw Error(Errc::NotInAmbient, s.to_string());
  set(s.dim(), *idx, v);
}

void ValueMap::assign_slice(int d, std::vector<Value> values) {
  if (d < 0 || d > ambient_->dim() || !domain_.covers(d)) {
    throw Error(Errc::DomainMismatch, "dimension " + std::to_string(d));
  }
  if (values.size() != ambient_->size(d)) {
    throw Error(Errc::ShapeMismatch, "slice " + std::to_string(d) + " has " +
                                         std::to_string(ambient_->size(d)) + " simplices, got " +
                                         std::to_string(values.size()) + " values");
  }
  for (Value v : values) {
    if (!range_.contains(v)) throw Error(Errc::ValueOutOfRange, std::to_string(v));
  }
  values_[d] = std::move(values);
}

ValueMap ValueMap::slice(int d) const {
  if (d < 0 || d > ambient_->dim() || !domain_.covers(d)) {
    throw Error(Errc::DomainMismatch, "map does not cover dimension " + std::to_string(d));
  }
  ValueMap out(ambient_, range_, Domain::slice(d));
  out.values_[d] = values_[d];
  return out;
}

ValueMap ValueMap::with_range(ValueRange range) const {
  ValueMap out(ambient_, range, domain_, range.min);
  for (int d = 0; d <= ambient_->dim(); ++d) {
    if (domain_.covers(d)) out.assign_slice(d, values_[d]);
  }
  return out;
}

bool operator==(const ValueMap& a, const ValueMap& b) {
  return a.ambient_ == b.ambient_ && a.range_ == b.range_ && a.domain_ == b.domain_ &&
         a.values_ == b.values_;
}

SimplexSet threshold(const ValueMap& m, Value k) {
  const auto r = m.range();
  if (!r.contains(k)) {
    throw Error(Errc::LevelOutOfRange, "level " + std::to_string(k) + " outside [" +
                                           std::to_string(r.min) + ", " + std::to_string(r.max) +
                                           "]");
  }
  SimplexSet out(m.ambient_ptr());
  for (int d = 0; d <= m.ambient().dim(); ++d) {
    if (!m.domain().covers(d)) continue;
    auto vals = m.slice_values(d);
    auto bits = out.slice_bits(d);
    for (std::size_t i = 0; i < vals.size(); ++i) bits[i] = vals[i] >= k;
  }
  return out;
}

ValueMap stack_extend(const SetOperator& alpha, const ValueMap& m, Domain target) {
  const auto r = m.range();
  ValueMap out(m.ambient_ptr(), r, target, r.min);
  const int n = m.ambient().dim();
  std::vector<std::vector<Value>> acc(static_cast<std::size_t>(n) + 1);
  for (int d = 0; d <= n; ++d) {
    if (target.covers(d)) acc[d].assign(m.ambient().size(d), r.min);
  }
  // Levels ascend, so the last level containing x is the maximum.
  for (Value k = r.min; k <= r.max; ++k) {
    SimplexSet image = alpha(threshold(m, k));
    if (image.ambient_ptr() != m.ambient_ptr()) {
      throw Error(Errc::AmbientMismatch, "operator changed the ambient complex");
    }
    for (int d = 0; d <= n; ++d) {
      auto bits = image.slice_bits(d);
      if (!target.covers(d)) {
        if (std::find(bits.begin(), bits.end(), 1) != bits.end()) {
          throw Error(Errc::DomainMismatch, "operator produced simplices outside the target");
        }
        continue;
      }
      for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) acc[d][i] = k;
      }
    }
  }
  for (int d = 0; d <= n; ++d) {
    if (target.covers(d)) out.assign_slice(d, std::move(acc[d]));
  }
  return out;
}

namespace {

void check_pair(const Complex& c, int lo, int hi) {
  if (lo < 0 || lo >= hi || hi > c.dim()) {
    throw Error(Errc::DimOutOfRange, "need 0 <= i < j <= " + std::to_string(c.dim()) +
                                         ", got i=" + std::to_string(lo) +
                                         " j=" + std::to_string(hi));
  }
}

template <class Op>
ValueMap gray_walk(const ValueMap& m, int from, int to, Value identity, Op op) {
  if (!m.domain().covers(from)) {
    throw Error(Errc::DomainMismatch, "map does not cover dimension " + std::to_string(from));
  }
  auto vals = detail::walk<Value>(m.ambient(), from, to, m.slice_values(from), identity, op);
  ValueMap out(m.ambient_ptr(), m.range(), Domain::slice(to));
  out.assign_slice(to, std::move(vals));
  return out;
}

void require_whole(const ValueMap& m, const char* what) {
  if (!m.domain().is_whole()) {
    throw Error(Errc::DomainMismatch, std::string(what) + " needs a whole-complex map");
  }
}

}  // namespace

ValueMap gray_delta_down(int j, int i, const ValueMap& m) {
  check_pair(m.ambient(), i, j);
  return gray_walk(m, j, i, m.range().min, detail::Max{});
}

ValueMap gray_epsilon_down(int j, int i, const ValueMap& m) {
  check_pair(m.ambient(), i, j);
  return gray_walk(m, j, i, m.range().max, detail::Min{});
}

ValueMap gray_delta_up(int i, int j, const ValueMap& m) {
  check_pair(m.ambient(), i, j);
  return gray_walk(m, i, j, m.range().min, detail::Max{});
}

ValueMap gray_epsilon_up(int i, int j, const ValueMap& m) {
  check_pair(m.ambient(), i, j);
  return gray_walk(m, i, j, m.range().max, detail::Min{});
}

ValueMap gray_interior(const ValueMap& m) {
  require_whole(m, "gray_interior");
  const Complex& c = m.ambient();
  ValueMap out = m;
  std::vector<Value> below(m.slice_values(0).begin(), m.slice_values(0).end());
  for (int d = 1; d <= c.dim(); ++d) {
    auto own = m.slice_values(d);
    std::vector<Value> cur(own.begin(), own.end());
    for (Index x = 0; x < cur.size(); ++x) {
      for (Index f : c.faces(d, x)) cur[x] = std::min(cur[x], below[f]);
    }
    out.assign_slice(d, cur);
    below = std::move(cur);
  }
  return out;
}

ValueMap dual_map(const ValueMap& m) {
  const auto r = m.range();
  ValueMap out(m.ambient_ptr(), r, m.domain());
  for (int d = 0; d <= m.ambient().dim(); ++d) {
    if (!m.domain().covers(d)) continue;
    auto vals = m.slice_values(d);
    std::vector<Value> flipped(vals.size());
    std::transform(vals.begin(), vals.end(), flipped.begin(),
                   [&](Value v) { return r.max - v; });
    out.assign_slice(d, std::move(flipped));
  }
  return out;
}

namespace {

template <class Cmp>
bool faces_dominate(const ValueMap& m, Cmp face_ok) {
  const Complex& c = m.ambient();
  for (int d = 1; d <= c.dim(); ++d) {
    auto hi = m.slice_values(d);
    auto lo = m.slice_values(d - 1);
    for (Index x = 0; x < hi.size(); ++x) {
      for (Index f : c.faces(d, x)) {
        if (!face_ok(lo[f], hi[x])) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_simplicial_stack(const ValueMap& m) {
  require_whole(m, "is_simplicial_stack");
  return faces_dominate(m, [](Value face, Value coface) { return face >= coface; });
}

bool is_starred_stack(const ValueMap& m) {
  require_whole(m, "is_starred_stack");
  return faces_dominate(m, [](Value face, Value coface) { return face <= coface; });
}

}  // namespace scmorph
