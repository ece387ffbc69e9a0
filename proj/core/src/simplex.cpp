#include "scmorph/simplex.hpp"

#include <algorithm>

#include "scmorph/error.hpp"

namespace scmorph {

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) {
    throw Error(Errc::InvalidSimplex, "a simplex needs at least one vertex");
  }
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw Error(Errc::InvalidSimplex, "repeated vertex in " + to_string());
  }
}

bool Simplex::contains(const Simplex& other) const noexcept {
  return std::includes(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                       other.vertices_.end());
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (vertices_.size() < 2) return out;
  out.reserve(vertices_.size());
  for (std::size_t skip = 0; skip < vertices_.size(); ++skip) {
    std::vector<VertexId> face;
    face.reserve(vertices_.size() - 1);
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
      if (k != skip) face.push_back(vertices_[k]);
    }
    out.push_back(Simplex(Trusted{}, std::move(face)));
  }
  return out;
}

std::string Simplex::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(vertices_[k]);
  }
  return s + "}";
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  // FNV-1a over the vertex ids.
  std::uint64_t h = 1469598103934665603ull;
  for (VertexId v : s.vertices()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace scmorph
