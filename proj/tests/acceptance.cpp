// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance               run every criterion
//   acceptance --criterion N run criterion N only
//
// Exit status is 0 iff every selected criterion passes.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "laws.hpp"
#include "oracle.hpp"
#include "scmorph/scmorph.hpp"
#include "scmorph/random.hpp"

namespace {

using namespace scmorph;
using random::Rng;
using Clock = std::chrono::steady_clock;

// Pinned parameters.
constexpr std::uint64_t kCorpusSeed = 20240601;
constexpr int kCorpusSize = 200;
constexpr int kMaxVertices = 8;
constexpr int kMaxDim = 3;
constexpr int kOracleTrials = 5;          // random inputs per (complex, i, j) in criterion 1
constexpr int kPairsPerDimPair = 20;      // criterion 2
constexpr int kCompositionTrials = 5;     // criterion 3
constexpr int kFilterTrials = 3;          // criterion 4, subcomplexes per complex
constexpr int kMaxFilterSize = 4;
constexpr int kStacks = 100;              // criterion 5
const ValueRange kStackRange{0, 7};
constexpr int kGraphs = 50;               // criterion 6
constexpr int kImages = 20;               // criterion 7
constexpr double kNoiseDensity = 0.05;    // criterion 8
constexpr double kRequiredRemoval = 0.90;

constexpr double kLimit1 = 30, kLimit2 = 60, kLimit3 = 60, kLimit4 = 300, kLimit5 = 120,
                 kLimit6 = 10, kLimit7 = 60, kLimit8 = 30;

struct Verdict {
  bool pass = true;
  std::string detail;
};

const std::vector<ComplexPtr>& corpus() {
  static const std::vector<ComplexPtr> c = [] {
    std::vector<ComplexPtr> out;
    random::ComplexOptions opts;
    opts.max_vertices = kMaxVertices;
    opts.max_dim = kMaxDim;
    for (int k = 0; k < kCorpusSize; ++k) {
      Rng rng(check::case_seed(kCorpusSeed, k));
      out.push_back(random::random_complex(rng, opts));
    }
    return out;
  }();
  return c;
}

std::vector<std::pair<int, int>> dim_pairs(const Complex& c) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i <= c.dim(); ++i) {
    for (int j = i + 1; j <= c.dim(); ++j) out.emplace_back(i, j);
  }
  return out;
}

SimplexSet full_slice(const ComplexPtr& c, int d) { return dim_slice(SimplexSet::full(c), d); }

// Tally of named checks; a criterion passes when every tally is clean.
class Tally {
 public:
  void record(const std::string& name, bool ok) {
    auto& t = counts_[name];
    ++t.first;
    if (!ok) ++t.second;
  }
  bool clean() const {
    for (const auto& [_, t] : counts_) {
      if (t.second) return false;
    }
    return true;
  }
  std::size_t checks() const {
    std::size_t n = 0;
    for (const auto& [_, t] : counts_) n += t.first;
    return n;
  }
  std::string failures() const {
    std::string s;
    for (const auto& [name, t] : counts_) {
      if (!t.second) continue;
      if (!s.empty()) s += "; ";
      s += name + " " + std::to_string(t.second) + "/" + std::to_string(t.first);
    }
    return s;
  }

 private:
  std::map<std::string, std::pair<std::size_t, std::size_t>> counts_;
};

Verdict from_tally(const Tally& t) {
  Verdict v;
  v.pass = t.clean();
  v.detail = std::to_string(t.checks()) + " checks";
  if (!v.pass) v.detail += ", violations: " + t.failures();
  return v;
}

// 1. incidence traversal vs subset scans and the star/closure forms
Verdict criterion1() {
  Tally t;
  Rng rng(1);
  for (const auto& c : corpus()) {
    for (auto [i, j] : dim_pairs(*c)) {
      for (int k = 0; k < kOracleTrials; ++k) {
        const double p = 0.1 + 0.2 * k;
        auto x = random::random_slice(rng, c, i, p);
        auto y = random::random_slice(rng, c, j, p);
        auto cx = full_slice(c, i) - x;
        auto cy = full_slice(c, j) - y;
        auto du = delta_up(i, j, x);
        auto eu = epsilon_up(i, j, x);
        auto dd = delta_down(j, i, y);
        auto ed = epsilon_down(j, i, y);
        t.record("delta_up/scan", du == oracle::delta_up(i, j, x));
        t.record("epsilon_up/scan", eu == oracle::epsilon_up(i, j, x));
        t.record("delta_down/scan", dd == oracle::delta_down(j, i, y));
        t.record("epsilon_down/scan", ed == oracle::epsilon_down(j, i, y));
        t.record("delta_up/star", du == dim_slice(oracle::star(x), j));
        t.record("delta_down/closure", dd == dim_slice(oracle::closure(y), i));
        t.record("epsilon_up/star", eu == dim_slice(oracle::complement(oracle::star(cx)), j));
        t.record("epsilon_down/closure",
                 ed == dim_slice(oracle::complement(oracle::closure(cy)), i));
      }
    }
  }
  return from_tally(t);
}

// 2. adjunctions and dualities
Verdict criterion2() {
  Tally t;
  Rng rng(2);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (const auto& c : corpus()) {
    for (auto [i, j] : dim_pairs(*c)) {
      for (int k = 0; k < kPairsPerDimPair; ++k) {
        auto x = random::random_slice(rng, c, i, density(rng));
        auto y = random::random_slice(rng, c, j, density(rng));
        if (k % 4 == 1) y |= delta_up(i, j, x);
        if (k % 4 == 2) x |= delta_down(j, i, y);
        t.record("delta_down|epsilon_up",
                 delta_down(j, i, y).is_subset_of(x) == y.is_subset_of(epsilon_up(i, j, x)));
        t.record("delta_up|epsilon_down",
                 delta_up(i, j, x).is_subset_of(y) == x.is_subset_of(epsilon_down(j, i, y)));
        t.record("epsilon_up duality",
                 epsilon_up(i, j, x) == full_slice(c, j) - delta_up(i, j, full_slice(c, i) - x));
        t.record("epsilon_down duality",
                 epsilon_down(j, i, y) == full_slice(c, i) - delta_down(j, i, full_slice(c, j) - y));
      }
    }
  }
  return from_tally(t);
}

// 3. composition laws
Verdict criterion3() {
  Tally t;
  Rng rng(3);
  for (const auto& c : corpus()) {
    const int n = c->dim();
    for (int trial = 0; trial < kCompositionTrials; ++trial) {
      for (int i = 0; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          for (int k = j + 1; k <= n; ++k) {
            auto x = random::random_slice(rng, c, i);
            auto z = random::random_slice(rng, c, k);
            // collapse
            t.record("collapse delta_up", delta_up(j, k, delta_up(i, j, x)) == delta_up(i, k, x));
            t.record("collapse epsilon_up",
                     epsilon_up(j, k, epsilon_up(i, j, x)) == epsilon_up(i, k, x));
            t.record("collapse delta_down",
                     delta_down(j, i, delta_down(k, j, z)) == delta_down(k, i, z));
            t.record("collapse epsilon_down",
                     epsilon_down(j, i, epsilon_down(k, j, z)) == epsilon_down(k, i, z));
            // higher intermediary independence
            t.record("higher delta.delta",
                     delta_down(j, i, delta_up(i, j, x)) == delta_down(k, i, delta_up(i, k, x)));
            t.record("higher eps.eps", epsilon_down(j, i, epsilon_up(i, j, x)) ==
                                           epsilon_down(k, i, epsilon_up(i, k, x)));
            t.record("higher delta.eps", delta_down(j, i, epsilon_up(i, j, x)) ==
                                             delta_down(k, i, epsilon_up(i, k, x)));
            t.record("higher eps.delta", epsilon_down(j, i, delta_up(i, j, x)) ==
                                             epsilon_down(k, i, delta_up(i, k, x)));
            // lower intermediary relations
            t.record("lower delta.delta inclusion",
                     delta_up(j, k, delta_down(k, j, z)).is_subset_of(delta_up(i, k, delta_down(k, i, z))));
            t.record("lower eps.eps inclusion", epsilon_up(i, k, epsilon_down(k, i, z))
                                                    .is_subset_of(epsilon_up(j, k, epsilon_down(k, j, z))));
            t.record("lower delta.eps equality", delta_up(i, k, epsilon_down(k, i, z)) ==
                                                     delta_up(j, k, epsilon_down(k, j, z)));
            t.record("lower eps.delta equality", epsilon_up(i, k, delta_down(k, i, z)) ==
                                                     epsilon_up(j, k, delta_down(k, j, z)));
          }
        }
      }
      // per-dimension equalities and the resulting operator equalities
      for (int i = 1; i <= n - 1; ++i) {
        auto x = random::random_slice(rng, c, i);
        t.record("per-dimension delta", delta_up(i - 1, i, delta_down(i, i - 1, x)) ==
                                            delta_down(i + 1, i, delta_up(i, i + 1, x)));
        t.record("per-dimension epsilon", epsilon_up(i - 1, i, epsilon_down(i, i - 1, x)) ==
                                              epsilon_down(i + 1, i, epsilon_up(i, i + 1, x)));
      }
      if (n >= 1) {
        auto x = random::random_subcomplex(rng, c);
        t.record("dilate_s == dilate_g", dilate_s(x) == dilate_g(x));
        t.record("erode_s == erode_g", erode_s(x) == erode_g(x));
      }
    }
  }
  return from_tally(t);
}

// 4. filter laws
Verdict criterion4() {
  Tally t;
  Rng rng(4);
  for (const auto& c : corpus()) {
    if (c->dim() == 0) continue;
    for (int trial = 0; trial < kFilterTrials; ++trial) {
      auto x = random::random_subcomplex(rng, c);
      auto x2 = closure(x | random::random_subcomplex(rng, c));
      std::vector<SimplexSet> opens, closes;
      for (int s = 0; s <= kMaxFilterSize; ++s) {
        opens.push_back(open_g(s, x));
        closes.push_back(close_g(s, x));
      }
      for (int s = 1; s <= kMaxFilterSize; ++s) {
        const auto& o = opens[s];
        const auto& cl = closes[s];
        t.record("open idempotent", open_g(s, o) == o);
        t.record("close idempotent", close_g(s, cl) == cl);
        t.record("open anti-extensive", o.is_subset_of(x));
        t.record("close extensive", x.is_subset_of(cl));
        t.record("open increasing", o.is_subset_of(open_g(s, x2)));
        t.record("close increasing", cl.is_subset_of(close_g(s, x2)));
        t.record("outputs are subcomplexes", is_subcomplex(o) && is_subcomplex(cl));
      }
      for (int i = 0; i <= kMaxFilterSize; ++i) {
        for (int j = 0; j <= i; ++j) {
          t.record("granulometry", opens[i].is_subset_of(opens[j]));
          t.record("anti-granulometry", closes[j].is_subset_of(closes[i]));
        }
      }
      std::vector<SimplexSet> asf, asfp;
      for (int s = 0; s <= 3; ++s) {
        asf.push_back(asf_g(s, x));
        asfp.push_back(asf_g_prime(s, x));
        t.record("outputs are subcomplexes", is_subcomplex(asf.back()) && is_subcomplex(asfp.back()));
      }
      for (int i = 2; i <= 3; ++i) {
        for (int j = 1; j < i; ++j) {
          t.record("asf absorption", asf_g(i, asf[j]) == asf[i]);
          t.record("asf-prime absorption", asf_g_prime(i, asfp[j]) == asfp[i]);
        }
      }
      for (const auto& y : {dilate_g(x), erode_g(x), dilate_s(x), erode_s(x)}) {
        t.record("outputs are subcomplexes", is_subcomplex(y));
      }
    }
  }
  return from_tally(t);
}

std::vector<FilterSpec> filter_family() {
  std::vector<FilterSpec> specs;
  for (int s = 1; s <= 2; ++s) {
    specs.push_back({FilterKind::Dilate, s, Variant::Up});
    specs.push_back({FilterKind::Erode, s, Variant::Up});
    specs.push_back({FilterKind::Dilate, s, Variant::Down});
    specs.push_back({FilterKind::Erode, s, Variant::Down});
    specs.push_back({FilterKind::Open, s, Variant::Up});
    specs.push_back({FilterKind::Close, s, Variant::Up});
    specs.push_back({FilterKind::Asf, s, Variant::Up});
    specs.push_back({FilterKind::AsfPrime, s, Variant::Up});
  }
  return specs;
}

bool faces_dominate(const ValueMap& m, bool faces_ge) {
  for (const auto& x : m.ambient().all_simplices()) {
    for (const auto& y : oracle::nonempty_subsets(x)) {
      if (faces_ge ? m.at(y) < m.at(x) : m.at(y) > m.at(x)) return false;
    }
  }
  return true;
}

// 5. stack coherence
Verdict criterion5() {
  Tally a, b, cc;
  std::map<Value, std::size_t> failing_levels;
  std::set<std::string> failing_ops;
  Rng rng(5);
  const auto specs = filter_family();
  for (int s = 0; s < kStacks; ++s) {
    const auto& c = corpus()[s];
    auto m = random::random_stack(rng, c, kStackRange);
    // (a) closed forms vs stack extension of the binary operators
    for (auto [i, j] : dim_pairs(*c)) {
      auto mi = m.slice(i);
      auto mj = m.slice(j);
      a.record("gray_delta_up", gray_delta_up(i, j, mi) ==
                                    stack_extend([=](const SimplexSet& x) { return delta_up(i, j, x); },
                                                 mi, Domain::slice(j)));
      a.record("gray_epsilon_up",
               gray_epsilon_up(i, j, mi) ==
                   stack_extend([=](const SimplexSet& x) { return epsilon_up(i, j, x); }, mi,
                                Domain::slice(j)));
      a.record("gray_delta_down",
               gray_delta_down(j, i, mj) ==
                   stack_extend([=](const SimplexSet& y) { return delta_down(j, i, y); }, mj,
                                Domain::slice(i)));
      a.record("gray_epsilon_down",
               gray_epsilon_down(j, i, mj) ==
                   stack_extend([=](const SimplexSet& y) { return epsilon_down(j, i, y); }, mj,
                                Domain::slice(i)));
    }
    // (b) threshold superposition of every filter at every level
    if (c->dim() >= 1) {
      for (const auto& spec : specs) {
        auto g = gray_filter(spec, m);
        for (Value k = kStackRange.min; k <= kStackRange.max; ++k) {
          const bool ok = threshold(g, k) == apply_filter(spec, threshold(m, k));
          b.record("superposition", ok);
          if (!ok) {
            ++failing_levels[k];
            failing_ops.insert(spec.to_string());
          }
        }
      }
    }
    // (c) predicate equivalences on the stack, its dual and an arbitrary map
    for (const auto& w : {m, dual_map(m), random::random_map(rng, c, kStackRange, Domain::whole())}) {
      const bool simp = is_simplicial_stack(w);
      const bool star = is_starred_stack(w);
      cc.record("simplicial <=> thresholds are complexes",
                simp == oracle::thresholds_are_subcomplexes(w));
      cc.record("simplicial <=> faces dominate", simp == faces_dominate(w, true));
      cc.record("starred <=> thresholds are stars", star == oracle::thresholds_are_stars(w));
      cc.record("starred <=> cofaces dominate", star == faces_dominate(w, false));
      cc.record("simplicial(M) <=> starred(dual M)", simp == is_starred_stack(dual_map(w)));
    }
  }
  Verdict v;
  v.pass = a.clean() && b.clean() && cc.clean();
  auto part = [](const char* tag, const Tally& t) {
    return std::string(tag) + " " + (t.clean() ? "ok" : "FAIL") + " (" + std::to_string(t.checks()) +
           " checks" + (t.clean() ? "" : ", " + t.failures()) + ")";
  };
  v.detail = part("(a)", a) + "; " + part("(b)", b) + "; " + part("(c)", cc);
  if (!failing_levels.empty()) {
    v.detail += "; superposition failures by level:";
    for (auto [k, n] : failing_levels) v.detail += " k=" + std::to_string(k) + ":" + std::to_string(n);
    v.detail += "; operators:";
    for (const auto& op : failing_ops) v.detail += " [" + op + "]";
  }
  return v;
}

// 6. graph operators
Verdict criterion6() {
  Tally t;
  Rng rng(6);
  std::uniform_int_distribution<int> nv(1, kMaxVertices);
  std::bernoulli_distribution keep(0.4);
  for (int g = 0; g < kGraphs; ++g) {
    const int n = nv(rng);
    std::vector<Simplex> gens;
    for (int a = 0; a < n; ++a) gens.push_back(Simplex{static_cast<VertexId>(a)});
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (keep(rng)) gens.push_back(Simplex{static_cast<VertexId>(a), static_cast<VertexId>(b)});
      }
    }
    if (gens.size() == static_cast<std::size_t>(n)) {
      // keep it a 1-complex
      gens.push_back(Simplex{0, static_cast<VertexId>(n)});
    }
    auto c = Complex::build(gens, Closure::Auto);
    auto f = random::random_map(rng, c, kStackRange, Domain::slice(0));
    auto want_d = oracle::neighbourhood_extremum(f, oracle::Extremum::Max);
    auto want_e = oracle::neighbourhood_extremum(f, oracle::Extremum::Min);
    const auto dil = graph::vincent_dilate(f);
    const auto ero = graph::vincent_erode(f);
    auto got_d = dil.slice_values(0);
    auto got_e = ero.slice_values(0);
    t.record("vincent_dilate", std::equal(got_d.begin(), got_d.end(), want_d.begin(), want_d.end()));
    t.record("vincent_erode", std::equal(got_e.begin(), got_e.end(), want_e.begin(), want_e.end()));
    auto v = random::random_slice(rng, c, 0);
    auto e = random::random_slice(rng, c, 1);
    t.record("edges_both_ends_in", graph::edges_both_ends_in(v) == oracle::epsilon_up(0, 1, v));
    t.record("edges_touching", graph::edges_touching(v) == oracle::delta_up(0, 1, v));
    t.record("vertices_all_edges_in", graph::vertices_all_edges_in(e) == oracle::epsilon_down(1, 0, e));
    t.record("vertices_of", graph::vertices_of(e) == oracle::delta_down(1, 0, e));
    auto fe = random::random_map(rng, c, kStackRange, Domain::slice(1));
    using oracle::Extremum;
    t.record("edge_min_of_ends", graph::edge_min_of_ends(f) == oracle::gray_scan(f, 0, 1, Extremum::Min));
    t.record("edge_max_of_ends", graph::edge_max_of_ends(f) == oracle::gray_scan(f, 0, 1, Extremum::Max));
    t.record("vertex_min_of_edges",
             graph::vertex_min_of_edges(fe) == oracle::gray_scan(fe, 1, 0, Extremum::Min));
    t.record("vertex_max_of_edges",
             graph::vertex_max_of_edges(fe) == oracle::gray_scan(fe, 1, 0, Extremum::Max));
  }
  return from_tally(t);
}

// 7. image pipeline
Verdict criterion7() {
  Tally t;
  auto c33 = complex_from_image_structure(3, 3);
  t.record("3x3 counts", c33->size(0) == 9 && c33->size(1) == 16 && c33->size(2) == 8);
  // independent count: 4-neighbour pairs + diagonal pairs, two triangles per unit square
  const std::size_t w = 3, h = 3;
  const std::size_t edges = (w - 1) * h + w * (h - 1) + (w - 1) * (h - 1);
  t.record("3x3 enumeration", c33->size(1) == edges && c33->size(2) == 2 * (w - 1) * (h - 1));

  Rng rng(7);
  std::uniform_int_distribution<Value> px(0, 255);
  for (int k = 0; k < kImages; ++k) {
    ImageGrid g{8, 8, 255, std::vector<Value>(64)};
    for (auto& p : g.pixels) p = px(rng);
    auto m = stack_from_image(g);
    for (Value level = 0; level <= 255; ++level) {
      t.record("ingestion commutes",
               binary_complex_from_image(g, level).members() == threshold(m, level).members());
    }
    std::ostringstream pgm;
    io::write_pgm(pgm, g);
    std::istringstream pin(pgm.str());
    auto back = io::read_netpbm(pin);
    std::ostringstream pgm2;
    io::write_pgm(pgm2, back);
    t.record("pgm round-trip", back == g && pgm2.str() == pgm.str());

    ImageGrid b{8, 8, 1, std::vector<Value>(64)};
    for (std::size_t i = 0; i < 64; ++i) b.pixels[i] = g.pixels[i] & 1;
    std::ostringstream pbm;
    io::write_pbm(pbm, b);
    std::istringstream bin(pbm.str());
    auto bback = io::read_netpbm(bin);
    std::ostringstream pbm2;
    io::write_pbm(pbm2, bback);
    t.record("pbm round-trip", bback == b && pbm2.str() == pbm.str());

    std::ostringstream text;
    io::write_text_complex(text, m);
    std::istringstream tin(text.str());
    auto parsed = io::read_text_complex(tin);
    std::ostringstream text2;
    io::write_text_complex(text2, parsed.value_map(m.range()));
    t.record("text round-trip", text2.str() == text.str());
  }
  return from_tally(t);
}

// 8. salt-and-pepper removal through the command line
ImageGrid noisy_image(std::uint64_t seed, std::size_t side) {
  ImageGrid g{side, side, 1, std::vector<Value>(side * side)};
  const double cx = side * 0.4, cy = side * 0.45, r = side * 0.28;
  for (std::size_t y = 0; y < side; ++y) {
    for (std::size_t x = 0; x < side; ++x) {
      const bool disk = (x - cx) * (x - cx) + (y - cy) * (y - cy) <= r * r;
      const bool bar = x >= side * 0.7 && x < side * 0.85 && y >= side * 0.1 && y < side * 0.9;
      g.pixels[y * side + x] = disk || bar;
    }
  }
  Rng rng(seed);
  std::bernoulli_distribution flip(kNoiseDensity);
  for (auto& p : g.pixels) {
    if (flip(rng)) p = 1 - p;
  }
  return g;
}

std::vector<std::size_t> isolated_vertices(const ImageGrid& g) {
  auto c = complex_from_image_structure(g);
  std::vector<std::size_t> out;
  for (Index v = 0; v < c->size(0); ++v) {
    const VertexId id = c->simplex(0, v)[0];
    auto cof = c->cofaces(0, v);
    if (cof.empty()) continue;
    bool isolated = true;
    for (Index e : cof) {
      const Simplex& edge = c->simplex(1, e);
      const VertexId other = edge[0] == id ? edge[1] : edge[0];
      if (g.pixels[other] == g.pixels[id]) isolated = false;
    }
    if (isolated) out.push_back(id);
  }
  return out;
}

Verdict criterion8() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "scmorph_acceptance_8";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto p = [&](const char* name) { return (dir / name).string(); };
  auto img = noisy_image(8, 64);
  io::write_image(p("noisy.pbm"), img);
  std::ostringstream sink, err;
  auto cli_run = [&](std::vector<std::string> args) { return cli::run(args, sink, err); };
  Verdict v;
  int rc = cli_run({"build", "--image", p("noisy.pbm"), "--binary", "--level", "1", "--out",
                    p("noisy.ascx")});
  rc |= cli_run({"filter", "--in", p("noisy.ascx"), "--op", "asf", "--size", "3", "--out",
                 p("asf.ascx")});
  rc |= cli_run({"filter", "--in", p("noisy.ascx"), "--op", "asf", "--size", "3", "--out",
                 p("asf2.ascx")});
  rc |= cli_run({"filter", "--in", p("noisy.ascx"), "--out", p("id.ascx")});
  rc |= cli_run({"export", "--in", p("asf.ascx"), "--image", p("asf.pbm"), "--width", "64",
                 "--height", "64"});
  rc |= cli_run({"export", "--in", p("id.ascx"), "--image", p("id.pbm"), "--width", "64",
                 "--height", "64"});
  if (rc != 0) {
    fs::remove_all(dir);
    return {false, "command failed: " + err.str()};
  }
  auto filtered = io::read_netpbm(p("asf.pbm"));
  auto identity = io::read_netpbm(p("id.pbm"));
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  };
  const bool deterministic = slurp(p("asf.ascx")) == slurp(p("asf2.ascx"));
  fs::remove_all(dir);

  const auto noise = isolated_vertices(img);
  std::size_t removed = 0, removed_by_identity = 0;
  for (auto id : noise) {
    if (filtered.pixels[id] != img.pixels[id]) ++removed;
    if (identity.pixels[id] != img.pixels[id]) ++removed_by_identity;
  }
  const double ratio = noise.empty() ? 0.0 : static_cast<double>(removed) / noise.size();
  v.pass = !noise.empty() && ratio >= kRequiredRemoval && removed_by_identity == 0 &&
           identity.pixels == img.pixels && deterministic;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%zu isolated noise vertices, asf size 3 removed %zu (%.1f%%), identity removed %zu, "
                "deterministic %s",
                noise.size(), removed, 100.0 * ratio, removed_by_identity, deterministic ? "yes" : "no");
  v.detail = buf;
  return v;
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Verdict()> run;
};

}  // namespace


int main(int argc, char** argv) {
  int only = 0;
  for (int a = 1; a < argc; ++a) {
    const std::string arg = argv[a];
    if (arg == "--criterion" && a + 1 < argc) {
      only = std::stoi(argv[++a]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  set_warning_handler([](std::string_view) {});
  const std::vector<Criterion> criteria = {
      {1, "dimensional operators equal their definitions", kLimit1, criterion1},
      {2, "adjunctions and dualities", kLimit2, criterion2},
      {3, "composition laws", kLimit3, criterion3},
      {4, "opening, closing, granulometry and ASF laws", kLimit4, criterion4},
      {5, "stack coherence", kLimit5, criterion5},
      {6, "graph operators", kLimit6, criterion6},
      {7, "image pipeline", kLimit7, criterion7},
      {8, "salt-and-pepper removal", kLimit8, criterion8},
  };
  bool all = true;
  bool ran = false;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    ran = true;
    const auto start = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("threw ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > c.limit_seconds) {
      v.pass = false;
      v.detail += "; over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << "criterion " << c.id << ": " << (v.pass ? "PASS" : "FAIL") << "  " << c.title
              << "  [" << v.detail << "; " << timing << "]" << std::endl;
    all = all && v.pass;
  }
  if (!ran) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  return all ? 0 : 1;
}
