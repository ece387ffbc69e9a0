#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "check/laws.hpp"
#include "scmorph/scmorph.hpp"

namespace scmorph::cli {
namespace {

// How a text complex file is interpreted by filter / export.
enum class Mode { Auto, Binary, Gray };

struct Loaded {
  ComplexPtr complex;
  bool had_values = false;
  std::optional<SimplexSet> set;  // binary path
  std::optional<ValueMap> map;    // grayscale path
};

Loaded load(const std::string& path, Mode mode, ValueRange range) {
  auto text = io::read_text_complex(path);
  Loaded l{text.complex, text.has_values(), std::nullopt, std::nullopt};
  bool binary = mode == Mode::Binary;
  if (mode == Mode::Auto) {
    if (!text.has_values()) {
      binary = true;
    } else {
      auto [lo, hi] = text.value_bounds();
      binary = lo >= 0 && hi <= 1;
    }
  }
  if (binary) {
    if (!text.has_values()) {
      l.set = SimplexSet::full(text.complex);
    } else {
      l.set = threshold(text.value_map(ValueRange{0, 1}), 1);
    }
  } else {
    if (!text.has_values()) {
      throw Error(Errc::DomainMismatch, path + " carries no values for a grayscale operation");
    }
    l.map = text.value_map(range);
  }
  return l;
}

ValueMap indicator(const SimplexSet& x) {
  ValueMap m(x.ambient_ptr(), ValueRange{0, 1}, Domain::whole());
  const Complex& c = x.ambient();
  for (int d = 0; d <= c.dim(); ++d) {
    for (Index i = 0; i < c.size(d); ++i) m.set(d, i, x.contains(d, i) ? 1 : 0);
  }
  return m;
}

void save(const std::string& path, const Loaded& l) {
  if (l.map) {
    io::write_text_complex(path, *l.map);
  } else if (!l.had_values && *l.set == SimplexSet::full(l.complex)) {
    io::write_text_complex(path, *l.complex);
  } else {
    io::write_text_complex(path, indicator(*l.set));
  }
}

/// "asf", "asf:3", "dilate-down:2".
FilterSpec parse_stage(const std::string& text, int default_size, Variant variant) {
  std::string name = text;
  int size = default_size;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    name = text.substr(0, colon);
    const std::string num = text.substr(colon + 1);
    try {
      std::size_t used = 0;
      size = std::stoi(num, &used);
      if (used != num.size()) throw std::invalid_argument(num);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidSpec, "bad size in stage '" + text + "'");
    }
  }
  Variant v = variant;
  for (const char* suffix : {"-down", "-up"}) {
    const std::string s = suffix;
    if (name.size() > s.size() && name.ends_with(s)) {
      v = s == "-down" ? Variant::Down : Variant::Up;
      name.resize(name.size() - s.size());
    }
  }
  auto kind = parse_filter_kind(name);
  if (!kind) throw Error(Errc::InvalidSpec, "unknown operator '" + name + "'");
  FilterSpec spec{*kind, size, v};
  spec.validate();
  return spec;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("MORPH_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidSpec, std::string("MORPH_SEED is not an integer: ") + env);
    }
  }
  return 0;
}

struct BuildArgs {
  std::string image, mesh, values, out;
  bool binary = false;
  Value level = 1;
  std::optional<double> lo, hi;
  Value kmin = 0, kmax = 255;
};

int do_build(const BuildArgs& a, std::ostream& out) {
  if (a.image.empty() == a.mesh.empty()) {
    throw CLI::ValidationError("build", "exactly one of --image and --mesh is required");
  }
  if (!a.image.empty()) {
    auto g = io::read_netpbm(a.image);
    if (a.binary) {
      auto x = binary_complex_from_image(g, a.level);
      io::write_text_complex(a.out, indicator(x));
    } else {
      io::write_text_complex(a.out, stack_from_image(g));
    }
    out << "built " << g.width << "x" << g.height << " image complex\n";
    return kOk;
  }
  auto mesh = io::read_off(a.mesh);
  auto c = mesh_to_complex(mesh);
  if (a.values.empty()) {
    io::write_text_complex(a.out, *c);
  } else {
    if (!a.lo || !a.hi) throw CLI::ValidationError("build", "--values needs --lo and --hi");
    auto raw = io::read_vertex_values(a.values);
    if (raw.size() != mesh.vertex_count) {
      throw Error(Errc::ShapeMismatch, std::to_string(raw.size()) + " values for " +
                                           std::to_string(mesh.vertex_count) + " vertices");
    }
    const auto range = ValueRange::make(a.kmin, a.kmax);
    auto q = quantize_values(raw, *a.lo, *a.hi, range);
    io::write_text_complex(a.out, stack_from_vertex_values(c, q, range));
  }
  out << "built mesh complex: " << c->size(0) << " vertices, " << c->size(1) << " edges, "
      << c->size(2) << " triangles\n";
  return kOk;
}

struct FilterArgs {
  std::string in, out, mode = "auto", variant = "up";
  std::vector<std::string> ops;
  int size = 1;
  Value kmin = 0, kmax = 255;
};

Mode parse_mode(const std::string& m) {
  if (m == "binary") return Mode::Binary;
  if (m == "gray") return Mode::Gray;
  return Mode::Auto;
}

int do_filter(const FilterArgs& a, std::ostream& out) {
  const Variant variant = a.variant == "down" ? Variant::Down : Variant::Up;
  std::vector<FilterSpec> stages;
  for (const auto& op : a.ops) stages.push_back(parse_stage(op, a.size, variant));
  auto l = load(a.in, parse_mode(a.mode), ValueRange::make(a.kmin, a.kmax));
  for (const auto& spec : stages) {
    if (l.map) {
      l.map = gray_filter(spec, *l.map);
    } else {
      l.set = apply_filter(spec, *l.set);
    }
  }
  save(a.out, l);
  out << (l.map ? "grayscale" : "binary") << " pipeline of " << stages.size() << " stage(s)";
  for (const auto& s : stages) out << " " << s.to_string();
  out << "\n";
  return kOk;
}

int do_threshold(const std::string& in, const std::string& path, Value level, Value kmin,
                 Value kmax) {
  auto l = load(in, Mode::Gray, ValueRange::make(kmin, kmax));
  io::write_text_complex(path, indicator(threshold(*l.map, level)));
  return kOk;
}

int do_export(const std::string& in, const std::string& image, std::size_t w, std::size_t h,
              const std::string& mode, Value kmin, Value kmax) {
  auto l = load(in, parse_mode(mode), ValueRange::make(kmin, kmax));
  ValueMap m = l.map ? *l.map : indicator(*l.set);
  io::write_image(image, vertex_values_to_image(m, w, h));
  return kOk;
}

int do_info(const std::string& in, std::ostream& out) {
  auto text = io::read_text_complex(in);
  const Complex& c = *text.complex;
  out << "n=" << c.dim() << ", counts:";
  for (int d = 0; d <= c.dim(); ++d) out << " " << c.size(d);
  out << "\n";
  if (!text.has_values()) {
    out << "values: none\n";
    return kOk;
  }
  auto [lo, hi] = text.value_bounds();
  out << "values: " << lo << ".." << hi << "\n";
  auto m = text.value_map(ValueRange::make(0, std::max<Value>(hi, 1)));
  out << "simplicial stack: " << (is_simplicial_stack(m) ? "yes" : "no") << "\n";
  out << "starred stack: " << (is_starred_stack(m) ? "yes" : "no") << "\n";
  if (lo >= 0 && hi <= 1) {
    auto x = threshold(m.with_range(ValueRange{0, 1}), 1);
    out << "set: " << x.size() << " simplices, subcomplex: " << (is_subcomplex(x) ? "yes" : "no")
        << ", star: " << (is_star(x) ? "yes" : "no") << "\n";
  }
  return kOk;
}

int do_check(const check::SuiteOptions& opts, bool list, std::ostream& out) {
  if (list) {
    for (const auto& law : check::registry()) out << law.group << "\t" << law.name << "\n";
    return kOk;
  }
  auto report = check::run_suite(opts);
  out << "seed " << opts.seed << "\n";
  check::print_report(out, report);
  return report.ok() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Morphological filtering on simplicial complexes", "scmorph"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Build a complex file from an image or a mesh");
  b->add_option("--image", build.image, "PGM/PBM input")->check(CLI::ExistingFile);
  b->add_option("--mesh", build.mesh, "ASCII OFF triangle mesh")->check(CLI::ExistingFile);
  b->add_option("--values", build.values, "vertex values, one per line")->check(CLI::ExistingFile);
  b->add_option("--lo", build.lo, "value mapped to k_min");
  b->add_option("--hi", build.hi, "value mapped to k_max");
  b->add_flag("--binary", build.binary, "keep the largest subcomplex above --level");
  b->add_option("--level", build.level, "foreground level for --binary")->capture_default_str();
  b->add_option("--kmin", build.kmin, "lower end of K for meshes")->capture_default_str();
  b->add_option("--kmax", build.kmax, "upper end of K for meshes")->capture_default_str();
  b->add_option("--out", build.out, "output complex file")->required();

  FilterArgs filt;
  auto* f = app.add_subcommand("filter", "Apply a filter pipeline to a set or a stack");
  f->add_option("--in", filt.in, "input complex file")->required()->check(CLI::ExistingFile);
  f->add_option("--out", filt.out, "output complex file")->required();
  f->add_option("--op", filt.ops,
                "stage name[:size], e.g. asf:3 or dilate-down; repeat for a pipeline")
      ->take_all();
  f->add_option("--size", filt.size, "size of stages given without one")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  f->add_option("--variant", filt.variant, "dilate/erode intermediary")
      ->check(CLI::IsMember({"up", "down"}))
      ->capture_default_str();
  f->add_option("--mode", filt.mode, "auto: {0,1} values or none = set, otherwise stack")
      ->check(CLI::IsMember({"auto", "binary", "gray"}))
      ->capture_default_str();
  f->add_option("--kmin", filt.kmin, "lower end of K for stacks")->capture_default_str();
  f->add_option("--kmax", filt.kmax, "upper end of K for stacks")->capture_default_str();

  std::string th_in, th_out;
  Value th_level = 0, th_kmin = 0, th_kmax = 255;
  auto* t = app.add_subcommand("threshold", "Write the k-threshold of a stack as a set");
  t->add_option("--in", th_in)->required()->check(CLI::ExistingFile);
  t->add_option("--level", th_level)->required();
  t->add_option("--out", th_out)->required();
  t->add_option("--kmin", th_kmin)->capture_default_str();
  t->add_option("--kmax", th_kmax)->capture_default_str();

  std::string ex_in, ex_image, ex_mode = "auto";
  std::size_t ex_w = 0, ex_h = 0;
  Value ex_kmin = 0, ex_kmax = 255;
  auto* e = app.add_subcommand("export", "Write vertex values as a PGM/PBM image");
  e->add_option("--in", ex_in)->required()->check(CLI::ExistingFile);
  e->add_option("--image", ex_image, ".pbm selects P4, anything else P5")->required();
  e->add_option("--width", ex_w)->required()->check(CLI::PositiveNumber);
  e->add_option("--height", ex_h)->required()->check(CLI::PositiveNumber);
  e->add_option("--mode", ex_mode)
      ->check(CLI::IsMember({"auto", "binary", "gray"}))
      ->capture_default_str();
  e->add_option("--kmin", ex_kmin)->capture_default_str();
  e->add_option("--kmax", ex_kmax)->capture_default_str();

  std::string info_in;
  auto* i = app.add_subcommand("info", "Dimension, counts and stack classification");
  i->add_option("--in", info_in)->required()->check(CLI::ExistingFile);

  check::SuiteOptions copts;
  bool list = false;
  std::optional<std::uint64_t> seed;
  auto* c = app.add_subcommand("check", "Run the property suite on random complexes");
  c->add_option("--seed", seed, "defaults to $MORPH_SEED, then 0");
  c->add_option("--cases", copts.cases)->capture_default_str()->check(CLI::NonNegativeNumber);
  c->add_option("--max-vertices", copts.max_vertices)
      ->capture_default_str()
      ->check(CLI::Range(1, 16));
  c->add_option("--skip", copts.skip, "law or group names to leave out")->take_all();
  c->add_flag("--list", list, "list the laws and exit");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& s) {
    return app.exit(s, out, err);
  } catch (const CLI::ParseError& pe) {
    app.exit(pe, out, err);
    return kUsage;
  }

  try {
    if (b->parsed()) return do_build(build, out);
    if (f->parsed()) return do_filter(filt, out);
    if (t->parsed()) return do_threshold(th_in, th_out, th_level, th_kmin, th_kmax);
    if (e->parsed()) return do_export(ex_in, ex_image, ex_w, ex_h, ex_mode, ex_kmin, ex_kmax);
    if (i->parsed()) return do_info(info_in, out);
    copts.seed = seed ? *seed : default_seed();
    return do_check(copts, list, out);
  } catch (const CLI::ParseError& pe) {
    err << "error: " << pe.what() << "\n";
    return kUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kFailure;
  }
}

}  // namespace scmorph::cli
