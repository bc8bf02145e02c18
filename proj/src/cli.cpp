#include "w2line/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "w2line/curvature.hpp"
#include "w2line/isometry1d.hpp"
#include "w2line/json_io.hpp"
#include "w2line/property_suite.hpp"
#include "w2line/random_measures.hpp"
#include "w2line/rank_embed.hpp"
#include "w2line/transport1d.hpp"
#include "w2line/transport_rn.hpp"

namespace w2line {

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

bool is_rn(const Json& j) { return j.is_object() && j.contains("dim"); }

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot write " + path);
  f << text;
}

// Quantile curve of mu as (mass, position) rows at every piece end.
void quantile_rows(std::ostream& os, const std::string& prefix, const Measure1D& mu) {
  const auto& q = mu.quantile_pieces();
  for (std::size_t k = 0; k < q.size(); ++k) {
    os << prefix << q.breakpoints()[k] << ',' << q.pieces()[k].start << '\n';
    os << prefix << q.breakpoints()[k + 1] << ',' << q.pieces()[k].end << '\n';
  }
}

struct Options {
  std::string a;
  std::string b;
  int frames = 0;
  double t = 0.0;
  std::string in;
  std::string out;
  std::vector<double> snapshots;
  std::size_t quantize = 0;
  int eps = 1;
  double v = 0.0;
  int eta = 1;
  std::size_t max_points = 64;
  std::size_t triples = 0;
  std::uint64_t seed = 0;
  std::size_t max_atoms = 6;
  std::vector<double> tuple;
  bool unscaled = false;
};

int cmd_dist(const Options& o, std::ostream& out) {
  const Json ja = read_json_file(o.a);
  const Json jb = read_json_file(o.b);
  double d;
  if (is_rn(ja) || is_rn(jb)) {
    d = std::sqrt(discrete_ot(measure_rn_from_json(ja), measure_rn_from_json(jb),
                              {o.max_points})
                      .cost);
  } else {
    d = wasserstein2(measure1d_from_json(ja), measure1d_from_json(jb));
  }
  out << d << '\n';
  return kExitOk;
}

int cmd_geodesic(const Options& o, std::ostream& out) {
  const auto g = geodesic(measure1d_from_json(read_json_file(o.a)),
                          measure1d_from_json(read_json_file(o.b)));
  if (o.frames <= 0) {
    out << to_json(g).dump() << '\n';
    return kExitOk;
  }
  out << "frame,t,mass,position\n";
  for (int f = 0; f < o.frames; ++f) {
    const double t = o.frames == 1 ? 0.0 : static_cast<double>(f) / (o.frames - 1);
    std::ostringstream prefix;
    prefix.precision(17);
    prefix << f << ',' << t << ',';
    quantile_rows(out, prefix.str(), geodesic_eval(g, t));
  }
  return kExitOk;
}

int cmd_extend(const Options& o, std::ostream& out) {
  out << to_string(extension_interval(measure1d_from_json(read_json_file(o.a)),
                                      measure1d_from_json(read_json_file(o.b))))
      << '\n';
  return kExitOk;
}

Measure1D flow_image(const Measure1D& mu, double t, std::size_t quantize,
                     std::ostream& err) {
  if (mu.is_atomic() || quantize == 0) return exotic_flow(mu, t);
  auto q = exotic_flow_quantized(mu, t, quantize);
  err << "quantized to " << quantize << " atoms, error bound " << q.error_bound << '\n';
  return std::move(q.image);
}

int cmd_flow(const Options& o, std::ostream& out, std::ostream& err) {
  const Measure1D mu = measure1d_from_json(read_json_file(o.in));
  if (!o.snapshots.empty()) {
    std::ostringstream csv;
    csv.precision(17);
    csv << "t,mass,position\n";
    for (double t : o.snapshots) {
      std::ostringstream prefix;
      prefix.precision(17);
      prefix << t << ',';
      quantile_rows(csv, prefix.str(), flow_image(mu, t, o.quantize, err));
    }
    write_text(o.out, csv.str(), out);
    return kExitOk;
  }
  write_text(o.out, to_json(flow_image(mu, o.t, o.quantize, err)).dump() + "\n", out);
  return kExitOk;
}

int cmd_isom(const Options& o, std::ostream& out) {
  const IsometryElement g{o.eps, o.v, o.eta, o.t};
  validate(g);
  if (o.in.empty()) {
    out << to_json(g).dump() << '\n';
    return kExitOk;
  }
  const Measure1D mu = measure1d_from_json(read_json_file(o.in));
  write_text(o.out, to_json(apply_isometry(g, mu)).dump() + "\n", out);
  return kExitOk;
}

int cmd_ot(const Options& o, std::ostream& out) {
  const auto r = discrete_ot(measure_rn_from_json(read_json_file(o.a)),
                             measure_rn_from_json(read_json_file(o.b)), {o.max_points});
  out << to_json(r.plan, r.cost).dump() << '\n';
  return kExitOk;
}

int cmd_curvature(const Options& o, std::ostream& out) {
  Rng rng(o.seed);
  const double ts[] = {0.25, 0.37, 0.5, 0.9};
  out << "triple,t,defect\n";
  for (std::size_t i = 0; i < o.triples; ++i) {
    const auto x = random_mixed_measure(rng, o.max_atoms);
    const auto y = random_mixed_measure(rng, o.max_atoms);
    const auto z = random_mixed_measure(rng, o.max_atoms);
    for (double t : ts) out << i << ',' << t << ',' << comparison_defect(x, y, z, t) << '\n';
  }
  return kExitOk;
}

int cmd_embed(const Options& o, std::ostream& out) {
  const Measure1D mu =
      o.unscaled ? embed_sorted_tuple_unscaled(o.tuple) : embed_sorted_tuple(o.tuple);
  out << to_json(mu).dump() << '\n';
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  bool ok = true;
  for (const auto& r : run_property_suite(o.seed)) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << std::setprecision(3)
        << " worst=" << r.worst << " tol=" << r.tolerance << std::setprecision(17);
    if (!r.detail.empty()) out << " (" << r.detail << ')';
    out << '\n';
    ok = ok && r.passed;
  }
  return ok ? kExitOk : kExitPropertyViolation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the quadratic Wasserstein space of the line"};
  app.name("w2line");
  app.require_subcommand(1);
  Options o;

  auto* dist = app.add_subcommand("dist", "Wasserstein distance between two measures");
  dist->add_option("a", o.a)->required();
  dist->add_option("b", o.b)->required();
  dist->add_option("--max-points", o.max_points, "Size cap for R^n inputs");

  auto* geo = app.add_subcommand("geodesic", "Displacement geodesic between two measures");
  geo->add_option("a", o.a)->required();
  geo->add_option("b", o.b)->required();
  geo->add_option("--frames", o.frames, "Emit N frames on [0,1] as CSV");

  auto* ext = app.add_subcommand("extend", "Maximal extension interval of the geodesic");
  ext->add_option("a", o.a)->required();
  ext->add_option("b", o.b)->required();

  auto* flow = app.add_subcommand("flow", "Apply the exotic isometric flow");
  flow->add_option("--t", o.t, "Flow time");
  flow->add_option("--in", o.in)->required();
  flow->add_option("--out", o.out, "Output file (default stdout)");
  flow->add_option("--snapshots", o.snapshots, "Comma-separated times; emits CSV")
      ->delimiter(',');
  flow->add_option("--quantize", o.quantize, "Atoms used for non-atomic inputs");

  auto* isom = app.add_subcommand("isom", "Isometry in normal form (eps, v, eta, t)");
  isom->add_option("--eps", o.eps)->check(CLI::IsMember({-1, 1}));
  isom->add_option("--v", o.v);
  isom->add_option("--eta", o.eta)->check(CLI::IsMember({-1, 1}));
  isom->add_option("--t", o.t);
  isom->add_option("--in", o.in, "Measure to transform");
  isom->add_option("--out", o.out);

  auto* ot = app.add_subcommand("ot", "Exact discrete optimal transport in R^n");
  ot->add_option("a", o.a)->required();
  ot->add_option("b", o.b)->required();
  ot->add_option("--max-points", o.max_points);

  auto* curv = app.add_subcommand("curvature", "CSV of comparison defects on random triangles");
  curv->add_option("--triples", o.triples)->required();
  curv->add_option("--seed", o.seed)->required();
  curv->add_option("--max-atoms", o.max_atoms);

  auto* embed = app.add_subcommand("embed", "Embed a sorted tuple as a uniform atomic measure");
  embed->add_option("--tuple", o.tuple)->required()->delimiter(',');
  embed->add_flag("--unscaled", o.unscaled, "Omit the sqrt(k) scale");

  auto* check = app.add_subcommand("check", "Run the randomized property suite");
  check->add_option("--seed", o.seed)->required();

  std::vector<std::string> storage = {"w2line"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  const auto precision = out.precision();
  out << std::setprecision(17);
  int code = kExitOk;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (dist->parsed()) code = cmd_dist(o, out);
    else if (geo->parsed()) code = cmd_geodesic(o, out);
    else if (ext->parsed()) code = cmd_extend(o, out);
    else if (flow->parsed()) code = cmd_flow(o, out, err);
    else if (isom->parsed()) code = cmd_isom(o, out);
    else if (ot->parsed()) code = cmd_ot(o, out);
    else if (curv->parsed()) code = cmd_curvature(o, out);
    else if (embed->parsed()) code = cmd_embed(o, out);
    else if (check->parsed()) code = cmd_check(o, out);
  } catch (const CLI::ParseError& e) {
    code = app.exit(e, out, err) == 0 ? kExitOk : kExitBadInput;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << '\n';
    code = kExitSizeCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    code = kExitBadInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    code = kExitBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    code = kExitInternal;
  }
  out.precision(precision);
  return code;
}

}  // namespace w2line
