#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "lamcoord/lamination.hpp"
#include "lamcoord/oracle.hpp"
#include "lamcoord/render.hpp"

namespace lamcoord::cli {

namespace {

Int integer_field(const Json& v, const std::string& where) {
  if (v.is_number_integer()) {
    Int x = 0;
    if (v.is_number_unsigned()) {
      const auto u = v.get<std::uint64_t>();
      if (u > static_cast<std::uint64_t>(kMaxMagnitude)) {
        throw DomainError(where + " exceeds the supported magnitude 2^48");
      }
      x = static_cast<Int>(u);
    } else {
      x = v.get<Int>();
    }
    if (x > kMaxMagnitude || x < -kMaxMagnitude) throw DomainError(where + " exceeds the supported magnitude 2^48");
    return x;
  }
  // Integers wider than 64 bits arrive as floating point.
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::isfinite(d) && std::floor(d) == d && std::fabs(d) > static_cast<double>(kMaxMagnitude)) {
      throw DomainError(where + " exceeds the supported magnitude 2^48");
    }
  }
  throw ParseError(where + " must be an integer");
}

std::vector<Int> int_array(const Json& j, const std::string& key) {
  if (!j.contains(key)) throw ParseError("missing key \"" + key + "\"");
  const Json& arr = j.at(key);
  if (!arr.is_array()) throw ParseError("\"" + key + "\" must be an array");
  std::vector<Int> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(integer_field(arr[i], key + "_" + std::to_string(i + 1)));
  }
  return out;
}

SurfaceSignature signature_from_json(const Json& j, const std::vector<std::string>& arrays) {
  if (!j.is_object()) throw ParseError("top-level JSON value must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "n" && key != "k" && std::find(arrays.begin(), arrays.end(), key) == arrays.end()) {
      throw ParseError("unknown key \"" + key + "\"");
    }
  }
  for (const char* key : {"n", "k"}) {
    if (!j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  }
  const Int n = integer_field(j.at("n"), "n");
  const Int k = integer_field(j.at("k"), "k");
  if (n + k > kMaxSites) throw DomainError("n + k exceeds the supported " + std::to_string(kMaxSites));
  return signature(static_cast<int>(k), static_cast<int>(n));
}

Json read_input(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json array_of(const std::vector<Int>& v) {
  Json arr = Json::array();
  for (Int x : v) arr.push_back(x);
  return arr;
}

Json report_json(const ValidityReport& report) {
  Json j;
  j["valid"] = report.valid();
  j["violations"] = Json::array();
  for (const Violation& v : report.violations) {
    j["violations"].push_back({{"code", code(v.kind)}, {"where", v.where}, {"message", v.message}});
  }
  return j;
}

struct Options {
  std::string input = "-";
  std::string out;
  std::string format = "text";
  bool verbose = false;
  int n = 2;
  int k = 2;
  Int radius = 2;
  Int max_strands = 4;
};

void write_text(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.out.empty() || opt.out == "-") {
    out << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw ParseError("cannot write " + opt.out);
  f << text;
}

int cmd_encode(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  const TriangleCoords tau = triangle_from_json(read_input(opt.input, in));
  const ValidityReport report = validate(tau);
  if (!report.valid()) {
    err << report.to_string() << '\n';
    return kExitDomain;
  }
  write_text(opt, to_json(encode(tau)).dump() + "\n", out);
  return kExitOk;
}

int cmd_decode(const Options& opt, std::istream& in, std::ostream& out, std::ostream&) {
  const DecodeResult r = decode(dynnikov_from_json(read_input(opt.input, in)));
  Json j = to_json(r.tau);
  if (opt.verbose) j["intermediates"] = to_json(r.intermediates);
  write_text(opt, j.dump() + "\n", out);
  return kExitOk;
}

int cmd_validate(const Options& opt, std::istream& in, std::ostream& out, std::ostream&) {
  const ValidityReport report = validate(triangle_from_json(read_input(opt.input, in)));
  write_text(opt, opt.format == "json" ? report_json(report).dump() + "\n" : report.to_string() + "\n", out);
  return report.valid() ? kExitOk : kExitDomain;
}

int cmd_trace(const Options& opt, std::istream& in, std::ostream& out, std::ostream&) {
  const StrandDiagram diagram = build_diagram(triangle_from_json(read_input(opt.input, in)));
  const std::vector<TracedComponent> comps = trace(diagram);
  std::ostringstream os;
  if (opt.format == "json") {
    Json j;
    j["count"] = comps.size();
    j["components"] = Json::array();
    for (const TracedComponent& c : comps) {
      Json e;
      e["sidedness"] = to_string(c.sidedness);
      e["beta_slots"] = c.strand_cycle.size();
      e["core_crossings"] = c.core_crossings;
      if (c.extra) e["nonprimitive_at"] = c.extra->crosscap;
      j["components"].push_back(e);
    }
    os << j.dump() << '\n';
  } else {
    os << comps.size() << (comps.size() == 1 ? " component\n" : " components\n");
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const TracedComponent& c = comps[i];
      os << "  " << i + 1 << ": " << to_string(c.sidedness) << ", " << c.strand_cycle.size() << " beta slots, "
         << c.core_crossings << " core crossings";
      if (c.extra) os << ", non-primitive at crosscap " << c.extra->crosscap;
      os << '\n';
    }
  }
  write_text(opt, os.str(), out);
  return kExitOk;
}

int cmd_render(const Options& opt, std::istream& in, std::ostream& out, std::ostream&) {
  const StrandDiagram diagram = build_diagram(triangle_from_json(read_input(opt.input, in)));
  write_text(opt, render_svg(diagram), out);
  return kExitOk;
}

int cmd_selftest(const Options& opt, std::ostream& out, std::ostream& err) {
  const oracle::EnumerationBudget budget{signature(opt.k, opt.n), opt.radius, opt.max_strands,
                                         oracle::work_ceiling_from_env()};
  const oracle::OracleReport report = oracle::check_bijection(budget);
  if (opt.format == "json") {
    Json j;
    j["surface"] = report.sig.name();
    j["radius"] = report.box_radius;
    j["max_strands"] = report.max_strands;
    j["box_tuples"] = report.box_tuples;
    j["out_of_image"] = report.out_of_image;
    j["round_trips"] = report.round_trips;
    j["configurations"] = report.configurations;
    j["distinct_images"] = report.distinct_images;
    j["decoded_in_window"] = report.decoded_in_window;
    j["failures"] = report.failure_count;
    j["counterexamples"] = Json::array();
    for (const auto& c : report.first_failures) j["counterexamples"].push_back({{"check", c.check}, {"detail", c.detail}});
    out << j.dump() << '\n';
  } else {
    out << report.to_string() << '\n';
  }
  if (!report.passed()) {
    err << "selftest found " << report.failure_count << " counterexample(s)\n";
    return kExitCounterexample;
  }
  return kExitOk;
}

} // namespace

TriangleCoords triangle_from_json(const Json& j) {
  const SurfaceSignature sig = signature_from_json(j, {"alpha", "beta", "gamma", "c"});
  return make_triangle(sig, int_array(j, "alpha"), int_array(j, "beta"), int_array(j, "gamma"), int_array(j, "c"));
}

DynnikovCoords dynnikov_from_json(const Json& j) {
  const SurfaceSignature sig = signature_from_json(j, {"a", "b", "t", "c"});
  return make_dynnikov(sig, int_array(j, "a"), int_array(j, "b"), int_array(j, "t"), int_array(j, "c"));
}

Json to_json(const TriangleCoords& tau) {
  Json j;
  j["n"] = tau.sig.punctures();
  j["k"] = tau.sig.genus();
  j["alpha"] = array_of(tau.alpha);
  j["beta"] = array_of(tau.beta);
  j["gamma"] = array_of(tau.gamma);
  j["c"] = array_of(tau.core);
  return j;
}

Json to_json(const DynnikovCoords& rho) {
  Json j;
  j["n"] = rho.sig.punctures();
  j["k"] = rho.sig.genus();
  j["a"] = array_of(rho.a);
  j["b"] = array_of(rho.b);
  j["t"] = array_of(rho.t);
  j["c"] = array_of(rho.core);
  return j;
}

Json to_json(const InverseIntermediates& im) {
  Json j;
  j["psi"] = array_of(im.psi);
  j["X"] = im.x ? Json(*im.x) : Json(nullptr);
  j["Y"] = im.y ? Json(*im.y) : Json(nullptr);
  j["beta_star"] = array_of(im.beta_star);
  j["R"] = im.r;
  j["a_sprime"] = array_of(im.a_sprime);
  j["b_sprime"] = array_of(im.b_sprime);
  return j;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Dynnikov coordinates for integral laminations on N_{k,n}", "lamcoord"};
  app.require_subcommand(1);
  Options opt;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "JSON input file, or - for stdin");
    sub->add_option("--out", opt.out, "output file (default stdout)");
    sub->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  CLI::App* encode_cmd = app.add_subcommand("encode", "triangle coordinates to Dynnikov coordinates");
  add_io(encode_cmd);
  CLI::App* decode_cmd = app.add_subcommand("decode", "Dynnikov coordinates to triangle coordinates");
  add_io(decode_cmd);
  decode_cmd->add_flag("--verbose", opt.verbose, "include the inverse's intermediate quantities");
  CLI::App* validate_cmd = app.add_subcommand("validate", "check triangle coordinates for realizability");
  add_io(validate_cmd);
  CLI::App* trace_cmd = app.add_subcommand("trace", "list connected components and their sidedness");
  add_io(trace_cmd);
  CLI::App* render_cmd = app.add_subcommand("render", "draw the lamination as SVG");
  add_io(render_cmd);
  CLI::App* selftest_cmd = app.add_subcommand("selftest", "brute-force bijection check on one surface");
  selftest_cmd->add_option("--n", opt.n, "punctures");
  selftest_cmd->add_option("--k", opt.k, "crosscaps");
  selftest_cmd->add_option("--radius", opt.radius, "Dynnikov box radius")->check(CLI::NonNegativeNumber);
  selftest_cmd->add_option("--max-strands", opt.max_strands, "bound on every beta entry")
      ->check(CLI::NonNegativeNumber);
  selftest_cmd->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (encode_cmd->parsed()) return cmd_encode(opt, in, out, err);
    if (decode_cmd->parsed()) return cmd_decode(opt, in, out, err);
    if (validate_cmd->parsed()) return cmd_validate(opt, in, out, err);
    if (trace_cmd->parsed()) return cmd_trace(opt, in, out, err);
    if (render_cmd->parsed()) return cmd_render(opt, in, out, err);
    return cmd_selftest(opt, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InvalidTriangleCoords& e) {
    err << e.report().to_string() << '\n';
    return kExitDomain;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

} // namespace lamcoord::cli
