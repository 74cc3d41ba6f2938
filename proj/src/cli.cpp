#include "torikit/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "torikit/derivations.hpp"
#include "torikit/error.hpp"

namespace torikit::cli {

namespace {

using ojson = nlohmann::ordered_json;

ojson to_json(const Integer& x) {
  if (x.fits_slong_p()) return ojson(x.get_si());
  return ojson(x.get_str());
}

ojson to_json(const IntVector& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

ojson to_json(const std::vector<IntVector>& vs) {
  ojson a = ojson::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

ojson to_json(const std::vector<Ray>& rays) {
  ojson a = ojson::array();
  for (const auto& r : rays) a.push_back(to_json(r.generator()));
  return a;
}

ReportDocument start_report(const char* command, const FanDocument& doc) {
  ReportDocument r;
  r.fields["command"] = command;
  r.fields["name"] = doc.name.value_or("");
  r.fields["rank"] = doc.rank;
  return r;
}

std::optional<std::size_t> document_index(const FanDocument& doc, const IntVector& primitive) {
  for (std::size_t i = 0; i < doc.rays.size(); ++i)
    if (doc.rays[i].primitive() == primitive) return i;
  return std::nullopt;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open fan file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string to_json_text(const ReportDocument& report) { return report.fields.dump(2) + "\n"; }

ReportDocument parse_report(std::string_view text) {
  ReportDocument r;
  try {
    r.fields = ojson::parse(text.begin(), text.end());
  } catch (const ojson::parse_error& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
  if (!r.fields.is_object()) throw ParseError("report must be an object");
  return r;
}

std::string human_value(const ojson& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

std::string to_human_text(const ReportDocument& report) {
  std::string out;
  for (const auto& [key, value] : report.fields.items()) out += key + ": " + human_value(value) + "\n";
  return out;
}

ReportDocument cmd_analyze(const FanDocument& doc) {
  const Fan f = build_fan(doc);
  const FanReport fr = analyze(f);
  ReportDocument r = start_report("analyze", doc);
  auto& j = r.fields;
  j["cone_count"] = f.cones().size();
  j["edge_count"] = fr.edge_count;
  j["smooth"] = fr.smooth;
  j["complete"] = fr.complete;
  j["class_rank"] = fr.class_rank;
  ojson torsion = ojson::array();
  for (const auto& t : fr.class_torsion) torsion.push_back(to_json(t));
  j["class_torsion"] = torsion;
  j["euler_characteristic"] = fr.euler_characteristic;
  j["torus_factor_k"] = fr.torus_factor_k;
  j["quasi_affine"] = fr.quasi_affine.quasi_affine;
  if (fr.quasi_affine.quasi_affine) {
    j["ambient_hilbert_basis"] = to_json(fr.quasi_affine.ambient->hilbert_basis);
    j["ambient_units"] = to_json(fr.quasi_affine.ambient->lineality_units);
  } else {
    j["quasi_affine_failed_step"] = fr.quasi_affine.failed_step;
    j["quasi_affine_reason"] = fr.quasi_affine.reason;
  }
  return r;
}

ReportDocument cmd_hilbert_basis(const FanDocument& doc) {
  const Fan f = build_fan(doc);
  const AffineSemigroup s = fan_coordinate_semigroup(f);
  ReportDocument r = start_report("hilbert-basis", doc);
  r.fields["hilbert_basis"] = to_json(s.hilbert_basis);
  r.fields["units"] = to_json(s.lineality_units);
  return r;
}

ReportDocument cmd_roots(const FanDocument& doc, std::optional<std::size_t> ray_index, long radius) {
  const Fan f = build_fan(doc);
  if (f.is_torus()) throw PreconditionError("the torus fan has no rays, so no roots");
  const Cone sigma = support_cone(f).cone;
  if (!sigma.is_pointed())
    throw PreconditionError("support cone " + sigma.to_string() + " is not strongly convex");
  const AffineSemigroup s = hilbert_basis(dual(sigma));

  std::vector<Ray> rays;
  if (ray_index) {
    if (*ray_index >= doc.rays.size())
      throw ValidationError("ray index " + std::to_string(*ray_index) + " out of range");
    rays.emplace_back(doc.rays[*ray_index]);
  } else {
    for (const auto& v : sigma.rays()) rays.emplace_back(v);
  }

  ReportDocument r = start_report("roots", doc);
  r.fields["radius"] = radius;
  r.fields["semigroup_hilbert_basis"] = to_json(s.hilbert_basis);
  ojson listing = ojson::array();
  for (const auto& ray : rays) {
    const RootListing roots = enumerate_roots(s, ray, radius);
    ojson entry = ojson::object();
    entry["ray"] = to_json(ray.generator());
    const auto idx = document_index(doc, ray.generator());
    entry["ray_index"] = idx ? ojson(*idx) : ojson(nullptr);
    entry["roots"] = to_json(roots.roots);
    if (roots.warning) entry["warning"] = *roots.warning;
    listing.push_back(std::move(entry));
  }
  r.fields["rays"] = std::move(listing);
  return r;
}

ReportDocument cmd_ga_actions(const FanDocument& doc) {
  const Fan f = build_fan(doc);
  const TorusSplit split = split_torus_factor(f);
  const GaActionPackage pkg = build_ga_actions(split.reduced);

  ReportDocument r = start_report("ga-actions", doc);
  auto& j = r.fields;
  j["torus_factor_k"] = split.k;
  j["sublattice_basis"] = to_json(split.sublattice_basis);
  j["chosen_ray"] = to_json(pkg.chosen_ray.generator());
  j["boundary_rays"] = to_json(pkg.boundary_rays);
  j["root"] = to_json(pkg.root);
  j["root_pairing"] = to_json(pairing(pkg.root, pkg.chosen_ray.generator()));
  j["ambient_hilbert_basis"] = to_json(pkg.ambient.hilbert_basis);
  j["wall_generators"] = to_json(pkg.wall_generators);
  j["characters"] = to_json(pkg.characters);
  j["character_rank"] = pkg.character_rank;
  j["character_determinant"] = to_json(pkg.character_determinant);
  j["boundary_annihilation"] = pkg.boundary_annihilated;
  ojson derivations = ojson::array();
  for (const auto& d : pkg.derivations) {
    ojson entry = ojson::object();
    entry["degree"] = to_json(d.degree());
    ojson orders = ojson::array();
    for (const auto& m : pkg.ambient.hilbert_basis) orders.push_back(nilpotency_order(d, m));
    entry["nilpotency_orders"] = std::move(orders);
    derivations.push_back(std::move(entry));
  }
  j["derivations"] = std::move(derivations);
  return r;
}

ReportDocument cmd_decompose(const FanDocument& doc) {
  const Fan f = build_fan(doc);
  const TorusSplit split = split_torus_factor(f);
  ReportDocument r = start_report("decompose", doc);
  r.fields["torus_factor_k"] = split.k;
  r.fields["sublattice_basis"] = to_json(split.sublattice_basis);
  const FanDocument reduced = document_from_fan(split.reduced, doc.name);
  r.fields["reduced_fan"] = ojson::parse(serialize_fan(reduced));
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toric geometry: fans, Hilbert bases, homogeneous G_a-actions", "torikit"};
  std::string command;
  std::string fan_file;
  bool as_json = false;
  long radius = 3;
  std::optional<std::size_t> ray_index;
  app.add_option("command", command, "analyze | hilbert-basis | roots | ga-actions | decompose")
      ->required()
      ->check(CLI::IsMember({"analyze", "hilbert-basis", "roots", "ga-actions", "decompose"}));
  app.add_option("fanfile", fan_file, "fan document (JSON)")->required();
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--radius", radius, "half-width of the root search box")->check(CLI::PositiveNumber);
  app.add_option("--ray", ray_index, "roots: restrict to this ray (index into the document's rays)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    FanDocument doc = parse_fan(read_file(fan_file));
    if (!doc.name) doc.name = std::filesystem::path(fan_file).stem().string();
    ReportDocument report;
    if (command == "analyze")
      report = cmd_analyze(doc);
    else if (command == "hilbert-basis")
      report = cmd_hilbert_basis(doc);
    else if (command == "roots")
      report = cmd_roots(doc, ray_index, radius);
    else if (command == "ga-actions")
      report = cmd_ga_actions(doc);
    else
      report = cmd_decompose(doc);
    out << (as_json ? to_json_text(report) : to_human_text(report));
    return kSuccess;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kInputError;
  } catch (const FanError& e) {
    err << "validation error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "precondition error: " << e.what() << '\n';
    return kPreconditionError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace torikit::cli
