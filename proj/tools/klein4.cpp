// command line front end: engine queries plus the end-to-end case report
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <klein4/casebook.hpp>

using nlohmann::ordered_json;
using namespace klein4;

namespace {

constexpr int kSchemaVersion = 1;

struct OutputSink {
  std::string format = "text";
  std::string out_path;

  void emit(const std::string& text, const ordered_json& doc) const {
    std::string payload;
    if (format == "json") {
      payload = doc.dump(2);
      payload += '\n';
      // emitted documents must parse back to themselves
      if (ordered_json::parse(payload) != doc)
        throw std::logic_error("json round-trip failed");
    } else {
      payload = text;
    }
    if (out_path.empty()) {
      std::cout << payload;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open output path " + out_path);
      f << payload;
    }
  }
};

const ChevalleyAlgebra& algebra_for(const std::string& type) {
  static std::map<std::string, std::unique_ptr<ChevalleyAlgebra>> cache;
  auto it = cache.find(type);
  if (it == cache.end()) {
    auto alg = std::make_unique<ChevalleyAlgebra>(ChevalleyAlgebra::build(CartanType::parse(type)));
    it = cache.emplace(type, std::move(alg)).first;
  }
  return *it->second;
}

std::vector<int> parse_int_csv(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size())
      throw std::invalid_argument("bad integer '" + item + "' in automorphism spec");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty automorphism spec");
  return out;
}

// named presets, or a raw comma-separated torus character in coroot
// coordinates. omega/sigma3 and x0 name the diagram flip, sigma4 the
// transpose involution, sigma1/sigma2 the coroot characters e2 and e1+e6,
// x4 = sigma2, and x1 the realized third generator of the case study
Automorphism resolve_auto(const ChevalleyAlgebra& alg, const std::string& spec) {
  const bool e6 = alg.type().str() == "E6";
  if (spec == "omega" || spec == "sigma3" || spec == "x0")
    return Automorphism::diagram(alg, alg.roots().diagram_involution()).with_label(spec);
  if (spec == "sigma4") return Automorphism::transpose_involution(alg).with_label(spec);
  if (spec == "sigma1") {
    if (alg.rank() < 2) throw std::invalid_argument("sigma1 needs rank at least 2");
    std::vector<int> c(alg.rank(), 0);
    c[1] = 1;
    return Automorphism::torus(alg, coroot_coweight(alg, c)).with_label(spec);
  }
  if (spec == "sigma2" || spec == "x4") {
    if (!e6) throw std::invalid_argument(spec + " is specific to type E6");
    return Automorphism::torus(alg, coroot_coweight(alg, {1, 0, 0, 0, 0, 1})).with_label(spec);
  }
  if (spec == "x1") {
    if (!e6) throw std::invalid_argument("x1 is specific to type E6");
    Automorphism flip = Automorphism::diagram(alg, alg.roots().diagram_involution());
    return flip.compose(Automorphism::transpose_involution(alg)).with_label(spec);
  }
  std::vector<int> c = parse_int_csv(spec);
  if (int(c.size()) != alg.rank())
    throw std::invalid_argument("torus character length must equal the rank");
  return Automorphism::torus(alg, coroot_coweight(alg, c)).with_label("t(" + spec + ")");
}

ordered_json rat_json(const Rat& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p())
    return ordered_json(long(q.get_num().get_si()));
  // non-integral or oversized values ship as a numerator/denominator pair
  return ordered_json::array({q.get_num().get_str(), q.get_den().get_str()});
}

ordered_json root_json(const RootVec& a) {
  ordered_json arr = ordered_json::array();
  for (int c : a) arr.push_back(c);
  return arr;
}

ordered_json vec_json(const Vec& v) {
  ordered_json arr = ordered_json::array();
  for (const Rat& c : v) arr.push_back(rat_json(c));
  return arr;
}

std::string root_str(const RootVec& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ')';
  return os.str();
}

std::string verdict_str(Verdict v) {
  return v == Verdict::ADMITS_CANDIDATE ? "ADMITS_CANDIDATE" : "OBSTRUCTED";
}

ordered_json descriptor_json(const RealFormDescriptor& d) {
  ordered_json j;
  j["label"] = d.label;
  j["dim"] = d.dim;
  j["compact_dim"] = d.compact_dim;
  j["signature"] = d.signature;
  j["hermitian"] = d.hermitian;
  j["center_dim"] = d.center_dim;
  j["center_compact"] = d.center_compact;
  ordered_json ideals = ordered_json::array();
  for (const IdealForm& f : d.ideals) {
    ordered_json row;
    row["complex_type"] = f.complex_type.str();
    row["dim"] = f.dim;
    row["compact_dim"] = f.compact_dim;
    row["label"] = f.label;
    ideals.push_back(std::move(row));
  }
  j["ideals"] = std::move(ideals);
  j["compact_parts"] = d.compact_parts;
  j["compact_center"] = d.compact_center;
  j["maximal_compact"] = d.maximal_compact;
  return j;
}

void descriptor_text(std::ostream& os, const RealFormDescriptor& d, const std::string& indent) {
  os << indent << "label            " << d.label << "\n";
  os << indent << "dimension        " << d.dim << " (compact " << d.compact_dim << ")\n";
  os << indent << "signature        " << d.signature << "\n";
  os << indent << "hermitian        " << (d.hermitian ? "yes" : "no") << "\n";
  os << indent << "center           dim " << d.center_dim << " (" << d.center_compact
     << " compact)\n";
  os << indent << "ideals          ";
  if (d.ideals.empty()) os << " none";
  for (const IdealForm& f : d.ideals)
    os << " " << f.label << " [" << f.complex_type.str() << ", dim " << f.dim << "]";
  os << "\n";
  os << indent << "maximal compact  " << d.maximal_compact << "\n";
}

int cmd_rootsys(const std::string& type, const OutputSink& sink) {
  const ChevalleyAlgebra& alg = algebra_for(type);
  const RootSystem& rs = alg.roots();
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "rootsys";
  doc["type"] = rs.type().str();
  doc["rank"] = rs.rank();
  doc["num_roots"] = rs.num_roots();
  doc["num_positive"] = rs.num_positive();
  doc["highest_root"] = root_json(rs.highest_root());
  doc["max_height"] = rs.max_height();
  ordered_json pos = ordered_json::array();
  for (const RootVec& a : rs.positives()) pos.push_back(root_json(a));
  doc["positive_roots"] = std::move(pos);

  std::ostringstream os;
  os << "root system " << rs.type().str() << "\n";
  os << "rank " << rs.rank() << ", " << rs.num_roots() << " roots (" << rs.num_positive()
     << " positive)\n";
  os << "highest root " << root_str(rs.highest_root()) << ", height " << rs.max_height() << "\n";
  os << "positive roots by (height, lex):\n";
  for (int p = 0; p < rs.num_positive(); ++p)
    os << "  " << RootSystem::height(rs.positive(p)) << "  " << root_str(rs.positive(p)) << "\n";
  sink.emit(os.str(), doc);
  return 0;
}

int cmd_algebra(const std::string& type, const OutputSink& sink) {
  const ChevalleyAlgebra& alg = algebra_for(type);
  Vec e(alg.dim(), Rat(0)), f(alg.dim(), Rat(0)), h(alg.dim(), Rat(0));
  int hi = alg.roots().positive_index(alg.roots().highest_root());
  e[alg.pos_index(hi)] = 1;
  f[alg.neg_index(hi)] = 1;
  h[0] = 1;
  Rat pairing = alg.killing_form(e, f);
  Rat cartan = alg.killing_form(h, h);

  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "algebra";
  doc["type"] = alg.type().str();
  doc["rank"] = alg.rank();
  doc["dim"] = alg.dim();
  doc["num_positive"] = alg.num_positive();
  doc["killing_e_theta_f_theta"] = rat_json(pairing);
  doc["killing_h1_h1"] = rat_json(cartan);

  std::ostringstream os;
  os << "chevalley algebra " << alg.type().str() << "\n";
  os << "dimension " << alg.dim() << " = " << alg.rank() << " cartan + 2*" << alg.num_positive()
     << " root spaces\n";
  os << "basis order: h_1..h_" << alg.rank() << ", positive roots by (height, lex), "
     << "then their negatives\n";
  os << "killing(e_theta, f_theta) = " << rat_str(pairing) << " for the highest root theta\n";
  os << "killing(h_1, h_1) = " << rat_str(cartan) << "\n";
  sink.emit(os.str(), doc);
  return 0;
}

int cmd_involutions(const std::string& type, const OutputSink& sink) {
  const ChevalleyAlgebra& alg = algebra_for(type);
  std::vector<Automorphism> pool = inner_involution_pool(alg);
  std::map<std::size_t, std::size_t> histogram;
  for (const Automorphism& a : pool) ++histogram[a.fixed_dim()];

  const std::vector<std::string> preset_names = {"omega", "sigma1", "sigma2", "sigma3",
                                                 "sigma4", "x0",    "x1",    "x4"};
  struct PresetRow {
    std::string name;
    std::size_t fixed_dim = 0, cartan_fixed = 0;
    bool inner = false;
  };
  std::vector<PresetRow> presets;
  for (const std::string& name : preset_names) {
    try {
      Automorphism a = resolve_auto(alg, name);
      presets.push_back({name, a.fixed_dim(), a.cartan_fixed_dim(), a.inner()});
    } catch (const std::invalid_argument&) {
      // preset undefined for this type
    }
  }

  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "involutions";
  doc["type"] = alg.type().str();
  doc["inner_pool_size"] = pool.size();
  ordered_json hist = ordered_json::array();
  for (const auto& [dim, count] : histogram) {
    ordered_json row;
    row["fixed_dim"] = dim;
    row["count"] = count;
    hist.push_back(std::move(row));
  }
  doc["fixed_dim_histogram"] = std::move(hist);
  ordered_json rows = ordered_json::array();
  for (const PresetRow& p : presets) {
    ordered_json row;
    row["name"] = p.name;
    row["fixed_dim"] = p.fixed_dim;
    row["cartan_fixed_dim"] = p.cartan_fixed;
    row["inner"] = p.inner;
    rows.push_back(std::move(row));
  }
  doc["presets"] = std::move(rows);

  std::ostringstream os;
  os << "inner involution pool for " << alg.type().str() << ": " << pool.size() << " maps\n";
  os << "fixed dimensions:\n";
  for (const auto& [dim, count] : histogram)
    os << "  dim " << dim << ": " << count << " maps\n";
  os << "presets:\n";
  for (const PresetRow& p : presets)
    os << "  " << p.name << "  fixed dim " << p.fixed_dim << ", cartan fixed "
       << p.cartan_fixed << ", " << (p.inner ? "inner" : "outer") << "\n";
  sink.emit(os.str(), doc);
  return 0;
}

int cmd_fixalg(const std::string& type, const std::vector<std::string>& specs,
               const OutputSink& sink) {
  const ChevalleyAlgebra& alg = algebra_for(type);
  std::vector<Automorphism> maps;
  maps.reserve(specs.size());
  for (const std::string& s : specs) maps.push_back(resolve_auto(alg, s));
  std::vector<const Automorphism*> ptrs;
  for (const Automorphism& a : maps) ptrs.push_back(&a);

  Subalgebra s = fixed_subalgebra(alg, ptrs);
  ReductiveParts parts = reductive_decompose(s);
  struct IdealRow {
    std::string type;
    std::size_t dim = 0;
  };
  std::vector<IdealRow> ideals;
  for (const Subspace& ideal : parts.ideals) {
    Subalgebra piece{&alg, ideal};
    ideals.push_back({identify_complex_type(piece, parts.torus).str(), ideal.dim()});
  }

  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "fixalg";
  doc["type"] = alg.type().str();
  doc["automorphisms"] = specs;
  doc["dim"] = s.dim();
  doc["center_dim"] = parts.center.dim();
  ordered_json rows = ordered_json::array();
  for (const IdealRow& r : ideals) {
    ordered_json row;
    row["complex_type"] = r.type;
    row["dim"] = r.dim;
    rows.push_back(std::move(row));
  }
  doc["ideals"] = std::move(rows);

  std::ostringstream os;
  os << "fixed subalgebra of {";
  for (std::size_t i = 0; i < specs.size(); ++i) os << (i ? ", " : "") << specs[i];
  os << "} in " << alg.type().str() << "\n";
  os << "dimension " << s.dim() << ", center dim " << parts.center.dim() << "\n";
  os << "simple ideals:";
  if (ideals.empty()) os << " none";
  for (const IdealRow& r : ideals) os << " " << r.type << " (dim " << r.dim << ")";
  os << "\n";
  sink.emit(os.str(), doc);
  return 0;
}

int cmd_realform(const std::string& type, const std::string& theta_spec,
                 const std::vector<std::string>& specs, const OutputSink& sink) {
  const ChevalleyAlgebra& alg = algebra_for(type);
  RealFormDescriptor d = [&] {
    if (theta_spec.empty()) {
      if (specs.size() != 1)
        throw std::invalid_argument(
            "without --theta, give exactly one --auto: the Cartan involution of the real form");
      Automorphism a = resolve_auto(alg, specs.front());
      return real_form(alg, a);
    }
    Automorphism theta = resolve_auto(alg, theta_spec);
    std::vector<Automorphism> maps;
    maps.reserve(specs.size());
    for (const std::string& s : specs) maps.push_back(resolve_auto(alg, s));
    std::vector<const Automorphism*> ptrs;
    for (const Automorphism& a : maps) ptrs.push_back(&a);
    return real_fixed_form(alg, theta, ptrs);
  }();

  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "realform";
  doc["type"] = alg.type().str();
  doc["theta"] = theta_spec;
  doc["automorphisms"] = specs;
  doc["descriptor"] = descriptor_json(d);

  std::ostringstream os;
  if (theta_spec.empty()) {
    os << "real form of " << alg.type().str() << " with cartan involution " << specs.front()
       << "\n";
  } else {
    os << "fixed form of {";
    for (std::size_t i = 0; i < specs.size(); ++i) os << (i ? ", " : "") << specs[i];
    os << "} in the " << alg.type().str() << " real form with cartan involution " << theta_spec
       << "\n";
  }
  descriptor_text(os, d, "  ");
  sink.emit(os.str(), doc);
  return 0;
}

int cmd_criteria(const std::string& type, const std::string& theta_spec,
                 const std::vector<std::string>& specs, const OutputSink& sink) {
  const ChevalleyAlgebra& alg = algebra_for(type);
  Automorphism theta = resolve_auto(alg, theta_spec);
  NoncompactRootData split = noncompact_root_split(alg, theta);
  std::vector<Automorphism> maps;
  maps.reserve(specs.size());
  for (const std::string& s : specs) maps.push_back(resolve_auto(alg, s));

  std::vector<CriterionVerdict> rows;
  for (std::size_t i = 0; i < maps.size(); ++i)
    rows.push_back(symmetric_pair_verdict(split, maps[i], specs[i]));

  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "criteria";
  doc["type"] = alg.type().str();
  doc["theta"] = theta_spec;
  doc["beta"] = root_json(split.beta);
  doc["z"] = vec_json(split.z);
  ordered_json jrows = ordered_json::array();
  for (const CriterionVerdict& v : rows) {
    ordered_json row;
    row["subject"] = v.subject;
    row["sigma_beta"] = root_json(v.sigma_beta);
    row["result"] = verdict_str(v.result);
    row["rule"] = v.rule;
    jrows.push_back(std::move(row));
  }
  doc["rows"] = std::move(jrows);

  std::ostringstream os;
  os << "branching criteria against the " << theta_spec << " split of " << alg.type().str()
     << "\n";
  os << "distinguished root " << root_str(split.beta) << "\n";
  for (const CriterionVerdict& v : rows)
    os << "  " << v.subject << ": " << verdict_str(v.result) << " (" << v.rule << ", beta -> "
       << root_str(v.sigma_beta) << ")\n";

  if (maps.size() == 2) {
    bool obstructed = klein_pair_obstructed(split, maps[0], maps[1]);
    Automorphism prod = maps[0].compose(maps[1]);
    bool a0 = symmetric_pair_admits(split, maps[0]);
    bool a1 = symmetric_pair_admits(split, maps[1]);
    bool a01 = symmetric_pair_admits(split, prod);
    CriterionVerdict joint = joint_verdict(a0, a1, a01);
    joint.subject = "<" + specs[0] + ", " + specs[1] + ">";
    ordered_json jj;
    jj["subject"] = joint.subject;
    jj["pair_obstructed"] = obstructed;
    jj["result"] = verdict_str(joint.result);
    jj["rule"] = joint.rule;
    os << "joint: " << joint.subject << ": " << verdict_str(joint.result) << " (" << joint.rule
       << ")\n";
    if (obstructed) {
      ProjectionWitness w = nonnilpotent_projection_witness(alg, theta, maps[0], maps[1], split);
      Rat re = alg.killing_form(w.projection.re, w.projection.re) -
               alg.killing_form(w.projection.im, w.projection.im);
      jj["witness_nilpotent"] = w.nilpotent;
      jj["witness_killing_square"] = rat_json(re);
      os << "witness: nonzero projection, " << (w.nilpotent ? "" : "not ")
         << "ad-nilpotent, killing square " << rat_str(re) << "\n";
    }
    doc["joint"] = std::move(jj);
  }
  sink.emit(os.str(), doc);
  return 0;
}

ordered_json report_json(const CaseReport& rep) {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "e6report";
  doc["type"] = "E6";
  doc["all_match"] = rep.all_match;
  doc["final_verdict"] = rep.final_verdict;
  ordered_json reals = ordered_json::array();
  for (const Realization& r : rep.realizations) {
    ordered_json row;
    row["name"] = r.name;
    row["description"] = r.description;
    row["generators"] = r.generators;
    row["fixed_dim"] = r.fixed_dim;
    row["inner"] = r.inner;
    reals.push_back(std::move(row));
  }
  doc["realizations"] = std::move(reals);
  ordered_json idents = ordered_json::array();
  for (const Identification& r : rep.identifications) {
    ordered_json row;
    row["subject"] = r.subject;
    row["computed"] = r.computed;
    row["expected"] = r.expected;
    row["match"] = r.match;
    row["dim"] = r.dim;
    row["compact_dim"] = r.compact_dim;
    row["signature"] = r.signature;
    row["maximal_compact"] = r.maximal_compact;
    idents.push_back(std::move(row));
  }
  doc["identifications"] = std::move(idents);
  ordered_json crits = ordered_json::array();
  for (const CriterionVerdict& v : rep.criteria) {
    ordered_json row;
    row["subject"] = v.subject;
    row["sigma_beta"] = root_json(v.sigma_beta);
    row["result"] = verdict_str(v.result);
    row["rule"] = v.rule;
    crits.push_back(std::move(row));
  }
  doc["criteria"] = std::move(crits);
  doc["certificates"] = rep.certificates;
  doc["scans"] = rep.scans;
  doc["holomorphic_labels"] = rep.holomorphic_labels;
  ordered_json imports = ordered_json::array();
  for (const ImportedFact& f : rep.imported) imports.push_back(f.statement);
  doc["imported"] = std::move(imports);
  return doc;
}

std::string report_text(const CaseReport& rep) {
  std::ostringstream os;
  os << "E6 Klein four branching report\n";
  os << "==============================\n";
  os << "all expected values reproduced: " << (rep.all_match ? "yes" : "NO") << "\n\n";
  os << "realized objects\n";
  for (const Realization& r : rep.realizations) {
    os << "  " << r.name << "  fixed dim " << r.fixed_dim << ", "
       << (r.inner ? "inner" : "outer") << ", generators {";
    for (std::size_t i = 0; i < r.generators.size(); ++i)
      os << (i ? ", " : "") << r.generators[i];
    os << "}\n    " << r.description << "\n";
  }
  os << "\nidentifications\n";
  for (const Identification& r : rep.identifications) {
    os << "  " << r.subject << ": computed " << r.computed << ", expected " << r.expected
       << ", " << (r.match ? "match" : "MISMATCH") << "\n";
    os << "    dim " << r.dim << ", compact dim " << r.compact_dim << ", signature "
       << r.signature << ", maximal compact " << r.maximal_compact << "\n";
  }
  os << "\ncriteria\n";
  for (const CriterionVerdict& v : rep.criteria)
    os << "  " << v.subject << ": " << verdict_str(v.result) << " (" << v.rule << ", beta -> "
       << root_str(v.sigma_beta) << ")\n";
  os << "\ncertificates\n";
  for (const std::string& c : rep.certificates) os << "  - " << c << "\n";
  os << "\nnegative scans\n";
  for (const std::string& c : rep.scans) os << "  - " << c << "\n";
  os << "\nholomorphic-type noncompact fixed forms\n";
  for (const std::string& c : rep.holomorphic_labels) os << "  - " << c << "\n";
  os << "\nimported facts\n";
  for (const ImportedFact& f : rep.imported) os << "  - " << f.statement << "\n";
  os << "\nverdict: " << rep.final_verdict << "\n";
  return os.str();
}

int cmd_e6report(const OutputSink& sink) {
  CaseReport rep = verify_branching_classification(algebra_for("E6"));
  sink.emit(report_text(rep), report_json(rep));
  return rep.all_match ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Lie theory engine for Klein four symmetric pairs"};
  app.require_subcommand(1);
  int exit_code = 0;

  struct Common {
    std::string type = "E6";
    OutputSink sink;
  };
  auto add_common = [](CLI::App* cmd, Common& c, bool with_type = true) {
    if (with_type) cmd->add_option("--type", c.type, "Cartan type, e.g. E6, D4, A2");
    cmd->add_option("--format", c.sink.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
    cmd->add_option("--out", c.sink.out_path, "write output to this path instead of stdout");
  };

  Common croot;
  CLI::App* rootsys = app.add_subcommand("rootsys", "enumerate the root system");
  add_common(rootsys, croot);
  rootsys->callback([&] { exit_code = cmd_rootsys(croot.type, croot.sink); });

  Common calg;
  CLI::App* algebra = app.add_subcommand("algebra", "summarize the Chevalley algebra");
  add_common(algebra, calg);
  algebra->callback([&] { exit_code = cmd_algebra(calg.type, calg.sink); });

  Common cinv;
  CLI::App* involutions =
      app.add_subcommand("involutions", "scan the inner involution pool and the named presets");
  add_common(involutions, cinv);
  involutions->callback([&] { exit_code = cmd_involutions(cinv.type, cinv.sink); });

  Common cfix;
  std::vector<std::string> fix_autos;
  CLI::App* fixalg = app.add_subcommand("fixalg", "fixed subalgebra of commuting automorphisms");
  add_common(fixalg, cfix);
  fixalg->add_option("--auto", fix_autos, "automorphism preset or torus character")->required();
  fixalg->callback([&] { exit_code = cmd_fixalg(cfix.type, fix_autos, cfix.sink); });

  Common creal;
  std::string real_theta;
  std::vector<std::string> real_autos;
  CLI::App* realform =
      app.add_subcommand("realform", "identify a real form or a real fixed form");
  add_common(realform, creal);
  realform->add_option("--theta", real_theta,
                       "Cartan involution; when given, --auto maps cut a fixed form");
  realform->add_option("--auto", real_autos, "automorphism preset or torus character")
      ->required();
  realform->callback(
      [&] { exit_code = cmd_realform(creal.type, real_theta, real_autos, creal.sink); });

  Common ccrit;
  std::string crit_theta = "x4";
  std::vector<std::string> crit_autos;
  CLI::App* criteria =
      app.add_subcommand("criteria", "discrete decomposability criteria for symmetric pairs");
  add_common(criteria, ccrit);
  criteria->add_option("--theta", crit_theta, "Cartan involution defining the split")
      ->default_val("x4");
  criteria->add_option("--auto", crit_autos, "automorphism preset or torus character")
      ->required();
  criteria->callback(
      [&] { exit_code = cmd_criteria(ccrit.type, crit_theta, crit_autos, ccrit.sink); });

  Common crep;
  CLI::App* e6report =
      app.add_subcommand("e6report", "end-to-end verification report for the E6 case study");
  add_common(e6report, crep, /*with_type=*/false);
  e6report->callback([&] { exit_code = cmd_e6report(crep.sink); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "klein4: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
