#include "heckeho/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "heckeho/error.hpp"
#include "heckeho/haff.hpp"
#include "heckeho/json_io.hpp"
#include "heckeho/oracle.hpp"

namespace heckeho::cli {

using io::json;
using weyl::GroupSpec;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw DomainError("unknown format " + name);
}

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? sep : "") + parts[k];
  return s;
}

std::string ints_text(const std::vector<int>& v, const std::string& sep) {
  std::vector<std::string> parts;
  for (int x : v) parts.push_back(std::to_string(x));
  return join(parts, sep);
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<std::string> node_names(const GroupSpec& spec, weyl::NodeSet s) {
  std::vector<std::string> out;
  for (auto n : weyl::nodes_of(s)) out.push_back(spec.node_name(n));
  return out;
}

std::string exponent_text(const haff::AffChar& chi) {
  std::vector<std::string> parts;
  for (const auto& a : chi.xi.exponents) parts.push_back(ints_text(a, "."));
  return join(parts, "/");
}

}  // namespace

CommandResult cmd_faces(const GroupSpec& spec, Format format) {
  const auto d = weyl::affine_dynkin(spec);
  const auto fs = weyl::faces(d);
  struct Row {
    std::vector<std::string> nodes;
    std::string type;
    std::vector<int> closure;
  };
  std::vector<Row> rows;
  for (const auto& f : fs) {
    Row r{weyl::face_names(spec, f), weyl::classify_cartan(weyl::sub_cartan(d, f.nodes)).str(), {}};
    for (std::size_t g = 0; g < fs.size(); ++g)
      if (weyl::closure_leq(f, fs[g])) r.closure.push_back(static_cast<int>(g));
    rows.push_back(std::move(r));
  }
  std::ostringstream os;
  if (format == Format::json) {
    json arr = json::array();
    for (std::size_t k = 0; k < rows.size(); ++k)
      arr.push_back({{"id", k}, {"nodes", rows[k].nodes}, {"type", rows[k].type}, {"closure", rows[k].closure}});
    return {dump({{"schema", io::schema_version}, {"spec", io::to_json(spec)}, {"faces", arr}}), {}, exit_ok};
  }
  if (format == Format::csv) os << "id,nodes,type,closure\n";
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& r = rows[k];
    if (format == Format::csv)
      os << k << ',' << join(r.nodes, " ") << ',' << r.type << ',' << ints_text(r.closure, " ") << '\n';
    else
      os << 'F' << k << "  {" << join(r.nodes, ",") << "}  " << r.type << "  closure: " << ints_text(r.closure, " ")
         << '\n';
  }
  return {os.str(), {}, exit_ok};
}

CommandResult cmd_chars(const GroupSpec& spec, Format format, std::size_t cap) {
  const auto d = weyl::affine_dynkin(spec);
  const auto chars = haff::all_characters(spec, cap);
  json arr = json::array();
  std::ostringstream os;
  if (format == Format::csv) os << "id,J,exponents,torus_exponents,s_xi,supersingular,finite_pd,d\n";
  for (std::size_t k = 0; k < chars.size(); ++k) {
    const auto& chi = chars[k];
    const auto data = haff::char_data(spec, chi);
    const bool ss = haff::is_supersingular(d, data);
    const std::string fpd = ss ? bool_text(haff::has_finite_pd(d, data)) : "";
    const auto stab = haff::stabilizer(spec, chi);
    const auto J = node_names(spec, chi.J), sxi = node_names(spec, data.s_xi);
    if (format == Format::json) {
      json row = io::to_json(spec, chi);
      row["id"] = k;
      row["s_xi"] = sxi;
      row["supersingular"] = ss;
      row["finite_pd"] = ss ? json(haff::has_finite_pd(d, data)) : json(nullptr);
      row["d"] = stab;
      arr.push_back(std::move(row));
    } else if (format == Format::csv) {
      os << k << ',' << join(J, " ") << ',' << exponent_text(chi) << ','
         << ints_text(chi.xi.torus_exponents, ".") << ',' << join(sxi, " ") << ',' << bool_text(ss) << ',' << fpd
         << ',' << ints_text(stab, "/") << '\n';
    } else {
      os << k << "  " << haff::describe(spec, chi) << "  S_xi={" << join(sxi, ",") << "}"
         << (ss ? "  supersingular" : "") << (fpd == "true" ? "  finite-pd" : "") << "  d=" << ints_text(stab, "/")
         << '\n';
    }
  }
  if (format == Format::json)
    return {dump({{"schema", io::schema_version}, {"spec", io::to_json(spec)}, {"characters", arr}}), {}, exit_ok};
  return {os.str(), {}, exit_ok};
}

CommandResult cmd_classify(const gln::SimpleSS& m, const gln::SimpleSS& other, Format format) {
  const auto dec = gln::classify(m, other);
  if (format == Format::json)
    return {dump({{"schema", io::schema_version},
                  {"id_a", m.label()},
                  {"id_b", other.label()},
                  {"mod_iso", dec.mod_iso},
                  {"ho_iso", dec.ho_iso},
                  {"witness", dec.witness}}),
            {},
            exit_ok};
  std::ostringstream os;
  if (format == Format::csv)
    os << "id_a,id_b,mod_iso,ho_iso,witness\n"
       << csv_field(m.label()) << ',' << csv_field(other.label()) << ',' << bool_text(dec.mod_iso) << ','
       << bool_text(dec.ho_iso) << ',' << csv_field(dec.witness) << '\n';
  else
    os << "mod_iso: " << bool_text(dec.mod_iso) << "\nho_iso: " << bool_text(dec.ho_iso)
       << "\nwitness: " << dec.witness << '\n';
  return {os.str(), {}, exit_ok};
}

CommandResult cmd_sweep(const GroupSpec& spec, ff::Field field, Format format, std::size_t cap) {
  std::vector<gln::SimpleSS> mods;
  std::size_t excluded = 0;
  for (auto& m : gln::enumerate_simples(spec, field, cap)) {
    if (haff::has_finite_pd(spec, m.chi))
      ++excluded;
    else
      mods.push_back(std::move(m));
  }
  std::ostringstream os;
  json rows = json::array();
  if (format == Format::csv) os << "id_a,id_b,mod_iso,ho_iso,witness\n";
  std::size_t differ = 0;
  for (const auto& a : mods)
    for (const auto& b : mods) {
      const auto dec = gln::classify(a, b);
      differ += dec.mod_iso != dec.ho_iso;
      if (format == Format::json)
        rows.push_back({{"id_a", a.label()},
                        {"id_b", b.label()},
                        {"mod_iso", dec.mod_iso},
                        {"ho_iso", dec.ho_iso},
                        {"witness", dec.witness}});
      else if (format == Format::csv)
        os << csv_field(a.label()) << ',' << csv_field(b.label()) << ',' << bool_text(dec.mod_iso) << ','
           << bool_text(dec.ho_iso) << ',' << csv_field(dec.witness) << '\n';
      else if (dec.mod_iso != dec.ho_iso)
        os << a.label() << "  " << b.label() << "  " << dec.witness << '\n';
    }
  if (format == Format::json)
    return {dump({{"schema", io::schema_version},
                  {"spec", io::to_json(spec)},
                  {"field", io::to_json(*field)},
                  {"modules", mods.size()},
                  {"excluded_finite_pd", excluded},
                  {"rows", rows}}),
            {},
            exit_ok};
  if (format == Format::text) {
    std::ostringstream head;
    head << "modules: " << mods.size() << " (excluded with finite projective dimension: " << excluded << ")\n"
         << "pairs: " << mods.size() * mods.size() << "\npairs with ho_iso != mod_iso: " << differ << '\n';
    return {head.str() + os.str(), {}, exit_ok};
  }
  return {os.str(), {}, exit_ok};
}

CommandResult cmd_oracle_check(const GroupSpec& spec, ff::Field field, Format format, std::size_t cap) {
  const auto report = oracle::oracle_check(spec, field, cap);
  CommandResult res;
  res.warnings = report.warnings;
  res.exit_code = report.all_agree() ? exit_ok : exit_disagree;
  std::ostringstream os;
  if (format == Format::json) {
    json rows = json::array();
    for (const auto& r : report.rows)
      rows.push_back({{"instance", r.instance}, {"predicate_value", r.predicate}, {"oracle_value", r.oracle},
                      {"agree", r.agree}});
    res.output = dump({{"schema", io::schema_version},
                       {"spec", io::to_json(spec)},
                       {"field", io::to_json(*field)},
                       {"rows", rows},
                       {"disagreements", report.disagreements()},
                       {"warnings", report.warnings}});
    return res;
  }
  if (format == Format::csv) {
    os << "instance,predicate_value,oracle_value,agree\n";
    for (const auto& r : report.rows)
      os << csv_field(r.instance) << ',' << csv_field(r.predicate) << ',' << csv_field(r.oracle) << ','
         << bool_text(r.agree) << '\n';
  } else {
    os << "rows: " << report.rows.size() << "\ndisagreements: " << report.disagreements() << '\n';
    for (const auto& r : report.rows)
      if (!r.agree) os << "DISAGREE " << r.instance << "  predicate=" << r.predicate << "  oracle=" << r.oracle << '\n';
    os << (report.all_agree() ? "all agree\n" : "");
  }
  res.output = os.str();
  return res;
}

// ---------------------------------------------------------------------------
// Command line

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<int> factors;
  int torus_rank = 0;
  int q = 0;
  int field_degree = 0;
  std::string format = "text";
  std::string out;
  std::size_t cap = 0;
  std::string spec_file;
  std::vector<std::string> modules;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DomainError(path + ": invalid JSON: " + e.what());
  }
}

std::optional<GroupSpec> spec_from_options(const Options& o) {
  if (!o.spec_file.empty()) {
    if (!o.factors.empty()) throw UsageError("give either --spec or --factors, not both");
    return io::spec_from_json(read_json(o.spec_file));
  }
  if (o.factors.empty()) return std::nullopt;
  if (o.q == 0) throw UsageError("--q is required with --factors");
  return weyl::build_spec(o.factors, o.torus_rank, o.q);
}

GroupSpec require_spec(const Options& o) {
  auto s = spec_from_options(o);
  if (!s) throw UsageError("a group is required: use --factors and --q, or --spec");
  return *s;
}

ff::Field field_for(const GroupSpec& spec, const Options& o) {
  return ff::GaloisField::make(spec.p, o.field_degree > 0 ? o.field_degree : spec.f);
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--factors", o.factors, "GL factor sizes, e.g. 3,2")->delimiter(',');
  sub->add_option("--torus-rank", o.torus_rank, "rank of the extra split torus")->check(CLI::NonNegativeNumber);
  sub->add_option("--q", o.q, "residue field order");
  sub->add_option("--field-degree", o.field_degree, "coefficient field GF(p^m); default m makes it contain F_q");
  sub->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", o.out, "write output to this file");
  sub->add_option("--cap", o.cap, "enumeration cap");
  sub->add_option("--spec", o.spec_file, "group spec JSON file");
}

CommandResult dispatch(const std::string& name, const Options& o) {
  const Format fmt = parse_format(o.format);
  if (name == "faces") return cmd_faces(require_spec(o), fmt);
  if (name == "chars") return cmd_chars(require_spec(o), fmt, o.cap ? o.cap : 1000000);
  if (name == "sweep") {
    const auto spec = require_spec(o);
    return cmd_sweep(spec, field_for(spec, o), fmt, o.cap ? o.cap : gln::default_simple_cap);
  }
  if (name == "oracle-check") {
    const auto spec = require_spec(o);
    return cmd_oracle_check(spec, field_for(spec, o), fmt, o.cap ? o.cap : oracle::default_sweep_cap);
  }
  // classify
  const json a = read_json(o.modules.at(0)), b = read_json(o.modules.at(1));
  auto spec = spec_from_options(o);
  if (!spec) {
    if (!a.contains("spec")) throw UsageError("a group is required: use --factors/--q, --spec, or a \"spec\" key");
    spec = io::spec_from_json(a.at("spec"));
  }
  for (const json* m : {&a, &b})
    if (m->contains("spec") && !(io::spec_from_json(m->at("spec")) == *spec))
      throw DomainError("module files describe different groups");
  return cmd_classify(io::simple_from_json(*spec, a), io::simple_from_json(*spec, b), fmt);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homotopy-category isomorphism decisions for simple supersingular modules"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::pair<std::string, CLI::App*>> subs;
  for (const char* name : {"faces", "chars", "classify", "sweep", "oracle-check"}) {
    const std::string desc = std::string(name) == "faces"       ? "list faces with closure relations"
                             : std::string(name) == "chars"     ? "list characters of the affine algebra"
                             : std::string(name) == "classify"  ? "decide Mod and Ho isomorphism of two modules"
                             : std::string(name) == "sweep"     ? "pairwise decisions over all simple modules"
                                                                : "compare every predicate with the brute-force oracle";
    auto* sub = app.add_subcommand(name, desc);
    add_common(sub, o);
    if (std::string(name) == "classify")
      sub->add_option("modules", o.modules, "two module JSON files")->expected(2)->required();
    subs.emplace_back(name, sub);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }
  std::string name;
  for (const auto& [n, sub] : subs)
    if (sub->parsed()) name = n;

  try {
    const auto res = dispatch(name, o);
    for (const auto& w : res.warnings) err << "warning: " << w << '\n';
    if (o.out.empty()) {
      out << res.output;
    } else {
      std::ofstream file(o.out, std::ios::binary);
      if (!file) throw UsageError("cannot write " + o.out);
      file << res.output;
    }
    return res.exit_code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_domain;
  }
}

}  // namespace heckeho::cli
