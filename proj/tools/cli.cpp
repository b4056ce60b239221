#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "forcealg/casebook.hpp"
#include "forcealg/parse.hpp"

namespace forcealg::cli {

namespace {

using ordered_json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Document {
  RingPtr base;
  std::vector<std::string> t_vars;
  std::optional<ForcingData> data;
  std::optional<ForcingMatrix> matrix;
};

bool reserved_name(const std::string& v) { return v == "__z" || v == "__t"; }

FieldSpec parse_field(const nlohmann::json& j) {
  if (j.is_string() && j.get<std::string>() == "QQ") return FieldSpec::rationals();
  if (j.is_object() && j.contains("GF") && j["GF"].is_number_integer() &&
      j["GF"].get<std::int64_t>() >= 2)
    return FieldSpec::gf(static_cast<std::uint64_t>(j["GF"].get<std::int64_t>()));
  throw CliError("field must be \"QQ\" or {\"GF\": p} with p >= 2");
}

std::vector<std::string> parse_name_list(const nlohmann::json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_array())
    throw CliError("document needs an array field '" + key + "'");
  std::vector<std::string> names;
  for (const auto& v : j[key]) {
    if (!v.is_string()) throw CliError("'" + key + "' must contain strings");
    std::string name = v.get<std::string>();
    if (reserved_name(name)) throw CliError("reserved variable name '" + name + "'");
    names.push_back(std::move(name));
  }
  return names;
}

Document parse_document(const nlohmann::json& j) {
  if (!j.is_object()) throw CliError("problem document must be a JSON object");
  if (!j.contains("field")) throw CliError("document needs a 'field'");
  FieldSpec field = parse_field(j["field"]);
  std::vector<std::string> base_vars = parse_name_list(j, "base_vars");
  std::vector<std::string> t_vars = parse_name_list(j, "t_vars");
  if (base_vars.empty()) throw CliError("'base_vars' must not be empty");

  bool has_data = j.contains("data"), has_matrix = j.contains("matrix");
  if (has_data == has_matrix) throw CliError("document needs exactly one of 'data' or 'matrix'");

  Document doc;
  doc.base = PolyRing::make(field, base_vars);
  doc.t_vars = t_vars;

  auto poly = [&](const nlohmann::json& v, const std::string& what) {
    if (!v.is_string()) throw CliError("'" + what + "' entries must be polynomial strings");
    return parse_polynomial(v.get<std::string>(), doc.base);
  };

  if (has_data) {
    const auto& d = j["data"];
    if (!d.is_object() || !d.contains("f") || !d.contains("fs") || !d["fs"].is_array())
      throw CliError("'data' needs 'f' (string) and 'fs' (array of strings)");
    std::vector<Polynomial> fs;
    for (const auto& s : d["fs"]) fs.push_back(poly(s, "fs"));
    if (fs.size() != t_vars.size())
      throw CliError("'t_vars' must list one variable per entry of 'fs'");
    doc.data = ForcingData::make(doc.base, std::move(fs), poly(d["f"], "f"), t_vars);
  } else {
    const auto& m = j["matrix"];
    if (!m.is_object() || !m.contains("entries") || !m["entries"].is_array() ||
        !m.contains("vec") || !m["vec"].is_array())
      throw CliError("'matrix' needs 'entries' (array of rows) and 'vec' (array of strings)");
    std::vector<std::vector<Polynomial>> entries;
    for (const auto& row : m["entries"]) {
      if (!row.is_array()) throw CliError("'entries' rows must be arrays");
      std::vector<Polynomial> r;
      for (const auto& s : row) r.push_back(poly(s, "entries"));
      entries.push_back(std::move(r));
    }
    if (entries.empty() || entries[0].size() != t_vars.size())
      throw CliError("'t_vars' must list one variable per matrix column");
    std::vector<Polynomial> vec;
    for (const auto& s : m["vec"]) vec.push_back(poly(s, "vec"));
    doc.matrix = ForcingMatrix::make(doc.base, std::move(entries), std::move(vec), t_vars);
  }
  return doc;
}

Document load_document(const std::string& path, std::istream& in) {
  nlohmann::json j;
  try {
    if (path == "-") {
      j = nlohmann::json::parse(in);
    } else {
      std::ifstream f(path);
      if (!f) throw CliError("cannot open '" + path + "'");
      j = nlohmann::json::parse(f);
    }
  } catch (const nlohmann::json::parse_error& e) {
    throw CliError(std::string("invalid JSON: ") + e.what());
  }
  return parse_document(j);
}

const ForcingData& need_data(const Document& doc) {
  if (!doc.data) throw CliError("this command requires single-equation 'data'");
  return *doc.data;
}

const ForcingMatrix& need_matrix(const Document& doc) {
  if (!doc.matrix) throw CliError("this command requires a 'matrix' datum");
  return *doc.matrix;
}

Point parse_point(const std::string& text, const RingPtr& base) {
  Point point;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw CliError("--point expects name=value pairs");
    std::string name = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    if (!base->var_index(name)) throw CliError("--point: unknown variable '" + name + "'");
    try {
      auto slash = value.find('/');
      if (slash == std::string::npos) {
        point.insert_or_assign(name, Scalar::of_mpz(base->field(), mpz_class(value)));
      } else {
        point.insert_or_assign(name,
                               Scalar::fraction(base->field(), mpz_class(value.substr(0, slash)),
                                                mpz_class(value.substr(slash + 1))));
      }
    } catch (const std::invalid_argument&) {
      throw CliError("--point: cannot read value '" + value + "'");
    }
  }
  for (const auto& v : base->vars())
    if (!point.count(v)) throw CliError("--point: missing assignment for '" + v + "'");
  return point;
}

ordered_json witnesses_json(const CriterionReport& r) {
  ordered_json w = ordered_json::object();
  for (const auto& [k, v] : r.witnesses) {
    if (v.is_unit())
      w[k] = "unit";
    else
      w[k] = v.value();
  }
  return w;
}

ordered_json criterion_json(const std::string& command, const CriterionReport& r) {
  ordered_json out;
  out["command"] = command;
  out["verdict"] = std::string(to_string(r.verdict));
  out["branch"] = r.branch;
  out["witnesses"] = witnesses_json(r);
  out["notes"] = r.notes;
  return out;
}

ordered_json check_value_json(const CheckValue& v) {
  if (std::holds_alternative<std::int64_t>(v)) return std::get<std::int64_t>(v);
  if (std::holds_alternative<bool>(v)) return std::get<bool>(v);
  return std::get<std::string>(v);
}

ordered_json case_json(const std::string& command, const CaseResult& c) {
  ordered_json out;
  out["command"] = command;
  out["name"] = c.name;
  out["passed"] = c.passed;
  ordered_json checks = ordered_json::array();
  for (const auto& s : c.subchecks) {
    ordered_json one;
    one["label"] = s.label;
    one["expected"] = check_value_json(s.expected);
    one["actual"] = check_value_json(s.actual);
    one["ok"] = s.ok();
    checks.push_back(std::move(one));
  }
  out["subchecks"] = std::move(checks);
  out["notes"] = c.notes;
  return out;
}

ordered_json fiber_json(const std::string& command, const FiberDescription& f) {
  ordered_json out;
  out["command"] = command;
  if (f.status == FiberDescription::Status::Empty) {
    out["status"] = "Empty";
  } else {
    out["status"] = "AffineSpace";
    out["dim"] = f.dim;
  }
  out["rank"] = f.rank;
  ordered_json pt = ordered_json::array();
  for (const Scalar& s : f.residue_point) pt.push_back(s.to_string());
  out["residue_point"] = std::move(pt);
  out["notes"] = ordered_json::array();
  return out;
}

ordered_json generators_json(const Ideal& i) {
  ordered_json gens = ordered_json::array();
  for (const Polynomial& g : i.gens()) gens.push_back(g.to_string());
  return gens;
}

void render_pretty(const ordered_json& report, std::ostream& out) {
  for (const auto& [key, value] : report.items()) {
    if (key == "subchecks") {
      out << "subchecks:\n";
      for (const auto& s : value) {
        out << "  " << (s["ok"].get<bool>() ? "[ok]  " : "[FAIL]") << " " << s["label"].get<std::string>()
            << ": expected " << s["expected"].dump() << ", got " << s["actual"].dump() << "\n";
      }
    } else {
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

struct CommandSpec {
  std::string name;
  std::string help;
  bool needs_document;
  std::function<ordered_json(const Document&)> handler;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  set_groebner_degree_cap(60);
  if (const char* cap_text = std::getenv("FORCEALG_DEGREE_CAP")) {
    char* end = nullptr;
    long cap = std::strtol(cap_text, &end, 10);
    if (end == cap_text || *end != '\0' || cap <= 0) {
      err << ordered_json{{"error", "FORCEALG_DEGREE_CAP must be a positive integer"}}.dump() << "\n";
      return 2;
    }
    set_groebner_degree_cap(cap);
  }

  std::string doc_path;
  std::string point_text;
  std::int64_t minor_size = 0;
  int grid_max = 3;
  bool pretty = false;

  CLI::App app{"forcealg: exact analyzer for forcing algebras over QQ and GF(p)"};
  app.require_subcommand(1);

  std::vector<CommandSpec> commands = {
      {"normal", "normal-domain criterion", true,
       [](const Document& d) { return criterion_json("normal", is_normal(need_data(d))); }},
      {"domain", "integral-domain criterion", true,
       [](const Document& d) { return criterion_json("domain", is_domain(need_data(d))); }},
      {"irreducible", "irreducibility criterion (sufficient direction)", true,
       [](const Document& d) { return criterion_json("irreducible", is_irreducible(need_data(d))); }},
      {"surjective", "surjectivity of the forcing morphism", true,
       [](const Document& d) {
         CriterionReport r;
         bool s = is_surjective(need_data(d));
         r.verdict = s ? Verdict::Yes : Verdict::No;
         r.branch = s ? "f in rad(f_1..f_n)" : "f not in rad(f_1..f_n)";
         return criterion_json("surjective", r);
       }},
      {"jacobian", "generators of the Jacobian ideal in B", true,
       [](const Document& d) {
         Ideal j = jacobian_ideal(need_data(d));
         ordered_json o;
         o["command"] = "jacobian";
         o["generators"] = generators_json(j);
         ordered_json w = ordered_json::object();
         Codim c = codimension(j);
         if (c.is_unit())
           w["codim_J"] = "unit";
         else
           w["codim_J"] = c.value();
         o["witnesses"] = std::move(w);
         o["notes"] = ordered_json::array();
         return o;
       }},
      {"horizontal", "the component dominating the base", true,
       [](const Document& d) {
         const ForcingData& data = need_data(d);
         Ideal h = horizontal_component(data);
         ordered_json o;
         o["command"] = "horizontal";
         o["generators"] = generators_json(h);
         ordered_json w = ordered_json::object();
         Codim c = codimension(data_ideal(data));
         if (c.is_unit())
           w["codim_I"] = "unit";
         else
           w["codim_I"] = c.value();
         o["witnesses"] = std::move(w);
         o["notes"] = {"vertical components live over the minimal primes of the data ideal "
                       "and are not enumerated"};
         return o;
       }},
      {"fiber", "fiber over a rational point", true,
       [&point_text](const Document& d) {
         Point p = parse_point(point_text, d.base);
         FiberDescription f = d.data ? fiber(*d.data, p) : matrix_fiber(need_matrix(d), p);
         return fiber_json("fiber", f);
       }},
      {"fitting", "Fitting ideal of j-minors", true,
       [&minor_size](const Document& d) {
         Ideal f = fitting_ideal(need_matrix(d), static_cast<std::size_t>(minor_size));
         ordered_json o;
         o["command"] = "fitting";
         o["size"] = minor_size;
         o["generators"] = generators_json(f);
         ordered_json basis = ordered_json::array();
         for (const Polynomial& g : f.groebner().elements) basis.push_back(g.to_string());
         o["reduced_basis"] = std::move(basis);
         o["notes"] = ordered_json::array();
         return o;
       }},
      {"regseq", "regular-sequence test for the forcing elements", true,
       [](const Document& d) {
         return criterion_json("regseq", is_regular_sequence(need_matrix(d)));
       }},
      {"adjoint", "det(M)*T_i membership in the forcing ideal", true,
       [](const Document& d) {
         CriterionReport r;
         bool ok = adjoint_membership_check(need_matrix(d));
         r.verdict = ok ? Verdict::Yes : Verdict::No;
         r.branch = ok ? "det(M)*T_i in H for all i" : "some det(M)*T_i not in H";
         return criterion_json("adjoint", r);
       }},
      {"verify-decomposition", "decomposition suite for the symmetric two-equation fixture", false,
       [](const Document&) {
         return case_json("verify-decomposition", verify_enlightening_decomposition());
       }},
      {"verify-enlightening", "singular-locus codimension for the fixture", false,
       [](const Document&) {
         return case_json("verify-enlightening", verify_enlightening_singular_locus());
       }},
      {"verify-normalization", "normalization presentation checks", false,
       [](const Document&) {
         return case_json("verify-normalization", verify_normalization_example());
       }},
      {"grid", "normality sweep of (x^a, y^b; x^c y^d) over an exponent box", false,
       [&grid_max](const Document&) {
         if (grid_max < 0) throw CliError("--max must be nonnegative");
         return case_json("grid", normality_grid(grid_max, grid_max, grid_max, grid_max));
       }},
  };

  std::vector<std::pair<CLI::App*, const CommandSpec*>> parsed_lookup;
  for (const CommandSpec& spec : commands) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    if (spec.needs_document)
      sub->add_option("document", doc_path, "problem document path, or - for stdin")->required();
    if (spec.name == "fiber")
      sub->add_option("--point", point_text, "rational point, e.g. x=0,y=1/2")->required();
    if (spec.name == "fitting")
      sub->add_option("--size", minor_size, "minor size j")->required();
    if (spec.name == "grid") sub->add_option("--max", grid_max, "exponent bound (box [0,max]^4)");
    sub->add_flag("--pretty", pretty, "human-readable rendering");
    parsed_lookup.emplace_back(sub, &spec);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << ordered_json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }

  const CommandSpec* chosen = nullptr;
  for (const auto& [sub, spec] : parsed_lookup)
    if (sub->parsed()) chosen = spec;
  if (!chosen) {
    err << ordered_json{{"error", "no command given"}}.dump() << "\n";
    return 2;
  }

  Clock::time_point t0 = Clock::now();
  try {
    Document doc;
    if (chosen->needs_document) doc = load_document(doc_path, in);
    ordered_json report = chosen->handler(doc);
    report["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    if (pretty)
      render_pretty(report, out);
    else
      out << report.dump() << "\n";
    return 0;
  } catch (const DegreeCapExceeded& e) {
    ordered_json diag;
    diag["error"] = "degree cap exceeded";
    diag["command"] = chosen->name;
    diag["degree"] = e.degree();
    diag["cap"] = e.cap();
    err << diag.dump() << "\n";
    return 3;
  } catch (const ParseError& e) {
    ordered_json diag;
    diag["error"] = e.what();
    diag["position"] = static_cast<std::int64_t>(e.position());
    err << diag.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << ordered_json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }
}

}  // namespace forcealg::cli
