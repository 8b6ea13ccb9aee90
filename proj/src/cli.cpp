#include "cogebra/cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "cogebra/extlab.hpp"

namespace cogebra {

namespace {

// A parsed invocation: command words plus every option with its resolved value.
struct Config {
  std::vector<std::string> command;
  std::vector<std::pair<std::string, std::string>> options;

  const std::string& get(const std::string& name) const {
    for (const auto& [k, v] : options)
      if (k == name) return v;
    throw std::logic_error("cli: no option " + name);
  }
  Json to_json() const {
    Json o = Json::object();
    for (const auto& [k, v] : options) o[k] = v;
    return Json{{"command", command}, {"options", std::move(o)}};
  }
  static Config from_json(const Json& j) {
    Config c;
    c.command = j.at("command").get<std::vector<std::string>>();
    for (const auto& [k, v] : j.at("options").items()) c.options.emplace_back(k, v.get<std::string>());
    return c;
  }
  std::vector<std::string> argv() const {
    std::vector<std::string> a = command;
    for (const auto& [k, v] : options) {
      a.push_back("--" + k);
      a.push_back(v);
    }
    return a;
  }
};

struct Outcome {
  Json result;
  int status = 0;
  std::vector<std::vector<std::string>> table;  // tsv rows, the first one the header
};

struct PropertyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t count_option(const Config& c, const std::string& name, bool positive = true) {
  const std::string& v = c.get(name);
  std::size_t used = 0;
  unsigned long long x = 0;
  try {
    x = std::stoull(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty() || v[0] == '-') throw InputError("--" + name + " expects a non-negative integer, got '" + v + "'");
  if (positive && x == 0) throw InputError("--" + name + " must be positive");
  return static_cast<std::size_t>(x);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

Family load_family(const Config& c, const Field& f) {
  const std::string& name = c.get("family");
  if (std::filesystem::is_regular_file(name)) return family_from_json(read_json_file(name), f);
  return builtin_family(name, f);
}

ProductOptions product_options(const Config& c) {
  ProductOptions o;
  o.budget = count_option(c, "budget");
  return o;
}

Field target_field(const Config& c, const Field& source) {
  const std::string& spec = c.get("embed");
  if (spec.empty()) throw InputError("--embed SOURCE-TARGET is required (e.g. gf2-gf4)");
  std::string up;
  for (char ch : spec) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  const auto parts = split(up, '-');
  if (parts.size() != 2) throw InputError("--embed expects SOURCE-TARGET, got '" + spec + "'");
  if (!(parse_field(parts[0]) == source))
    throw InputError("--embed source " + parts[0] + " differs from --field " + source.name());
  return parse_field(parts[1]);
}

std::string word_list(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// ---------------------------------------------------------------------------
// Commands

Outcome cmd_validate(const Config& c) {
  Outcome o;
  const Field fallback = parse_field(c.get("field"));
  const Coalgebra coal = coalgebra_from_json(read_json_file(c.command.at(1)), fallback);
  const auto v = validate_coalgebra(coal);
  o.result = Json{{"dim", coal.dim()}, {"field", field_to_json(coal.field())}, {"valid", !v}};
  if (v) o.result["violation"] = Json{{"law", v->law}, {"indices", v->indices}, {"message", v->message}};
  o.status = v ? 1 : 0;
  o.table = {{"valid", "law", "message"}, {v ? "false" : "true", v ? v->law : "", v ? v->message : ""}};
  return o;
}

Outcome cmd_simples(const Config& c) {
  Outcome o;
  const Field f = parse_field(c.get("field"));
  const Family fam = load_family(c, f);
  const SimpleCensus census = simple_census(fam, count_option(c, "max-dim"), product_options(c));
  o.result = census_to_json(census);
  o.table.push_back({"dim", "classes", "sample"});
  for (std::size_t e = 1; e <= census.classes.size(); ++e) {
    auto& entry = o.result["dimensions"][e - 1];
    Json ids = Json::array();
    for (std::size_t k = 0; k < census.classes[e - 1].size(); ++k) ids.push_back("d" + std::to_string(e) + "#" + std::to_string(k));
    entry["witness_ids"] = ids;
    o.table.push_back({std::to_string(e), std::to_string(census.classes[e - 1].size()),
                       census.classes[e - 1].empty() ? "-" : "d" + std::to_string(e) + "#0"});
  }
  return o;
}

Outcome cmd_product(const Config& c) {
  Outcome o;
  const Field f = parse_field(c.get("field"));
  ProductOptions opt = product_options(c);
  opt.materialize_limit = count_option(c, "materialize", false);
  const TruncatedProduct t = truncated_product(load_family(c, f), count_option(c, "d"), opt);
  o.result = product_to_json(t);
  if (t.carrier) {
    const auto v = validate_coalgebra(*t.carrier);
    o.result["carrier_valid"] = !v;
    if (v) o.status = 1;
  }
  o.table = {{"d", "carrier_dim", "stabilization_length", "representations", "skipped_dims"},
             {std::to_string(t.d), std::to_string(t.carrier_dim), o.result["stabilization_length"].dump(),
              std::to_string(t.witnesses.size()), word_list(t.skipped_dims)}};
  return o;
}

Outcome cmd_profile(const Config& c) {
  Outcome o;
  const Field f = parse_field(c.get("field"));
  const ProfileReport r = dimension_profile(load_family(c, f), count_option(c, "max-dim"), product_options(c));
  o.result = profile_to_json(r);
  o.table.push_back({"d", "carrier_dim"});
  for (std::size_t d = 1; d <= r.dims.size(); ++d) o.table.push_back({std::to_string(d), std::to_string(r.dims[d - 1])});
  return o;
}

Outcome cmd_extension(const Config& c) {
  Outcome o;
  const Field f = parse_field(c.get("field"));
  const Embedding e = embed(f, target_field(c, f));
  const ExtensionReport r = extension_commutation_report(load_family(c, f), e, count_option(c, "d"), product_options(c));
  o.result = extension_to_json(r);
  o.result["source_field"] = field_to_json(e.source());
  o.result["target_field"] = field_to_json(e.target());
  o.result["verdict"] = r.equal ? "dimensions equal" : "dimensions differ";
  o.status = r.equal ? 0 : 1;
  o.table = {{"d", "source_dim", "target_dim", "verdict"},
             {std::to_string(r.d), std::to_string(r.source_dim), std::to_string(r.target_dim), o.result["verdict"]}};
  return o;
}

Outcome cmd_cofree(const Config& c) {
  Outcome o;
  const Field f = parse_field(c.get("field"));
  CofreeOptions opt;
  opt.budget = count_option(c, "budget");
  opt.materialize_limit = count_option(c, "materialize", false);
  const std::size_t m = count_option(c, "m", false), d = count_option(c, "d");
  const CofreeTruncation t = cofree_truncated(m, d, f, opt);
  const OntoReport onto = structure_map_onto(t);
  o.result = cofree_to_json(t);
  o.result["onto"] = onto.onto;
  Json pre = Json::array();
  for (const auto& v : onto.preimages) pre.push_back(vector_to_json(f, v));
  o.result["preimages"] = pre;
  if (t.carrier) o.result["carrier_valid"] = !validate_coalgebra(*t.carrier);
  o.status = onto.onto || m == 0 ? 0 : 1;
  o.table = {{"m", "d", "carrier_dim", "onto"},
             {std::to_string(m), std::to_string(d), std::to_string(t.carrier_dim), onto.onto ? "true" : "false"}};
  if (!c.get("extend-to").empty()) {
    const Embedding e = embed(f, parse_field(c.get("extend-to")));
    const CofreeExtensionReport r = cofree_extension_report(m, d, e, opt);
    o.result["extension"] = cofree_extension_to_json(r);
    o.result["extension"]["target_field"] = field_to_json(e.target());
    o.table[0].push_back("extended_dim");
    o.table[1].push_back(std::to_string(r.target_dim));
    if (!r.equal) o.status = 1;
  }
  return o;
}

LinRecSeq sequence_option(const Field& f, const Config& c, const std::string& poly, const std::string& init) {
  if (c.get(poly).empty()) throw InputError("--" + poly + " is required");
  std::vector<Scalar> terms;
  if (!c.get(init).empty())
    for (const auto& s : split(c.get(init), ',')) terms.push_back(f.parse(s));
  return LinRecSeq(f, parse_polynomial(f, c.get(poly)), terms);
}

Json terms_json(const Field& f, const std::vector<Scalar>& t) { return vector_to_json(f, t); }

Outcome cmd_recseq(const Config& c) {
  Outcome o;
  const Field f = parse_field(c.get("field"));
  const PolynomialRing ring(f);
  const std::string& op = c.command.at(1);
  const LinRecSeq s = sequence_option(f, c, "minpoly", "initial");
  const std::size_t n = count_option(c, "terms");
  auto describe = [&](const LinRecSeq& x) {
    Json j = sequence_to_json(x);
    j["minimal_polynomial"] = ring.format(x.minimal_polynomial());
    j["terms"] = terms_json(f, x.terms(n));
    return j;
  };
  auto term_rows = [&](const std::vector<std::pair<long, Scalar>>& rows) {
    o.table.push_back({"n", "term"});
    for (const auto& [k, v] : rows) o.table.push_back({std::to_string(k), f.format(v)});
  };
  auto plain_rows = [&](const LinRecSeq& x) {
    std::vector<std::pair<long, Scalar>> rows;
    const auto t = x.terms(n);
    for (std::size_t k = 0; k < n; ++k) rows.emplace_back(static_cast<long>(k), t[k]);
    term_rows(rows);
  };
  o.result = Json{{"operation", op}, {"model", "grouplike (Hadamard)"}, {"sequence", describe(s)}};
  if (op == "terms" || op == "minpoly") {
    plain_rows(s);
  } else if (op == "extendable") {
    o.result["extendable"] = is_bilaterally_extendable(s);
    o.table = {{"extendable"}, {is_bilaterally_extendable(s) ? "true" : "false"}};
  } else if (op == "antipode") {
    const LinRecSeq a = antipode(s);
    o.result["antipode"] = describe(a);
    std::vector<std::pair<long, Scalar>> rows;
    Json bilateral = Json::array();
    for (long k = -static_cast<long>(n) + 1; k < static_cast<long>(n); ++k) {
      const Scalar v = bilateral_term(s, k);
      rows.emplace_back(k, v);
      bilateral.push_back(Json{{"n", k}, {"term", f.format(v)}});
    }
    o.result["bilateral"] = bilateral;
    term_rows(rows);
  } else if (op == "hadamard" || op == "hurwitz") {
    const LinRecSeq b = sequence_option(f, c, "minpoly2", "initial2");
    const LinRecSeq p = op == "hadamard" ? hadamard_product(s, b) : hurwitz_product(s, b);
    if (op == "hurwitz") o.result["model"] = "primitive (Hurwitz)";
    o.result["other"] = describe(b);
    o.result["product"] = describe(p);
    plain_rows(p);
  } else if (op == "comultiply") {
    Json pairs = Json::array();
    o.table.push_back({"pair", "left", "right"});
    const auto comps = comultiplication_components(s);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      pairs.push_back(Json{{"left", describe(comps[i].left)}, {"right", describe(comps[i].right)}});
      std::string l, r;
      for (const auto& x : comps[i].left.terms(n)) l += (l.empty() ? "" : ",") + f.format(x);
      for (const auto& x : comps[i].right.terms(n)) r += (r.empty() ? "" : ",") + f.format(x);
      o.table.push_back({std::to_string(i), l, r});
    }
    o.result["pairs"] = pairs;
  } else {
    throw InputError("unknown recseq operation '" + op + "' (terms, minpoly, extendable, antipode, hadamard, hurwitz, comultiply)");
  }
  return o;
}

Outcome cmd_group(const Config& c) {
  Outcome o;
  const Field f = parse_field(c.get("field"));
  const std::string& op = c.command.at(1);
  const std::size_t rank = count_option(c, "alphabet-size", false);
  if (op == "embedding") {
    const EmbeddingReport r = embedding_check(rank, count_option(c, "d"), f, count_option(c, "budget"));
    o.result = embedding_to_json(r);
    o.status = r.equal ? 0 : 1;
    o.table = {{"alphabet_size", "d", "positive_dim", "all_dim", "equal"},
               {std::to_string(r.rank), std::to_string(r.d), std::to_string(r.positive_dim), std::to_string(r.all_dim),
                r.equal ? "true" : "false"}};
  } else if (op == "reduce") {
    const FreeGroup g = FreeGroup::standard(rank);
    const GroupWord w = g.parse(c.get("word"));
    o.result = Json{{"alphabet", g.names()}, {"reduced", g.format(w)}, {"letters", group_word_to_json(w)},
                    {"inverse", g.format(g.inverse(w))}};
    o.table = {{"reduced", "inverse"}, {g.format(w), g.format(g.inverse(w))}};
  } else {
    throw InputError("unknown group operation '" + op + "' (embedding, reduce)");
  }
  return o;
}

Outcome witness_outcome(const WitnessReport& r) {
  Outcome o;
  o.result = to_json(r);
  std::string why;
  const bool valid = revalidate(r, &why);
  o.result["revalidated"] = valid;
  o.status = r.verdict && valid ? 0 : 1;
  if (!r.dimensions.empty()) {
    o.table.push_back({"n", "dim"});
    for (std::size_t i = 0; i < r.dimensions.size(); ++i) o.table.push_back({std::to_string(i + 1), std::to_string(r.dimensions[i])});
  } else {
    o.table = {{"verdict", "statement"}, {r.verdict ? "true" : "false", r.statement}};
  }
  return o;
}

Outcome cmd_witness(const Config& c) {
  const std::string& exp = c.command.at(1);
  const auto p = static_cast<std::uint32_t>(count_option(c, "p", false));
  if (exp == "matrix-span") return witness_outcome(matrix_power_span_growth(p, count_option(c, "N")));
  if (exp == "nilpotent") return witness_outcome(nilpotent_witness_span(p, count_option(c, "N")));
  if (exp == "transcendental") return witness_outcome(transcendental_character_check(p, count_option(c, "D", false)));
  if (exp == "dualfields") {
    std::vector<std::uint32_t> exts;
    for (const auto& s : split(c.get("exts"), ',')) {
      Config one{{}, {{"n", s}}};
      exts.push_back(static_cast<std::uint32_t>(count_option(one, "n")));
    }
    ProductOptions opt;
    opt.budget = count_option(c, "budget");
    return witness_outcome(dualfields_experiment(p, exts, count_option(c, "d"), static_cast<std::uint32_t>(count_option(c, "m")),
                                                 count_option(c, "d-ext"), opt));
  }
  if (exp == "check") {
    if (c.command.size() < 3) throw InputError("witness check needs a report file");
    Json j = read_json_file(c.command[2]);
    if (j.contains("result")) j = j.at("result");
    const WitnessReport r = witness_from_json(j);
    Outcome o;
    std::string why;
    const bool ok = revalidate(r, &why);
    o.result = Json{{"experiment", r.experiment}, {"verdict", r.verdict}, {"revalidated", ok}};
    if (!ok) o.result["reason"] = why;
    o.status = ok ? 0 : 1;
    o.table = {{"experiment", "revalidated", "reason"}, {r.experiment, ok ? "true" : "false", ok ? "" : why}};
    return o;
  }
  throw InputError("unknown witness experiment '" + exp + "' (matrix-span, nilpotent, transcendental, dualfields, check)");
}

// ---------------------------------------------------------------------------
// Rendering

std::string render(const Config& c, const Outcome& o) {
  if (c.get("format") == "tsv") {
    std::string s = "# config: " + c.to_json().dump() + "\n";
    for (const auto& row : o.table) {
      for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "\t" : "") + row[i];
      s += "\n";
    }
    return s;
  }
  return Json{{"config", c.to_json()}, {"result", o.result}}.dump(2) + "\n";
}

void write_atomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << text;
  }
  std::filesystem::rename(tmp, path);
}

Outcome dispatch(const Config& c) {
  const std::string& cmd = c.command.at(0);
  if (cmd == "validate") return cmd_validate(c);
  if (cmd == "simples") return cmd_simples(c);
  if (cmd == "product") return cmd_product(c);
  if (cmd == "profile") return cmd_profile(c);
  if (cmd == "extension") return cmd_extension(c);
  if (cmd == "cofree") return cmd_cofree(c);
  if (cmd == "recseq") return cmd_recseq(c);
  if (cmd == "group") return cmd_group(c);
  if (cmd == "witness") return cmd_witness(c);
  throw InputError("unknown command '" + cmd + "'");
}

struct Spec {
  std::string name;
  std::string help;
  std::vector<std::string> positional;  // names, in order
  std::vector<std::tuple<std::string, std::string, std::string>> options;  // name, default, help
};

std::vector<Spec> specs() {
  const std::string budget = std::to_string(default_budget());
  const std::tuple<std::string, std::string, std::string> b{"budget", budget, "enumeration budget"},
      fmt{"format", "json", "json or tsv"};
  auto field = [](const char* def) { return std::tuple<std::string, std::string, std::string>{"field", def, "ground field, e.g. GF(2), GF(4), Q"}; };
  const std::tuple<std::string, std::string, std::string> fam{"family", "dihedral",
                                                              "family file or dihedral | trivial | dual_fields:n1,n2"};
  return {
      {"validate", "check the coalgebra axioms of a coalgebra file", {"file"}, {field("GF(2)"), fmt}},
      {"simples", "census of simple joint comodules", {}, {field("GF(2)"), fam, {"max-dim", "2", "largest dimension"}, b, fmt}},
      {"product", "degree-truncated product", {}, {field("GF(2)"), fam, {"d", "2", "degree"}, {"materialize", "160", "largest carrier built"}, b, fmt}},
      {"profile", "carrier dimensions for d = 1..max-dim", {}, {field("GF(2)"), fam, {"max-dim", "3", "largest degree"}, b, fmt}},
      {"extension", "truncated products against scalar extension", {}, {field("GF(2)"), fam, {"embed", "", "SOURCE-TARGET, e.g. gf2-gf4"}, {"d", "2", "degree"}, b, fmt}},
      {"cofree", "truncated cofree coalgebra on k^m", {}, {field("GF(2)"), {"m", "1", "dim V"}, {"d", "1", "degree"}, {"materialize", "64", "largest carrier built"}, {"extend-to", "", "also compare with this extension field"}, b, fmt}},
      {"recseq", "linearly recursive sequences: terms | minpoly | extendable | antipode | hadamard | hurwitz | comultiply", {"operation"},
       {field("Q"), {"minpoly", "", "annihilating polynomial, e.g. x^2-x-1"}, {"initial", "", "initial terms, comma separated"},
        {"minpoly2", "", "second sequence (products)"}, {"initial2", "", "second sequence (products)"}, {"terms", "10", "terms printed"}, fmt}},
      {"group", "free group Hopf algebra: embedding | reduce", {"operation"},
       {field("GF(2)"), {"alphabet-size", "1", "|S|"}, {"d", "1", "largest representation dimension"}, {"word", "1", "word to reduce"}, b, fmt}},
      {"witness", "extension witnesses: matrix-span | nilpotent | transcendental | dualfields | check FILE", {"experiment", "file"},
       {{"p", "2", "characteristic (0: rationals)"}, {"N", "8", "number of powers"}, {"D", "3", "degree bound"},
        {"exts", "2,3", "extension degrees"}, {"d", "5", "level over GF(p)"}, {"m", "6", "extension degree of the big field"},
        {"d-ext", "1", "level after extension"}, b, fmt}},
  };
}

// Parses args into a Config with every option resolved; nullopt after --help.
std::optional<Config> parse(const std::vector<std::string>& args, std::string& out_path, std::ostream& out) {
  CLI::App app{"cogebra: exact computations with coalgebras, comodules and their truncated products"};
  app.require_subcommand(1);
  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::vector<std::string>> pos;
  const auto all = specs();
  for (const auto& s : all) {
    auto* sub = app.add_subcommand(s.name, s.help);
    for (const auto& [name, def, help] : s.options) {
      values[s.name][name] = def;
      sub->add_option("--" + name, values[s.name][name], help)->capture_default_str();
    }
    sub->add_option("--out", out_path, "write the report here");
    if (!s.positional.empty()) {
      auto* opt = sub->add_option(s.positional[0], pos[s.name], s.positional[0]);
      opt->required();
      opt->expected(1, static_cast<int>(s.positional.size()));
    }
  }
  std::string replay_file;
  bool check = false;
  auto* replay = app.add_subcommand("replay", "rerun the configuration embedded in a report");
  replay->add_option("file", replay_file, "report")->required();
  replay->add_option("--out", out_path, "write the report here");
  replay->add_flag("--check", check, "compare with the file; exit 1 if the bytes differ");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    for (auto* sub : app.get_subcommands())
      if (e.get_exit_code() == 0) {
        out << sub->help();
        return std::nullopt;
      }
    throw InputError(e.what());
  }
  if (replay->parsed()) {
    Config c{{"replay", replay_file}, {{"check", check ? "true" : "false"}}};
    return c;
  }
  for (const auto& s : all) {
    auto* sub = app.get_subcommand(s.name);
    if (!sub->parsed()) continue;
    Config c;
    c.command.push_back(s.name);
    for (const auto& p : pos[s.name]) c.command.push_back(p);
    for (const auto& [name, def, help] : s.options) {
      std::string v = values[s.name][name];
      if (name == "field") v = parse_field(v).name();
      if (name == "format" && v != "json" && v != "tsv") throw InputError("--format must be json or tsv");
      c.options.emplace_back(name, v);
    }
    return c;
  }
  throw InputError("no command given");
}

int run(const Config& c, const std::string& out_path, std::ostream& out) {
  const Outcome o = dispatch(c);
  const std::string text = render(c, o);
  if (out_path.empty())
    out << text;
  else
    write_atomically(out_path, text);
  return o.status;
}

int replay(const std::string& file, bool check, const std::string& out_path, std::ostream& out, std::ostream& err) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw InputError("cannot open '" + file + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string original = buf.str();
  Json cfg;
  try {
    if (original.starts_with("# config: ")) {
      cfg = Json::parse(original.substr(10, original.find('\n') - 10));
    } else {
      cfg = Json::parse(original).at("config");
    }
  } catch (const Json::exception& e) {
    throw InputError("'" + file + "' carries no readable configuration: " + e.what());
  }
  const Config c = Config::from_json(cfg);
  const Outcome o = dispatch(c);
  const std::string text = render(c, o);
  if (out_path.empty())
    out << text;
  else
    write_atomically(out_path, text);
  if (check) {
    const bool same = text == original;
    err << (same ? "replay: identical\n" : "replay: output differs from " + file + "\n");
    if (!same) return 1;
  }
  return o.status;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    std::string out_path;
    const auto c = parse(args, out_path, out);
    if (!c) return 0;
    if (c->command[0] == "replay") return replay(c->command[1], c->get("check") == "true", out_path, out, err);
    return run(*c, out_path, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const Undecided& e) {
    err << "undecided: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cogebra
