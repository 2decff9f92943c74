#include "ybsys/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ybsys/error.hpp"
#include "ybsys/gluing.hpp"
#include "ybsys/structure_file.hpp"

namespace ybsys::cli {

namespace {

using nlohmann::json;

struct Source {
  std::string file;
  std::string example;
  std::string params;
  std::string map;
};

struct Options {
  Source source;
  bool json = false;
  std::string out;
  std::string r = "r", s = "s", p = "p", t = "t", q = "q";
  bool text = false;
  std::string show_name;
};

void add_source(CLI::App* cmd, Source& src) {
  cmd->add_option("file", src.file, "structure file (JSON), or - for stdin");
  cmd->add_option("--example,-e", src.example, "registered example name");
  cmd->add_option("--params", src.params, "example parameters name=value,...");
}

std::string read_all(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

StructureFile load(const Source& src, std::istream& in) {
  if (src.example.empty() == src.file.empty()) throw InvalidArgument("give exactly one of FILE or --example");
  if (!src.example.empty()) {
    auto entry = get_example(src.example, parse_params(src.params));
    return to_structure_file(entry.payload, src.example);
  }
  if (!src.params.empty()) throw InvalidArgument("--params applies only to --example");
  if (src.file == "-") return read_structure_file(read_all(in));
  std::ifstream f(src.file);
  if (!f) throw InvalidArgument("cannot open '" + src.file + "'");
  return read_structure_file(read_all(f));
}

Algebra algebra_of(const StructureFile& f) {
  if (!f.algebra) throw InvalidArgument("input has no algebra");
  return *f.algebra;
}

Coalgebra coalgebra_of(const StructureFile& f) {
  if (!f.coalgebra) throw InvalidArgument("input has no coalgebra");
  return *f.coalgebra;
}

const LinMap& pick_map(const StructureFile& f, const std::string& name) {
  if (!name.empty()) return f.map(name);
  if (f.maps.size() != 1) {
    std::string names;
    for (const auto& [n, _] : f.maps) names += (names.empty() ? "" : ", ") + n;
    throw InvalidArgument("input has " + std::to_string(f.maps.size()) + " maps; choose one with --map (" + names +
                          ")");
  }
  return f.maps.begin()->second;
}

json witness_json(const Entry& e) {
  return {{"row", e.row},
          {"col", e.col},
          {"domain_element", e.domain_element},
          {"codomain_element", e.codomain_element},
          {"difference", e.value.to_string()}};
}

void emit_report(const Report& r, const std::string& command, bool as_json, std::ostream& out) {
  if (!as_json) {
    out << r.to_text();
    return;
  }
  json checks = json::array();
  for (const auto& c : r.checks()) {
    json item = {{"name", c.name}, {"passed", c.holds()}};
    if (auto w = c.witness()) item["witness"] = witness_json(*w);
    checks.push_back(item);
  }
  out << json{{"command", command}, {"passed", r.passed()}, {"checks", checks}}.dump(2) << "\n";
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot write '" + path + "'");
  f << text;
}

int verdict(const Report& r) { return r.passed() ? kPass : kCheckFailed; }

std::string params_signature(const ExampleInfo& info) {
  std::string sig;
  for (const auto& p : info.params) sig += (sig.empty() ? "" : ",") + p.name + "=" + p.default_value;
  return sig;
}

int list_examples_cmd(const Options& o, std::ostream& out) {
  auto infos = list_examples();
  if (o.json) {
    json items = json::array();
    for (const auto& info : infos) {
      json params = json::array();
      for (const auto& p : info.params) {
        params.push_back({{"name", p.name}, {"integer", p.integer}, {"default", p.default_value}, {"doc", p.doc}});
      }
      items.push_back(
          {{"name", info.name}, {"kind", info.kind}, {"description", info.description}, {"params", params}});
    }
    out << items.dump(2) << "\n";
    return kPass;
  }
  for (const auto& info : infos) {
    out << info.name << "  [" << info.kind << "]  (" << params_signature(info) << ")  " << info.description << "\n";
  }
  return kPass;
}

int show_example_cmd(const Options& o, std::ostream& out) {
  auto entry = get_example(o.show_name, parse_params(o.source.params));
  if (o.json) {
    out << write_structure_file(to_structure_file(entry.payload, entry.name));
    return kPass;
  }
  if (const auto* m = std::get_if<LinMap>(&entry.payload)) {
    out << m->to_string();
    return kPass;
  }
  StructureFile f = to_structure_file(entry.payload, entry.name);
  auto section = [&](const std::string& name, const LinMap& m) {
    out << name << ": " << m.domain().label() << " -> " << m.codomain().label() << "\n" << m.to_string();
  };
  if (f.algebra) {
    section("mult", f.algebra->mult());
    section("unit", f.algebra->unit());
  }
  if (f.coalgebra) {
    section("comult", f.coalgebra->comult());
    section("counit", f.coalgebra->counit());
  }
  for (const auto& [name, m] : f.maps) section(name, m);
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Yang-Baxter systems, entwining structures and gluing over Q(r,s,p,t,q)", "ybsys"};
  app.require_subcommand(1);
  Options o;

  auto* check_algebra_cmd = app.add_subcommand("check-algebra", "check associativity and unit axioms");
  auto* check_coalgebra_cmd = app.add_subcommand("check-coalgebra", "check coassociativity and counit axioms");
  auto* check_entwining_cmd = app.add_subcommand("check-entwining", "check the four entwining axioms");
  auto* check_wxz_cmd = app.add_subcommand("check-wxz", "check the four Yang-Baxter commutators of W, X, Z");
  auto* build_wxz_cmd = app.add_subcommand("build-wxz", "build W, X, Z from an entwining structure");
  auto* glue_cmd = app.add_subcommand("glue", "glue a WXZ-system into one operator on V+V' and check braid");
  auto* hecke_glue_cmd = app.add_subcommand("hecke-glue", "q-Hecke gluing of an entwining structure");
  auto* check_hecke_cmd = app.add_subcommand("check-hecke", "check the q-Hecke relation and braid equation");
  auto* export_cmd = app.add_subcommand("export-matrix", "write one map as a row-per-input matrix");
  auto* examples_cmd = app.add_subcommand("examples", "list or show registered examples");
  examples_cmd->require_subcommand(1);
  auto* list_cmd = examples_cmd->add_subcommand("list", "list registered examples");
  auto* show_cmd = examples_cmd->add_subcommand("show", "print one example");

  for (auto* cmd : {check_algebra_cmd, check_coalgebra_cmd, check_entwining_cmd, check_wxz_cmd, build_wxz_cmd,
                    glue_cmd, hecke_glue_cmd, check_hecke_cmd, export_cmd}) {
    add_source(cmd, o.source);
  }
  for (auto* cmd : {check_algebra_cmd, check_coalgebra_cmd, check_entwining_cmd, check_wxz_cmd, glue_cmd,
                    hecke_glue_cmd, check_hecke_cmd, list_cmd, show_cmd}) {
    cmd->add_flag("--json", o.json, "machine-readable output");
  }
  for (auto* cmd : {build_wxz_cmd, glue_cmd, hecke_glue_cmd, export_cmd}) {
    cmd->add_option("--out,-o", o.out, "output file (default stdout)");
  }
  build_wxz_cmd->add_option("--r", o.r, "W parameter r");
  build_wxz_cmd->add_option("--s", o.s, "W parameter s");
  build_wxz_cmd->add_option("--p", o.p, "Z parameter p");
  build_wxz_cmd->add_option("--t", o.t, "Z parameter t");
  hecke_glue_cmd->add_option("--q", o.q, "Hecke parameter q");
  check_hecke_cmd->add_option("--q", o.q, "Hecke parameter q");
  check_hecke_cmd->add_option("--map", o.source.map, "map name in the input");
  export_cmd->add_option("--map", o.source.map, "map name in the input");
  export_cmd->add_flag("--text", o.text, "plain matrix text instead of JSON");
  show_cmd->add_option("name", o.show_name, "example name")->required();
  show_cmd->add_option("--params", o.source.params, "example parameters name=value,...");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*check_algebra_cmd) {
      Report r = check_algebra(algebra_of(load(o.source, in)));
      emit_report(r, "check-algebra", o.json, out);
      return verdict(r);
    }
    if (*check_coalgebra_cmd) {
      Report r = check_coalgebra(coalgebra_of(load(o.source, in)));
      emit_report(r, "check-coalgebra", o.json, out);
      return verdict(r);
    }
    if (*check_entwining_cmd) {
      Report r = check_entwining(entwining_from_file(load(o.source, in)));
      emit_report(r, "check-entwining", o.json, out);
      return verdict(r);
    }
    if (*check_wxz_cmd) {
      Report r = check_wxz(wxz_from_file(load(o.source, in)));
      emit_report(r, "check-wxz", o.json, out);
      return verdict(r);
    }
    if (*build_wxz_cmd) {
      EntwiningStructure e = entwining_from_file(load(o.source, in));
      Report axioms = check_entwining(e);
      if (!axioms.passed()) {
        err << "input is not an entwining structure:\n" << axioms.to_text();
        return kCheckFailed;
      }
      WXZSystem sys = wxz_from_entwining(e, ScalarExpr::parse(o.r), ScalarExpr::parse(o.s), ScalarExpr::parse(o.p),
                                         ScalarExpr::parse(o.t));
      StructureFile f = to_structure_file(sys);
      f.algebra = e.A;
      f.coalgebra = e.C;
      write_output(write_structure_file(f), o.out, out);
      return kPass;
    }
    if (*glue_cmd) {
      WXZSystem sys = wxz_from_file(load(o.source, in));
      Report pre = check_wxz(sys);
      if (!pre.passed()) {
        emit_report(pre, "glue", o.json, out);
        return kCheckFailed;
      }
      GluedOperator g = glue(sys);
      Report r = check_braid(g.map);
      emit_report(r, "glue", o.json, out);
      if (!o.out.empty()) write_output(write_structure_file(to_structure_file(g.map, "R")), o.out, out);
      return verdict(r);
    }
    if (*hecke_glue_cmd) {
      EntwiningStructure e = entwining_from_file(load(o.source, in));
      ScalarExpr q = ScalarExpr::parse(o.q);
      GluedOperator g = hecke_glue(e, q);
      Report r = check_hecke(g.map, q);
      emit_report(r, "hecke-glue", o.json, out);
      if (!o.out.empty()) write_output(write_structure_file(to_structure_file(g.map, "R")), o.out, out);
      return verdict(r);
    }
    if (*check_hecke_cmd) {
      StructureFile f = load(o.source, in);
      Report r = check_hecke(pick_map(f, o.source.map), ScalarExpr::parse(o.q));
      emit_report(r, "check-hecke", o.json, out);
      return verdict(r);
    }
    if (*export_cmd) {
      StructureFile f = load(o.source, in);
      std::string name = o.source.map;
      const LinMap& m = pick_map(f, name);
      if (name.empty()) name = f.maps.begin()->first;
      std::string text = o.text ? m.to_string() : write_structure_file(to_structure_file(m, name));
      write_output(text, o.out, out);
      return kPass;
    }
    if (*list_cmd) return list_examples_cmd(o, out);
    if (*show_cmd) return show_example_cmd(o, out);
  } catch (const PreconditionFailed& e) {
    out << "FAIL " << e.what() << "\n";
    return kCheckFailed;
  } catch (const SingularMap& e) {
    out << "FAIL " << e.what() << "\n";
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace ybsys::cli
