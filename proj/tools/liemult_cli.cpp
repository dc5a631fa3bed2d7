// liemult: compute Schur multiplier dimensions and related invariants of
// finite-dimensional Lie algebras given by structure constants, and sweep
// the built-in catalog against the implemented dimension bounds.
//
// Exit codes: 0 ok / no anomalies, 1 anomalies found, 2 usage or parse
// error, 3 invalid algebra (Jacobi violation).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "liemult/report.hpp"

namespace {

using namespace liemult;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw invalid_parameter("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

OutputFormat parse_format(const std::string& f) {
  if (f == "table") return OutputFormat::table;
  if (f == "lines") return OutputFormat::lines;
  throw invalid_parameter("bad format '" + f + "'");
}

LieAlgebra load_algebra(const std::string& catalog_key,
                        const std::string& path, const std::string& field,
                        std::string& name) {
  StructureConstants sc{0, FieldDescriptor::rationals()};
  if (!catalog_key.empty()) {
    const CatalogEntry* e = find_catalog_entry(catalog_key);
    if (!e) throw invalid_parameter("no catalog entry '" + catalog_key + "'");
    name = e->key;
    sc = e->algebra.sc();
  } else if (!path.empty()) {
    name = path == "-" ? "stdin" : std::filesystem::path(path).stem().string();
    sc = deserialize(read_input(path));
  } else {
    throw invalid_parameter("give either --catalog KEY or an input file");
  }
  if (!field.empty()) sc = convert_field(sc, parse_field_flag(field));
  return LieAlgebra::validate(std::move(sc));
}

int run_info(const std::string& catalog_key, const std::string& path,
             const std::string& field, OutputFormat format) {
  std::string name;
  const LieAlgebra l = load_algebra(catalog_key, path, field, name);
  std::cout << format_info(name, l, format);
  return 0;
}

int run_construct(const std::vector<std::string>& args,
                  const std::string& field) {
  if (args.empty())
    throw invalid_parameter(
        "construct needs a family: abelian N | heisenberg M | filiform N | "
        "sum KEY KEY");
  const std::string& family = args[0];
  FieldDescriptor f =
      field.empty() ? FieldDescriptor::rationals() : parse_field_flag(field);

  auto numeric_arg = [&](const char* what) {
    if (args.size() != 2)
      throw invalid_parameter(std::string("construct ") + family +
                              " needs one parameter (" + what + ")");
    try {
      return std::stoull(args[1]);
    } catch (const std::exception&) {
      throw invalid_parameter("bad parameter '" + args[1] + "'");
    }
  };

  if (family == "abelian") {
    std::cout << serialize(make_abelian(numeric_arg("dimension"), f));
    return 0;
  }
  if (family == "heisenberg") {
    std::cout << serialize(make_heisenberg(numeric_arg("rank"), f));
    return 0;
  }
  if (family == "filiform") {
    std::cout << serialize(make_filiform(numeric_arg("dimension"), f));
    return 0;
  }
  if (family == "sum") {
    if (args.size() != 3)
      throw invalid_parameter("construct sum needs two catalog keys");
    const CatalogEntry* a = find_catalog_entry(args[1]);
    const CatalogEntry* b = find_catalog_entry(args[2]);
    if (!a) throw invalid_parameter("no catalog entry '" + args[1] + "'");
    if (!b) throw invalid_parameter("no catalog entry '" + args[2] + "'");
    StructureConstants sc = direct_sum(a->algebra, b->algebra).sc();
    if (!field.empty()) sc = convert_field(sc, parse_field_flag(field));
    std::cout << serialize(sc);
    return 0;
  }
  throw invalid_parameter("unknown family '" + family + "'");
}

int run_sweep_cmd(bool use_catalog, const std::vector<std::string>& dirs,
                  const std::string& checks_csv, OutputFormat format) {
  const SweepChecks checks = parse_checks(checks_csv);
  std::vector<SweepItem> items;
  if (use_catalog) {
    for (const CatalogEntry& e : builtin_catalog())
      items.push_back(SweepItem{e.key, e.algebra});
  }
  std::vector<std::string> scan = dirs;
  if (const char* extra = std::getenv("LIEMULT_EXTRA_DIR");
      extra && use_catalog)
    scan.push_back(extra);
  for (const std::string& dir : scan) {
    if (!std::filesystem::is_directory(dir))
      throw invalid_parameter("not a directory: '" + dir + "'");
    std::vector<std::filesystem::path> files;
    for (const auto& de : std::filesystem::directory_iterator(dir))
      if (de.is_regular_file()) files.push_back(de.path());
    std::sort(files.begin(), files.end());
    for (const auto& p : files) {
      std::ifstream in(p);
      std::ostringstream buf;
      buf << in.rdbuf();
      items.push_back(SweepItem{p.stem().string(),
                                LieAlgebra::validate(deserialize(buf.str()))});
    }
  }
  if (items.empty())
    throw invalid_parameter("empty sweep scope (use --catalog and/or --dir)");
  const SweepResult result = run_sweep(std::move(items), checks, format);
  std::cout << render_sweep(result, format);
  return result.anomalies.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact Schur multiplier computations for finite-dimensional Lie "
      "algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  std::string format = "table";
  app.add_option("--format", format, "table or lines (machine-readable)")
      ->check(CLI::IsMember({"table", "lines"}));

  auto* info =
      app.add_subcommand("info", "invariants and bounds for one algebra");
  std::string info_catalog, info_path, info_field;
  info->add_option("--catalog", info_catalog, "built-in catalog key");
  info->add_option("input", info_path,
                   "structure-constants file ('-' for stdin)");
  info->add_option("--field", info_field, "q or gf:p (reduces the table)");

  auto* con = app.add_subcommand(
      "construct", "emit a structure-constants file on stdout");
  std::vector<std::string> con_args;
  con->add_option("family", con_args,
                  "abelian N | heisenberg M | filiform N | sum KEY KEY");
  std::string con_field;
  con->add_option("--field", con_field, "q or gf:p");

  auto* sw = app.add_subcommand("sweep", "run checks over a corpus");
  bool sw_catalog = false;
  std::vector<std::string> sw_dirs;
  std::string sw_checks = "main,batten,kunneth,sr,t-classify";
  sw->add_flag("--catalog", sw_catalog, "sweep the built-in catalog");
  sw->add_option("--dir", sw_dirs, "sweep all files in a directory");
  sw->add_option("--checks", sw_checks,
                 "subset of main,batten,kunneth,sr,t-classify");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    const OutputFormat fmt = parse_format(format);
    if (*info) return run_info(info_catalog, info_path, info_field, fmt);
    if (*con) return run_construct(con_args, con_field);
    if (*sw) return run_sweep_cmd(sw_catalog, sw_dirs, sw_checks, fmt);
  } catch (const jacobi_violation& e) {
    std::cerr << "invalid algebra: " << e.what() << "\n";
    return 3;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
