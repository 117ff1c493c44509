#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "toric/json_io.hpp"

namespace {

using toric::io::json;

toric::ToricArrangement read_arrangement(const std::string& path) {
  std::string text;
  if (path == "-" || path.empty()) {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  json j = json::parse(text, nullptr, true);
  return toric::io::arrangement_from_json(j);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<unsigned> parse_primes(const std::string& s) {
  std::vector<unsigned> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(unsigned(std::stoul(tok)));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorial analysis of toric arrangements"};
  app.require_subcommand(1);

  std::string file = "-";
  int braid_n = 0;
  bool essential = false, strict = false;
  std::string matrix_str, primes_str;
  unsigned prime = 0;
  int search_depth = 3;

  CLI::App* c_braid = app.add_subcommand("braid", "type-A arrangement as JSON");
  c_braid->add_option("n", braid_n, "number of coordinates")->required()->check(CLI::Range(2, 64));
  c_braid->add_flag("--essential", essential, "essentialize before printing");

  CLI::App* c_layers = app.add_subcommand("layers", "all layers of an arrangement");
  c_layers->add_option("file", file, "arrangement JSON ('-' = stdin)");

  CLI::App* c_poset = app.add_subcommand("poset", "poset of layers with Moebius values");
  c_poset->add_option("file", file, "arrangement JSON ('-' = stdin)");

  CLI::App* c_charpoly = app.add_subcommand("charpoly", "characteristic polynomial (constant first)");
  c_charpoly->add_option("file", file, "arrangement JSON ('-' = stdin)");

  CLI::App* c_poincare = app.add_subcommand("poincare", "Poincare polynomial of the complement");
  c_poincare->add_option("file", file, "arrangement JSON ('-' = stdin)");

  CLI::App* c_ss = app.add_subcommand("ss", "supersolvability certificate");
  c_ss->add_option("file", file, "arrangement JSON ('-' = stdin)");
  c_ss->add_flag("--strict", strict, "require TM-ideals");

  CLI::App* c_lift = app.add_subcommand("lift", "lift through a finite cover");
  c_lift->add_option("file", file, "arrangement JSON ('-' = stdin)");
  c_lift->add_option("--matrix", matrix_str, "cover matrix, rows ';'-separated, e.g. \"2,1;0,-4\"")
      ->required();

  CLI::App* c_pcover = app.add_subcommand("pcover", "degree-p cover with primitive lift");
  c_pcover->add_option("file", file, "arrangement JSON ('-' = stdin)");
  c_pcover->add_option("-p,--prime", prime, "prime")->required();

  CLI::App* c_report = app.add_subcommand("report", "per-prime obstruction report");
  c_report->add_option("file", file, "arrangement JSON ('-' = stdin)");
  c_report->add_option("--primes", primes_str, "comma-separated primes (default: computed)");
  c_report->add_option("--search-depth", search_depth, "max exponent for p-power searches");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*c_braid) {
      toric::ToricArrangement arr = toric::braid(braid_n);
      if (essential) arr = toric::essentialize(arr).arrangement;
      emit(toric::io::arrangement_to_json(arr));
    } else if (*c_layers) {
      auto lp = toric::layer_poset(read_arrangement(file));
      emit(toric::io::layers_to_json(lp.layers));
    } else if (*c_poset) {
      emit(toric::io::poset_to_json(toric::layer_poset(read_arrangement(file))));
    } else if (*c_charpoly) {
      emit(toric::io::polynomial_to_json(toric::char_poly(toric::layer_poset(read_arrangement(file)))));
    } else if (*c_poincare) {
      toric::ToricArrangement arr = read_arrangement(file);
      auto pp = toric::poincare(toric::char_poly(toric::layer_poset(arr)), arr.rank);
      emit(toric::io::polynomial_to_json(pp.coeffs));
    } else if (*c_ss) {
      auto fp = toric::to_finite_poset(toric::layer_poset(read_arrangement(file)));
      auto cert = strict ? toric::posets::strictly_supersolvable(fp) : toric::posets::supersolvable(fp);
      emit(cert ? toric::io::certificate_to_json(*cert) : json("none"));
    } else if (*c_lift) {
      toric::CoverMatrix m(toric::io::parse_matrix(matrix_str));
      emit(toric::io::arrangement_to_json(toric::lift(read_arrangement(file), m)));
    } else if (*c_pcover) {
      auto cover = toric::build_p_cover(read_arrangement(file), prime);
      emit(cover ? json{{"matrix", toric::io::matrix_to_json(cover->m)}} : json("none"));
    } else if (*c_report) {
      toric::ToricArrangement arr = read_arrangement(file);
      std::vector<unsigned> primes =
          primes_str.empty() ? toric::default_primes(arr) : parse_primes(primes_str);
      emit(toric::io::report_to_json(toric::analyze(arr, primes, search_depth)));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
