#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lpsum/cli.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw lpsum::ValidationError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const std::map<std::string, std::string> kHelp{
    {"norm", "norm of x"},
    {"dual", "dual space, dual norm and a norming element of f"},
    {"support", "canonical support functional of x and the extreme points of J(x)"},
    {"diam", "diameter D(x) of J(x) and the space constant cal_D"},
    {"smooth", "smoothness and eps-smoothness of x"},
    {"orth", "Birkhoff-James orthogonality of x to y, with a witness functional"},
    {"sip", "canonical semi-inner product [x, y] and its range"},
    {"complete", "t with x orthogonal to y + t x"},
    {"symmetric", "classify x as a left- or right-symmetric point"},
    {"falsify", "counterexample to left/right symmetry of x"},
    {"crosscheck", "compare the orthogonality test and D(x) with brute-force minimisation"},
    {"dgap-report", "polygon-sum construction with D(x) < 2 everywhere but cal_D = 2"}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometry of l_p and c_0 direct sums: norms, support functionals, orthogonality"};
  app.require_subcommand(1, 1);

  std::string input = "-";
  double tol = lpsum::kOracleTol;
  std::string config;
  long long n_components = 0;
  double p = 2.0;

  for (const std::string& name : lpsum::cli::commands()) {
    CLI::App* sub = app.add_subcommand(name, kHelp.at(name));
    sub->add_option("--input,-i", input, "request JSON file ('-' for stdin)");
    sub->add_option("--tol", tol, "oracle tolerance");
    sub->add_option("--config", config, "JSON file with oracle settings");
    if (name == "dgap-report") {
      sub->add_option("--N", n_components, "number of components");
      sub->add_option("--p", p, "exponent in (1, inf)");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  lpsum::cli::QueryRequest request;
  request.command = app.get_subcommands().front()->get_name();
  request.tol = tol;
  lpsum::cli::Response response;
  try {
    if (!config.empty()) request.config = lpsum::cli::config_from_json(lpsum::json_io::Json::parse(slurp(config)));
    if (request.command == "dgap-report" && n_components > 0)
      request.arguments = {{"N", n_components}, {"p", p}};
    else
      request.arguments = lpsum::json_io::Json::parse(slurp(input));
    response = lpsum::cli::run(request);
  } catch (const std::exception& e) {
    response = {2, {{"error", "validation"}, {"message", e.what()}}};
  }
  if (response.exit_code != 0) std::cerr << "lpsum: " << response.body.value("message", "error") << '\n';
  std::cout << lpsum::json_io::dump(response.body);
  return response.exit_code;
}
