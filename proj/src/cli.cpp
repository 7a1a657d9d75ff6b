#include "monoideal/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "monoideal/document.hpp"
#include "monoideal/generic.hpp"
#include "monoideal/reconstruct.hpp"
#include "monoideal/updown.hpp"
#include "monoideal/verify.hpp"

namespace monoideal::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::string input = "-";
  std::string output = "-";

  AntichainDocument read() const {
    if (input == "-") return parse_document(in);
    std::ifstream file(input);
    if (!file) throw UsageError("cannot open '" + input + "'");
    return parse_document(file);
  }

  void write(const std::string& text) const {
    if (output == "-") {
      out << text;
      return;
    }
    std::ofstream file(output);
    if (!file) throw UsageError("cannot write '" + output + "'");
    file << text;
  }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string classify_report(const Antichain& gens) {
  const auto t = classify_type(gens);
  std::ostringstream report;
  report << "dimension: " << gens.dimension() << "\n";
  report << "generators: " << gens.size() << "\n";
  report << "zero_dimensional: " << yes_no(t.zero_dimensional) << "\n";
  report << "type: " << (t.type ? std::to_string(*t.type) : "absent") << "\n";
  report << "gorenstein: " << yes_no(t.gorenstein) << "\n";

  std::string generic = "absent";
  const UpSet up(gens);
  if (is_cofinite(up)) {
    const auto socle = socle_down(up);
    if (!socle.empty()) generic = yes_no(is_order_generic(socle));
  }
  report << "socle_order_generic: " << generic << "\n";
  return report.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Socles and generators of monomial ideals via the dominance order on Z^d",
               "monoideal"};
  app.require_subcommand(1);
  Io io{in, out};

  auto* socle_cmd = app.add_subcommand("socle", "Socle (maximal standard monomials) of a generator file");
  socle_cmd->add_option("input", io.input, "generator document, '-' for stdin");
  socle_cmd->add_option("-o,--output", io.output, "output file, '-' for stdout");

  bool zero_dim = false;
  std::string lower_text;
  std::string upper_text;
  auto* recon_cmd = app.add_subcommand("reconstruct", "Generators of an ideal with the given socle");
  recon_cmd->add_option("input", io.input, "socle document, '-' for stdin");
  recon_cmd->add_option("-o,--output", io.output, "output file, '-' for stdout");
  auto* zero_flag =
      recon_cmd->add_flag("--zero-dim", zero_dim, "the unique zero-dimensional ideal (socle in N_0^d)");
  auto* a_opt = recon_cmd->add_option("--a", lower_text, "lower corner, e.g. 0,0,1");
  auto* b_opt = recon_cmd->add_option("--b", upper_text, "upper corner, e.g. 5,6,7");
  zero_flag->excludes(a_opt)->excludes(b_opt);

  auto* classify_cmd = app.add_subcommand("classify", "Zero-dimensionality, type and Gorenstein test");
  classify_cmd->add_option("input", io.input, "generator document, '-' for stdin");

  verify::Options vopt;
  std::string suite = "roundtrip";
  auto* verify_cmd = app.add_subcommand("verify", "Run a seeded property suite");
  verify_cmd->add_option("--suite", suite, "roundtrip | duality | type2 | type3 | oracle")
      ->check(CLI::IsMember({"roundtrip", "duality", "type2", "type3", "oracle"}));
  verify_cmd->add_option("--seed", vopt.seed, "random seed");
  verify_cmd->add_option("--trials", vopt.trials, "number of trials");
  verify_cmd->add_option("--dmax", vopt.max_dimension, "largest dimension")->check(CLI::Range(1, 12));
  verify_cmd->add_option("--kmax", vopt.max_points, "largest antichain size")->check(CLI::Range(1, 64));

  unsigned bell_k = 0;
  auto* bell_cmd = app.add_subcommand("bell", "Ordered Bell (Fubini) number a(k)");
  bell_cmd->add_option("k", bell_k, "index")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (socle_cmd->parsed()) {
      const auto gens = to_antichain(io.read());
      io.write(serialize(socle_down(UpSet(gens)), "socle"));
    } else if (recon_cmd->parsed()) {
      const auto socle = to_antichain(io.read());
      std::optional<LatticePoint> lower;
      std::optional<LatticePoint> upper;
      if (!lower_text.empty()) lower = parse_vector(lower_text);
      if (!upper_text.empty()) upper = parse_vector(upper_text);
      const auto gens = zero_dim ? zero_dim_ideal_from_socle(socle)
                                 : socle_to_generators(socle, lower, upper);
      io.write(serialize(gens, "generators"));
    } else if (classify_cmd->parsed()) {
      io.write(classify_report(to_antichain(io.read())));
    } else if (verify_cmd->parsed()) {
      vopt.suite = *verify::parse_suite(suite);
      const auto report = verify::run(vopt);
      for (const auto& line : report.lines) out << line << "\n";
      out << (report.passed() ? "PASS" : "FAIL") << "\n";
      return report.passed() ? kExitOk : kExitVerifyFailed;
    } else if (bell_cmd->parsed()) {
      out << ordered_bell(bell_k) << "\n";
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}

}  // namespace monoideal::cli
