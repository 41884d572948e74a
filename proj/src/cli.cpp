#include "qcycle/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "qcycle/enumerate.hpp"
#include "qcycle/foata.hpp"
#include "qcycle/mesh.hpp"

namespace qcycle {

namespace {

// Thrown for problems the user can fix by changing the command line or input.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BFileEntry {
  long index = 0;
  BigInt value;
};

bool is_integer(const std::string& token, bool allow_sign) {
  std::size_t start = (allow_sign && !token.empty() && token[0] == '-') ? 1 : 0;
  if (start == token.size()) return false;
  return std::all_of(token.begin() + static_cast<long>(start), token.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

std::vector<BFileEntry> read_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read b-file '" + path + "'");
  std::vector<BFileEntry> entries;
  std::string line;
  for (int line_number = 1; std::getline(in, line); ++line_number) {
    std::istringstream fields(line);
    std::string index;
    std::string value;
    std::string extra;
    if (!(fields >> index) || index[0] == '#') continue;
    if (!(fields >> value) || (fields >> extra) || !is_integer(index, false) ||
        !is_integer(value, true) || index.size() > 9) {
      throw UsageError(path + ":" + std::to_string(line_number) + ": malformed b-file line '" +
                       line + "'");
    }
    entries.push_back({std::stol(index), BigInt(value)});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const BFileEntry& a, const BFileEntry& b) { return a.index < b.index; });
  return entries;
}

CoefficientSeries named_series(const std::string& which, int terms, int bound) {
  if (terms < 0) throw UsageError("--terms must be non-negative");
  if (which == "a2") return a2_series(terms);
  if (which == "f") return f_series(terms);
  if (which == "avoiders-p") return avoider_series(named_pattern("p"), terms, bound);
  throw UsageError("unknown series '" + which + "'");
}

void render(const std::string& title, const VerificationReport& report, std::ostream& out) {
  out << title << '\n';
  for (const CheckResult& check : report.checks) {
    out << "  " << (check.passed ? "[ok]   " : "[FAIL] ") << check.name << " (" << check.cases
        << " cases)\n";
    if (check.first_counterexample) {
      out << "         first counterexample: " << *check.first_counterexample << '\n';
    }
  }
  for (const Theorem1Counterexample& c : report.theorem1_counterexamples) {
    out << "  counterexample: pi=" << to_string(c.pi) << " q=" << c.q
        << " sigma=" << to_string(c.sigma) << " adjacent q-cycles=" << c.adjacent_cycles
        << " occ(r_q)=" << c.r_occurrences << " occ(s_q)=" << c.s_occurrences << '\n';
  }
  out << "permutations scanned: " << report.permutations_scanned << '\n';
  out << (report.passed() ? "PASS" : "FAIL") << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Foata transformation, adjacent q-cycles and mesh pattern toolkit", "qcycle"};
  app.require_subcommand(1);
  int bound = kDefaultBruteForceBound;
  app.add_option("--bound", bound, "Largest n enumerated by brute force")
      ->capture_default_str();

  auto* foata_cmd = app.add_subcommand("foata", "Apply Foata's fundamental transformation");
  std::string perm_text;
  bool inverse = false;
  foata_cmd->add_option("perm", perm_text, "Permutation (digits or comma-separated)")->required();
  foata_cmd->add_flag("--inverse", inverse, "Apply the inverse transformation");

  auto* mesh_cmd = app.add_subcommand("mesh", "Mesh pattern queries");
  mesh_cmd->require_subcommand(1);
  std::string pattern_text;
  std::string host_text;
  auto* count_cmd = mesh_cmd->add_subcommand("count", "Number of occurrences in a permutation");
  auto* occ_cmd = mesh_cmd->add_subcommand("occurrences", "List occurrence positions");
  for (auto* cmd : {count_cmd, occ_cmd}) {
    cmd->add_option("--pattern", pattern_text, "Pattern in the mesh DSL")->required();
    cmd->add_option("perm", host_text, "Host permutation")->required();
  }
  auto* avoiders_cmd = mesh_cmd->add_subcommand("avoiders", "Count permutations avoiding a pattern");
  int avoid_n = 0;
  bool list = false;
  avoiders_cmd->add_option("--pattern", pattern_text, "Pattern in the mesh DSL")->required();
  avoiders_cmd->add_option("--n", avoid_n, "Permutation length")->required();
  avoiders_cmd->add_flag("--list", list, "Print the avoiders instead of their number");

  auto* series_cmd = app.add_subcommand("series", "Print series coefficients as TSV");
  std::string which_series;
  int terms = 0;
  series_cmd->add_option("which", which_series, "a2 | f | avoiders-p")
      ->required()
      ->check(CLI::IsMember({"a2", "f", "avoiders-p"}));
  series_cmd->add_option("--terms", terms, "Highest power of x")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run an exhaustive verification");
  std::string target;
  int max_n = 0;
  int series_terms = 100;
  verify_cmd->add_option("target", target, "theorem1 | conjecture")
      ->required()
      ->check(CLI::IsMember({"theorem1", "conjecture"}));
  verify_cmd->add_option("--max-n", max_n, "Largest permutation length")->required();
  verify_cmd->add_option("--series-terms", series_terms, "Series truncation order")
      ->capture_default_str();

  auto* oeis_cmd = app.add_subcommand("oeis-diff", "Compare a local series with an OEIS b-file");
  std::string bfile_path;
  std::string bfile_series = "a2";
  std::optional<int> bfile_terms;
  oeis_cmd->add_option("bfile", bfile_path, "b-file path")->required();
  oeis_cmd->add_option("--series", bfile_series, "a2 | f | avoiders-p")
      ->capture_default_str()
      ->check(CLI::IsMember({"a2", "f", "avoiders-p"}));
  oeis_cmd->add_option("--terms", bfile_terms, "Highest local index (default: last b-file index)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*foata_cmd) {
      const Permutation perm = parse_permutation(perm_text);
      out << to_string(inverse ? foata_inverse(perm) : foata_forward(perm)) << '\n';
      return kExitOk;
    }

    if (*count_cmd || *occ_cmd) {
      const MeshPattern pattern = parse_pattern(pattern_text);
      const Permutation host = parse_permutation(host_text);
      if (*count_cmd) {
        out << count_occurrences(pattern, host) << '\n';
      } else {
        for (const Occurrence& occ : occurrences(pattern, host)) {
          for (std::size_t i = 0; i < occ.positions.size(); ++i) {
            out << (i > 0 ? " " : "") << occ.positions[i];
          }
          out << '\n';
        }
      }
      return kExitOk;
    }

    if (*avoiders_cmd) {
      const MeshPattern pattern = parse_pattern(pattern_text);
      const auto found = avoiders(pattern, avoid_n, bound);
      if (list) {
        for (const Permutation& perm : found) out << to_string(perm) << '\n';
      } else {
        out << found.size() << '\n';
      }
      return kExitOk;
    }

    if (*series_cmd) {
      out << to_tsv(named_series(which_series, terms, bound));
      return kExitOk;
    }

    if (*verify_cmd) {
      if (max_n < 0) throw UsageError("--max-n must be non-negative");
      if (series_terms < 0) throw UsageError("--series-terms must be non-negative");
      if (target == "theorem1") {
        const VerificationReport report = verify_theorem1(max_n, bound);
        render("theorem1: adjacent q-cycles vs r_q + s_q, n <= " + std::to_string(max_n), report,
               out);
        return report.passed() ? kExitOk : kExitMismatch;
      }
      const VerificationReport report = verify_conjecture(max_n, series_terms, bound);
      render("conjecture: avoiders of p vs F(x), n <= " + std::to_string(max_n) +
                 ", series through x^" + std::to_string(series_terms),
             report, out);
      return report.passed() ? kExitOk : kExitMismatch;
    }

    if (*oeis_cmd) {
      const auto entries = read_bfile(bfile_path);
      long last_index = entries.empty() ? -1 : entries.back().index;
      const int local_terms = bfile_terms.value_or(static_cast<int>(std::max(last_index, 0L)));
      const CoefficientSeries local = named_series(bfile_series, local_terms, bound);

      std::optional<long> lo;
      long hi = 0;
      for (const BFileEntry& entry : entries) {
        if (entry.index > local.order()) continue;
        if (!lo) lo = entry.index;
        hi = entry.index;
        const BigInt& mine = local[static_cast<int>(entry.index)];
        if (mine != entry.value) {
          out << "MISMATCH at index " << entry.index << ": b-file " << entry.value.str()
              << ", local " << mine.str() << '\n';
          return kExitMismatch;
        }
      }
      if (!lo) throw UsageError("no overlapping range");
      out << "MATCH over [" << *lo << "," << hi << "]\n";
      return kExitOk;
    }
  } catch (const std::exception& e) {
    // Library errors (bad permutation text, unknown pattern, bound exceeded)
    // are all caused by the command line or its input files.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qcycle
