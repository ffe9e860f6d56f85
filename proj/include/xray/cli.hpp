#pragma once
// cli.hpp
// Command layer behind the linecomplexes binary.  run() takes a parsed
// config and writes to caller-supplied streams, so tests can drive every
// command in-process; run_cli() adds argv parsing on top.

#include <cstdint>
#include <iosfwd>
#include <string>

namespace xray {

enum class Command {
  Enumerate,  // sweep everything, print the ledger
  Verify,     // sweep everything, check the closed-form identities
  Classify,   // analyze one complex from a file or inline pairs
  Scrapbook,  // export specimen drawings per class
  Recon,      // randomized reconstruction and kernel properties
  Formulas,   // print the closed-form count table
};

enum class OutputFormat { Json, Csv, Tsv };

struct RunConfig {
  Command command = Command::Enumerate;
  OutputFormat format = OutputFormat::Json;
  int jobs = 1;
  bool fast = false;          // enumerate: skip the algebraic cross-checks
  std::string input_path;     // classify: path to a .cplx file
  std::string inline_lines;   // classify: pairs like "0 1, 1 2, ..."
  std::string output_dir = "scrapbook";
  int per_label = 3;          // scrapbook: specimens per class
  std::uint64_t seed = 0;     // recon
  int trials = 1000;          // recon: samples per property
};

// Exit code: 0 on success, 1 on failed checks or bad input data.
// Ledger output depends only on the mode, never on jobs or timing.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv (argv[0] is the program name) and dispatches to run().
// Exit code: as run(), plus 2 for usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace xray
