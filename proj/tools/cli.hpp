#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpm/embed/prelude.hpp"
#include "lpm/kernel/signature.hpp"

namespace lpm::cli {

enum Exit : int { kOk = 0, kTypeError = 1, kSyntaxError = 2, kFuel = 3, kIo = 4 };

struct RunConfig {
  embed::Mode mode = embed::Mode::Shallow;
  kernel::Limits limits;
  // Compile Pred/Fun through the R_Pred_n / R_Fun_n lemmas instead of
  // eliminating them.
  bool native_pred_fun = false;
  std::string out_dir;
  bool verbose = false;
};

struct Diagnostic {
  std::string file;
  int line = 0;
  int column = 0;
  std::string kind;
  std::string message;
  // Proof node, for rejected certificates.
  std::string node;

  std::string render() const;
};

struct Outcome {
  int code = kOk;
  std::vector<Diagnostic> diagnostics;
  std::vector<std::string> written;
  // Human-readable progress lines.
  std::vector<std::string> notes;
  std::optional<std::string> verdict;

  std::string json(const std::string& command) const;
};

Outcome check_files(const std::vector<std::string>& paths, const RunConfig& cfg);

struct Source {
  std::string label;
  std::string text;
};
Outcome translate(const Source& theory, const std::optional<Source>& proof, const RunConfig& cfg);

// bool-commute, set-diff, pair-fst-snd or pred-decomp.
std::vector<std::string> example_names();
Outcome run_example(const std::string& name, const RunConfig& cfg);

// Entry point shared by the binary and the tests.
int main(int argc, char** argv);

}  // namespace lpm::cli
