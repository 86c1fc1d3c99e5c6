#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lpm/corpus.hpp"
#include "lpm/dk/loader.hpp"
#include "lpm/dk/quote.hpp"
#include "lpm/embed/translate.hpp"
#include "lpm/kernel/error.hpp"
#include "lpm/kernel/reduce.hpp"
#include "lpm/llproof/certificate.hpp"
#include "lpm/llproof/format.hpp"
#include "lpm/parallel/batch.hpp"
#include "lpm/tff/check.hpp"
#include "lpm/tff/format.hpp"

namespace lpm::cli {

namespace fs = std::filesystem;

std::string Diagnostic::render() const {
  std::string out = file;
  if (line > 0) out += ":" + std::to_string(line) + ":" + std::to_string(column);
  out += ": " + kind;
  if (!node.empty()) out += " at " + node;
  return out + ": " + message;
}

std::string Outcome::json(const std::string& command) const {
  nlohmann::json j;
  j["command"] = command;
  j["exit_code"] = code;
  j["status"] = code == kOk ? "ok" : "error";
  j["diagnostics"] = nlohmann::json::array();
  for (const Diagnostic& d : diagnostics) {
    j["diagnostics"].push_back(
        {{"file", d.file}, {"line", d.line}, {"column", d.column}, {"kind", d.kind}, {"message", d.message}, {"node", d.node}});
  }
  j["written"] = written;
  if (verdict) j["verdict"] = *verdict;
  return j.dump();
}

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path.string());
}

int load_code(kernel::ErrorKind k) { return k == kernel::ErrorKind::FuelExhausted ? kFuel : kTypeError; }

Diagnostic load_diagnostic(const std::string& file, const dk::LoadError& e) {
  return {file, e.span().begin.line, e.span().begin.column, std::string(kernel::to_string(e.kind())), e.detail(), {}};
}

Diagnostic syntax_diagnostic(const std::string& file, const dk::SyntaxError& e) {
  std::string msg = e.what();
  // Drop the "line:col: " prefix, which is reported separately.
  if (auto p = msg.find(": "); p != std::string::npos) msg = msg.substr(p + 2);
  return {file, e.where().line, e.where().column, "syntax-error", msg, {}};
}

Diagnostic format_diagnostic(const std::string& file, const tff::FormatError& e) {
  std::string msg = e.what();
  if (auto p = msg.find(": "); p != std::string::npos) msg = msg.substr(p + 2);
  return {file, e.line(), e.column(), "syntax-error", msg, {}};
}

// Loads parsed files in order into one signature, stopping at the first
// error. `labels` are used in diagnostics.
void load_in_order(const std::vector<std::string>& labels, const std::vector<std::string>& modules,
                   const std::vector<std::string>& texts, const RunConfig& cfg, Outcome& out) {
  std::vector<parallel::Parsed> parsed = parallel::parse_all(texts);
  kernel::Signature sig;
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    if (const auto* err = std::get_if<dk::SyntaxError>(&parsed[i])) {
      out.diagnostics.push_back(syntax_diagnostic(labels[i], *err));
      out.code = kSyntaxError;
      return;
    }
    const auto& entries = std::get<std::vector<dk::Entry>>(parsed[i]);
    try {
      dk::load_entries(sig, modules[i], entries, cfg.limits);
    } catch (const dk::LoadError& e) {
      out.diagnostics.push_back(load_diagnostic(labels[i], e));
      out.code = load_code(e.kind());
      return;
    }
    out.notes.push_back(labels[i] + ": " + std::to_string(entries.size()) + " entries checked");
  }
}

}  // namespace

Outcome check_files(const std::vector<std::string>& paths, const RunConfig& cfg) {
  Outcome out;
  std::vector<std::string> texts, modules;
  for (const std::string& p : paths) {
    try {
      texts.push_back(read_file(p));
    } catch (const IoError& e) {
      out.diagnostics.push_back({p, 0, 0, "io-error", e.what(), {}});
      out.code = kIo;
      return out;
    }
    modules.push_back(fs::path(p).stem().string());
  }
  load_in_order(paths, modules, texts, cfg, out);
  return out;
}

namespace {

llproof::CertificateOptions options_of(const RunConfig& cfg) {
  llproof::CertificateOptions o;
  o.mode = cfg.mode;
  o.limits = cfg.limits;
  o.eliminate_pred_fun = !cfg.native_pred_fun;
  return o;
}

void reject(Outcome& out, const std::string& file, const llproof::Verdict& v) {
  out.verdict = "rejected";
  out.diagnostics.push_back({file, 0, 0, v.kind, v.message, v.path + (v.rule.empty() ? "" : " (" + v.rule + ")")});
  out.code = v.kind == "fuel-exhausted" ? kFuel : kTypeError;
}

}  // namespace

Outcome translate(const Source& theory, const std::optional<Source>& proof, const RunConfig& cfg) {
  Outcome out;
  tff::TheoryFile tf;
  try {
    tf = tff::read_tffx(theory.text);
  } catch (const tff::FormatError& e) {
    out.diagnostics.push_back(format_diagnostic(theory.label, e));
    out.code = kSyntaxError;
    return out;
  }
  const tff::Theory& thy = tf.theory;
  try {
    tff::wf_theory(thy);
  } catch (const tff::TffError& e) {
    int line = e.item() >= 0 && static_cast<std::size_t>(e.item()) < tf.item_lines.size() ? tf.item_lines[e.item()] : 0;
    out.diagnostics.push_back({theory.label, line, line ? 1 : 0, std::string(tff::to_string(e.kind())), e.detail(), {}});
    out.code = kTypeError;
    return out;
  }
  std::optional<llproof::ProofFile> pf;
  if (proof) {
    try {
      pf = llproof::read_llpx(proof->text, thy);
    } catch (const tff::FormatError& e) {
      out.diagnostics.push_back(format_diagnostic(proof->label, e));
      out.code = kSyntaxError;
      return out;
    }
    try {
      tff::wf_formula(thy, {}, pf->goal);
    } catch (const tff::TffError& e) {
      out.diagnostics.push_back({proof->label, 0, 0, std::string(tff::to_string(e.kind())), e.detail(), "goal"});
      out.code = kTypeError;
      return out;
    }
  }

  const llproof::CertificateOptions options = options_of(cfg);
  std::vector<llproof::DkFile> bundle;
  try {
    std::optional<std::pair<tff::Formula, llproof::Node>> p;
    if (pf) p = std::make_pair(pf->goal, pf->root);
    bundle = llproof::emit_bundle(thy, options, p);
  } catch (const embed::TranslateError& e) {
    out.diagnostics.push_back({theory.label, 0, 0, "translation-error", e.what(), {}});
    out.code = kTypeError;
    return out;
  } catch (const llproof::ProofError&) {
    reject(out, proof->label, llproof::check_certificate(thy, pf->goal, pf->root, options));
    return out;
  }

  std::vector<std::string> labels, modules, texts;
  try {
    fs::create_directories(cfg.out_dir);
    for (const llproof::DkFile& f : bundle) {
      fs::path path = fs::path(cfg.out_dir) / (f.module + ".dk");
      write_file(path, f.text());
      out.written.push_back(path.string());
      labels.push_back(path.string());
      modules.push_back(f.module);
      texts.push_back(read_file(path.string()));
    }
  } catch (const std::exception& e) {
    out.diagnostics.push_back({cfg.out_dir, 0, 0, "io-error", e.what(), {}});
    out.code = kIo;
    return out;
  }

  // Re-check exactly what was written.
  load_in_order(labels, modules, texts, cfg, out);
  if (pf) {
    if (out.code == kOk) {
      out.verdict = "accepted";
    } else {
      // Name the failing proof node as well.
      llproof::Verdict v = llproof::check_certificate(thy, pf->goal, pf->root, options);
      if (!v.accepted) reject(out, proof->label, v);
    }
  }
  return out;
}

namespace {

struct Example {
  std::string name;
  std::string theory;
  std::string proof;
};

const std::vector<Example>& examples() {
  static const std::vector<Example> all = {
      {"bool-commute", "booleans.tffx", "bool_commute.llpx"},
      {"set-diff", "bset.tffx", "set_diff.llpx"},
      {"pair-fst-snd", "pair.tffx", "pair_fst_snd.llpx"},
      {"pred-decomp", "rel.tffx", "pred_decomp.llpx"},
  };
  return all;
}

Source bundled(const std::string& name) {
  auto text = corpus::file(name);
  if (!text) throw std::logic_error("missing bundled file " + name);
  return {name, std::string(*text)};
}

// The goal of a bundled proof after full normalization, in dk syntax.
std::string normalized_goal(const Source& theory, const Source& proof, const RunConfig& cfg) {
  tff::Theory thy = tff::read_tffx(theory.text).theory;
  llproof::ProofFile pf = llproof::read_llpx(proof.text, thy);
  kernel::Signature sig = llproof::theory_signature(thy, cfg.mode, cfg.limits);
  kernel::Fuel fuel(cfg.limits);
  kernel::Term nf = kernel::normalize(sig, embed::translate_formula(thy, pf.goal), fuel);
  return dk::print_expr(*dk::quote(nf, thy.name));
}

}  // namespace

std::vector<std::string> example_names() {
  std::vector<std::string> out;
  for (const Example& e : examples()) out.push_back(e.name);
  return out;
}

Outcome run_example(const std::string& name, const RunConfig& cfg) {
  for (const Example& e : examples()) {
    if (e.name != name) continue;
    RunConfig c = cfg;
    if (c.out_dir.empty()) c.out_dir = (fs::temp_directory_path() / "lpm-examples" / name).string();
    Source theory = bundled(e.theory);
    Source proof = bundled(e.proof);
    Outcome out = translate(theory, proof, c);
    if (name == "pair-fst-snd" && out.code == kOk) {
      out.notes.push_back("normalized goal: " + normalized_goal(theory, proof, c));
    }
    if (!out.written.empty()) out.notes.push_back("certificate: " + out.written.back());
    return out;
  }
  Outcome out;
  out.diagnostics.push_back({name, 0, 0, "usage", "unknown example", {}});
  out.code = kIo;
  return out;
}

namespace {

std::uint64_t default_fuel() {
  if (const char* env = std::getenv("LPM_FUEL")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kernel::Limits{}.max_steps;
}

int report(const Outcome& out, const std::string& command, bool json, bool verbose) {
  if (json) {
    std::cout << out.json(command) << "\n";
    return out.code;
  }
  if (verbose) {
    for (const std::string& n : out.notes) std::cout << n << "\n";
  } else {
    for (const std::string& n : out.notes) {
      if (n.rfind("certificate:", 0) == 0 || n.rfind("normalized goal:", 0) == 0) std::cout << n << "\n";
    }
  }
  for (const Diagnostic& d : out.diagnostics) std::cerr << d.render() << "\n";
  if (out.verdict) std::cout << *out.verdict << "\n";
  return out.code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proof checking in the lambda-Pi calculus modulo rewriting"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.limits.max_steps = default_fuel();
  std::string mode = "shallow";
  bool json = false;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--mode", mode, "Embedding of the logic")->check(CLI::IsMember({"deep", "shallow"}));
    sub->add_option("--fuel", cfg.limits.max_steps, "Rewrite/beta step budget per operation (env LPM_FUEL)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--conv-depth", cfg.limits.max_conv_depth, "Conversion recursion limit")->check(CLI::PositiveNumber);
    sub->add_flag("-v,--verbose", cfg.verbose, "Print progress");
    sub->add_flag("--json", json, "Machine-readable result on stdout");
  };

  std::vector<std::string> dk_files;
  CLI::App* check = app.add_subcommand("check", "Type check .dk files in order");
  check->add_option("files", dk_files, "Files; each defines the module named by its stem")->required()->check(CLI::ExistingFile);
  common(check);

  std::string theory_path, proof_path;
  CLI::App* tr = app.add_subcommand("translate", "Emit and re-check logic.dk, rules.dk, the theory and cert.dk");
  tr->add_option("theory", theory_path, "Theory (.tffx)")->required()->check(CLI::ExistingFile);
  tr->add_option("proof", proof_path, "Proof (.llpx)")->check(CLI::ExistingFile);
  std::string tr_out = ".";
  tr->add_option("--out", tr_out, "Output directory")->capture_default_str();
  tr->add_flag("--native-pred-fun", cfg.native_pred_fun, "Use per-arity lemmas instead of eliminating Pred/Fun");
  common(tr);

  std::string example;
  CLI::App* ex = app.add_subcommand("examples", "Run a bundled example end to end");
  ex->add_option("name", example, "Example")->required()->check(CLI::IsMember(example_names()));
  ex->add_option("--out", cfg.out_dir, "Output directory (default: a temporary directory)");
  ex->add_flag("--native-pred-fun", cfg.native_pred_fun, "Use per-arity lemmas instead of eliminating Pred/Fun");
  common(ex);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kIo;
  }
  cfg.mode = mode == "deep" ? embed::Mode::Deep : embed::Mode::Shallow;

  if (check->parsed()) return report(check_files(dk_files, cfg), "check", json, cfg.verbose);
  if (tr->parsed()) {
    Outcome out;
    try {
      Source theory{theory_path, read_file(theory_path)};
      std::optional<Source> proof;
      if (!proof_path.empty()) proof = Source{proof_path, read_file(proof_path)};
      RunConfig c = cfg;
      c.out_dir = tr_out;
      out = translate(theory, proof, c);
    } catch (const IoError& e) {
      out.diagnostics.push_back({theory_path, 0, 0, "io-error", e.what(), {}});
      out.code = kIo;
    }
    return report(out, "translate", json, cfg.verbose);
  }
  return report(run_example(example, cfg), "examples", json, cfg.verbose);
}

}  // namespace lpm::cli
