#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "glmn.h"

namespace {

const std::map<std::string, std::string> kAbout = {
    {"hc-eval", "highest coefficient Z(s|t) by recursion"},
    {"scalar-product", "scalar product S(s|t) as a partition sum"},
    {"prop-zero", "sum that must vanish identically"},
    {"norm-check", "normalized on-shell norm against det G"},
    {"gaudin-det", "Gaudin matrix and its determinant"},
    {"korepin-check", "Korepin criteria for det G"},
    {"residue-check", "residue of S at s = t"},
    {"solve-bethe", "Newton solve of the Bethe equations"},
    {"verify-all", "bounded run of all acceptance checks"},
};

struct SessionDeleter {
  void operator()(glmn_session* s) const { glmn_session_destroy(s); }
};
struct ReportDeleter {
  void operator()(glmn_report* r) const { glmn_report_destroy(r); }
};

std::optional<std::string> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact scalar products, norms and Gaudin determinants for gl(m|n) Bethe vectors"};
  app.set_version_flag("--version", std::string(glmn_version()));
  app.require_subcommand(1, 1);

  std::string config_path;
  bool as_json = false;
  int threads = 1;
  std::optional<std::uint64_t> seed;

  for (std::size_t i = 0; i < glmn_command_count(); ++i) {
    const std::string name = glmn_command_name(i);
    const auto about = kAbout.find(name);
    CLI::App* sub = app.add_subcommand(name, about == kAbout.end() ? std::string() : about->second);
    auto* cfg = sub->add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
    if (name != "verify-all") cfg->required();
    sub->add_flag("--json", as_json, "emit one JSON document instead of text");
    sub->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 1024));
    sub->add_option("--seed", seed, "seed for randomized runs");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return GLMN_CONFIG_ERROR;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  std::string text = "{}";
  if (!config_path.empty()) {
    auto content = slurp(config_path);
    if (!content) {
      std::cerr << "error: cannot read " << config_path << '\n';
      return GLMN_CONFIG_ERROR;
    }
    text = std::move(*content);
  }

  std::unique_ptr<glmn_session, SessionDeleter> session(glmn_session_create());
  if (!session) {
    std::cerr << "error: out of memory\n";
    return GLMN_INTERNAL_ERROR;
  }
  if (glmn_session_set_threads(session.get(), threads) != GLMN_OK) {
    std::cerr << "error: " << glmn_session_last_error(session.get()) << '\n';
    return GLMN_CONFIG_ERROR;
  }
  if (seed) glmn_session_set_seed(session.get(), *seed);

  glmn_report* raw = nullptr;
  const glmn_status st = glmn_run(session.get(), command.c_str(), text.c_str(), &raw);
  std::unique_ptr<glmn_report, ReportDeleter> report(raw);
  if (!report) {
    std::cerr << "error: " << glmn_session_last_error(session.get()) << '\n';
    return st;
  }
  std::cout << (as_json ? glmn_report_json(report.get()) : glmn_report_text(report.get()));
  if (as_json) std::cout << '\n';
  return st;
}
