#include "glmn.h"

#include <memory>
#include <new>
#include <string>

#include "glmn/commands.hpp"

struct glmn_session {
  glmn::Context ctx;
  glmn::RunOptions opts;
  std::string last_error;
};

struct glmn_report {
  std::string json;
  std::string text;
  bool passed = false;
};

namespace {

glmn_status status_for(glmn::ErrorCode code) {
  using glmn::ErrorCode;
  switch (code) {
    case ErrorCode::KernelPole:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::CardinalityMismatch:
    case ErrorCode::ColoringMismatch:
    case ErrorCode::EmptyColor:
    case ErrorCode::DuplicateNode:
    case ErrorCode::InvalidArgument:
    case ErrorCode::FieldMismatch:
    case ErrorCode::ConfigError:
      return GLMN_CONFIG_ERROR;
    default:
      // PoleAtZero, SingularJacobian and friends mean the computation itself broke down
      return GLMN_INTERNAL_ERROR;
  }
}

}  // namespace

extern "C" {

const char* glmn_version(void) { return "1.0.0"; }

size_t glmn_command_count(void) { return glmn::command_names().size(); }

const char* glmn_command_name(size_t index) {
  const auto& names = glmn::command_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

glmn_session* glmn_session_create(void) { return new (std::nothrow) glmn_session(); }

void glmn_session_destroy(glmn_session* session) { delete session; }

glmn_status glmn_session_set_threads(glmn_session* session, int n) {
  if (!session) return GLMN_CONFIG_ERROR;
  if (n < 1 || n > 1024) {
    session->last_error = "thread count must lie in [1, 1024]";
    return GLMN_CONFIG_ERROR;
  }
  session->ctx.threads = n;
  return GLMN_OK;
}

glmn_status glmn_session_set_seed(glmn_session* session, uint64_t seed) {
  if (!session) return GLMN_CONFIG_ERROR;
  session->opts.seed = seed;
  return GLMN_OK;
}

glmn_status glmn_run(glmn_session* session, const char* command, const char* config_json, glmn_report** out) {
  if (out) *out = nullptr;
  if (!session) return GLMN_CONFIG_ERROR;
  session->last_error.clear();
  if (!command || !config_json || !out) {
    session->last_error = "null argument";
    return GLMN_CONFIG_ERROR;
  }
  try {
    const auto doc = glmn::config::parse_document(config_json);
    glmn::Outcome res = glmn::run_command(session->ctx, command, doc, session->opts);
    auto rep = std::make_unique<glmn_report>();
    rep->json = res.report.dump(2);
    rep->text = glmn::render_text(res.report);
    rep->passed = res.pass;
    *out = rep.release();
    return res.pass ? GLMN_OK : GLMN_CHECK_FAILED;
  } catch (const glmn::Error& e) {
    session->last_error = e.what();
    return status_for(e.code());
  } catch (const std::exception& e) {
    session->last_error = std::string("internal error: ") + e.what();
    return GLMN_INTERNAL_ERROR;
  } catch (...) {
    session->last_error = "internal error";
    return GLMN_INTERNAL_ERROR;
  }
}

const char* glmn_session_last_error(const glmn_session* session) {
  return session ? session->last_error.c_str() : "null session";
}

glmn_status glmn_session_memo_stats(const glmn_session* session, uint64_t* hits, uint64_t* misses,
                                    uint64_t* entries) {
  if (!session) return GLMN_CONFIG_ERROR;
  const glmn::MemoStats s = session->ctx.memo_stats();
  if (hits) *hits = s.hits;
  if (misses) *misses = s.misses;
  if (entries) *entries = s.entries;
  return GLMN_OK;
}

void glmn_session_clear_memo(glmn_session* session) {
  if (session) session->ctx.clear_memo();
}

const char* glmn_report_json(const glmn_report* report) { return report ? report->json.c_str() : ""; }

const char* glmn_report_text(const glmn_report* report) { return report ? report->text.c_str() : ""; }

int glmn_report_passed(const glmn_report* report) { return report && report->passed ? 1 : 0; }

void glmn_report_destroy(glmn_report* report) { delete report; }

}  // extern "C"
