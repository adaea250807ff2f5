#include "glmn/kernels.hpp"

namespace glmn {

void Grading::validate() const {
  if (m < 0 || n < 0) fail(ErrorCode::InvalidArgument, "grading with negative m or n: " + str());
  if (m + n < 2) fail(ErrorCode::InvalidArgument, "grading needs m+n >= 2: " + str());
  if (c.is_zero()) fail(ErrorCode::InvalidArgument, "coupling c must be nonzero");
}

int Grading::parity(int i) const {
  detail::check_color(*this, i, 1, m + n, "parity");
  return i > m ? 1 : 0;
}

Rational Grading::graded_c(int i) const { return parity(i) ? -c : c; }

std::string Grading::str() const {
  return "gl(" + std::to_string(m) + "|" + std::to_string(n) + "), c=" + c.str();
}

namespace detail {

void kernel_pole(const char* kernel, const std::string& u, const std::string& v) {
  fail(ErrorCode::KernelPole, std::string(kernel) + "(u, v) at u = v: u = " + u + ", v = " + v);
}

void check_color(const Grading& gr, int i, int lo, int hi, const char* what) {
  if (i < lo || i > hi)
    fail(ErrorCode::IndexOutOfRange, std::string(what) + ": index " + std::to_string(i) + " outside [" +
                                         std::to_string(lo) + ", " + std::to_string(hi) + "] for " + gr.str());
}

}  // namespace detail
}  // namespace glmn
