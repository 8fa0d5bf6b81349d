#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_int/serialize.hpp>

namespace nsurf {

// All cone/lattice arithmetic is exact. Coordinates of vertex and
// fundamental surfaces grow roughly like Fibonacci numbers in layered
// triangulations, so fixed-width integers are not an option.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;

enum class ErrorCode {
  MalformedTable,
  InvolutionViolation,
  SelfGluedFaceIdentity,
  EdgeNotOnBoundary,
  AdjacentTrianglesNotDistinct,
  LengthMismatch,
  QuadIncompatible,
  NotAdmissible,
  NotOneVertexTorus,
  DisconnectedCurve,
  BoundaryMismatch,
  NotMeridional,
  ResourceBudgetExceeded,
  DecompositionBudgetExceeded,
  UsageError,
  InternalError,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::MalformedTable: return "MalformedTable";
    case ErrorCode::InvolutionViolation: return "InvolutionViolation";
    case ErrorCode::SelfGluedFaceIdentity: return "SelfGluedFaceIdentity";
    case ErrorCode::EdgeNotOnBoundary: return "EdgeNotOnBoundary";
    case ErrorCode::AdjacentTrianglesNotDistinct: return "AdjacentTrianglesNotDistinct";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::QuadIncompatible: return "QuadIncompatible";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotOneVertexTorus: return "NotOneVertexTorus";
    case ErrorCode::DisconnectedCurve: return "DisconnectedCurve";
    case ErrorCode::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorCode::NotMeridional: return "NotMeridional";
    case ErrorCode::ResourceBudgetExceeded: return "ResourceBudgetExceeded";
    case ErrorCode::DecompositionBudgetExceeded: return "DecompositionBudgetExceeded";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

// Work-unit budget shared by the enumeration and decomposition routines.
// A default-constructed budget is effectively unlimited.
struct Budget {
  std::uint64_t work_limit = UINT64_MAX;
  mutable std::uint64_t work_used = 0;

  void charge(std::uint64_t units = 1) const {
    work_used += units;
    if (work_used > work_limit) fail(ErrorCode::ResourceBudgetExceeded, "work limit exhausted");
  }
  bool unlimited() const { return work_limit == UINT64_MAX; }
};

inline Int vec_l1(const IntVec& v) {
  Int s = 0;
  for (const auto& x : v) s += x;
  return s;
}

inline IntVec vec_add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline bool vec_le(const IntVec& a, const IntVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool vec_is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace nsurf
