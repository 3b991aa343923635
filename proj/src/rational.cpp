#include "mfmut/rational.hpp"

#include <limits>

#include "mfmut/error.hpp"

namespace mfmut {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParameters: return "invalid-parameters";
    case ErrorCode::NotCoherent: return "not-coherent";
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::NonIntegral: return "non-integral";
    case ErrorCode::LowerDimensional: return "lower-dimensional";
    case ErrorCode::NotAVertex: return "not-a-vertex";
    case ErrorCode::NotBinomial: return "not-binomial";
    case ErrorCode::ScaleExceeded: return "scale-exceeded";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::VerificationFailed: return "verification-failed";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

std::string to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  if (s.empty()) fail(ErrorCode::Parse, "empty rational");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    fail(ErrorCode::Parse, "malformed rational '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Int d(den);
  if (d == 0) fail(ErrorCode::Parse, "zero denominator in '" + s + "'");
  Rat r{Int(num), d};
  r.canonicalize();
  return r;
}

bool is_integral(const Rat& r) { return r.get_den() == 1; }

bool is_integral(const RatVec& v) {
  for (const auto& x : v)
    if (!is_integral(x)) return false;
  return true;
}

std::int64_t to_int64(const Int& z) {
  if (!z.fits_slong_p()) fail(ErrorCode::Overflow, "integer exceeds 64 bits: " + z.get_str());
  return static_cast<std::int64_t>(z.get_si());
}

std::int64_t to_int64(const Rat& r) {
  if (!is_integral(r)) fail(ErrorCode::NonIntegral, "expected an integer, got " + to_string(r));
  return to_int64(r.get_num());
}

RatVec to_rat(const std::vector<std::int64_t>& v) {
  RatVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

RatVec to_rat(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

IntVec to_int(const RatVec& v) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!is_integral(x)) fail(ErrorCode::NonIntegral, "non-integral coordinate " + to_string(x));
    out.push_back(x.get_num());
  }
  return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "dot: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

}  // namespace mfmut
