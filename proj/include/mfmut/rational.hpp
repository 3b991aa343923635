#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mfmut {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using IntMatrix = std::vector<IntVec>;
using RatMatrix = std::vector<RatVec>;

/// "p/q" encoding, always with an explicit denominator ("3/1").
std::string to_string(const Rat& r);
Rat parse_rat(std::string_view text);

bool is_integral(const Rat& r);
bool is_integral(const RatVec& v);

/// Narrowing with overflow check; throws Error(Overflow).
std::int64_t to_int64(const Int& z);
std::int64_t to_int64(const Rat& r);

RatVec to_rat(const std::vector<std::int64_t>& v);
RatVec to_rat(const IntVec& v);
IntVec to_int(const RatVec& v);  // throws NonIntegral

Rat dot(const RatVec& a, const RatVec& b);

}  // namespace mfmut
