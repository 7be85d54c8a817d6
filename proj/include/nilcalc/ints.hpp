#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace nilcalc {

// Exact integer arithmetic everywhere: collected exponents and series
// coefficients grow past machine width.
using Int = boost::multiprecision::cpp_int;

// Generalized binomial C(n, k) for arbitrary integer n and k >= 0.
// Integral for all integer n (C(-n,k) = (-1)^k C(n+k-1,k)).
inline Int binomial(const Int& n, unsigned k) {
  Int num = 1;
  Int den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;  // product of k consecutive integers is divisible by k!
}

// Quotient a/b that must be exact; used where divisibility is a theorem.
inline Int exact_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (q * b != a) throw std::domain_error("exact_div: remainder nonzero");
  return q;
}

inline std::string to_string(const Int& v) { return v.str(); }

// FNV-1a, used for stable input digests in reports.
inline std::uint64_t fnv1a(const void* data, std::size_t len,
                           std::uint64_t h = 1469598103934665603ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t fnv1a(const std::string& s) {
  return fnv1a(s.data(), s.size());
}

}  // namespace nilcalc
