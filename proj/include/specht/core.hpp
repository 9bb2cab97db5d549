#pragma once
// Shared arithmetic helpers and error types for the specht library.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace specht {

using Int = mpz_class;

struct SpechtError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input (partitions, tableaux, vectors, morphism files).
struct ParseError : SpechtError {
  using SpechtError::SpechtError;
};

// An enumeration would exceed its configured size guard.
struct GuardError : SpechtError {
  using SpechtError::SpechtError;
};

// An element that was expected to lie in the Specht lattice does not.
struct NotInLatticeError : SpechtError {
  using SpechtError::SpechtError;
};

inline Int factorial(long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline Int binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
  }
  // binomial(n, k) = (-1)^k binomial(k - n - 1, k) for n < 0.
  Int r = binomial(k - n - 1, k);
  return (k % 2 == 0) ? r : -r;
}

// Product x (x+1) ... (x+j-1); empty product for j <= 0.
inline Int rising_factorial(long x, long j) {
  Int r = 1;
  for (long l = 0; l < j; ++l) r *= Int(x + l);
  return r;
}

// Exact division; throws if b does not divide a.
inline Int checked_div(const Int& a, const Int& b) {
  if (b == 0) throw SpechtError("checked_div: division by zero");
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw SpechtError("checked_div: not divisible");
  return q;
}

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Prime factorization by trial division; fine for the small orders used here.
inline std::map<long, int> factorize(Int n) {
  if (n < 0) n = -n;
  std::map<long, int> out;
  Int d = 2;
  while (d * d <= n) {
    while (n % d == 0) {
      ++out[d.get_si()];
      n /= d;
    }
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) ++out[n.get_si()];
  return out;
}

// Largest i with p^i <= k (the integer logarithm), 0 if k < p.
inline int ilog(long p, long k) {
  int i = 0;
  long pw = p;
  while (pw <= k) {
    ++i;
    if (pw > k / p) break;
    pw *= p;
  }
  return i;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

inline long parse_long(const std::string& s) {
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw ParseError("trailing characters in number: " + s);
    return v;
  } catch (std::invalid_argument&) {
    throw ParseError("not a number: '" + s + "'");
  } catch (std::out_of_range&) {
    throw ParseError("number out of range: '" + s + "'");
  }
}

inline Int parse_int(const std::string& s) {
  if (s.empty()) throw ParseError("empty number");
  try {
    return Int(s);
  } catch (std::invalid_argument&) {
    throw ParseError("not an integer: '" + s + "'");
  }
}

// Least nonnegative residue.
inline Int mod_reduce(const Int& a, const Int& m) {
  if (m == 0) return a;
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace specht
