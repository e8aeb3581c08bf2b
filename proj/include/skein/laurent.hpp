#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace skein {

// Integer Laurent polynomial, optionally in Z[t,1/t]/(t^m - 1).
// modulus == 0 means no quotient.
class Laurent {
public:
  Laurent() = default;
  explicit Laurent(long long constant);
  static Laurent monomial(long long coeff, long long exp, long long modulus = 0);

  long long modulus() const { return modulus_; }
  bool is_zero() const { return coeffs_.empty(); }
  long long coeff(long long exp) const;
  const std::map<long long, long long>& coeffs() const { return coeffs_; }

  Laurent& set_modulus(long long m);

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator-() const;
  bool operator==(const Laurent& o) const;
  bool operator!=(const Laurent& o) const { return !(*this == o); }
  bool operator<(const Laurent& o) const;

  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  // Multiply by t^k.
  Laurent shifted(long long k) const;

  long long eval(long long t) const;      // evaluate at an integer
  long long derivative_at_one() const;    // f'(1), exact
  Laurent mod2() const;                   // coefficients reduced mod 2, kept in {0,1}
  Laurent reduced_mod(long long m) const; // push into Z[t]/(t^m-1)

  // Canonical representative in the quotient by f(t) ~ t^-1 f(t).
  Laurent cyclic_normal_form() const;

  long long min_exp() const; // 0 for the zero polynomial
  long long max_exp() const;

  // "- a^5 - a^-3 + a^-7" style; variable letter chosen by caller.
  std::string str(const std::string& var = "t") const;
  static Laurent parse(const std::string& text, const std::string& var = "t");

private:
  void add_term(long long exp, long long c);
  std::map<long long, long long> coeffs_;
  long long modulus_ = 0;
};

} // namespace skein
