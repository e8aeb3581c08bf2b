#include "skein/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace skein {

namespace {
long long mod_floor(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}
} // namespace

Laurent::Laurent(long long constant) {
  if (constant != 0) coeffs_[0] = constant;
}

Laurent Laurent::monomial(long long coeff, long long exp, long long modulus) {
  Laurent p;
  p.modulus_ = modulus;
  if (modulus > 0) exp = mod_floor(exp, modulus);
  if (coeff != 0) p.coeffs_[exp] = coeff;
  return p;
}

long long Laurent::coeff(long long exp) const {
  if (modulus_ > 0) exp = mod_floor(exp, modulus_);
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? 0 : it->second;
}

Laurent& Laurent::set_modulus(long long m) {
  *this = reduced_mod(m);
  return *this;
}

void Laurent::add_term(long long exp, long long c) {
  if (c == 0) return;
  if (modulus_ > 0) exp = mod_floor(exp, modulus_);
  auto it = coeffs_.find(exp);
  if (it == coeffs_.end()) {
    coeffs_[exp] = c;
  } else {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  if (r.modulus_ == 0) r.modulus_ = o.modulus_;
  else if (o.modulus_ != 0 && o.modulus_ != r.modulus_)
    throw std::invalid_argument("Laurent: modulus mismatch");
  if (r.modulus_ > 0) r = reduced_mod(r.modulus_);
  for (auto& [e, c] : o.coeffs_) r.add_term(e, c);
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& [e, c] : r.coeffs_) c = -c;
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  r.modulus_ = modulus_ != 0 ? modulus_ : o.modulus_;
  if (modulus_ != 0 && o.modulus_ != 0 && modulus_ != o.modulus_)
    throw std::invalid_argument("Laurent: modulus mismatch");
  for (auto& [e1, c1] : coeffs_)
    for (auto& [e2, c2] : o.coeffs_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

bool Laurent::operator==(const Laurent& o) const {
  long long m = modulus_ != 0 ? modulus_ : o.modulus_;
  if (m > 0) return reduced_mod(m).coeffs_ == o.reduced_mod(m).coeffs_;
  return coeffs_ == o.coeffs_;
}

bool Laurent::operator<(const Laurent& o) const {
  if (modulus_ != o.modulus_) return modulus_ < o.modulus_;
  return coeffs_ < o.coeffs_;
}

Laurent Laurent::shifted(long long k) const {
  Laurent r;
  r.modulus_ = modulus_;
  for (auto& [e, c] : coeffs_) r.add_term(e + k, c);
  return r;
}

long long Laurent::eval(long long t) const {
  long long acc = 0;
  for (auto& [e, c] : coeffs_) {
    if (e < 0) {
      if (t != 1 && t != -1) throw std::domain_error("Laurent::eval: negative exponent");
      acc += (t == 1 || e % 2 == 0) ? c : -c;
      continue;
    }
    long long p = 1;
    for (long long i = 0; i < e; ++i) p *= t;
    acc += c * p;
  }
  return acc;
}

long long Laurent::derivative_at_one() const {
  long long acc = 0;
  for (auto& [e, c] : coeffs_) acc += e * c;
  return acc;
}

Laurent Laurent::mod2() const {
  Laurent r;
  r.modulus_ = modulus_;
  for (auto& [e, c] : coeffs_)
    if (c % 2 != 0) r.add_term(e, 1);
  return r;
}

Laurent Laurent::reduced_mod(long long m) const {
  Laurent r;
  r.modulus_ = m;
  for (auto& [e, c] : coeffs_) r.add_term(e, c);
  return r;
}

Laurent Laurent::cyclic_normal_form() const {
  if (coeffs_.empty()) return *this;
  if (modulus_ == 0) return shifted(-min_exp());
  Laurent best = *this;
  Laurent cur = *this;
  for (long long k = 1; k < modulus_; ++k) {
    cur = cur.shifted(1);
    if (cur.coeffs_ < best.coeffs_) best = cur;
  }
  return best;
}

long long Laurent::min_exp() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
long long Laurent::max_exp() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

std::string Laurent::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    long long e = it->first, c = it->second;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    long long a = std::llabs(c);
    if (a != 1 || e == 0) out << a;
    if (e != 0) {
      out << var;
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

Laurent Laurent::parse(const std::string& text, const std::string& var) {
  Laurent r;
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
  skip_ws();
  if (text.compare(i, 1, "0") == 0 && i + 1 >= text.size()) return r;
  bool expect_term = true;
  long long sign = 1;
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] == '+') { sign = 1; ++i; expect_term = true; continue; }
    if (text[i] == '-') { sign = -1; ++i; expect_term = true; continue; }
    if (!expect_term) throw std::invalid_argument("Laurent::parse: unexpected token");
    long long mag = 1;
    bool have_digits = false;
    skip_ws();
    if (i < text.size() && std::isdigit((unsigned char)text[i])) {
      mag = 0;
      while (i < text.size() && std::isdigit((unsigned char)text[i])) {
        mag = mag * 10 + (text[i] - '0');
        ++i;
      }
      have_digits = true;
    }
    skip_ws();
    long long exp = 0;
    if (text.compare(i, var.size(), var) == 0) {
      i += var.size();
      exp = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        long long es = 1;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
          if (text[i] == '-') es = -1;
          ++i;
        }
        long long e = 0;
        if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
          throw std::invalid_argument("Laurent::parse: bad exponent");
        while (i < text.size() && std::isdigit((unsigned char)text[i])) {
          e = e * 10 + (text[i] - '0');
          ++i;
        }
        exp = es * e;
      }
    } else if (!have_digits) {
      throw std::invalid_argument("Laurent::parse: expected term");
    }
    r.add_term(exp, sign * mag);
    expect_term = false;
    sign = 1;
  }
  return r;
}

} // namespace skein
