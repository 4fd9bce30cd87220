#include "cbcut/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "cbcut/error.hpp"

namespace cbcut {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class pow10(unsigned long k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
  return p;
}

// compare a vs b * 10^e for nonneg a, positive b
int cmp_scaled(const mpz_class& a, const mpz_class& b, long e) {
  if (e >= 0) return cmp(a, mpz_class(b * pow10(static_cast<unsigned long>(e))));
  return cmp(mpz_class(a * pow10(static_cast<unsigned long>(-e))), b);
}

}  // namespace

Rat rat_parse(const std::string& text) {
  std::string s = text;
  // strip surrounding whitespace
  size_t b = s.find_first_not_of(" \t");
  size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) fail(Errc::Parse, "empty rational literal");
  s = s.substr(b, e - b + 1);

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) fail(Errc::Parse, "malformed rational literal '" + text + "'");

  Rat result;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail(Errc::Parse, "malformed rational literal '" + text + "'");
    mpz_class d(den);
    if (d == 0) fail(Errc::Parse, "zero denominator in '" + text + "'");
    result = Rat(mpz_class(num), d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) fail(Errc::Parse, "malformed rational literal '" + text + "'");
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      fail(Errc::Parse, "malformed rational literal '" + text + "'");
    mpz_class num(ip.empty() ? "0" : ip);
    num *= pow10(fp.size());
    if (!fp.empty()) num += mpz_class(fp);
    result = Rat(num, pow10(fp.size()));
  } else {
    if (!all_digits(s)) fail(Errc::Parse, "malformed rational literal '" + text + "'");
    result = Rat(mpz_class(s));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::string rat_str(const Rat& x) { return x.get_str(); }

std::string rat_decimal(const Rat& x, int sig) {
  if (sig < 1) fail(Errc::Parameter, "significant_digits must be positive");
  if (x == 0) return "0";
  bool negative = x < 0;
  mpz_class a = abs(x.get_num()), b = x.get_den();

  // exponent e with 10^e <= a/b < 10^(e+1)
  long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 10));
  while (cmp_scaled(a, b, e) < 0) --e;
  while (cmp_scaled(a, b, e + 1) >= 0) ++e;

  // D = round(a * 10^(sig-1-e) / b), half away from zero
  long k = sig - 1 - e;
  mpz_class num = a, den = b;
  if (k >= 0)
    num *= pow10(static_cast<unsigned long>(k));
  else
    den *= pow10(static_cast<unsigned long>(-k));
  mpz_class quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * rem >= den) quot += 1;
  if (quot == pow10(static_cast<unsigned long>(sig))) {  // rounding carried a digit
    quot /= 10;
    ++e;
  }

  std::string digits = quot.get_str();
  long point = e + 1;  // digits before the decimal point
  std::string body;
  if (point <= 0) {
    body = "0." + std::string(static_cast<size_t>(-point), '0') + digits;
  } else if (point >= static_cast<long>(digits.size())) {
    body = digits + std::string(static_cast<size_t>(point - static_cast<long>(digits.size())), '0');
  } else {
    body = digits.substr(0, static_cast<size_t>(point)) + "." + digits.substr(static_cast<size_t>(point));
  }
  return negative ? "-" + body : body;
}

double rat_double(const Rat& x) { return x.get_d(); }

}  // namespace cbcut
