#include "sympindex/rational.hpp"

#include <atomic>
#include <cctype>
#include <cstdlib>

#include "sympindex/errors.hpp"

namespace sympindex {

Int floor_rat(const Rat& a) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
  return q;
}

Int ceil_rat(const Rat& a) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
  return q;
}

Rat frac_rat(const Rat& a) { return a - Rat(floor_rat(a)); }

int phi_rat(const Rat& a) { return is_integer(a) ? 0 : 1; }

bool is_integer(const Rat& a) { return a.get_den() == 1; }

Int lcm_int(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw InputError("bad rational literal: " + s);
  if (r.get_den() == 0) throw InputError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string format_rat(const Rat& a) { return a.get_str(); }

Rat parse_decimal(const std::string& s) {
  if (s.empty()) throw InputError("empty decimal literal");
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = (s[i++] == '-');

  std::string digits;
  long frac_len = 0;
  bool seen_point = false, seen_digit = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (seen_point) throw InputError("bad decimal literal: " + s);
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_len;
      seen_digit = true;
    } else if (c == 'e' || c == 'E') {
      break;
    } else {
      throw InputError("bad decimal literal: " + s);
    }
  }
  if (!seen_digit) throw InputError("bad decimal literal: " + s);

  long expo = 0;
  if (i < s.size()) {  // at 'e'
    std::string tail = s.substr(i + 1);
    if (tail.empty()) throw InputError("bad decimal literal: " + s);
    std::size_t pos = 0;
    try {
      expo = std::stol(tail, &pos);
    } catch (...) {
      throw InputError("bad decimal literal: " + s);
    }
    if (pos != tail.size()) throw InputError("bad decimal literal: " + s);
  }

  Int num(digits.empty() ? std::string("0") : digits, 10);
  if (neg) num = -num;
  long net = expo - frac_len;
  Int pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(net < 0 ? -net : net));
  Rat r = net < 0 ? Rat(num, pow10) : Rat(num * pow10);
  r.canonicalize();
  return r;
}

std::string format_decimal(const Rat& a, int digits) {
  if (digits < 0) digits = 0;
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rat scaled = a * Rat(scale);
  // round half up
  Int fl = floor_rat(scaled);
  Int n = (scaled - Rat(fl)) * 2 >= 1 ? Int(fl + 1) : fl;
  bool neg = n < 0;
  Int mag = neg ? Int(-n) : n;
  std::string body = mag.get_str();
  if (static_cast<int>(body.size()) <= digits)
    body.insert(0, static_cast<std::size_t>(digits + 1 - body.size()), '0');
  std::string out = body.substr(0, body.size() - digits);
  std::string frac = body.substr(body.size() - digits);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (!frac.empty()) out += "." + frac;
  if (neg) out.insert(0, 1, '-');
  return out;
}

namespace {
std::atomic<int> g_precision{60};
}

int default_precision() { return g_precision.load(); }

void set_default_precision(int digits) {
  if (digits < 8) digits = 8;
  if (digits > 10000) digits = 10000;
  g_precision.store(digits);
}

std::int64_t to_i64(const Int& v) {
  if (!v.fits_slong_p())
    throw InputError("integer out of machine range: " + v.get_str());
  return static_cast<std::int64_t>(v.get_si());
}

}  // namespace sympindex
