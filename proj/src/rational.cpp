#include "flagdepth/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace flagdepth {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Int pow10(long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

}  // namespace

Rat rat_parse(std::string_view text) {
  // trim
  size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  if (s.empty()) throw ParseError("empty numeric literal");

  bool neg = false;
  size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  std::string body = s.substr(i);
  if (body.empty()) throw ParseError("bad numeric literal: '" + s + "'");

  auto fail = [&]() -> Rat { throw ParseError("bad numeric literal: '" + s + "'"); };

  Rat value;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    Int n(num), d(den);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    value = Rat(n, d);
    value.canonicalize();
  } else {
    // decimal with optional exponent: digits[.digits][e[+-]digits]
    long exp10 = 0;
    if (auto ep = body.find_first_of("eE"); ep != std::string::npos) {
      std::string es = body.substr(ep + 1);
      body = body.substr(0, ep);
      if (es.empty()) return fail();
      size_t j = 0;
      bool eneg = false;
      if (es[0] == '+' || es[0] == '-') {
        eneg = es[0] == '-';
        j = 1;
      }
      if (!all_digits(es.substr(j))) return fail();
      exp10 = std::strtol(es.c_str() + j, nullptr, 10);
      if (eneg) exp10 = -exp10;
    }
    std::string digits = body;
    long frac = 0;
    if (auto dp = body.find('.'); dp != std::string::npos) {
      std::string ip = body.substr(0, dp), fp = body.substr(dp + 1);
      if (ip.empty() && fp.empty()) return fail();
      if (!ip.empty() && !all_digits(ip)) return fail();
      if (!fp.empty() && !all_digits(fp)) return fail();
      digits = ip + fp;
      frac = static_cast<long>(fp.size());
    } else if (!all_digits(body)) {
      return fail();
    }
    if (digits.empty()) return fail();
    Int mant(digits);
    long net = exp10 - frac;
    if (net >= 0)
      value = Rat(mant * pow10(net));
    else
      value = Rat(mant, pow10(-net));
    value.canonicalize();
  }
  if (neg) value = -value;
  return value;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double rat_double(const Rat& q) { return q.get_d(); }

Rat rat_round(double value, std::int64_t den) {
  double scaled = value * static_cast<double>(den);
  if (!(std::fabs(scaled) < 9.0e15))
    throw std::invalid_argument("rat_round: value too large for exact rounding");
  Int num(static_cast<long>(std::llround(scaled)));
  Rat r(num, Int(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

}  // namespace flagdepth
