#include "cauchy/rational.hpp"

#include <cctype>

namespace cauchy {

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty()) throw std::invalid_argument("bad rational literal: " + text);
    Rat r;
    if (r.set_str(num + "/" + den, 10) != 0)
      throw std::invalid_argument("bad rational literal: " + text);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
  }
  auto dotpos = text.find('.');
  if (dotpos != std::string::npos) {
    std::string head = text.substr(0, dotpos);
    std::string frac = text.substr(dotpos + 1);
    bool neg = !head.empty() && head[0] == '-';
    if (neg) head = head.substr(1);
    else if (!head.empty() && head[0] == '+') head = head.substr(1);
    if (head.empty()) head = "0";
    for (char c : head)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("bad decimal literal: " + text);
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("bad decimal literal: " + text);
    mpz_class whole(head.empty() ? "0" : head);
    mpz_class fpart(frac.empty() ? std::string("0") : frac);
    mpz_class den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rat r(whole * den + fpart, den);
    r.canonicalize();
    return neg ? Rat(-r) : r;
  }
  Rat r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("bad integer literal: " + text);
  r.canonicalize();
  return r;
}

std::string rational_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rational_fixed(const Rat& r, int digits) {
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round half away from zero
  mpz_class num = r.get_num() * scale * 2;
  mpz_class den = r.get_den() * 2;
  mpz_class adj = den / 2;
  if (num < 0) adj = -adj;
  mpz_class scaled = (num + adj) / den;
  bool neg = scaled < 0;
  mpz_class a = neg ? mpz_class(-scaled) : scaled;
  mpz_class whole = a / scale;
  mpz_class frac = a % scale;
  std::string fs = frac.get_str();
  while (static_cast<int>(fs.size()) < digits) fs = "0" + fs;
  std::string out = (neg ? "-" : "") + whole.get_str();
  if (digits > 0) out += "." + fs;
  return out;
}

double to_double(const Rat& r) { return r.get_d(); }

}  // namespace cauchy
