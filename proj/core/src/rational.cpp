#include "liecp/rational.hpp"

#include <cctype>
#include <ostream>

namespace liecp {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw error("Rational: empty literal");

  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  if (!valid_integer_token(num))
    throw error("Rational: bad numerator in '" + text + "'");

  mpq_class v;
  if (slash == std::string::npos) {
    v = mpq_class(mpz_class(num));
  } else {
    const std::string den = s.substr(slash + 1);
    if (!valid_integer_token(den) || den.find('-') != std::string::npos)
      throw error("Rational: bad denominator in '" + text + "'");
    mpz_class d(den);
    if (d == 0) throw error("Rational: zero denominator in '" + text + "'");
    v = mpq_class(mpz_class(num), d);
    v.canonicalize();
  }
  Rational r;
  r.v_ = v;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.v_.get_str();
}

}  // namespace liecp
