#include "tudim/numbers.hpp"

namespace tudim {

Rat parse_rat(const std::string& token) {
  auto slash = token.find('/');
  if (slash == std::string::npos) return Rat(parse_int(token));
  Int num = parse_int(token.substr(0, slash));
  Int den = parse_int(token.substr(slash + 1));
  return make_rat(num, den);
}

Int parse_int(const std::string& token) {
  Int v;
  if (token.empty() || mpz_set_str(v.get_mpz_t(), token.c_str(), 10) != 0)
    throw std::invalid_argument("not an integer: '" + token + "'");
  return v;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

bool lex_less(const RatVector& a, const RatVector& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

bool lex_less(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

}  // namespace tudim
