#include <sym3inv/scalar.hpp>

#include <stdexcept>

namespace sym3 {

std::string format_rational(const ExactScalar& q) { return q.get_str(10); }

ExactScalar parse_rational(std::string_view text) {
  const auto valid_integer = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_integer(num, true) || (slash != std::string_view::npos && !valid_integer(den, false)))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");

  std::string n(num);
  if (!n.empty() && n.front() == '+') n.erase(0, 1);
  mpz_class numerator(n, 10);
  mpz_class denominator(slash == std::string_view::npos ? std::string("1") : std::string(den), 10);
  if (denominator == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  ExactScalar q(numerator, denominator);
  q.canonicalize();
  return q;
}

}  // namespace sym3
