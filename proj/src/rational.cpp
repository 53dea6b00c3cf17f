#include "boarding/rational.hpp"

#include <stdexcept>

namespace boarding {

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (int i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

std::string fraction_str(const BigRational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string decimal_str(const BigRational& q, int places) {
  if (places < 0) throw std::invalid_argument("decimal_str: negative places");
  const bool negative = q < 0;
  BigInt num = numerator(q);
  if (negative) num = -num;
  const BigInt& den = denominator(q);

  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;

  // Round half away from zero: floor((2*num*scale + den) / (2*den)).
  BigInt scaled = (2 * num * scale + den) / (2 * den);
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;

  std::string out = whole.str();
  if (places > 0) {
    std::string digits = frac.str();
    out += "." + std::string(places - digits.size(), '0') + digits;
  }
  return negative && scaled != 0 ? "-" + out : out;
}

}  // namespace boarding
