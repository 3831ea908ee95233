#include "matchless/count.hpp"

#include <stdexcept>

namespace matchless {

Count binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Count result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::string to_string(const Count& c) { return c.str(); }

std::string to_string(const Ratio& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

Ratio parse_ratio(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Ratio(Count(text.c_str()));
  Count p(text.substr(0, slash).c_str());
  Count q(text.substr(slash + 1).c_str());
  if (q == 0) throw std::invalid_argument("zero denominator in " + text);
  return Ratio(p, q);
}

}  // namespace matchless
