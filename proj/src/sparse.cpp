#include "forestry/sparse.hpp"

#include <regex>
#include <stdexcept>

namespace forestry {

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(\s*([+-]?\d+)(?:/(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw std::invalid_argument("malformed rational '" + text + "'");
  Rational q(Integer(m[1].str()), m[2].matched ? Integer(m[2].str()) : Integer(1));
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace forestry
