#include "cuntz/scalar.hpp"

#include "cuntz/error.hpp"

namespace cuntz {

std::string to_string(const Scalar& s) {
  std::string out = s.numerator().str();
  if (s.denominator() != 1) {
    out += '/';
    out += s.denominator().str();
  }
  return out;
}

Scalar parse_scalar(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Scalar(Integer(text));
    return Scalar(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::exception& e) {
    throw Error(ErrorKind::ParseError, "bad rational '" + text + "'");
  }
}

}  // namespace cuntz
