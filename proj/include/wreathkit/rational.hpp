#ifndef WREATHKIT_RATIONAL_HPP_
#define WREATHKIT_RATIONAL_HPP_

#include <charconv>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "error.hpp"

namespace wreathkit {

  using Rational = boost::rational<long long>;

  // "p/q", or "p" when q = 1.
  inline std::string to_string(Rational const& r) {
    if (r.denominator() == 1) {
      return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
  }

  inline Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
      long long v   = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
      }
      return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Rational(parse_int(text));
    }
    long long den = parse_int(text.substr(slash + 1));
    if (den == 0) {
      throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(parse_int(text.substr(0, slash)), den);
  }

  // Representative of r in Q/Z lying in [0, 1).
  inline Rational mod_one(Rational const& r) {
    long long n = r.numerator() % r.denominator();
    if (n < 0) {
      n += r.denominator();
    }
    return Rational(n, r.denominator());
  }

}  // namespace wreathkit

#endif  // WREATHKIT_RATIONAL_HPP_
