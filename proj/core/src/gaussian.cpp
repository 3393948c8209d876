#include "torkit/gaussian.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace torkit {

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) {
    throw std::domain_error("division by zero Gaussian rational");
  }
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inverse();
}

std::string GaussianRational::str() const {
  if (is_zero()) {
    return "0";
  }
  std::string out;
  if (re_ != 0) {
    out += rational_str(re_);
  }
  if (im_ != 0) {
    Rational mag = im_;
    if (im_ > 0 && !out.empty()) {
      out += '+';
    } else if (im_ < 0) {
      out += '-';
      mag = -im_;
    }
    if (mag == 1) {
      out += 'i';
    } else {
      out += rational_str(mag) + "*i";
    }
  }
  return out;
}

namespace {

// One signed term: a rational, "i", or "coeff*i" / "coeff i"-free forms.
void apply_term(GaussianRational& acc, const std::string& term, bool negate) {
  if (term.empty()) {
    throw std::invalid_argument("empty term in Gaussian rational literal");
  }
  bool imaginary = term.back() == 'i';
  std::string body = imaginary ? term.substr(0, term.size() - 1) : term;
  if (imaginary && !body.empty() && body.back() == '*') {
    body.pop_back();
  }
  Rational coeff = body.empty() ? Rational(1) : parse_rational(body);
  if (body.empty() && !imaginary) {
    throw std::invalid_argument("empty term in Gaussian rational literal");
  }
  if (negate) {
    coeff = -coeff;
  }
  if (imaginary) {
    acc += GaussianRational(Rational(0), coeff);
  } else {
    acc += GaussianRational(coeff);
  }
}

}  // namespace

GaussianRational GaussianRational::parse(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      s.push_back(c);
    }
  }
  if (s.empty()) {
    throw std::invalid_argument("empty Gaussian rational literal");
  }

  std::vector<std::pair<std::string, bool>> terms;  // (text, negate)
  std::size_t start = 0;
  bool negate = false;
  if (s[0] == '+' || s[0] == '-') {
    negate = s[0] == '-';
    start = 1;
  }
  for (std::size_t pos = start; pos <= s.size(); ++pos) {
    if (pos == s.size() || s[pos] == '+' || s[pos] == '-') {
      terms.emplace_back(s.substr(start, pos - start), negate);
      if (pos == s.size()) {
        break;
      }
      negate = s[pos] == '-';
      start = pos + 1;
    }
  }
  auto is_imaginary = [](const std::string& t) { return !t.empty() && t.back() == 'i'; };
  bool well_formed =
      (terms.size() == 1) ||
      (terms.size() == 2 && !is_imaginary(terms[0].first) && is_imaginary(terms[1].first));
  if (!well_formed) {
    throw std::invalid_argument("malformed Gaussian rational literal: '" + text + "'");
  }
  GaussianRational acc;
  for (const auto& [term, neg] : terms) {
    apply_term(acc, term, neg);
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& value) {
  return os << value.str();
}

}  // namespace torkit
