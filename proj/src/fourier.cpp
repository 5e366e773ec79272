#include "bernzeta/fourier.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace bernzeta {

FourierExact::FourierExact(std::int64_t n, std::map<unsigned, Rational> terms) : n_(n) {
  if (n == 0) throw DomainError("FourierExact needs a nonzero frequency; c_0 is a plain rational");
  for (auto& [m, q] : terms) {
    if (m == 0) throw DomainError("FourierExact powers start at (2*pi*i*n)^-1");
    if (!q.is_zero()) terms_.emplace(m, std::move(q));
  }
}

std::complex<long double> FourierExact::approximate() const {
  const long double pi = std::acos(-1.0L);
  const std::complex<long double> w(0.0L, 2.0L * pi * static_cast<long double>(n_));
  std::complex<long double> acc = 0;
  for (const auto& [m, q] : terms_) {
    const long double qv = q.raw().get_d();
    acc += qv / std::pow(w, static_cast<int>(m));
  }
  return acc;
}

namespace {

std::string frequency_text(std::int64_t n, bool latex) {
  const std::string s = std::to_string(n);
  if (latex) return "2\\pi i\\cdot " + (n < 0 ? "(" + s + ")" : s);
  return "2*pi*i*" + (n < 0 ? "(" + s + ")" : s);
}

std::string join_signed(const std::vector<std::pair<int, std::string>>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const bool neg = terms[i].first < 0;
    if (i == 0)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += terms[i].second;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string FourierExact::to_string() const {
  std::vector<std::pair<int, std::string>> parts;
  const std::string base = "(" + frequency_text(n_, false) + ")^";
  for (const auto& [m, q] : terms_) {
    const Rational mag = q.abs();
    const std::string num = mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")";
    parts.emplace_back(q.sign(), num + "/" + base + std::to_string(m));
  }
  return join_signed(parts);
}

std::string FourierExact::to_latex() const {
  std::vector<std::pair<int, std::string>> parts;
  for (const auto& [m, q] : terms_) {
    const Rational mag = q.abs();
    std::string den = "(" + frequency_text(n_, true) + ")^{" + std::to_string(m) + "}";
    if (!mag.is_integer()) den = mag.den().get_str() + den;
    parts.emplace_back(q.sign(), "\\frac{" + mag.num().get_str() + "}{" + den + "}");
  }
  return join_signed(parts);
}

PiLaurent::PiLaurent(std::map<int, Rational> terms) {
  for (auto& [e, r] : terms)
    if (!r.is_zero()) terms_.emplace(e, std::move(r));
}

PiLaurent& PiLaurent::operator+=(const PiLaurent& o) {
  for (const auto& [e, r] : o.terms_) {
    auto [it, inserted] = terms_.emplace(e, r);
    if (!inserted) {
      it->second += r;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

PiLaurent operator*(const Rational& c, const PiLaurent& p) {
  std::map<int, Rational> out;
  for (const auto& [e, r] : p.terms_) out.emplace(e, c * r);
  return PiLaurent(std::move(out));
}

std::string PiLaurent::to_string() const {
  std::vector<std::pair<int, std::string>> parts;
  for (const auto& [e, r] : terms_) {
    const Rational mag = r.abs();
    std::string body;
    if (e == 0)
      body = mag.to_string();
    else
      body = (mag == 1 ? "" : mag.to_string() + "*") + "pi^" + std::to_string(e);
    parts.emplace_back(r.sign(), body);
  }
  return join_signed(parts);
}

std::string PiLaurent::to_latex() const {
  std::vector<std::pair<int, std::string>> parts;
  for (const auto& [e, r] : terms_) {
    const Rational mag = r.abs();
    std::string body;
    if (e == 0) {
      body = mag.to_latex();
    } else if (e > 0) {
      body = (mag == 1 ? "" : mag.to_latex()) + "\\pi^{" + std::to_string(e) + "}";
    } else {
      body = "\\frac{" + mag.num().get_str() + "}{" + (mag.den() == 1 ? "" : mag.den().get_str()) + "\\pi^{" +
             std::to_string(-e) + "}}";
    }
    parts.emplace_back(r.sign(), body);
  }
  return join_signed(parts);
}

FourierValue fourier_coeff_closed(unsigned k, std::int64_t n) {
  if (k == 0) throw DomainError("closed-form Fourier coefficient of B_k needs k >= 1 (B_0 = 1 has c_0 = 1)");
  if (n == 0) return Rational(0);
  return FourierExact(n, {{k, -Rational(factorial(k))}});
}

FourierValue fourier_coeff_ibp(const Polynomial& p, std::int64_t n) {
  if (n == 0) return p.integral(0, 1);
  std::map<unsigned, Rational> terms;
  Polynomial d = p;
  for (unsigned j = 0; !d.is_zero(); ++j) {
    const Rational delta = d(1) - d(0);
    if (!delta.is_zero()) terms.emplace(j + 1, -delta);
    d = d.derivative();
  }
  return FourierExact(n, std::move(terms));
}

PiLaurent fourier_modulus_squared(const FourierExact& f) {
  // i^{-m} is 1, -i, -1, i for m = 0, 1, 2, 3 (mod 4). Split into real and
  // imaginary parts, each a sum of signed q_m (2 pi n)^{-m}.
  struct Part {
    unsigned m;
    Rational c;  // coefficient of pi^{-m}
  };
  std::vector<Part> re, im;
  const Rational two_n(2 * f.frequency());
  for (const auto& [m, q] : f.terms()) {
    const Rational c = q / pow(two_n, m);
    switch (m % 4) {
      case 0: re.push_back({m, c}); break;
      case 1: im.push_back({m, -c}); break;
      case 2: re.push_back({m, -c}); break;
      default: im.push_back({m, c}); break;
    }
  }
  PiLaurent out;
  for (const auto* part : {&re, &im})
    for (const auto& a : *part)
      for (const auto& b : *part)
        out += PiLaurent({{-static_cast<int>(a.m + b.m), a.c * b.c}});
  return out;
}

std::string to_string(const FourierValue& v) {
  return std::visit([](const auto& x) { return x.to_string(); }, v);
}

}  // namespace bernzeta
