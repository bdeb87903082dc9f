// SPDX-License-Identifier: MIT
#include "skewroots/codec.hpp"

#include <charconv>

namespace skewroots {

namespace {

uint64_t parse_u64(const std::string& tok, const char* what) {
  uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    fail(Errc::ParseError,
         std::string("expected an unsigned integer for ") + what + ", got '" +
             tok + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

FieldParams parse_field_params(const std::string& text) {
  FieldParams out;
  bool saw_p = false, in_mod = false;
  for (const std::string& tok : split(text, ',')) {
    size_t eq = tok.find('=');
    if (eq == std::string::npos) {
      if (!in_mod)
        fail(Errc::ParseError, "expected key=value in field spec, got '" +
                                   tok + "'");
      out.modulus.push_back(
          static_cast<uint32_t>(parse_u64(tok, "modulus coefficient")));
      continue;
    }
    std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
    in_mod = false;
    if (key == "p") {
      out.p = parse_u64(value, "p");
      saw_p = true;
    } else if (key == "m") {
      out.m = static_cast<unsigned>(parse_u64(value, "m"));
    } else if (key == "n") {
      out.n = static_cast<unsigned>(parse_u64(value, "n"));
    } else if (key == "s") {
      out.s = static_cast<unsigned>(parse_u64(value, "s"));
    } else if (key == "mod") {
      out.modulus.push_back(
          static_cast<uint32_t>(parse_u64(value, "modulus coefficient")));
      in_mod = true;
    } else {
      fail(Errc::ParseError, "unknown field spec key '" + key + "'");
    }
  }
  if (!saw_p) fail(Errc::ParseError, "field spec must set p");
  return out;
}

std::shared_ptr<const Field> make_field(const FieldParams& params,
                                        uint64_t size_bound) {
  return Field::create(params.p, params.m, params.n, params.s, params.modulus,
                       size_bound);
}

std::string format_field_params(const Field& f) {
  return "p=" + std::to_string(f.p()) + ",m=" + std::to_string(f.m()) +
         ",n=" + std::to_string(f.n()) + ",s=" + std::to_string(f.s());
}

std::string format_modulus(const Field& f) {
  std::string out;
  for (size_t i = 0; i < f.modulus().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(f.modulus()[i]);
  }
  return out;
}

LinearizedPoly parse_poly(const std::shared_ptr<const Field>& spec,
                          const std::string& text) {
  std::vector<FieldElement> coeffs;
  for (const std::string& tok : split(text, ';')) {
    uint64_t v = parse_u64(tok, "coefficient");
    if (v >= spec->order())
      fail(Errc::ParseError, "coefficient encoding " + tok +
                                 " is out of range for a field of order " +
                                 std::to_string(spec->order()));
    coeffs.push_back(spec->element(v));
  }
  return LinearizedPoly(spec, std::move(coeffs));
}

std::string format_poly(const LinearizedPoly& l) {
  if (l.is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < l.coeffs().size(); ++i) {
    if (i) out += ';';
    out += std::to_string(l.coeffs()[i].value());
  }
  return out;
}

std::string format_element(const FieldElement& x) {
  return std::to_string(x.value());
}

std::string format_matrix(const SqMatrix& m) {
  std::string out;
  for (unsigned r = 0; r < m.dim(); ++r) {
    if (r) out += '|';
    for (unsigned c = 0; c < m.dim(); ++c) {
      if (c) out += ',';
      out += std::to_string(m.at(r, c).value());
    }
  }
  return out;
}

}  // namespace skewroots
