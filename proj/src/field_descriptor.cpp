#include "tforge/field_descriptor.hpp"

#include <cctype>

namespace tforge {

namespace {

std::uint64_t parse_u64(const std::string& s, std::size_t& pos) {
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
    throw ParseError("expected a number in field descriptor", pos);
  std::uint64_t v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
    ++pos;
  }
  return v;
}

}  // namespace

FieldVariant parse_field_descriptor(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "Q" || s == "QQ") return QQ{};
  if (s.rfind("GF(", 0) != 0 || s.back() != ')')
    throw ParseError("field descriptor must be Q, GF(p), or GF(p^k;modulus=...)", 0);
  std::string body = s.substr(3, s.size() - 4);
  std::size_t pos = 0;
  std::uint64_t p = parse_u64(body, pos);
  int k = 1;
  if (pos < body.size() && body[pos] == '^') {
    ++pos;
    k = static_cast<int>(parse_u64(body, pos));
  }
  if (!is_prime_u64(p)) {
    // accept prime powers written in full, e.g. GF(8) for GF(2^3)
    if (k != 1) throw ParseError("field characteristic must be prime", 0);
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                            31ull, 37ull, 41ull, 43ull, 47ull}) {
      std::uint64_t v = q;
      int e = 1;
      while (v < p) {
        v *= q;
        ++e;
      }
      if (v == p) {
        p = q;
        k = e;
        break;
      }
    }
    if (!is_prime_u64(p)) throw ParseError("field order must be a prime power", 0);
  }
  if (k < 1) throw ParseError("extension degree must be >= 1", 0);
  std::string modulus_text;
  if (pos < body.size()) {
    const std::string tag = ";modulus=";
    if (body.compare(pos, tag.size(), tag) != 0)
      throw ParseError("unexpected content in field descriptor", pos);
    modulus_text = body.substr(pos + tag.size());
  }
  if (k == 1 && modulus_text.empty()) return GFp(p);
  std::string gen = "t";
  if (!modulus_text.empty()) {
    // the generator symbol is the variable letter of the modulus text
    std::string found;
    for (std::size_t i = 0; i < modulus_text.size(); ++i) {
      if (std::isalpha(static_cast<unsigned char>(modulus_text[i]))) {
        found.clear();
        while (i < modulus_text.size() &&
               std::isalnum(static_cast<unsigned char>(modulus_text[i])))
          found += modulus_text[i++];
        break;
      }
    }
    if (found.empty()) throw ParseError("modulus text has no variable", 0);
    gen = found;
    GFp base(p);
    UniPoly<GFp> m = parse_unipoly(modulus_text, base, gen);
    if (m.degree() != k) throw ParseError("modulus degree differs from the extension degree", 0);
    std::vector<std::uint64_t> coeffs;
    for (int i = 0; i <= m.degree(); ++i) coeffs.push_back(m.coeff(i));
    return GFq(std::make_shared<const FqField>(p, std::move(coeffs), gen));
  }
  return GFq(std::make_shared<const FqField>(p, default_modulus(p, k), gen));
}

std::string field_name(const FieldVariant& f) {
  return std::visit([](const auto& d) { return d.name(); }, f);
}

}  // namespace tforge
