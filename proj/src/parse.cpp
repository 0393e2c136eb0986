#include "semigauss/parse.hpp"

#include <cctype>
#include <map>
#include <string>

#include "semigauss/errors.hpp"

namespace semigauss {

namespace {

constexpr std::size_t kMaxExponent = 1 << 16;

// Walks the input with whitespace removed while remembering where each
// remaining byte sat in the original text.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : original_size_(text.size()) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
      chars_.push_back(text[i]);
      offsets_.push_back(i);
    }
  }

  bool done() const { return pos_ >= chars_.size(); }
  char peek() const { return done() ? '\0' : chars_[pos_]; }
  std::size_t offset() const { return done() ? original_size_ : offsets_[pos_]; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(offset(), what); }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string digits() {
    std::string out;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) out += chars_[pos_++];
    if (out.empty()) fail("expected a natural number");
    return out;
  }

 private:
  std::string chars_;
  std::vector<std::size_t> offsets_;
  std::size_t original_size_;
  std::size_t pos_ = 0;
};

Element natural(Cursor& in) { return Element(in.digits(), 10); }

std::size_t exponent(Cursor& in) {
  if (!in.accept('^')) return 1;
  const auto at = in.offset();
  const auto text = in.digits();
  if (text.size() > 6 || std::stoul(text) > kMaxExponent)
    throw ParseError(at, "exponent too large");
  return std::stoul(text);
}

bool negative_sign(Cursor& in, const SemiringInstance& s) {
  if (in.peek() != '-') return false;
  if (s.kind == InstanceKind::natural) in.fail("negative coefficients are not allowed over nat");
  in.accept('-');
  return true;
}

}  // namespace

Polynomial parse_polynomial(const SemiringInstance& s, std::string_view text) {
  Cursor in(text);
  if (in.done()) in.fail("empty polynomial");
  std::map<std::size_t, Fraction> terms;
  do {
    const bool negative = negative_sign(in, s);
    Fraction coeff(1);
    std::size_t power = 0;
    if (in.accept('X')) {
      power = exponent(in);
    } else {
      Element num = natural(in);
      Element den = 1;
      if (in.accept('/')) {
        const auto at = in.offset();
        den = natural(in);
        if (den == 0) throw ParseError(at, "zero denominator");
      }
      coeff = frac_make(num, den);
      if (in.accept('*')) {
        in.expect('X');
        power = exponent(in);
      }
    }
    if (negative) coeff = frac_mul(Fraction(-1), coeff);
    auto [it, inserted] = terms.try_emplace(power, coeff);
    if (!inserted) it->second = frac_add(it->second, coeff);
  } while (in.accept('+'));
  if (!in.done()) in.fail(std::string("unexpected '") + in.peek() + "'");

  std::vector<Fraction> coeffs(terms.rbegin()->first + 1);
  for (auto& [power, c] : terms) coeffs[power] = std::move(c);
  return Polynomial(s, std::move(coeffs));
}

Element parse_element(const SemiringInstance& s, std::string_view text) {
  Cursor in(text);
  const bool negative = negative_sign(in, s);
  Element out = natural(in);
  if (!in.done()) in.fail(std::string("unexpected '") + in.peek() + "'");
  return negative ? Element(-out) : out;
}

}  // namespace semigauss
