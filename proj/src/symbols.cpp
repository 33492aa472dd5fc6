#include "sl2tilt/symbols.hpp"

#include <cctype>
#include <nlohmann/json.hpp>
#include <sstream>

#include "sl2tilt/errors.hpp"

namespace sl2tilt {

StableSymbol StableSymbol::make(std::int64_t u, int omega, std::int64_t idx, const GroupParams& params) {
  if (omega != 0 && omega != 1) {
    throw DomainError("omega exponent " + std::to_string(omega) + " not in {0,1}");
  }
  if (idx < 0 || idx > params.q() - 1) throw DomainError("symbol index " + std::to_string(idx) + " out of range");
  StableSymbol s;
  if (idx == params.steinberg()) return s;
  s.zero_ = false;
  s.u_ = params.reduce(u);
  s.omega_ = omega;
  s.idx_ = idx;
  return s;
}

StableSymbol StableSymbol::zero() { return StableSymbol{}; }

StableSymbol tensor_u(const StableSymbol& s, std::int64_t j, const GroupParams& params) {
  if (s.is_zero()) return s;
  return StableSymbol::make(s.u() + j, s.omega(), s.idx(), params);
}

StableSymbol canonicalize(const StableSymbol& s, const GroupParams& params) {
  if (s.is_zero() || s.omega() == 0 || !is_rim(s.idx(), params)) return s;
  const int i = rim_position(s.idx(), params);
  return StableSymbol::make(s.u() - params.pow(i + 1), 0, flip_digit(s.idx(), i, params), params);
}

bool symbols_equal(const StableSymbol& a, const StableSymbol& b, const GroupParams& params) {
  return canonicalize(a, params) == canonicalize(b, params);
}

StableSymbol apply_omega(const StableSymbol& s, const GroupParams& params) {
  if (s.is_zero()) return s;
  if (s.omega() != 0) throw DomainError("Omega^2 is not representable");
  return StableSymbol::make(s.u(), 1, s.idx(), params);
}

StableSymbol omega_inverse(const StableSymbol& s, const GroupParams& params) {
  if (s.is_zero()) return s;
  if (s.omega() == 1) return StableSymbol::make(s.u(), 0, s.idx(), params);
  if (!is_rim(s.idx(), params)) {
    throw NotInvertibleSymbolically("Omega^{-1}(" + render_full(s) + ") has no single-symbol form");
  }
  const int i = rim_position(s.idx(), params);
  return StableSymbol::make(s.u() + params.pow(i + 1), 0, flip_digit(s.idx(), i, params), params);
}

BlockLabel block_of(const StableSymbol& s, const GroupParams& params) {
  if (s.is_zero()) throw DomainError("the zero symbol lies in no block");
  if (params.p() == 2) return BlockLabel::Single;
  return (s.u() + s.idx()) % 2 == 0 ? BlockLabel::Even : BlockLabel::Odd;
}

std::string render_full(const StableSymbol& s) {
  if (s.is_zero()) return "0";
  std::ostringstream out;
  out << "U_" << s.u() << ' ';
  if (s.omega() == 1) out << "Ω ";
  out << "M_" << s.idx();
  return out.str();
}

std::string render_shorthand(const StableSymbol& s) {
  if (s.is_zero()) return "0";
  std::ostringstream out;
  if (s.omega() == 1) {
    out << '^' << s.omega() << '_' << s.u() << ' ';
  } else if (s.u() != 0) {
    out << '_' << s.u() << ' ';
  }
  out << "M_" << s.idx();
  return out.str();
}

std::string to_string(BlockLabel b) {
  switch (b) {
    case BlockLabel::Even: return "even";
    case BlockLabel::Odd: return "odd";
    case BlockLabel::Single: return "single";
  }
  return "?";
}

nlohmann::json to_json(const StableSymbol& s) {
  return {{"u", s.u()}, {"omega", s.omega()}, {"idx", s.idx()}, {"zero", s.is_zero()}};
}

StableSymbol symbol_from_json(const nlohmann::json& j, const GroupParams& params) {
  if (j.at("zero").get<bool>()) return StableSymbol::zero();
  return StableSymbol::make(j.at("u").get<std::int64_t>(), j.at("omega").get<int>(), j.at("idx").get<std::int64_t>(),
                            params);
}

namespace {

class CellParser {
 public:
  CellParser(std::string_view text, const GroupParams& params) : text_(text), params_(params) {}

  StableSymbol parse() {
    skip_space();
    if (consume("0")) {
      skip_space();
      require_end();
      return StableSymbol::zero();
    }
    std::int64_t u = 0;
    int omega = 0;
    if (consume("^")) {
      omega = static_cast<int>(number());
      expect("_");
      u = number();
    } else if (consume("_")) {
      u = number();
    } else {
      if (consume("U_")) u = signed_number();
      skip_space();
      if (consume("Ω") || consume("Omega")) {
        omega = 1;
        if (consume("^")) omega = static_cast<int>(number());
      }
    }
    skip_space();
    expect("M_");
    const std::int64_t idx = index();
    skip_space();
    require_end();
    return StableSymbol::make(u, omega, idx, params_);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("cannot parse symbol '" + std::string(text_) + "': " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!consume(token)) fail("expected '" + std::string(token) + "'");
  }

  void require_end() {
    if (pos_ != text_.size()) fail("trailing characters");
  }

  std::int64_t digits_run() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  std::int64_t number() {
    if (consume("{")) {
      const auto v = digits_run();
      expect("}");
      return v;
    }
    return digits_run();
  }

  std::int64_t signed_number() {
    const bool braced = consume("{");
    const bool negative = consume("-");
    const auto v = digits_run();
    if (braced) expect("}");
    return negative ? -v : v;
  }

  std::int64_t index() {
    const bool braced = consume("{");
    std::int64_t v = 0;
    if (consume("(")) {
      std::vector<int> digits;
      do {
        digits.push_back(static_cast<int>(digits_run()));
      } while (consume(","));
      expect(")");
      v = from_digits(digits, params_);
    } else {
      v = digits_run();
    }
    if (braced) expect("}");
    return v;
  }

  std::string_view text_;
  const GroupParams& params_;
  std::size_t pos_ = 0;
};

}  // namespace

StableSymbol parse_symbol(std::string_view text, const GroupParams& params) {
  return CellParser(text, params).parse();
}

}  // namespace sl2tilt
