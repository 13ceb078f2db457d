#include "skeinmod/laurent.hpp"

#include <cctype>
#include <string>

namespace skeinmod {

LaurentPoly1 specialize(const LaurentPoly2& p, SpecializationMap s) {
  return p.map_exponents<1>([s](const Exponent2& e) { return Exponent1{s.apply(e)}; });
}

namespace {

template <std::size_t N>
constexpr std::array<std::string_view, N> variable_names() {
  if constexpr (N == 1) {
    return {"q"};
  } else {
    return {"q1", "q2"};
  }
}

template <std::size_t N>
std::string render_monomial(const Exponent<N>& e) {
  constexpr auto names = variable_names<N>();
  std::string out;
  for (std::size_t k = 0; k < N; ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[k];
    if (e[k] != 1) {
      out += '^';
      out += std::to_string(e[k]);
    }
  }
  return out;
}

// Recursive-descent parser over the grammar
//   poly   := sign? term (('+' | '-') term)*
//   term   := factor ('*'? factor)*
//   factor := integer | var ('^' sign? digits)? | '(' poly ')'
template <std::size_t N>
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LaurentPoly<N> parse_all() {
    LaurentPoly<N> p = parse_poly();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Parse, "polynomial \"" + std::string(text_) + "\": " + why +
                                      " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == '(';
  }

  LaurentPoly<N> parse_poly() {
    LaurentPoly<N> acc;
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    for (;;) {
      LaurentPoly<N> t = parse_term();
      if (negate) {
        acc -= t;
      } else {
        acc += t;
      }
      if (peek('+')) {
        ++pos_;
        negate = false;
      } else if (peek('-')) {
        ++pos_;
        negate = true;
      } else {
        return acc;
      }
    }
  }

  LaurentPoly<N> parse_term() {
    if (!starts_factor()) fail("expected a term");
    LaurentPoly<N> acc = parse_factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        if (!starts_factor()) fail("expected a factor after '*'");
      } else if (!starts_factor()) {
        return acc;
      }
      acc = acc * parse_factor();
    }
  }

  std::string take_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  LaurentPoly<N> parse_factor() {
    skip_ws();
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly<N> inner = parse_poly();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return LaurentPoly<N>(Integer(take_digits()));
    }
    std::size_t slot = parse_variable();
    std::int64_t power = 1;
    if (peek('^')) {
      ++pos_;
      skip_ws();
      bool neg = false;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
        neg = text_[pos_] == '-';
        ++pos_;
      }
      std::string digits = take_digits();
      try {
        power = std::stoll(digits);
      } catch (const std::out_of_range&) {
        fail("exponent out of range");
      }
      if (neg) power = -power;
    }
    Exponent<N> e{};
    e[slot] = power;
    return LaurentPoly<N>::monomial(e);
  }

  std::size_t parse_variable() {
    constexpr auto names = variable_names<N>();
    // Longest match first so "q1" is not read as "q" followed by "1".
    std::size_t best = N;
    std::size_t best_len = 0;
    for (std::size_t k = 0; k < N; ++k) {
      if (text_.substr(pos_, names[k].size()) == names[k] && names[k].size() > best_len) {
        best = k;
        best_len = names[k].size();
      }
    }
    if (best == N) fail("unknown variable");
    pos_ += best_len;
    if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
      fail("unknown variable");
    }
    return best;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

template <std::size_t N>
std::string to_string(const LaurentPoly<N>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.sorted_terms()) {
    const bool negative = c < 0;
    Integer mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = render_monomial<N>(e);
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str();
      out += '*';
      out += mono;
    }
  }
  return out;
}

template <std::size_t N>
LaurentPoly<N> parse_laurent(std::string_view text) {
  return Parser<N>(text).parse_all();
}

template std::string to_string<1>(const LaurentPoly<1>&);
template std::string to_string<2>(const LaurentPoly<2>&);
template LaurentPoly<1> parse_laurent<1>(std::string_view);
template LaurentPoly<2> parse_laurent<2>(std::string_view);

}  // namespace skeinmod
