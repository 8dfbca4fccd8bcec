#include "cofin/text.hpp"

#include <cctype>
#include <ostream>

#include "cofin/errors.hpp"

namespace cofin {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Rat rational() {
    skip_ws();
    std::size_t start = pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    std::string num = digits("numerator");
    std::string den = "1";
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      den = digits("denominator");
    }
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) {
      throw ParseError("zero denominator", start);
    }
    if (negative) n = -n;
    return Rat(n, d);
  }

  PLHomeo pl() {
    skip_ws();
    if (accept_word("aff")) {
      expect('(');
      Rat slope = rational();
      expect(',');
      Rat intercept = rational();
      expect(')');
      return PLHomeo::affine(std::move(slope), std::move(intercept));
    }
    if (accept_word("pl")) {
      expect('(');
      Rat left = rational();
      expect(';');
      std::vector<Knot> knots;
      do {
        expect('(');
        Rat x = rational();
        expect(',');
        Rat y = rational();
        expect(')');
        knots.push_back({std::move(x), std::move(y)});
      } while (accept(','));
      expect(';');
      Rat right = rational();
      expect(')');
      return PLHomeo::from_knots(std::move(left), std::move(knots),
                                 std::move(right));
    }
    throw ParseError("expected 'aff(' or 'pl('", pos_);
  }

  CofinSet set() {
    expect('{');
    std::size_t start = pos_;
    std::vector<Rat> points;
    if (!accept('}')) {
      do {
        points.push_back(rational());
      } while (accept(','));
      expect('}');
    }
    try {
      return CofinSet::from_unsorted(std::move(points));
    } catch (const DuplicatePoint& e) {
      throw ParseError(e.what(), start);
    }
  }

  PHom element() {
    skip_ws();
    if (!accept_word("phom")) {
      throw ParseError("expected 'phom('", pos_);
    }
    expect('(');
    PLHomeo ext = pl();
    expect(';');
    CofinSet gaps = set();
    expect(')');
    return PHom(std::move(ext), std::move(gaps));
  }

  GSPair pair() {
    skip_ws();
    if (!accept_word("pair")) {
      throw ParseError("expected 'pair('", pos_);
    }
    expect('(');
    PLHomeo group = pl();
    expect(';');
    CofinSet lattice = set();
    expect(')');
    return {std::move(group), std::move(lattice)};
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError("trailing input", pos_);
    }
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string digits(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
    if (start == pos_) {
      throw ParseError(std::string("expected digits for ") + what, start);
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  bool accept_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) {
      return false;
    }
    std::size_t after = pos_ + word.size();
    std::size_t probe = after;
    while (probe < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[probe]))) {
      ++probe;
    }
    if (probe >= text_.size() || text_[probe] != '(') {
      return false;
    }
    pos_ = after;
    return true;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

template <typename F>
auto parse_whole(std::string_view text, F&& f) {
  Parser p(text);
  auto out = f(p);
  p.finish();
  return out;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  return parse_whole(text, [](Parser& p) { return p.rational(); });
}

PLHomeo parse_pl(std::string_view text) {
  return parse_whole(text, [](Parser& p) { return p.pl(); });
}

CofinSet parse_set(std::string_view text) {
  return parse_whole(text, [](Parser& p) { return p.set(); });
}

PHom parse_element(std::string_view text) {
  return parse_whole(text, [](Parser& p) { return p.element(); });
}

GSPair parse_pair(std::string_view text) {
  return parse_whole(text, [](Parser& p) { return p.pair(); });
}

std::string format(const Rat& r) { return r.str(); }

std::string format(const PLHomeo& f) {
  if (f.is_affine()) {
    return "aff(" + f.left_slope().str() + "," + f.intercept().str() + ")";
  }
  std::string out = "pl(" + f.left_slope().str() + ";";
  bool first = true;
  for (const Knot& k : f.knots()) {
    if (!first) out += ",";
    first = false;
    out += "(" + k.x.str() + "," + k.y.str() + ")";
  }
  out += ";" + f.right_slope().str() + ")";
  return out;
}

std::string format(const CofinSet& s) {
  std::string out = "{";
  bool first = true;
  for (const Rat& x : s) {
    if (!first) out += ",";
    first = false;
    out += x.str();
  }
  return out + "}";
}

std::string format(const PHom& a) {
  return "phom(" + format(a.extension()) + ";" + format(a.excluded()) + ")";
}

std::string format(const GSPair& p) {
  return "pair(" + format(p.group) + ";" + format(p.lattice) + ")";
}

std::ostream& operator<<(std::ostream& os, const PLHomeo& f) {
  return os << format(f);
}
std::ostream& operator<<(std::ostream& os, const CofinSet& s) {
  return os << format(s);
}
std::ostream& operator<<(std::ostream& os, const PHom& a) {
  return os << format(a);
}
std::ostream& operator<<(std::ostream& os, const GSPair& p) {
  return os << format(p);
}

}  // namespace cofin
