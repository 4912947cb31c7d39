#include "bimult/problem.hpp"

#include <cctype>
#include <sstream>

namespace bimult {

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  int line = 1, col = 1;

  explicit Cursor(const std::string& text) : s(text) {}

  void bump() {
    if (i < s.size()) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  }
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) bump();
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      bump();
      return true;
    }
    return false;
  }
  void expect(char c, const std::string& what) {
    if (!accept(c)) throw SyntaxError(line, col, what);
  }
  bool accept_word(const std::string& w) {
    skip_ws();
    if (s.compare(i, w.size(), w) == 0) {
      for (size_t k = 0; k < w.size(); ++k) bump();
      return true;
    }
    return false;
  }
  void expect_word(const std::string& w) {
    if (!accept_word(w)) throw SyntaxError(line, col, "'" + w + "'");
  }
  long integer() {
    skip_ws();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = (s[i] == '-');
      bump();
    }
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw SyntaxError(line, col, "an integer");
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > (1L << 40)) throw SyntaxError(line, col, "a smaller integer");
      bump();
    }
    return neg ? -v : v;
  }
};

// polynomial in t as a raw coefficient vector (constant term first)
std::vector<long> parse_tpoly(Cursor& c) {
  std::vector<long> coeffs;
  auto put = [&](long e, long v) {
    if (e > 64) throw SyntaxError(c.line, c.col, "a t-exponent below 65");
    if (static_cast<long>(coeffs.size()) <= e) coeffs.resize(e + 1, 0);
    coeffs[e] += v;
  };
  bool first = true;
  while (true) {
    long sign = 1;
    c.skip_ws();
    if (c.accept('-')) {
      sign = -1;
    } else if (c.accept('+')) {
      sign = 1;
    } else if (!first) {
      break;
    }
    first = false;
    c.skip_ws();
    long coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff = c.integer();
      have_coeff = true;
    }
    if (c.accept_word("*") || (!have_coeff && c.peek() == 't')) {
      c.expect('t', "'t'");
      long e = 1;
      if (c.accept('^')) e = c.integer();
      put(e, sign * coeff);
    } else if (have_coeff && c.peek() == 't') {
      // allow "2t" as well as "2*t"
      c.bump();
      long e = 1;
      if (c.accept('^')) e = c.integer();
      put(e, sign * coeff);
    } else if (have_coeff) {
      put(0, sign * coeff);
    } else {
      throw SyntaxError(c.line, c.col, "a coefficient or 't'");
    }
  }
  if (coeffs.empty()) coeffs.push_back(0);
  return coeffs;
}

FFElem tpoly_to_elem(const std::vector<long>& coeffs, const Field& F) {
  FFElem acc = F.zero(), pw = F.one(), g = F.gen();
  for (long c : coeffs) {
    acc = acc + F.from_int(c) * pw;
    pw = pw * g;
  }
  return acc;
}

SkewPoly parse_poly(Cursor& c, const Field& F) {
  SkewPoly acc = SkewPoly::zero(F);
  bool first = true;
  while (true) {
    long sign = 1;
    c.skip_ws();
    if (c.accept('-')) {
      sign = -1;
    } else if (c.accept('+')) {
      sign = 1;
    } else if (!first) {
      break;
    }
    first = false;
    c.skip_ws();
    FFElem coeff = F.one();
    bool have_coeff = false;
    char ch = c.peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      coeff = F.from_int(c.integer());
      have_coeff = true;
    } else if (ch == '(') {
      c.bump();
      coeff = tpoly_to_elem(parse_tpoly(c), F);
      c.expect(')', "')'");
      have_coeff = true;
    }
    if (have_coeff && !c.accept('*')) {
      // bare constant term
      SkewPoly t = SkewPoly::constant(F, sign < 0 ? -coeff : coeff);
      acc = acc + t;
      continue;
    }
    c.expect('F', "'F'");
    long e = 1;
    if (c.accept('^')) e = c.integer();
    SkewPoly t = SkewPoly::monomial(sign < 0 ? -coeff : coeff, e);
    acc = acc + t;
  }
  return acc;
}

}  // namespace

bool Problem::operator==(const Problem& o) const {
  return field.same(o.field) && matrix == o.matrix;
}

Problem parse_problem(const std::string& text) {
  Cursor c(text);
  c.expect_word("p");
  c.expect('=', "'=' after p");
  long p = c.integer();
  c.expect_word("n");
  c.expect('=', "'=' after n");
  long n = c.integer();
  std::optional<std::vector<long>> modulus;
  if (c.accept_word("mod")) {
    c.expect('=', "'=' after mod");
    modulus = parse_tpoly(c);
    modulus->resize(std::max<size_t>(modulus->size(), n + 1), 0);
  }
  Problem prob;
  prob.field = Field::create(p, n, modulus);
  c.expect('|', "'|' between the field and the matrix");
  c.expect('[', "'['");
  std::vector<std::vector<SkewPoly>> rows;
  while (true) {
    std::vector<SkewPoly> row;
    row.push_back(parse_poly(c, prob.field));
    while (c.accept(',')) row.push_back(parse_poly(c, prob.field));
    rows.push_back(std::move(row));
    if (!c.accept(';')) break;
  }
  c.expect(']', "']'");
  if (!c.eof()) throw SyntaxError(c.line, c.col, "end of input");
  size_t width = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != width) throw SyntaxError(c.line, c.col, "rows of equal length");
  prob.matrix = SkewMatrix(prob.field, static_cast<long>(rows.size()), static_cast<long>(width));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < width; ++j)
      prob.matrix.at(static_cast<long>(i), static_cast<long>(j)) = rows[i][j];
  return prob;
}

std::string print_matrix(const SkewMatrix& m) { return m.to_string(); }

std::string print_problem(const Problem& p) {
  std::ostringstream os;
  os << p.field.spec_text() << " | " << print_matrix(p.matrix);
  return os.str();
}

}  // namespace bimult
