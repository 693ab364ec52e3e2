#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <utility>

#include "qnat/cli.hpp"

namespace qnat {

namespace {

std::string describe(std::size_t pos, const std::vector<std::string>& expected,
                     const std::string& text) {
  std::string msg = "parse error at offset " + std::to_string(pos) + " in '" + text + "': expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) msg += i + 1 == expected.size() ? " or " : ", ";
    msg += expected[i];
  }
  return msg;
}

struct Named {
  const char* name;
  FunctionSpec (*make)(double);
};

// Longer names first where one is a prefix of another.
constexpr Named kNamed[] = {
    {"sinq2", FunctionSpec::sin_second},  {"cosq2", FunctionSpec::cos_second},
    {"sinq1", FunctionSpec::sin_first},   {"cosq1", FunctionSpec::cos_first},
    {"coshq", FunctionSpec::cosh_second}, {"sinhq", FunctionSpec::sinh_second},
    {"exp", FunctionSpec::exp_classical}, {"eq", FunctionSpec::exp_second},
    {"Eq", FunctionSpec::exp_first},
};

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  FunctionSpec parse() {
    std::vector<FunctionSpec> terms;
    skip();
    bool negative = false;
    if (peek('+') || peek('-')) negative = text_[pos_++] == '-';
    terms.push_back(signed_term(negative));
    for (;;) {
      skip();
      if (pos_ == text_.size()) break;
      if (!peek('+') && !peek('-')) fail({"'+'", "'-'", "end of input"});
      negative = text_[pos_++] == '-';
      terms.push_back(signed_term(negative));
    }
    if (terms.size() == 1) return std::move(terms.front());
    return FunctionSpec::sum(std::move(terms));
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(pos_, std::move(expected), text_);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  bool starts_number() const {
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+';
  }

  void expect(char c) {
    skip();
    if (!peek(c)) fail({std::string("'") + c + "'"});
    ++pos_;
  }

  void expect_word(const char* w) {
    skip();
    const std::string word(w);
    if (text_.compare(pos_, word.size(), word) != 0) fail({"'" + word + "'"});
    pos_ += word.size();
  }

  double number() {
    skip();
    const std::size_t start = pos_;
    std::size_t i = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i, ++n;
      return n;
    };
    if (i < text_.size() && (text_[i] == '+' || text_[i] == '-')) ++i;
    std::size_t n = digits();
    if (i < text_.size() && text_[i] == '.') {
      ++i;
      n += digits();
    }
    if (n == 0) fail({"number"});
    if (i < text_.size() && (text_[i] == 'e' || text_[i] == 'E')) {
      std::size_t j = i + 1;
      if (j < text_.size() && (text_[j] == '+' || text_[j] == '-')) ++j;
      const std::size_t before = j;
      while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
      if (j > before) i = j;
    }
    const std::string token = text_.substr(start, i - start);
    const double x = std::strtod(token.c_str(), nullptr);
    if (!std::isfinite(x)) fail({"finite number"});
    pos_ = i;
    return x;
  }

  FunctionSpec signed_term(bool negative) {
    FunctionSpec t = term();
    if (!negative) return t;
    if (t.kind == SpecKind::Constant) return FunctionSpec::constant(-t.param);
    if (t.kind == SpecKind::Scale) return FunctionSpec::scale(-t.param, t.children.front());
    return FunctionSpec::scale(-1.0, std::move(t));
  }

  FunctionSpec term() {
    skip();
    if (starts_number() && !peek('+') && !peek('-')) {
      const double c = number();
      skip();
      if (!peek('*')) return FunctionSpec::constant(c);
      ++pos_;
      return FunctionSpec::scale(c, atom());
    }
    return atom();
  }

  // [number '*'] 't' inside a named call.
  double frequency() {
    skip();
    double a = 1.0;
    if (starts_number()) {
      a = number();
      expect('*');
    }
    skip();
    if (!peek('t')) fail(a == 1.0 ? std::vector<std::string>{"number", "'t'"}
                                  : std::vector<std::string>{"'t'"});
    ++pos_;
    return a;
  }

  FunctionSpec atom() {
    skip();
    for (const auto& n : kNamed) {
      const std::string name(n.name);
      if (text_.compare(pos_, name.size(), name) == 0) {
        pos_ += name.size();
        expect('(');
        const double a = frequency();
        expect(')');
        return n.make(a);
      }
    }
    if (text_.compare(pos_, 2, "H(") == 0) {
      pos_ += 2;
      expect_word("t");
      expect('-');
      const double a = number();
      expect(')');
      return FunctionSpec::heaviside(a);
    }
    if (text_.compare(pos_, 3, "ps(") == 0) {
      pos_ += 3;
      const double step = number();
      expect(';');
      std::vector<double> coeffs{number()};
      for (;;) {
        skip();
        if (peek(')')) break;
        if (!peek(',')) fail({"','", "')'"});
        ++pos_;
        coeffs.push_back(number());
      }
      ++pos_;
      return FunctionSpec::power_series(std::move(coeffs), step);
    }
    if (peek('t')) {
      ++pos_;
      skip();
      if (!peek('^')) return FunctionSpec::monomial(1.0);
      ++pos_;
      return FunctionSpec::monomial(number());
    }
    fail({"number", "'t'", "function name"});
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected,
                       const std::string& text)
    : Error(describe(position, expected, text)), position_(position), expected_(std::move(expected)) {}

FunctionSpec parse_function(const std::string& text) { return Parser(text).parse(); }

std::string format_number(double x) {
  char buf[32];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

namespace {

const char* call_name(SpecKind k) {
  switch (k) {
    case SpecKind::ExpClassical: return "exp";
    case SpecKind::ExpFirst: return "Eq";
    case SpecKind::ExpSecond: return "eq";
    case SpecKind::SinSecond: return "sinq2";
    case SpecKind::CosSecond: return "cosq2";
    case SpecKind::SinFirst: return "sinq1";
    case SpecKind::CosFirst: return "cosq1";
    case SpecKind::CoshSecond: return "coshq";
    case SpecKind::SinhSecond: return "sinhq";
    default: return nullptr;
  }
}

std::string atom_text(const FunctionSpec& f) {
  switch (f.kind) {
    case SpecKind::Monomial: return f.param == 1.0 ? "t" : "t^" + format_number(f.param);
    case SpecKind::Heaviside: return "H(t-" + format_number(f.param) + ")";
    case SpecKind::PowerSeries: {
      if (f.coefficients.empty()) throw UnknownForm("empty power series has no grammar string");
      std::string s = "ps(" + format_number(f.param) + ";";
      for (std::size_t i = 0; i < f.coefficients.size(); ++i)
        s += (i ? "," : "") + format_number(f.coefficients[i]);
      return s + ")";
    }
    default: break;
  }
  if (const char* name = call_name(f.kind))
    return std::string(name) + "(" + (f.param == 1.0 ? "" : format_number(f.param) + "*") + "t)";
  throw UnknownForm("no grammar string for this function");
}

// Flattens to a list of terms, each a Constant, an atom, or Scale(c, atom).
void collect(const FunctionSpec& f, double c, std::vector<FunctionSpec>& out) {
  switch (f.kind) {
    case SpecKind::Sum:
      for (const auto& child : f.children) collect(child, c, out);
      return;
    case SpecKind::Scale: collect(f.children.front(), c * f.param, out); return;
    case SpecKind::Constant: out.push_back(FunctionSpec::constant(c * f.param)); return;
    default: out.push_back(c == 1.0 ? f : FunctionSpec::scale(c, f));
  }
}

// Term text without its leading sign; `negative` reports the sign.
std::string term_text(const FunctionSpec& t, bool& negative) {
  if (t.kind == SpecKind::Constant) {
    negative = std::signbit(t.param);
    return format_number(std::fabs(t.param));
  }
  if (t.kind == SpecKind::Scale) {
    negative = std::signbit(t.param);
    const double c = std::fabs(t.param);
    return (c == 1.0 && negative ? "" : format_number(c) + "*") + atom_text(t.children.front());
  }
  negative = false;
  return atom_text(t);
}

}  // namespace

std::string format_function(const FunctionSpec& f) {
  std::vector<FunctionSpec> terms;
  collect(normalize(f, QContext{}), 1.0, terms);
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    bool negative = false;
    const std::string body = term_text(terms[i], negative);
    if (i == 0)
      s += (negative ? "-" : "") + body;
    else
      s += (negative ? " - " : " + ") + body;
  }
  return s;
}

}  // namespace qnat
