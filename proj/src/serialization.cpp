#include "fock/serialization.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace fock {

namespace {

bool coeff_prints_negative(const GaussianRational& c) {
  if (c.im() == 0) return c.re() < 0;
  if (c.re() == 0) return c.im() < 0;
  return false;  // full complex coefficients print parenthesized
}

std::string monomial_text(const Exponents<3>& e) {
  std::ostringstream os;
  bool first = true;
  for (unsigned axis = 1; axis <= 3; ++axis) {
    unsigned d = e[axis - 1];
    if (d == 0) continue;
    if (!first) os << "*";
    os << "p" << axis;
    if (d > 1) os << "^" << d;
    first = false;
  }
  return os.str();
}

// coefficient text without a leading minus (the caller folds signs into
// the joining +/-); `mono` tells whether a monomial part follows.
std::string coeff_text(const GaussianRational& c, bool has_mono) {
  mpq_class re = c.re(), im = c.im();
  if (im == 0) {
    if (has_mono && re == 1) return "";
    return re.get_str();
  }
  if (re == 0) {
    if (im == 1) return "i";
    if (im == -1) return "-i";
    return im.get_str() + "*i";
  }
  std::string i_part = im == 1 ? "i" : (im == -1 ? "-i" : im.get_str() + "*i");
  std::string joined;
  if (!i_part.empty() && i_part[0] == '-')
    joined = re.get_str() + " - " + i_part.substr(1);
  else
    joined = re.get_str() + " + " + i_part;
  return "(" + joined + ")";
}

std::string numerator_text(const Polynomial3& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    bool neg = coeff_prints_negative(c);
    GaussianRational cc = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string mono = monomial_text(e);
    std::string coef = coeff_text(cc, !mono.empty());
    if (coef.empty())
      os << (mono.empty() ? "1" : mono);
    else if (mono.empty())
      os << coef;
    else
      os << coef << "*" << mono;
  }
  return os.str();
}

}  // namespace

std::string to_text(const Polynomial3& p) { return numerator_text(p); }

std::string to_text(const PolyField& f) {
  std::string num = numerator_text(f.numerator());
  if (f.denom_power() == 0) return num;
  std::string wrapped =
      f.numerator().term_count() > 1 ? "(" + num + ")" : num;
  std::string out = wrapped + " / (1+p^2)";
  if (f.denom_power() > 1) out += "^" + std::to_string(f.denom_power());
  return out;
}

std::string to_text(const RescaledField& f) {
  std::string num = numerator_text(f.numerator());
  if (f.denom_power() == 0) return num;
  mpq_class s2 = f.scale() * f.scale();
  std::string base =
      s2 == 1 ? "(1+p^2)" : "(1+" + s2.get_str() + "*p^2)";
  std::string wrapped =
      f.numerator().term_count() > 1 ? "(" + num + ")" : num;
  std::string out = wrapped + " / " + base;
  if (f.denom_power() > 1) out += "^" + std::to_string(f.denom_power());
  return out;
}

// ---- text parser ---------------------------------------------------------

namespace {

struct Token {
  enum Type { Rational, Imag, Var, PlainP, Plus, Minus, Star, Caret, LParen,
              RParen, Slash, End };
  Type type = End;
  mpq_class value;   // Rational
  unsigned axis = 0; // Var

  static Token of(Type t) {
    Token tk;
    tk.type = t;
    return tk;
  }
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ >= s_.size()) {
      tok_ = Token::of(Token::End);
      return;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      // a/b only when digits follow immediately; a bare '/' is the
      // denominator separator
      if (pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
          std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
          ++pos_;
      }
      tok_ = Token::of(Token::Rational);
      tok_.value = mpq_class(s_.substr(start, pos_ - start));
      tok_.value.canonicalize();
      return;
    }
    if (c == 'i') {
      ++pos_;
      tok_ = Token::of(Token::Imag);
      return;
    }
    if (c == 'p') {
      if (pos_ + 1 < s_.size() && s_[pos_ + 1] >= '1' && s_[pos_ + 1] <= '3') {
        tok_ = Token::of(Token::Var);
        tok_.axis = static_cast<unsigned>(s_[pos_ + 1] - '0');
        pos_ += 2;
      } else {
        tok_ = Token::of(Token::PlainP);
        ++pos_;
      }
      return;
    }
    ++pos_;
    switch (c) {
      case '+': tok_ = Token::of(Token::Plus); return;
      case '-': tok_ = Token::of(Token::Minus); return;
      case '*': tok_ = Token::of(Token::Star); return;
      case '^': tok_ = Token::of(Token::Caret); return;
      case '(': tok_ = Token::of(Token::LParen); return;
      case ')': tok_ = Token::of(Token::RParen); return;
      case '/': tok_ = Token::of(Token::Slash); return;
    }
    throw std::invalid_argument(std::string("unexpected character '") + c +
                                "' in field expression");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) {}

  PolyField parse_field() {
    Polynomial3 num = parse_expr();
    unsigned denom = 0;
    if (lex_.peek().type == Token::Slash) {
      lex_.next();
      denom = parse_denominator();
    }
    expect(Token::End, "trailing input");
    return {std::move(num), denom};
  }

 private:
  Polynomial3 parse_expr() {
    bool neg = consume_sign();
    Polynomial3 acc = parse_term();
    if (neg) acc = GaussianRational(-1) * acc;
    while (lex_.peek().type == Token::Plus || lex_.peek().type == Token::Minus) {
      bool minus = lex_.next().type == Token::Minus;
      Polynomial3 t = parse_term();
      acc += minus ? GaussianRational(-1) * t : t;
    }
    return acc;
  }

  Polynomial3 parse_term() {
    Polynomial3 acc = parse_factor();
    while (lex_.peek().type == Token::Star) {
      lex_.next();
      acc *= parse_factor();
    }
    return acc;
  }

  Polynomial3 parse_factor() {
    const Token t = lex_.next();
    Polynomial3 base;
    switch (t.type) {
      case Token::Rational:
        base = Polynomial3::constant(GaussianRational(t.value));
        break;
      case Token::Imag:
        base = Polynomial3::constant(GaussianRational::i());
        break;
      case Token::Var:
        base = Polynomial3::variable(t.axis);
        break;
      case Token::LParen:
        base = parse_expr();
        expect(Token::RParen, "expected ')'");
        break;
      default:
        throw std::invalid_argument("expected coefficient, i, p1/p2/p3 or '('");
    }
    if (lex_.peek().type == Token::Caret) {
      lex_.next();
      unsigned e = parse_uint();
      Polynomial3 p = Polynomial3::one();
      for (unsigned j = 0; j < e; ++j) p *= base;
      return p;
    }
    return base;
  }

  // the literal (1+p^2) with optional ^N
  unsigned parse_denominator() {
    expect(Token::LParen, "expected '(1+p^2)'");
    Token one = lex_.next();
    if (one.type != Token::Rational || one.value != 1)
      throw std::invalid_argument("denominator must be (1+p^2)");
    expect(Token::Plus, "denominator must be (1+p^2)");
    expect(Token::PlainP, "denominator must be (1+p^2)");
    expect(Token::Caret, "denominator must be (1+p^2)");
    Token two = lex_.next();
    if (two.type != Token::Rational || two.value != 2)
      throw std::invalid_argument("denominator must be (1+p^2)");
    expect(Token::RParen, "denominator must be (1+p^2)");
    if (lex_.peek().type == Token::Caret) {
      lex_.next();
      return parse_uint();
    }
    return 1;
  }

  unsigned parse_uint() {
    Token t = lex_.next();
    if (t.type != Token::Rational || t.value.get_den() != 1 || t.value < 0 ||
        t.value > 4096)
      throw std::invalid_argument("expected a small non-negative exponent");
    return static_cast<unsigned>(t.value.get_num().get_ui());
  }

  bool consume_sign() {
    if (lex_.peek().type == Token::Minus) {
      lex_.next();
      return true;
    }
    if (lex_.peek().type == Token::Plus) lex_.next();
    return false;
  }

  void expect(Token::Type type, const char* msg) {
    if (lex_.next().type != type) throw std::invalid_argument(msg);
  }

  Lexer lex_;
};

}  // namespace

PolyField polyfield_from_text(const std::string& text) {
  Parser p(text);
  return p.parse_field();
}

// ---- JSON -----------------------------------------------------------------

nlohmann::json polyfield_to_json(const PolyField& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : f.numerator().terms()) {
    terms.push_back({{"e", {e[0], e[1], e[2]}},
                     {"re", c.re_str()},
                     {"im", c.im_str()}});
  }
  return {{"terms", std::move(terms)}, {"denomPower", f.denom_power()}};
}

PolyField polyfield_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.contains("denomPower"))
    throw std::invalid_argument("field JSON needs terms and denomPower");
  auto bounded = [](const nlohmann::json& v) -> unsigned {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
        v.get<std::int64_t>() > 4096)
      throw std::invalid_argument("exponents must lie in [0, 4096]");
    return static_cast<unsigned>(v.get<std::int64_t>());
  };
  Polynomial3 num;
  for (const auto& t : j.at("terms")) {
    const auto& e = t.at("e");
    if (!e.is_array() || e.size() != 3)
      throw std::invalid_argument("term exponents must be a 3-array");
    Exponents<3> exp{bounded(e[0]), bounded(e[1]), bounded(e[2])};
    num.add_term(exp, GaussianRational::from_strings(
                          t.at("re").get<std::string>(),
                          t.at("im").get<std::string>()));
  }
  return {std::move(num), bounded(j.at("denomPower"))};
}

nlohmann::json rescaled_to_json(const RescaledField& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : f.numerator().terms()) {
    terms.push_back({{"e", {e[0], e[1], e[2]}},
                     {"re", c.re_str()},
                     {"im", c.im_str()}});
  }
  return {{"terms", std::move(terms)},
          {"denomPower", f.denom_power()},
          {"scale", f.scale().get_str()}};
}

nlohmann::json operator_to_json(const LinearOperator& op) {
  using Kind = LinearOperator::Kind;
  nlohmann::json j;
  switch (op.kind()) {
    case Kind::Identity: j["op"] = "identity"; break;
    case Kind::EulerDegree: j["op"] = "eulerDegree"; break;
    case Kind::Laplacian: j["op"] = "laplacian"; break;
    case Kind::Partial:
      j["op"] = "partial";
      j["axis"] = op.axis();
      break;
    case Kind::CoordinateMul:
      j["op"] = "coordinateMul";
      j["axis"] = op.axis();
      break;
    case Kind::RingMul:
      j["op"] = "ringMul";
      j["field"] = polyfield_to_json(op.field());
      break;
    case Kind::Scale:
      j["op"] = "scale";
      j["re"] = op.scalar().re_str();
      j["im"] = op.scalar().im_str();
      break;
    case Kind::Compose: j["op"] = "compose"; break;
    case Kind::Add: j["op"] = "add"; break;
  }
  if (op.child_count() > 0) {
    nlohmann::json kids = nlohmann::json::array();
    for (std::size_t i = 0; i < op.child_count(); ++i)
      kids.push_back(operator_to_json(op.child(i)));
    j["children"] = std::move(kids);
  }
  return j;
}

LinearOperator operator_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("op"))
    throw std::invalid_argument("operator spec needs an \"op\" field");
  const std::string op = j.at("op").get<std::string>();

  auto children = [&]() -> std::vector<LinearOperator> {
    std::vector<LinearOperator> kids;
    if (!j.contains("children"))
      throw std::invalid_argument(op + " needs children");
    for (const auto& k : j.at("children")) kids.push_back(operator_from_json(k));
    return kids;
  };
  auto axis = [&]() -> unsigned {
    if (!j.contains("axis")) throw std::invalid_argument(op + " needs an axis");
    return j.at("axis").get<unsigned>();
  };

  if (op == "identity") return LinearOperator::identity();
  if (op == "eulerDegree") return LinearOperator::euler_degree();
  if (op == "laplacian") return LinearOperator::laplacian();
  if (op == "partial") return LinearOperator::partial(axis());
  if (op == "coordinateMul") return LinearOperator::coordinate_mul(axis());
  if (op == "ringMul") {
    if (!j.contains("field")) throw std::invalid_argument("ringMul needs a field");
    return LinearOperator::ring_mul(polyfield_from_json(j.at("field")));
  }
  if (op == "compose") {
    auto kids = children();
    if (kids.size() != 2)
      throw std::invalid_argument("compose takes exactly two children");
    return compose(kids[0], kids[1]);
  }
  if (op == "add") {
    auto kids = children();
    if (kids.size() < 2) throw std::invalid_argument("add takes two or more children");
    LinearOperator acc = kids[0];
    for (std::size_t i = 1; i < kids.size(); ++i) acc = acc + kids[i];
    return acc;
  }
  if (op == "scale") {
    auto kids = children();
    if (kids.size() != 1) throw std::invalid_argument("scale takes one child");
    if (!j.contains("re") || !j.contains("im"))
      throw std::invalid_argument("scale needs re and im");
    return scale(GaussianRational::from_strings(j.at("re").get<std::string>(),
                                                j.at("im").get<std::string>()),
                 kids[0]);
  }
  throw std::invalid_argument("unknown operator primitive: " + op);
}

LinearOperator build_operator(const nlohmann::json& spec) {
  return operator_from_json(spec);
}

nlohmann::json state_to_json(const QuantumState& s, const std::string& space,
                             int scale) {
  const PolyField& f = space == "a" ? s.a : s.b;
  return {{"n", s.n},     {"l", s.l},         {"m", s.m},
          {"k", s.k},     {"space", space},   {"scale", scale},
          {"field", polyfield_to_json(f)}};
}

nlohmann::json sphere_point_to_json(const SpherePoint& s) {
  return {{"xi", {s.xi[0], s.xi[1], s.xi[2]}}, {"xi0", s.xi0}};
}

SpherePoint sphere_point_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("xi") || !j.contains("xi0") ||
      !j.at("xi").is_array() || j.at("xi").size() != 3)
    throw std::invalid_argument("sphere point JSON needs xi[3] and xi0");
  SpherePoint s;
  for (int k = 0; k < 3; ++k) s.xi[k] = j.at("xi")[k].get<double>();
  s.xi0 = j.at("xi0").get<double>();
  return s;
}

nlohmann::json check_report_to_json(const CheckReport& r) {
  nlohmann::json meta = nlohmann::json::object();
  for (const auto& [k, v] : r.metadata) meta[k] = v;
  nlohmann::json j = {{"name", r.name},
                      {"residual", r.residual},
                      {"tolerance", r.tolerance},
                      {"passed", r.passed},
                      {"metadata", std::move(meta)}};
  if (!r.records.empty()) {
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& rec : r.records)
      recs.push_back({{"identity", rec.identity},
                      {"testElement", rec.test_element},
                      {"residualIsZero", rec.residual_is_zero}});
    j["records"] = std::move(recs);
  }
  return j;
}

}  // namespace fock
