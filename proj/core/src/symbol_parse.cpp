#include "fock/symbol_parse.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "fock/errors.hpp"
#include "overloaded.hpp"

namespace fock {
namespace {

using detail::overloaded;

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t position() const { return offset_ + pos_; }
  std::string_view rest() const { return text_.substr(pos_); }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, position()); }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view w) {
    if (rest().substr(0, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }

  double number() {
    std::size_t start = pos_;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    double value = 0.0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) {
      pos_ = start;
      fail("expected a number");
    }
    pos_ += static_cast<std::size_t>(ptr - first);
    if (!std::isfinite(value)) {
      pos_ = start;
      fail("number out of range");
    }
    return negative ? -value : value;
  }

  int integer() {
    const std::size_t start = pos_;
    const double v = number();
    if (v != std::floor(v) || std::abs(v) > 1e9) {
      pos_ = start;
      fail("expected an integer");
    }
    return static_cast<int>(v);
  }

  cplx complex_number() {
    const double first = number();
    if (accept('i')) return {0.0, first};
    if (peek() == '+' || peek() == '-') {
      const double second = number();
      expect('i');
      return {first, second};
    }
    return {first, 0.0};
  }

  std::vector<double> number_list(char terminator) {
    std::vector<double> out;
    out.push_back(number());
    while (peek() != terminator && !done()) {
      expect(',');
      out.push_back(number());
    }
    return out;
  }

  void finish() const {
    if (!done()) fail("unexpected trailing input");
  }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

RadialProfile load_profile_csv(const std::string& path, std::size_t position) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open profile file '" + path + "'", position);
  std::vector<double> radii, values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double r = 0.0, v = 0.0;
    if (!(row >> r >> v)) {
      if (radii.empty() && line_no == 1) continue;  // header
      throw ParseError("malformed row " + std::to_string(line_no) + " in '" + path + "'", position);
    }
    radii.push_back(r);
    values.push_back(v);
  }
  try {
    return RadialProfile::sampled(std::move(radii), std::move(values), path);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid profile file: ") + e.what(), position);
  }
}

// Re-tags constructor validation failures with the token position.
template <class F>
auto guarded(std::size_t start, F&& make) {
  try {
    return make();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), start);
  }
}

Symbol parse_radial(Cursor& c) {
  const std::size_t start = c.position();
  if (c.accept_word("const:")) {
    const double v = c.number();
    c.finish();
    return guarded(start, [&] { return RadialProfile::constant(v); });
  }
  if (c.accept_word("pow:")) {
    const int k = c.integer();
    c.finish();
    return guarded(start, [&] { return RadialProfile::power(k); });
  }
  if (c.accept_word("ind:")) {
    const double r = c.number();
    c.finish();
    return guarded(start, [&] { return RadialProfile::indicator(r); });
  }
  if (c.accept_word("pw:")) {
    auto edges = c.number_list('|');
    c.expect('|');
    auto values = c.number_list('|');
    c.expect('|');
    const double tail = c.number();
    c.finish();
    return guarded(start, [&] { return RadialProfile::piecewise(edges, values, tail); });
  }
  if (c.accept_word("rat:")) {
    auto params = c.number_list('\0');
    c.finish();
    if (params.size() != 2 && params.size() != 3) throw ParseError("rat expects a,b or a,b,scale", start);
    return guarded(start, [&] {
      return RadialProfile::rational(params[0], params[1], params.size() == 3 ? params[2] : 1.0);
    });
  }
  if (c.accept_word("samp:")) {
    auto radii = c.number_list('|');
    c.expect('|');
    auto values = c.number_list('\0');
    c.finish();
    return guarded(start, [&] { return RadialProfile::sampled(radii, values); });
  }
  if (c.accept_word("file:")) {
    const auto path_pos = c.position();
    std::string path(c.rest());
    if (path.empty()) c.fail("expected a file path");
    return load_profile_csv(path, path_pos);
  }
  c.fail("unknown radial profile kind");
}

Symbol parse_measure(Cursor& c) {
  c.expect('[');
  std::vector<Atom> atoms;
  const std::size_t start = c.position();
  if (!c.accept(']')) {
    do {
      c.expect('(');
      const double re = c.number();
      c.expect(',');
      const double im = c.number();
      c.expect(',');
      const double w = c.number();
      c.expect(')');
      atoms.push_back({{re, im}, w});
    } while (c.accept(';'));
    c.expect(']');
  }
  c.finish();
  return guarded(start, [&] { return SignedAtomicMeasure(atoms); });
}

Symbol parse_general(Cursor& c) {
  if (c.accept_word("re")) {
    c.finish();
    return catalog::real_part();
  }
  if (c.accept_word("dir")) {
    c.finish();
    return catalog::directional();
  }
  if (c.accept_word("half:")) {
    const double x0 = c.number();
    c.finish();
    return catalog::half_plane(x0);
  }
  c.fail("unknown general symbol");
}

Symbol parse_at(std::string_view text, std::size_t offset) {
  Cursor c(text, offset);
  if (c.accept_word("radial:")) return parse_radial(c);
  if (c.accept_word("weyl:")) {
    const cplx z = c.complex_number();
    c.finish();
    return WeylPhase{z};
  }
  if (c.accept_word("measure:")) return parse_measure(c);
  if (c.accept_word("general:")) return parse_general(c);
  if (c.accept_word("trans:")) {
    const cplx z = c.complex_number();
    c.expect(':');
    const std::size_t sub = c.position() - offset;
    auto base = parse_at(text.substr(sub), offset + sub);
    if (base.is<SignedAtomicMeasure>()) throw ParseError("cannot translate a measure", offset + sub);
    return translate(base, z);
  }
  c.fail("unknown symbol kind (expected radial:, weyl:, measure:, general: or trans:)");
}

std::string join(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += format_number(xs[i]);
  }
  return out;
}

std::string print_profile(const RadialProfile& f) {
  return std::visit(
      overloaded{
          [](const radial::Constant& c) { return "radial:const:" + format_number(c.value); },
          [](const radial::Power& p) { return "radial:pow:" + std::to_string(p.exponent); },
          [](const radial::Indicator& i) { return "radial:ind:" + format_number(i.radius); },
          [](const radial::PiecewiseConstant& pw) {
            return "radial:pw:" + join(pw.edges) + "|" + join(pw.values) + "|" + format_number(pw.tail);
          },
          [](const radial::Rational& q) {
            std::string s = "radial:rat:" + format_number(q.a) + "," + format_number(q.b);
            if (q.scale != 1.0) s += "," + format_number(q.scale);
            return s;
          },
          [](const radial::Sampled& s) {
            if (!s.source.empty()) return "radial:file:" + s.source;
            return "radial:samp:" + join(s.radii) + "|" + join(s.values);
          },
      },
      f.variant());
}

}  // namespace

std::string format_number(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) return std::to_string(x);
  return std::string(buf, ptr);
}

std::string format_complex(cplx z) {
  std::string im = format_number(z.imag());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return format_number(z.real()) + im + "i";
}

Symbol parse_symbol(std::string_view spec) { return parse_at(spec, 0); }

std::string print_symbol(const Symbol& s) {
  return std::visit(overloaded{
                        [](const RadialProfile& f) { return print_profile(f); },
                        [](const GeneralSymbol& g) { return "general:" + g.name; },
                        [](const WeylPhase& h) { return "weyl:" + format_complex(h.z); },
                        [](const Translated& tr) {
                          return "trans:" + format_complex(tr.shift) + ":" + print_symbol(*tr.base);
                        },
                        [](const SignedAtomicMeasure& m) {
                          std::string out = "measure:[";
                          for (std::size_t i = 0; i < m.atoms().size(); ++i) {
                            const auto& a = m.atoms()[i];
                            if (i) out += ';';
                            out += "(" + format_number(a.position.real()) + "," +
                                   format_number(a.position.imag()) + "," + format_number(a.weight) + ")";
                          }
                          return out + "]";
                        },
                    },
                    s.variant());
}

}  // namespace fock
