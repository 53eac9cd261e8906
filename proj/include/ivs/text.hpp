// Copyright 2026 The ivs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IVS_TEXT_HPP
#define IVS_TEXT_HPP

#include <cctype>
#include <sstream>
#include <string>

#include "ivs/homotopy.hpp"
#include "ivs/interval.hpp"
#include "ivs/loop.hpp"
#include "ivs/suspension.hpp"

namespace ivs {

// Canonical, newline-free text forms. print(parse(print(x))) == print(x) is
// bit-exact; the parser is whitespace tolerant.

// ---------------------------------------------------------------------------
// printing
// ---------------------------------------------------------------------------

inline std::string print_label(const PointedSym& x) { return x.name; }

inline std::string print_label(const SignLabel& x) {
  return x.value > 0 ? "+1" : x.value < 0 ? "-1" : "0";
}

inline std::string print_label(const SmashLabel& x) {
  if (x.is_base()) return "*";
  return "(" + x.point.name + "," + print_label(x.charge) + ")";
}

inline std::string print_susp(const SuspensionPoint& y) {
  if (y.is_base()) return "*";
  return "[" + q_str(y.coord) + "]^" + y.label.name;
}

inline std::string print_item(const IntervalItem& it) {
  return "[" + q_str(it.iv.left) + " " + q_str(it.iv.right) + " " +
         (it.iv.left_parity > 0 ? "+" : "-") + " " +
         (it.iv.right_parity > 0 ? "+" : "-") + "] " + it.label.name;
}

inline std::string print_items(const std::vector<IntervalItem>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += "; ";
    out += print_item(items[i]);
  }
  return out;
}

inline std::string print_window_bound(const std::optional<Q>& b, bool low) {
  if (!b) return low ? "-inf" : "+inf";
  return q_str(*b);
}

inline std::string print_class(const IntervalClass& c) {
  return "I(" + print_window_bound(c.win.lo, true) + "," +
         print_window_bound(c.win.hi, false) + "){" + print_items(c.items) + "}";
}

inline std::string print_seq(const IntervalSeq& s) {
  return "I(" + print_window_bound(s.win.lo, true) + "," +
         print_window_bound(s.win.hi, false) + "){" + print_items(s.items) + "}";
}

inline std::string print_mirror(const MirrorClass& m) {
  return "E(" + q_str(m.half_width) + "){" + print_items(m.right_items) + "}";
}

inline std::string print_point(const QPoint& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += q_str(p[i]);
  }
  return out + "]";
}

template <class M, class F>
std::string print_config_with(const PointConfig<M>& cfg, const F& print_payload) {
  std::string out = "C" + std::to_string(cfg.dim) + "{";
  for (std::size_t i = 0; i < cfg.items.size(); ++i) {
    if (i) out += "; ";
    out += print_point(cfg.items[i].first) + ":" + print_payload(cfg.items[i].second);
  }
  return out + "}";
}

inline std::string print_config(const PointConfig<PointedSym>& c) {
  return print_config_with(c, [](const PointedSym& x) { return print_label(x); });
}
inline std::string print_config(const PointConfig<SignLabel>& c) {
  return print_config_with(c, [](const SignLabel& x) { return print_label(x); });
}
inline std::string print_config(const PointConfig<SmashLabel>& c) {
  return print_config_with(c, [](const SmashLabel& x) { return print_label(x); });
}
inline std::string print_config(const PointConfig<SuspensionPoint>& c) {
  return print_config_with(c, [](const SuspensionPoint& y) { return print_susp(y); });
}
inline std::string print_config(const PointConfig<IntervalClass>& c) {
  return print_config_with(c, [](const IntervalClass& x) { return print_class(x); });
}
inline std::string print_config(const PointConfig<MirrorClass>& c) {
  return print_config_with(c, [](const MirrorClass& x) { return print_mirror(x); });
}

inline std::string print_tilde(const TildeI& e) {
  return "TI(" + q_str(e.eps) + "," + q_str(e.span) + ")" + print_config(e.config);
}

inline std::string print_tilde(const TildeE& e) {
  return "TE(" + q_str(e.eps) + "," + q_str(e.span) + ")" + print_config(e.config);
}

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

namespace detail {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    if (pos >= s.size()) throw ParseError("unexpected end of input");
    return s[pos];
  }
  char take() {
    char c = peek();
    ++pos;
    return c;
  }
  void expect(char c) {
    char got = take();
    if (got != c)
      throw ParseError(std::string("expected '") + c + "', got '" + got + "'");
  }
  bool try_take(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string token(const char* stop) {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) &&
           std::string(stop).find(s[pos]) == std::string::npos)
      ++pos;
    if (start == pos) throw ParseError("empty token");
    return s.substr(start, pos - start);
  }
  void expect_word(const std::string& w) {
    skip_ws();
    if (s.compare(pos, w.size(), w) != 0)
      throw ParseError("expected '" + w + "'");
    pos += w.size();
  }
};

inline Q parse_q_tok(Cursor& c) { return parse_q(c.token("]})(,;: ")); }

inline Parity parse_parity(Cursor& c) {
  char ch = c.take();
  if (ch == '+') {
    // allow "+1"
    if (c.pos < c.s.size() && c.s[c.pos] == '1') ++c.pos;
    return 1;
  }
  if (ch == '-') {
    if (c.pos < c.s.size() && c.s[c.pos] == '1') ++c.pos;
    return -1;
  }
  throw ParseError("expected parity '+' or '-'");
}

inline PointedSym parse_sym(Cursor& c) {
  std::string t = c.token("]})(,;:^ ");
  return PointedSym{t};
}

inline IntervalItem parse_item(Cursor& c) {
  c.expect('[');
  Q l = parse_q_tok(c);
  Q r = parse_q_tok(c);
  Parity pl = parse_parity(c);
  Parity pr = parse_parity(c);
  c.expect(']');
  PointedSym lab = parse_sym(c);
  return IntervalItem{Interval{l, r, pl, pr}, lab};
}

inline std::vector<IntervalItem> parse_item_list(Cursor& c) {
  std::vector<IntervalItem> items;
  c.expect('{');
  if (c.try_take('}')) return items;
  while (true) {
    items.push_back(parse_item(c));
    if (c.try_take(';')) continue;
    c.expect('}');
    break;
  }
  return items;
}

inline std::optional<Q> parse_bound(Cursor& c, bool low) {
  c.skip_ws();
  if (c.s.compare(c.pos, 4, "-inf") == 0 && low) {
    c.pos += 4;
    return std::nullopt;
  }
  if (c.s.compare(c.pos, 4, "+inf") == 0 && !low) {
    c.pos += 4;
    return std::nullopt;
  }
  return parse_q_tok(c);
}

inline QPoint parse_point(Cursor& c) {
  c.expect('[');
  QPoint p;
  if (c.try_take(']')) return p;
  while (true) {
    p.push_back(parse_q_tok(c));
    if (c.try_take(',')) continue;
    c.expect(']');
    break;
  }
  return p;
}

}  // namespace detail

// Parses without reducing: the raw representative, validated only.
inline IntervalSeq parse_seq(const std::string& text) {
  detail::Cursor c{text};
  c.expect('I');
  c.expect('(');
  auto lo = detail::parse_bound(c, true);
  c.expect(',');
  auto hi = detail::parse_bound(c, false);
  c.expect(')');
  IntervalSeq seq{Window{lo, hi}, detail::parse_item_list(c)};
  if (!c.done()) throw ParseError("trailing input after sequence");
  if (!validate_sequence(seq)) throw InvalidSequenceError("parse_seq: invalid sequence");
  return seq;
}

inline IntervalClass parse_class(const std::string& text) {
  detail::Cursor c{text};
  c.expect('I');
  c.expect('(');
  auto lo = detail::parse_bound(c, true);
  c.expect(',');
  auto hi = detail::parse_bound(c, false);
  c.expect(')');
  IntervalSeq seq{Window{lo, hi}, detail::parse_item_list(c)};
  if (!c.done()) throw ParseError("trailing input after class");
  return reduce(seq);
}

inline MirrorClass parse_mirror(const std::string& text) {
  detail::Cursor c{text};
  c.expect('E');
  c.expect('(');
  Q s = detail::parse_q_tok(c);
  c.expect(')');
  auto items = detail::parse_item_list(c);
  if (!c.done()) throw ParseError("trailing input after mirror class");
  return make_mirror(s, std::move(items));
}

inline SuspensionPoint parse_susp(const std::string& text) {
  detail::Cursor c{text};
  if (c.try_take('*')) return susp_base();
  c.expect('[');
  Q coord = detail::parse_q_tok(c);
  c.expect(']');
  c.expect('^');
  PointedSym lab = detail::parse_sym(c);
  return susp(coord, lab);
}

inline SignLabel parse_sign(const std::string& text) {
  if (text == "+1") return SignLabel{1};
  if (text == "-1") return SignLabel{-1};
  if (text == "0" || text == "*") return SignLabel{0};
  throw ParseError("bad sign label '" + text + "'");
}

inline SmashLabel parse_smash(const std::string& text) {
  detail::Cursor c{text};
  if (c.try_take('*')) return SmashPam{}.basepoint();
  c.expect('(');
  PointedSym x = detail::parse_sym(c);
  c.expect(',');
  SignLabel a = parse_sign(c.token(")"));
  c.expect(')');
  return SmashLabel{x, a};
}

namespace detail {

// Reads the balanced payload text for one config entry: up to ';' or the
// closing '}' at depth zero.
inline std::string payload_text(Cursor& c) {
  c.skip_ws();
  int depth = 0;
  std::size_t start = c.pos;
  while (c.pos < c.s.size()) {
    char ch = c.s[c.pos];
    if (ch == '{' || ch == '(' || ch == '[') ++depth;
    if (ch == '}' || ch == ')' || ch == ']') {
      if (depth == 0) break;
      --depth;
    }
    if (ch == ';' && depth == 0) break;
    ++c.pos;
  }
  return c.s.substr(start, c.pos - start);
}

template <class M, class F>
PointConfig<M> parse_config_with(Cursor& c, const F& parse_payload) {
  c.expect('C');
  std::string d = c.token("{");
  PointConfig<M> cfg;
  cfg.dim = std::stoi(d);
  c.expect('{');
  if (c.try_take('}')) return cfg;
  while (true) {
    QPoint p = parse_point(c);
    c.expect(':');
    cfg.items.push_back({p, parse_payload(payload_text(c))});
    if (c.try_take(';')) continue;
    c.expect('}');
    break;
  }
  return cfg;
}

}  // namespace detail

template <class M, class F>
PointConfig<M> parse_config_generic(const std::string& text, const F& parse_payload) {
  detail::Cursor c{text};
  auto cfg = detail::parse_config_with<M>(c, parse_payload);
  if (!c.done()) throw ParseError("trailing input after config");
  return cfg;
}

inline PointConfig<PointedSym> parse_config_pointed(const std::string& t) {
  return parse_config_generic<PointedSym>(
      t, [](const std::string& s) { return PointedSym{detail::Cursor{s}.token("")}; });
}
inline PointConfig<SignLabel> parse_config_sign(const std::string& t) {
  return parse_config_generic<SignLabel>(
      t, [](const std::string& s) { return parse_sign(detail::Cursor{s}.token("")); });
}
inline PointConfig<SmashLabel> parse_config_smash(const std::string& t) {
  return parse_config_generic<SmashLabel>(
      t, [](const std::string& s) { return parse_smash(s); });
}
inline PointConfig<SuspensionPoint> parse_config_susp(const std::string& t) {
  return parse_config_generic<SuspensionPoint>(
      t, [](const std::string& s) { return parse_susp(s); });
}

inline TildeI parse_tilde_i(const std::string& text) {
  detail::Cursor c{text};
  c.expect_word("TI");
  c.expect('(');
  Q eps = detail::parse_q_tok(c);
  c.expect(',');
  Q span = detail::parse_q_tok(c);
  c.expect(')');
  auto cfg = detail::parse_config_with<IntervalClass>(
      c, [](const std::string& s) { return parse_class(s); });
  if (!c.done()) throw ParseError("trailing input after TI element");
  TildeI e{std::move(cfg), eps, span};
  validate_tilde(e);
  return e;
}

inline TildeE parse_tilde_e(const std::string& text) {
  detail::Cursor c{text};
  c.expect_word("TE");
  c.expect('(');
  Q eps = detail::parse_q_tok(c);
  c.expect(',');
  Q span = detail::parse_q_tok(c);
  c.expect(')');
  auto cfg = detail::parse_config_with<MirrorClass>(
      c, [](const std::string& s) { return parse_mirror(s); });
  if (!c.done()) throw ParseError("trailing input after TE element");
  TildeE e{std::move(cfg), eps, span};
  validate_tilde(e);
  return e;
}

// ---------------------------------------------------------------------------
// CSV and SVG rendering
// ---------------------------------------------------------------------------

struct UnsupportedKindError : Error {
  using Error::Error;
};

// Rows t,coord,label at the exact breakpoints plus a uniform grid. Basepoint
// values print as "*,*".
inline std::string render_loop_csv(const PiecewiseLoop& f, int grid = 16) {
  std::vector<Q> ts = f.breaks;
  for (int i = 0; i <= grid; ++i)
    ts.push_back(f.lo + (f.hi - f.lo) * Q(i) / Q(grid));
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::string out = "t,coord,label\n";
  for (const Q& t : ts) {
    SuspensionPoint v = eval_loop(f, t);
    if (v.is_base())
      out += q_str(t) + ",*,*\n";
    else
      out += q_str(t) + "," + q_str(v.coord) + "," + v.label.name + "\n";
  }
  return out;
}

namespace detail {

inline double q_double(const Q& x) {
  return static_cast<double>(x.numerator()) / static_cast<double>(x.denominator());
}

inline std::string svg_header(double w, double h) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
     << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  return os.str();
}

}  // namespace detail

// A number-line diagram of a labelled interval family: one horizontal bar per
// interval, filled circles for closed ends, hollow for open ones.
inline std::string render_items_svg(const std::vector<IntervalItem>& items,
                                    const Q& lo, const Q& hi) {
  const double width = 640.0, height = 120.0, pad = 24.0;
  double a = detail::q_double(lo), b = detail::q_double(hi);
  if (b <= a) b = a + 1;
  auto xmap = [&](double u) { return pad + (u - a) / (b - a) * (width - 2 * pad); };
  std::ostringstream os;
  os << detail::svg_header(width, height);
  os << "<line x1=\"" << pad << "\" y1=\"60\" x2=\"" << width - pad
     << "\" y2=\"60\" stroke=\"#999\"/>\n";
  for (const auto& it : items) {
    double x1 = xmap(detail::q_double(it.iv.left));
    double x2 = xmap(detail::q_double(it.iv.right));
    os << "<line x1=\"" << x1 << "\" y1=\"60\" x2=\"" << x2
       << "\" y2=\"60\" stroke=\"#1b6\" stroke-width=\"6\"/>\n";
    os << "<circle cx=\"" << x1 << "\" cy=\"60\" r=\"5\" stroke=\"#1b6\" fill=\""
       << (it.iv.left_parity > 0 ? "#1b6" : "#fff") << "\"/>\n";
    os << "<circle cx=\"" << x2 << "\" cy=\"60\" r=\"5\" stroke=\"#1b6\" fill=\""
       << (it.iv.right_parity > 0 ? "#1b6" : "#fff") << "\"/>\n";
    os << "<text x=\"" << (x1 + x2) / 2 << "\" y=\"48\" font-size=\"12\" "
       << "text-anchor=\"middle\">" << it.label.name << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

inline std::string render_class_svg(const IntervalClass& c) {
  Q lo = c.win.lo ? *c.win.lo
                  : (c.items.empty() ? Q(0) : c.items.front().iv.left - Q(1));
  Q hi = c.win.hi ? *c.win.hi
                  : (c.items.empty() ? Q(1) : c.items.back().iv.right + Q(1));
  return render_items_svg(c.items, lo, hi);
}

inline std::string render_mirror_svg(const MirrorClass& m) {
  return render_items_svg(mirror_expand(m).items, -m.half_width, m.half_width);
}

// The graph of a scan: suspension coordinate against the loop parameter.
inline std::string render_loop_svg(const PiecewiseLoop& f, int grid = 64) {
  const double width = 640.0, height = 240.0, pad = 24.0;
  double a = detail::q_double(f.lo), b = detail::q_double(f.hi);
  if (b <= a) b = a + 1;
  auto xmap = [&](double t) { return pad + (t - a) / (b - a) * (width - 2 * pad); };
  auto ymap = [&](double v) { return height / 2 - v * (height / 2 - pad); };
  std::vector<Q> ts = f.breaks;
  for (int i = 0; i <= grid; ++i)
    ts.push_back(f.lo + (f.hi - f.lo) * Q(i) / Q(grid));
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::ostringstream os;
  os << detail::svg_header(width, height);
  os << "<line x1=\"" << pad << "\" y1=\"" << height / 2 << "\" x2=\"" << width - pad
     << "\" y2=\"" << height / 2 << "\" stroke=\"#999\"/>\n";
  os << "<polyline fill=\"none\" stroke=\"#16a\" stroke-width=\"2\" points=\"";
  for (const Q& t : ts) {
    SuspensionPoint v = eval_loop(f, t);
    double y = v.is_base() ? 1.0 : detail::q_double(v.coord);
    os << xmap(detail::q_double(t)) << "," << ymap(y) << " ";
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

template <class M>
std::string render_config_svg(const PointConfig<M>& cfg) {
  const double width = 320.0, height = 320.0, pad = 24.0;
  std::ostringstream os;
  os << detail::svg_header(width, height);
  double lo = 0, hi = 1;
  bool first = true;
  for (const auto& [pt, lab] : cfg.items)
    for (const Q& x : pt) {
      double v = detail::q_double(x);
      if (first || v < lo) lo = v;
      if (first || v > hi) hi = v;
      first = false;
    }
  if (hi <= lo) hi = lo + 1;
  auto map1 = [&](double v) { return pad + (v - lo) / (hi - lo) * (width - 2 * pad); };
  for (const auto& [pt, lab] : cfg.items) {
    double x = pt.empty() ? width / 2 : map1(detail::q_double(pt[0]));
    double y = pt.size() > 1 ? map1(detail::q_double(pt[1])) : height / 2;
    os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"4\" fill=\"#d33\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace ivs

#endif  // IVS_TEXT_HPP
