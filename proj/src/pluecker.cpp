#include "tropmod/pluecker.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "tropmod/valuation.hpp"

namespace tropmod {

Poly::Poly(Rat constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

Poly Poly::t() {
  Poly p;
  p.c_ = {Rat(0), Rat(1)};
  return p;
}

Poly Poly::from_coeffs(std::vector<Rat> coeffs) {
  Poly p;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int Poly::ord() const {
  if (is_zero()) fail(Errc::IdenticallyZeroCoordinate, "order of the zero polynomial");
  for (size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return (int)k;
  return 0;  // unreachable
}

Rat Poly::coeff(int k) const {
  if (k < 0 || k >= (int)c_.size()) return Rat(0);
  return c_[k];
}

Poly Poly::shifted_down(int k) const {
  Poly p;
  if ((int)c_.size() > k) p.c_.assign(c_.begin() + k, c_.end());
  return p;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeff((int)k) + b.coeff((int)k);
  return Poly::from_coeffs(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
  Poly p = *this;
  for (Rat& x : p.c_) x = -x;
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly::from_coeffs(std::move(c));
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += c_[k] > Rat(0) ? " + " : " - ";
    else if (c_[k] < Rat(0)) out += "-";
    Rat a = c_[k].abs();
    if (k == 0 || a != Rat(1)) out += a.str();
    if (k >= 1) {
      if (a != Rat(1)) out += "*";
      out += "t";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

namespace {

struct PolyParser {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }
  [[noreturn]] void err(const std::string& what) {
    fail(Errc::ParseError, what + " at position " + std::to_string(pos));
  }

  long long integer() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) err("expected integer");
    long long v = 0;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
      v = v * 10 + (s[pos] - '0');
      ++pos;
    }
    return v;
  }

  Poly factor() {
    skip_ws();
    if (eat('(')) {
      Poly p = expr();
      if (!eat(')')) err("expected ')'");
      return p;
    }
    if (pos < s.size() && (s[pos] == 't' || s[pos] == 'T')) {
      ++pos;
      long long e = 1;
      if (eat('^')) e = integer();
      if (e > 512) err("exponent too large");
      Poly p(Rat(1));
      for (long long k = 0; k < e; ++k) p = p * Poly::t();
      return p;
    }
    long long num = integer();
    if (eat('/')) {
      long long den = integer();
      if (den == 0) err("zero denominator");
      return Poly(Rat(num, den));
    }
    return Poly(Rat(num));
  }

  bool starts_factor() {
    skip_ws();
    if (pos >= s.size()) return false;
    char c = s[pos];
    return c == '(' || c == 't' || c == 'T' || std::isdigit((unsigned char)c);
  }

  Poly term() {
    Poly p = factor();
    while (true) {
      if (eat('*')) {
        p = p * factor();
        continue;
      }
      if (starts_factor()) {  // implicit multiplication, e.g. 2t^3
        p = p * factor();
        continue;
      }
      return p;
    }
  }

  Poly expr() {
    bool neg = false;
    skip_ws();
    if (eat('-')) neg = true;
    else eat('+');
    Poly p = term();
    if (neg) p = -p;
    while (true) {
      skip_ws();
      if (eat('+')) p = p + term();
      else if (eat('-')) p = p - term();
      else return p;
    }
  }
};

}  // namespace

Poly Poly::parse(std::string_view text) {
  PolyParser pp{text};
  Poly p = pp.expr();
  pp.skip_ws();
  if (pp.pos != text.size()) pp.err("trailing characters in polynomial");
  return p;
}

ProjectivePoint ProjectivePoint::make(Poly x, Poly y) {
  if (x.is_zero() && y.is_zero())
    fail(Errc::ParseError, "projective point with both coordinates zero");
  int shift = INT32_MAX;
  if (!x.is_zero()) shift = std::min(shift, x.ord());
  if (!y.is_zero()) shift = std::min(shift, y.ord());
  return ProjectivePoint{x.shifted_down(shift), y.shifted_down(shift)};
}

PointFamily PointFamily::parse(std::string_view text) {
  std::map<int, ProjectivePoint> pts;
  std::string line;
  std::istringstream in{std::string(text)};
  while (std::getline(in, line)) {
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::string_view s{line};
    size_t pos = line.find('p', first);
    if (pos == std::string::npos) fail(Errc::ParseError, "expected 'p<k> = (x : y)': " + line);
    ++pos;
    int k = 0;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) k = k * 10 + (s[pos++] - '0');
    if (k < 1) fail(Errc::ParseError, "bad point index in: " + line);
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    if (pos >= s.size() || s[pos] != '=') fail(Errc::ParseError, "expected '=' in: " + line);
    ++pos;
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    if (pos >= s.size() || s[pos] != '(') fail(Errc::ParseError, "expected '(' in: " + line);
    size_t colon = line.find(':', pos);
    size_t close = line.rfind(')');
    if (colon == std::string::npos || close == std::string::npos || close < colon)
      fail(Errc::ParseError, "expected '(x : y)' in: " + line);
    Poly x = Poly::parse(s.substr(pos + 1, colon - pos - 1));
    Poly y = Poly::parse(s.substr(colon + 1, close - colon - 1));
    if (pts.count(k)) fail(Errc::ParseError, "duplicate point p" + std::to_string(k));
    pts.emplace(k, ProjectivePoint::make(std::move(x), std::move(y)));
  }
  if (pts.empty()) fail(Errc::ParseError, "empty point family");
  int n = pts.rbegin()->first;
  if (n < 4) fail(Errc::ParseError, "point family needs at least 4 points");
  if (n > 31) fail(Errc::ParseError, "point family supports at most 31 markings");
  PointFamily f;
  f.n = n;
  f.points.resize(n + 1);
  for (int k = 1; k <= n; ++k) {
    auto it = pts.find(k);
    if (it == pts.end()) fail(Errc::ParseError, "missing point p" + std::to_string(k));
    f.points[k] = it->second;
  }
  return f;
}

const Poly& PlueckerVector::at(int i, int j) const {
  return minors[DistanceVector::pair_index(i, j, n)];
}

PlueckerVector pluecker(const PointFamily& f) {
  PlueckerVector pv;
  pv.n = f.n;
  pv.minors.resize(f.n * (f.n - 1) / 2);
  for (int i = 1; i <= f.n; ++i)
    for (int j = i + 1; j <= f.n; ++j)
      pv.minors[DistanceVector::pair_index(i, j, f.n)] =
          f.points[i].x * f.points[j].y - f.points[j].x * f.points[i].y;
  // Pluecker relations hold identically for minors; verify anyway
  for (int i = 1; i <= f.n; ++i)
    for (int j = i + 1; j <= f.n; ++j)
      for (int k = j + 1; k <= f.n; ++k)
        for (int l = k + 1; l <= f.n; ++l) {
          Poly rel = pv.at(i, j) * pv.at(k, l) - pv.at(i, k) * pv.at(j, l) +
                     pv.at(i, l) * pv.at(j, k);
          if (!rel.is_zero()) fail(Errc::Internal, "Pluecker relation violated");
        }
  return pv;
}

namespace {

std::vector<std::pair<int, int>> required_pairs(const StabilityGraph& g) {
  std::vector<std::pair<int, int>> req;
  for (int j = 2; j <= g.n(); ++j) req.emplace_back(1, j);
  for (auto e : g.edges()) req.push_back(e);
  return req;
}

}  // namespace

bool gamma_open_check(const PlueckerVector& pv, const StabilityGraph& g, Fiber fiber) {
  auto req = required_pairs(g);
  if (fiber == Fiber::Generic) {
    for (auto [i, j] : req)
      if (pv.at(i, j).is_zero()) return false;
    return true;
  }
  // special fiber: clear the overall power of t, then evaluate at 0
  int min_ord = INT32_MAX;
  for (const Poly& m : pv.minors)
    if (!m.is_zero()) min_ord = std::min(min_ord, m.ord());
  if (min_ord == INT32_MAX) return false;
  for (auto [i, j] : req) {
    const Poly& m = pv.at(i, j);
    if (m.is_zero() || m.ord() != min_ord) return false;
  }
  return true;
}

IntVec trop_family(const PlueckerVector& pv, const StabilityGraph& g) {
  const Poly& base = pv.at(2, 3);
  if (base.is_zero())
    fail(Errc::IdenticallyZeroCoordinate, "x_23 vanishes identically");
  CoordinateFrame frame = CoordinateFrame::for_graph(g);
  IntVec out(frame.dim(), 0);
  for (int k = 0; k < frame.dim(); ++k) {
    auto [i, j] = frame.pairs()[k];
    const Poly& m = pv.at(i, j);
    if (m.is_zero())
      fail(Errc::IdenticallyZeroCoordinate,
           "x_" + std::to_string(i) + std::to_string(j) + " vanishes identically");
    out[k] = m.ord() - base.ord();
  }
  return out;
}

std::vector<long long> full_valuations(const PlueckerVector& pv) {
  std::vector<long long> out(pv.minors.size(), 0);
  for (size_t k = 0; k < pv.minors.size(); ++k) {
    if (pv.minors[k].is_zero())
      fail(Errc::IdenticallyZeroCoordinate, "a Pluecker coordinate vanishes identically");
    out[k] = pv.minors[k].ord();
  }
  return out;
}

MetricTree limit_dual_tree(const PlueckerVector& pv) {
  const int n = pv.n;
  std::vector<long long> val = full_valuations(pv);
  auto v = [&](int i, int j) { return val[DistanceVector::pair_index(std::min(i, j), std::max(i, j), n)]; };

  // Split decomposition over the collision orders: the side away from
  // marking 1 is an edge cut iff every crossing quadruple has equal cross
  // sums and a positive isolation gap; the minimum gap is the edge length.
  std::vector<MarkSet> splits;
  std::vector<Rat> lengths;
  const MarkSet verts = MarkSet::range(2, n);
  for (uint32_t sub = verts.bits(); sub; sub = (sub - 1) & verts.bits()) {
    MarkSet I(sub);
    if (I.size() < 2 || I.size() > n - 2) continue;
    MarkSet T = MarkSet::range(1, n).setminus(I);
    bool ok = true;
    long long min_gap = INT64_MAX;
    auto ivec = I.elements();
    auto tvec = T.elements();
    for (size_t a = 0; a < ivec.size() && ok; ++a)
      for (size_t b = a + 1; b < ivec.size() && ok; ++b)
        for (size_t c = 0; c < tvec.size() && ok; ++c)
          for (size_t d = c + 1; d < tvec.size() && ok; ++d) {
            int i = ivec[a], j = ivec[b], k = tvec[c], l = tvec[d];
            long long cross1 = v(i, k) + v(j, l);
            long long cross2 = v(i, l) + v(j, k);
            long long same = v(i, j) + v(k, l);
            if (cross1 != cross2 || same - cross1 <= 0) {
              ok = false;
              break;
            }
            min_gap = std::min(min_gap, same - cross1);
          }
    if (ok) {
      splits.push_back(I);
      lengths.push_back(Rat(min_gap));
    }
  }
  NestedFamily family = NestedFamily::validate(splits, n);
  MarkedTree tree = tree_from_nested_family(family, n);
  std::vector<Rat> by_edge(tree.edges.size(), Rat(0));
  for (size_t e = 0; e < tree.edges.size(); ++e) {
    MarkSet cut = tree.cut((int)e);
    for (size_t s = 0; s < splits.size(); ++s)
      if (splits[s] == cut) by_edge[e] = lengths[s];
  }
  return MetricTree::make(std::move(tree), std::move(by_edge));
}

int cross_ratio_valuation(const CrossRatioUnit& u, MarkSet J) {
  if (u.a < 2 || u.b < 2 || u.c < 2 || u.a == u.b || u.a == u.c || u.b == u.c)
    fail(Errc::MalformedMonomial, "cross ratio unit needs three distinct markings >= 2");
  if (J.contains(1)) fail(Errc::UnstableDivisor, "divisor index set contains marking 1");
  MarkSet abc = MarkSet{}.with(u.a).with(u.b).with(u.c);
  MarkSet inter = J.intersect(abc);
  if (inter.size() != 2) return 0;
  if (inter == MarkSet::pair(u.a, u.b)) return 1;
  fail(Errc::AmbiguousSplit, "divisor " + J.str() + " meets {" + std::to_string(u.a) + "," +
                                 std::to_string(u.b) + "," + std::to_string(u.c) +
                                 "} in a two-set other than the designated pair");
}

std::optional<CrossRatioUnit> find_separating_unit(const NestedFamily& stratum, MarkSet I,
                                                   const StabilityGraph& g) {
  if (!stratum.contains(I)) fail(Errc::InvalidFamily, "divisor is not a member of the stratum");

  // A triple (a,b,c) separates D_I inside the stratum exactly when
  //   - {a,b} is a graph edge inside I,
  //   - no member strictly inside I holds both a and b (they sit in
  //     different parts of the proof's partition of I),
  //   - c lies in every member strictly containing I but not in I
  //     (a part of the complement partition avoiding marking 1).
  // Scan in lexicographic order for determinism.
  MarkSet chain_min = MarkSet::range(2, stratum.n());  // smallest member above I
  for (MarkSet J : stratum.members())
    if (I.subset_of(J) && J != I && J.subset_of(chain_min)) chain_min = J;

  for (int a = 2; a <= g.n(); ++a) {
    if (!I.contains(a)) continue;
    for (int b = a + 1; b <= g.n(); ++b) {
      if (!I.contains(b) || !g.has_edge(a, b)) continue;
      bool buried = false;
      for (MarkSet J : stratum.members())
        if (J != I && J.subset_of(I) && J.contains(a) && J.contains(b)) {
          buried = true;
          break;
        }
      if (buried) continue;
      MarkSet c_candidates = chain_min.setminus(I).without(1);
      if (c_candidates.empty()) continue;
      int c = c_candidates.min();
      CrossRatioUnit u{a, b, c};
      // construction is complete, but verify anyway
      bool valid = cross_ratio_valuation(u, I) == 1;
      for (MarkSet J : stratum.members()) {
        if (!valid) break;
        if (J == I) continue;
        try {
          valid = cross_ratio_valuation(u, J) == 0;
        } catch (const Error&) {
          valid = false;
        }
      }
      if (valid) return u;
    }
  }
  return std::nullopt;
}

CrossRatioProduct units_monomial_decompose(const Monomial& m) {
  CrossRatioProduct out;
  for (const MonomialFactor& f : m) {
    if (f.i < 1) fail(Errc::MalformedMonomial, "variable index must be positive");
    if (f.exponent == 0) continue;
    switch (f.kind) {
      case MonomialFactor::Kind::X:
        out.factors.push_back(
            {{PSym::variable(f.i), PSym::zero(), PSym::inf(), PSym::one()}, f.exponent});
        break;
      case MonomialFactor::Kind::XMinusOne:
        // the cross ratio evaluates to 1 - x_i, so a sign per exponent
        out.factors.push_back(
            {{PSym::variable(f.i), PSym::one(), PSym::inf(), PSym::zero()}, f.exponent});
        if (f.exponent % 2 != 0) out.constant = -out.constant;
        break;
      case MonomialFactor::Kind::XMinusX:
        if (f.j < 1 || f.j == f.i)
          fail(Errc::MalformedMonomial, "x_i - x_j needs two distinct variables");
        out.factors.push_back(
            {{PSym::variable(f.i), PSym::zero(), PSym::inf(), PSym::one()}, f.exponent});
        out.factors.push_back(
            {{PSym::variable(f.i), PSym::variable(f.j), PSym::zero(), PSym::inf()}, f.exponent});
        break;
    }
  }
  return out;
}

namespace {

std::pair<Rat, Rat> psym_point(const PSym& p, const std::vector<Rat>& values) {
  switch (p.kind) {
    case PSym::Kind::Var:
      if (p.var < 1 || p.var >= (int)values.size())
        fail(Errc::MalformedMonomial, "variable index outside the provided assignment");
      return {values[p.var], Rat(1)};
    case PSym::Kind::Zero: return {Rat(0), Rat(1)};
    case PSym::Kind::One: return {Rat(1), Rat(1)};
    case PSym::Kind::Inf: return {Rat(1), Rat(0)};
  }
  return {Rat(0), Rat(1)};
}

}  // namespace

std::optional<Rat> evaluate(const CrossRatioProduct& p, const std::vector<Rat>& values) {
  Rat acc = p.constant;
  for (const CrossRatioFactor& f : p.factors) {
    auto [a1, b1] = psym_point(f.points[0], values);
    auto [a2, b2] = psym_point(f.points[1], values);
    auto [a3, b3] = psym_point(f.points[2], values);
    auto [a4, b4] = psym_point(f.points[3], values);
    Rat num = (a1 * b2 - a2 * b1) * (a3 * b4 - a4 * b3);
    Rat den = (a1 * b3 - a3 * b1) * (a2 * b4 - a4 * b2);
    if (den.is_zero() || num.is_zero()) return std::nullopt;  // sample away from 0 and infinity
    Rat value = num / den;
    for (int e = 0; e < std::abs(f.exponent); ++e) acc = f.exponent > 0 ? acc * value : acc / value;
  }
  return acc;
}

std::optional<Rat> evaluate(const Monomial& m, const std::vector<Rat>& values) {
  Rat acc(1);
  for (const MonomialFactor& f : m) {
    Rat base(0);
    switch (f.kind) {
      case MonomialFactor::Kind::X: base = values[f.i]; break;
      case MonomialFactor::Kind::XMinusOne: base = values[f.i] - Rat(1); break;
      case MonomialFactor::Kind::XMinusX: base = values[f.i] - values[f.j]; break;
    }
    if (base.is_zero()) return std::nullopt;
    for (int e = 0; e < std::abs(f.exponent); ++e) acc = f.exponent > 0 ? acc * base : acc / base;
  }
  return acc;
}

}  // namespace tropmod
