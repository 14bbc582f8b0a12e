#include "ricci/taxonomy.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>

namespace ricci {

// --- symbol rendering -------------------------------------------------------

std::string render_symbol(const RicciTypeSymbol& s) {
  int npairs = 0, nreals = 0;
  for (const auto& t : s.terms) (t.pair ? npairs : nreals)++;
  std::ostringstream body, qs;
  int zi = 0, ri = 0;
  bool first = true;
  for (const auto& t : s.terms) {
    if (t.pair) {
      ++zi;
      const std::string idx = npairs > 1 ? std::to_string(zi) : "";
      const std::string mult = t.n > 1 ? std::to_string(t.n) : "";
      if (!first) body << "-";
      body << mult << "Z" << idx << "-" << mult << "Z" << idx << "~";
      qs << t.q << t.q;
    } else {
      ++ri;
      const std::string idx = nreals > 1 ? std::to_string(ri) : "";
      const std::string mult = t.n > 1 ? std::to_string(t.n) : "";
      if (!first) body << "-";
      body << mult << "R" << idx << "^" << causal_class_name(t.cls);
      qs << t.q;
    }
    first = false;
  }
  std::ostringstream out;
  out << pp_type_name(s.left) << " x " << pp_type_name(s.right) << " [" << body.str() << "]^"
      << s.v << "_(" << qs.str() << ")";
  return out.str();
}

namespace {

std::optional<PPType> pp_from_name(const std::string& n) {
  static const PPType all[] = {PPType::I_r,  PPType::I_rc, PPType::I_c,   PPType::II_r,
                               PPType::II_rc, PPType::D_r, PPType::D_c,   PPType::III_r,
                               PPType::N_r,  PPType::Zero};
  for (PPType t : all)
    if (n == pp_type_name(t)) return t;
  return std::nullopt;
}

std::optional<CausalClass> class_from_name(const std::string& n) {
  static const CausalClass all[] = {CausalClass::S,  CausalClass::T,  CausalClass::N,
                                    CausalClass::NS, CausalClass::NT, CausalClass::NST};
  for (CausalClass c : all)
    if (n == causal_class_name(c)) return c;
  return std::nullopt;
}

}  // namespace

std::optional<RicciTypeSymbol> parse_symbol(const std::string& text) {
  static const std::regex top(
      R"(^\s*(\[[^\]]*\](?:_[a-z]+)?)\s*x\s*(\[[^\]]*\](?:_[a-z]+)?)\s*\[([^\]]*)\]\^(\d+)_\((\d+)\)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, top)) return std::nullopt;
  RicciTypeSymbol sym;
  auto l = pp_from_name(m[1]), r = pp_from_name(m[2]);
  if (!l || !r) return std::nullopt;
  sym.left = *l;
  sym.right = *r;
  sym.v = std::stoi(m[4]);
  const std::string qdigits = m[5];

  // Split the body on '-' and parse eigenvalue tokens.
  static const std::regex tok(R"(^(\d*)(R|Z)(\d*)(~?)(?:\^(s|t|n|ns|nt|nst))?$)");
  std::vector<std::string> tokens;
  {
    std::string body = m[3];
    std::string cur;
    for (char c : body) {
      if (c == '-') {
        if (!cur.empty()) tokens.push_back(cur);
        cur.clear();
      } else if (!isspace(static_cast<unsigned char>(c))) {
        cur += c;
      }
    }
    if (!cur.empty()) tokens.push_back(cur);
  }
  struct Tok {
    int n;
    bool z;
    std::string idx;
    bool conj;
    std::optional<CausalClass> cls;
  };
  std::vector<Tok> ts;
  for (const auto& s : tokens) {
    std::smatch tm;
    if (!std::regex_match(s, tm, tok)) return std::nullopt;
    Tok t;
    t.n = tm[1].str().empty() ? 1 : std::stoi(tm[1]);
    t.z = tm[2] == "Z";
    t.idx = tm[3];
    t.conj = tm[4] == "~";
    if (tm[5].matched) {
      t.cls = class_from_name(tm[5]);
      if (!t.cls) return std::nullopt;
    }
    ts.push_back(t);
  }
  size_t qi = 0;
  auto next_q = [&]() -> std::optional<int> {
    if (qi >= qdigits.size()) return std::nullopt;
    return qdigits[qi++] - '0';
  };
  for (size_t i = 0; i < ts.size(); ++i) {
    SymbolTerm term;
    if (ts[i].z) {
      // expect the conjugate half right after
      if (ts[i].conj || i + 1 >= ts.size() || !ts[i + 1].z || !ts[i + 1].conj ||
          ts[i + 1].n != ts[i].n || ts[i + 1].idx != ts[i].idx)
        return std::nullopt;
      term.pair = true;
      term.n = ts[i].n;
      auto q1 = next_q(), q2 = next_q();
      if (!q1 || !q2 || *q1 != *q2) return std::nullopt;
      term.q = *q1;
      ++i;
    } else {
      if (ts[i].conj || !ts[i].cls) return std::nullopt;
      term.pair = false;
      term.n = ts[i].n;
      term.cls = *ts[i].cls;
      auto q1 = next_q();
      if (!q1) return std::nullopt;
      term.q = *q1;
    }
    sym.terms.push_back(term);
  }
  if (qi != qdigits.size()) return std::nullopt;
  return sym;
}

// --- registry ----------------------------------------------------------------

namespace {

SymbolTerm RT(int n, CausalClass c, int q) {
  SymbolTerm t;
  t.pair = false;
  t.n = n;
  t.cls = c;
  t.q = q;
  return t;
}
SymbolTerm ZT(int n, int q) {
  SymbolTerm t;
  t.pair = true;
  t.n = n;
  t.q = q;
  return t;
}

std::vector<TypeRegistryEntry> build_registry() {
  using CC = CausalClass;
  std::vector<TypeRegistryEntry> reg;
  auto add = [&](int id, std::string code, std::string parent, PPType l, PPType r,
                 std::vector<SymbolTerm> terms, int v, std::vector<int> succ,
                 std::string params_doc) {
    TypeRegistryEntry e;
    e.id = id;
    e.code = std::move(code);
    e.parent = std::move(parent);
    e.left = l;
    e.right = r;
    e.terms = std::move(terms);
    e.v = v;
    e.successors = std::move(succ);
    e.params_doc = std::move(params_doc);
    RicciTypeSymbol s;
    s.left = e.left;
    s.right = e.right;
    s.terms = e.terms;
    s.v = e.v;
    e.display = render_symbol(s);
    reg.push_back(std::move(e));
  };
  const PPType Ir = PPType::I_r, Irc = PPType::I_rc, Ic = PPType::I_c, IIr = PPType::II_r,
               IIrc = PPType::II_rc, Dr = PPType::D_r, Dc = PPType::D_c, IIIr = PPType::III_r,
               Nr = PPType::N_r, Ze = PPType::Zero;

  add(1, "I_r.1", "I_r", Ir, Ir,
      {RT(1, CC::S, 1), RT(1, CC::S, 1), RT(1, CC::T, 1), RT(1, CC::T, 1)}, 4, {4},
      "reals R1,R2 (spacelike), R3,R4 (timelike); sum zero; all distinct; sigma1 < 0");
  add(2, "I_r.2", "I_r", Ic, Ic,
      {RT(1, CC::S, 1), RT(1, CC::S, 1), RT(1, CC::T, 1), RT(1, CC::T, 1)}, 4, {3, 4, 5},
      "reals R1,R2 (spacelike), R3,R4 (timelike); sum zero; all distinct; sigma1 > 0");
  add(3, "I_r.3", "I_r", Dc, Dc, {RT(2, CC::S, 1), RT(1, CC::T, 1), RT(1, CC::T, 1)}, 4, {6, 9},
      "reals R1 (spacelike double), R2,R3 (timelike); 2R1+R2+R3=0; R1,R2,R3 distinct");
  add(4, "I_r.4", "I_r", Dr, Dr, {RT(2, CC::NST, 1), RT(1, CC::S, 1), RT(1, CC::T, 1)}, 4,
      {7, 8, 9}, "reals R1 (spacelike), R2 (mixed double), R3 (timelike); R1+2R2+R3=0; distinct");
  add(5, "I_r.5", "I_r", Dc, Dc, {RT(2, CC::T, 1), RT(1, CC::S, 1), RT(1, CC::S, 1)}, 4, {6, 8},
      "reals R1,R2 (spacelike), R3 (timelike double); R1+R2+2R3=0; distinct");
  add(6, "I_r.6", "I_r", Dc, Dc, {RT(2, CC::S, 1), RT(2, CC::T, 1)}, 4, {10},
      "reals R1 (spacelike double), R2 = -R1 (timelike double); R1 != 0");
  add(7, "I_r.7", "I_r", Dr, Dr, {RT(2, CC::NST, 1), RT(2, CC::NST, 1)}, 4, {10},
      "reals R1, R2 = -R1 (two mixed doubles); R1 != 0");
  add(8, "I_r.8", "I_r", Ze, Ze, {RT(3, CC::NST, 1), RT(1, CC::S, 1)}, 4, {10},
      "reals R1 = -3 R2 (spacelike simple), R2 (mixed triple); R2 != 0");
  add(9, "I_r.9", "I_r", Ze, Ze, {RT(3, CC::NST, 1), RT(1, CC::T, 1)}, 4, {10},
      "reals R1 = -3 R2 (timelike simple), R2 (mixed triple); R2 != 0");
  add(10, "I_r.10", "I_r", Ze, Ze, {RT(4, CC::NST, 1)}, 4, {}, "no parameters (zero tensor)");

  add(11, "I_c.1", "I_c", Ic, Ir, {ZT(1, 1), ZT(1, 1)}, 4, {},
      "complex Z1, Z2; Re Z2 = -Re Z1; Im nonzero; Z2 not in {Z1, conj Z1}; Im Z1 * Im Z2 < 0");
  add(12, "I_c.2", "I_c", Ir, Ic, {ZT(1, 1), ZT(1, 1)}, 4, {13},
      "complex Z1, Z2; Re Z2 = -Re Z1; Im nonzero; Z2 not in {Z1, conj Z1}; Im Z1 * Im Z2 > 0");
  add(13, "I_c.3", "I_c", Dr, Dc, {ZT(2, 1)}, 4, {},
      "complex Z pure imaginary, Im Z != 0 (Z1 = Z2 = Z)");

  add(14, "I_rc.1", "I_rc", Irc, Irc, {ZT(1, 1), RT(1, CC::S, 1), RT(1, CC::T, 1)}, 4, {15},
      "reals R1 (spacelike), R2 (timelike), complex Z; R1+R2+2 Re Z = 0; Im Z != 0; R1 != R2");
  add(15, "I_rc.2", "I_rc", Dr, Dr, {ZT(1, 1), RT(2, CC::NST, 1)}, 4, {},
      "real R (mixed double), complex Z with Re Z = -R; Im Z != 0");

  add(16, "II_r.1", "II_r", IIrc, IIrc, {RT(2, CC::N, 2), RT(1, CC::S, 1), RT(1, CC::T, 1)}, 3,
      {18, 19, 20},
      "reals R1 (spacelike), R2 (timelike), R3 = -(R1+R2)/2 (null double); distinct; sigma2 < 0");
  add(17, "II_r.2", "II_r", IIr, IIr, {RT(2, CC::N, 2), RT(1, CC::S, 1), RT(1, CC::T, 1)}, 3,
      {18, 19, 20},
      "reals R1 (spacelike), R2 (timelike), R3 = -(R1+R2)/2 (null double); distinct; sigma2 > 0");
  add(18, "II_r.3", "II_r", Dr, Dr, {RT(2, CC::NST, 1), RT(2, CC::N, 2)}, 3, {21},
      "real R1 (mixed double), R2 = -R1 (null double); R1 != 0");
  add(19, "II_r.4", "II_r", Nr, Nr, {RT(3, CC::NT, 2), RT(1, CC::S, 1)}, 3, {21},
      "reals R1 = -3 R2 (spacelike simple), R2 (triple, null-timelike); R2 != 0");
  add(20, "II_r.5", "II_r", Nr, Nr, {RT(3, CC::NS, 2), RT(1, CC::T, 1)}, 3, {21},
      "reals R1 = -3 R2 (timelike simple), R2 (triple, null-spacelike); R2 != 0");
  add(21, "II_r.6", "II_r", Ze, Ze, {RT(4, CC::NST, 2)}, 3, {}, "no parameters");

  add(22, "II_rc.1", "II_rc", IIr, IIrc, {ZT(1, 1), RT(2, CC::N, 2)}, 3, {},
      "complex Z with Im Z > 0, real R = -Re Z (null double)");
  add(23, "II_rc.2", "II_rc", IIrc, IIr, {ZT(1, 1), RT(2, CC::N, 2)}, 3, {},
      "complex Z with Im Z < 0, real R = -Re Z (null double)");

  add(24, "III_t.1", "III_t", IIIr, IIIr, {RT(3, CC::N, 3), RT(1, CC::T, 1)}, 2, {25},
      "reals R1 = -3 R2 (timelike simple), R2 (null triple); R2 != 0");
  add(25, "III_t.2", "III_t", Nr, Nr, {RT(4, CC::NT, 3)}, 2, {}, "no parameters");
  add(26, "III_s.1", "III_s", IIIr, IIIr, {RT(3, CC::N, 3), RT(1, CC::S, 1)}, 2, {27},
      "reals R1 = -3 R2 (spacelike simple), R2 (null triple); R2 != 0");
  add(27, "III_s.2", "III_s", Nr, Nr, {RT(4, CC::NS, 3)}, 2, {}, "no parameters");

  add(28, "III_n.a", "III_n", Dr, IIr, {RT(2, CC::N, 2), RT(2, CC::N, 2)}, 2, {30},
      "real R1, R2 = -R1 (two null doubles); R1 != 0; subtype a");
  add(29, "III_n.b", "III_n", IIr, Dr, {RT(2, CC::N, 2), RT(2, CC::N, 2)}, 2, {31},
      "real R1, R2 = -R1 (two null doubles); R1 != 0; subtype b");
  add(30, "III_n.a0", "III_n", Ze, Nr, {RT(4, CC::N, 2)}, 2, {}, "no parameters; subtype a");
  add(31, "III_n.b0", "III_n", Nr, Ze, {RT(4, CC::N, 2)}, 2, {}, "no parameters; subtype b");

  add(32, "IV.a", "IV", Nr, IIIr, {RT(4, CC::N, 4)}, 1, {}, "no parameters; subtype a");
  add(33, "IV.b", "IV", IIIr, Nr, {RT(4, CC::N, 4)}, 1, {}, "no parameters; subtype b");
  return reg;
}

}  // namespace

const std::vector<TypeRegistryEntry>& registry() {
  static const std::vector<TypeRegistryEntry> reg = build_registry();
  return reg;
}

const TypeRegistryEntry* find_entry(int id) {
  for (const auto& e : registry())
    if (e.id == id) return &e;
  return nullptr;
}

const TypeRegistryEntry* find_entry_by_code(const std::string& code) {
  for (const auto& e : registry())
    if (e.code == code) return &e;
  return nullptr;
}

namespace {

using TermKey = std::tuple<bool, int, int, int>;  // pair, n, cls (-1 for pairs), q

std::vector<TermKey> term_keys(const std::vector<SymbolTerm>& terms) {
  std::vector<TermKey> keys;
  for (const auto& t : terms)
    keys.emplace_back(t.pair, t.n, t.pair ? -1 : static_cast<int>(t.cls), t.q);
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

std::optional<int> lookup(const RicciTypeSymbol& s) {
  const auto keys = term_keys(s.terms);
  for (const auto& e : registry()) {
    if (e.left != s.left || e.right != s.right || e.v != s.v) continue;
    if (term_keys(e.terms) == keys) return e.id;
  }
  return std::nullopt;
}

// --- canonical generators ----------------------------------------------------

namespace {

Mat4<Rat> Z4() { return zero_mat<Rat>(); }

Mat4<Rat> F_Ir(const Rat& r1, const Rat& r2, const Rat& r3, const Rat& r4) {
  Mat4<Rat> c = Z4();
  c[0][0] = c[1][1] = (r1 - r3) / 2;
  c[0][1] = c[1][0] = (r1 + r3) / 2;
  c[2][2] = c[3][3] = (r2 - r4) / 2;
  c[2][3] = c[3][2] = (r2 + r4) / 2;
  return c;
}

Mat4<Rat> F_Ic(const Rat& x1, const Rat& y1, const Rat& x2, const Rat& y2) {
  Mat4<Rat> c = Z4();
  c[2][3] = c[3][2] = x1;
  c[2][2] = -y1;
  c[3][3] = y1;
  c[0][1] = c[1][0] = x2;
  c[0][0] = -y2;
  c[1][1] = y2;
  return c;
}

Mat4<Rat> F_Irc(const Rat& r1, const Rat& r2, const Rat& x, const Rat& y) {
  Mat4<Rat> c = Z4();
  c[0][0] = c[1][1] = (r1 - r2) / 2;
  c[0][1] = c[1][0] = (r1 + r2) / 2;
  c[2][3] = c[3][2] = x;
  c[2][2] = -y;
  c[3][3] = y;
  return c;
}

Mat4<Rat> F_IIr(const Rat& r1, const Rat& r2, const Rat& r3) {
  Mat4<Rat> c = Z4();
  c[0][0] = c[1][1] = (r1 - r2) / 2;
  c[0][1] = c[1][0] = (r1 + r2) / 2;
  c[2][3] = c[3][2] = r3;
  c[3][3] = 1;
  return c;
}

Mat4<Rat> F_IIrc(const Rat& x, const Rat& y, const Rat& r) {
  Mat4<Rat> c = Z4();
  c[0][1] = c[1][0] = x;
  c[0][0] = -y;
  c[1][1] = y;
  c[2][3] = c[3][2] = r;
  c[3][3] = 1;
  return c;
}

Mat4<Rat> F_IIIt(const Rat& r1, const Rat& r2) {
  Mat4<Rat> c = Z4();
  c[0][0] = c[1][1] = (r2 - r1) / 2;
  c[0][1] = c[1][0] = (r2 + r1) / 2;
  c[2][3] = c[3][2] = r2;
  c[0][3] = c[3][0] = 1;
  c[1][3] = c[3][1] = 1;
  return c;
}

Mat4<Rat> F_IIIs(const Rat& r1, const Rat& r2) {
  Mat4<Rat> c = Z4();
  c[0][0] = c[1][1] = (r1 - r2) / 2;
  c[0][1] = c[1][0] = (r1 + r2) / 2;
  c[2][3] = c[3][2] = r2;
  c[0][3] = c[3][0] = 1;
  c[1][3] = c[3][1] = -1;
  return c;
}

Mat4<Rat> F_IIIn_a(const Rat& r1, const Rat& r2) {
  Mat4<Rat> c = Z4();
  c[0][0] = 1;
  c[3][3] = 1;
  c[2][3] = c[3][2] = r1;
  c[0][1] = c[1][0] = r2;
  return c;
}

Mat4<Rat> F_IIIn_b(const Rat& r1, const Rat& r2) {
  Mat4<Rat> c = Z4();
  c[1][1] = 1;
  c[3][3] = 1;
  c[2][3] = c[3][2] = r1;
  c[0][1] = c[1][0] = r2;
  return c;
}

Mat4<Rat> F_IV_a() {
  Mat4<Rat> c = Z4();
  c[0][0] = 1;
  c[1][3] = c[3][1] = 1;
  return c;
}

Mat4<Rat> F_IV_b() {
  Mat4<Rat> c = Z4();
  c[1][1] = 1;
  c[0][3] = c[3][0] = 1;
  return c;
}

[[noreturn]] void constraint(const std::string& msg) {
  throw ClassifyError(ErrorKind::ConstraintViolation, msg);
}
[[noreturn]] void degenerate(const std::string& msg) {
  throw ClassifyError(ErrorKind::DegeneracyViolation, msg);
}

void want(const CanonicalParams& p, size_t nr, size_t nc, int id) {
  if (p.reals.size() != nr || p.cx.size() != nc)
    constraint("entry " + std::to_string(id) + " expects " + std::to_string(nr) + " real and " +
               std::to_string(nc) + " complex parameters");
}

Rat sigma1(const Rat& r1, const Rat& r2, const Rat& r3) {
  return (r3 - r1) * (r3 - r2) * (r3 + r1 + 2 * r2) * (r3 + 2 * r1 + r2);
}
Rat sigma2(const Rat& r1, const Rat& r2) {
  return (r1 - r2) * (3 * r1 + r2) * (r1 + 3 * r2);
}

}  // namespace

Mat4<Rat> canonical(int id, const CanonicalParams& p) {
  const auto& r = p.reals;
  const auto& z = p.cx;
  auto distinct = [](std::initializer_list<Rat> vals) {
    std::vector<Rat> v(vals);
    for (size_t i = 0; i < v.size(); ++i)
      for (size_t j = i + 1; j < v.size(); ++j)
        if (v[i] == v[j]) return false;
    return true;
  };
  switch (id) {
    case 1:
    case 2: {
      want(p, 4, 0, id);
      if (r[0] + r[1] + r[2] + r[3] != 0) constraint("eigenvalues must sum to zero");
      if (!distinct({r[0], r[1], r[2], r[3]})) degenerate("eigenvalues must be distinct");
      const Rat s1 = sigma1(r[0], r[1], r[2]);
      if (id == 1 && !(s1 < 0)) degenerate("entry 1 requires sigma1 < 0");
      if (id == 2 && !(s1 > 0)) degenerate("entry 2 requires sigma1 > 0");
      return F_Ir(r[0], r[1], r[2], r[3]);
    }
    case 3: {
      want(p, 3, 0, id);
      if (2 * r[0] + r[1] + r[2] != 0) constraint("2R1+R2+R3 must vanish");
      if (!distinct({r[0], r[1], r[2]})) degenerate("R1,R2,R3 must be distinct");
      return F_Ir(r[0], r[0], r[1], r[2]);
    }
    case 4: {
      want(p, 3, 0, id);
      if (r[0] + 2 * r[1] + r[2] != 0) constraint("R1+2R2+R3 must vanish");
      if (!distinct({r[0], r[1], r[2]})) degenerate("R1,R2,R3 must be distinct");
      return F_Ir(r[0], r[1], r[1], r[2]);
    }
    case 5: {
      want(p, 3, 0, id);
      if (r[0] + r[1] + 2 * r[2] != 0) constraint("R1+R2+2R3 must vanish");
      if (!distinct({r[0], r[1], r[2]})) degenerate("R1,R2,R3 must be distinct");
      return F_Ir(r[0], r[1], r[2], r[2]);
    }
    case 6: {
      want(p, 2, 0, id);
      if (r[0] + r[1] != 0) constraint("R2 = -R1 required");
      if (r[0] == 0) degenerate("R1 must be nonzero");
      return F_Ir(r[0], r[0], r[1], r[1]);
    }
    case 7: {
      want(p, 2, 0, id);
      if (r[0] + r[1] != 0) constraint("R2 = -R1 required");
      if (r[0] == 0) degenerate("R1 must be nonzero");
      return F_Ir(r[0], r[1], r[0], r[1]);
    }
    case 8: {
      want(p, 2, 0, id);
      if (r[0] + 3 * r[1] != 0) constraint("R1 = -3 R2 required");
      if (r[1] == 0) degenerate("R2 must be nonzero");
      return F_Ir(r[0], r[1], r[1], r[1]);
    }
    case 9: {
      want(p, 2, 0, id);
      if (r[0] + 3 * r[1] != 0) constraint("R1 = -3 R2 required");
      if (r[1] == 0) degenerate("R2 must be nonzero");
      return F_Ir(r[1], r[1], r[0], r[1]);
    }
    case 10:
      want(p, 0, 0, id);
      return Z4();
    case 11:
    case 12: {
      want(p, 0, 2, id);
      if (z[0].re + z[1].re != 0) constraint("Re Z2 = -Re Z1 required");
      if (z[0].im == 0 || z[1].im == 0) degenerate("Im parts must be nonzero");
      if (z[1] == z[0] || z[1] == z[0].conj()) degenerate("Z2 must differ from Z1 and conj Z1");
      const Rat prod = z[0].im * z[1].im;
      if (id == 11 && !(prod < 0)) degenerate("entry 11 requires Im Z1 * Im Z2 < 0");
      if (id == 12 && !(prod > 0)) degenerate("entry 12 requires Im Z1 * Im Z2 > 0");
      return F_Ic(z[0].re, z[0].im, z[1].re, z[1].im);
    }
    case 13: {
      want(p, 0, 1, id);
      if (z[0].re != 0) constraint("Z must be pure imaginary");
      if (z[0].im == 0) degenerate("Im Z must be nonzero");
      return F_Ic(z[0].re, z[0].im, z[0].re, z[0].im);
    }
    case 14: {
      want(p, 2, 1, id);
      if (r[0] + r[1] + 2 * z[0].re != 0) constraint("R1+R2+2 Re Z must vanish");
      if (z[0].im == 0) degenerate("Im Z must be nonzero");
      if (r[0] == r[1]) degenerate("R1 != R2 required");
      return F_Irc(r[0], r[1], z[0].re, z[0].im);
    }
    case 15: {
      want(p, 1, 1, id);
      if (r[0] + z[0].re != 0) constraint("Re Z = -R required");
      if (z[0].im == 0) degenerate("Im Z must be nonzero");
      return F_Irc(r[0], r[0], z[0].re, z[0].im);
    }
    case 16:
    case 17: {
      want(p, 3, 0, id);
      if (r[0] + r[1] + 2 * r[2] != 0) constraint("R1+R2+2R3 must vanish");
      if (!distinct({r[0], r[1], r[2]})) degenerate("R1,R2,R3 must be distinct");
      const Rat s2 = sigma2(r[0], r[1]);
      if (id == 16 && !(s2 < 0)) degenerate("entry 16 requires sigma2 < 0");
      if (id == 17 && !(s2 > 0)) degenerate("entry 17 requires sigma2 > 0");
      return F_IIr(r[0], r[1], r[2]);
    }
    case 18: {
      want(p, 2, 0, id);
      if (r[0] + r[1] != 0) constraint("R2 = -R1 required");
      if (r[0] == 0) degenerate("R1 must be nonzero");
      return F_IIr(r[0], r[0], r[1]);
    }
    case 19: {
      want(p, 2, 0, id);
      if (r[0] + 3 * r[1] != 0) constraint("R1 = -3 R2 required");
      if (r[1] == 0) degenerate("R2 must be nonzero");
      return F_IIr(r[0], r[1], r[1]);
    }
    case 20: {
      want(p, 2, 0, id);
      if (r[0] + 3 * r[1] != 0) constraint("R1 = -3 R2 required");
      if (r[1] == 0) degenerate("R2 must be nonzero");
      return F_IIr(r[1], r[0], r[1]);
    }
    case 21:
      want(p, 0, 0, id);
      return F_IIr(Rat(0), Rat(0), Rat(0));
    case 22:
    case 23: {
      want(p, 1, 1, id);
      if (r[0] + z[0].re != 0) constraint("R = -Re Z required");
      if (z[0].im == 0) degenerate("Im Z must be nonzero");
      if (id == 22 && !(z[0].im > 0)) degenerate("entry 22 requires Im Z > 0");
      if (id == 23 && !(z[0].im < 0)) degenerate("entry 23 requires Im Z < 0");
      return F_IIrc(z[0].re, z[0].im, r[0]);
    }
    case 24:
    case 26: {
      want(p, 2, 0, id);
      if (r[0] + 3 * r[1] != 0) constraint("R1 = -3 R2 required");
      if (r[1] == 0) degenerate("R2 must be nonzero");
      return id == 24 ? F_IIIt(r[0], r[1]) : F_IIIs(r[0], r[1]);
    }
    case 25:
      want(p, 0, 0, id);
      return F_IIIt(Rat(0), Rat(0));
    case 27:
      want(p, 0, 0, id);
      return F_IIIs(Rat(0), Rat(0));
    case 28:
    case 29: {
      want(p, 2, 0, id);
      if (r[0] + r[1] != 0) constraint("R2 = -R1 required");
      if (r[0] == 0) degenerate("R1 must be nonzero");
      return id == 28 ? F_IIIn_a(r[0], r[1]) : F_IIIn_b(r[0], r[1]);
    }
    case 30:
      want(p, 0, 0, id);
      return F_IIIn_a(Rat(0), Rat(0));
    case 31:
      want(p, 0, 0, id);
      return F_IIIn_b(Rat(0), Rat(0));
    case 32:
      want(p, 0, 0, id);
      return F_IV_a();
    case 33:
      want(p, 0, 0, id);
      return F_IV_b();
    default:
      throw ClassifyError(ErrorKind::BadInput, "unknown registry id " + std::to_string(id));
  }
}

CanonicalParams random_params(int id, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 3);
  auto draw = [&]() { return Rat(num(rng), den(rng)); };
  auto draw_nz = [&]() {
    Rat x;
    do { x = draw(); } while (x == 0);
    return x;
  };
  for (int attempt = 0; attempt < 20000; ++attempt) {
    CanonicalParams p;
    try {
      switch (id) {
        case 1:
        case 2: {
          Rat a = draw(), b = draw(), c = draw();
          p.reals = {a, b, c, -(a + b + c)};
          break;
        }
        case 3: {
          Rat a = draw(), b = draw();
          p.reals = {a, b, -(2 * a + b)};
          break;
        }
        case 4: {
          Rat a = draw(), b = draw();
          p.reals = {a, b, -(a + 2 * b)};
          break;
        }
        case 5: {
          Rat a = draw(), b = draw();
          p.reals = {a, b, -(a + b) / 2};
          break;
        }
        case 6:
        case 7:
        case 18:
        case 28:
        case 29: {
          Rat a = draw_nz();
          p.reals = {a, -a};
          break;
        }
        case 8:
        case 9:
        case 19:
        case 20:
        case 24:
        case 26: {
          Rat b = draw_nz();
          p.reals = {-3 * b, b};
          break;
        }
        case 11:
        case 12: {
          Rat x = draw();
          p.cx = {CRat(x, draw_nz()), CRat(-x, draw_nz())};
          break;
        }
        case 13:
          p.cx = {CRat(Rat(0), draw_nz())};
          break;
        case 14: {
          Rat a = draw(), b = draw();
          p.reals = {a, b};
          p.cx = {CRat(-(a + b) / 2, draw_nz())};
          break;
        }
        case 15: {
          Rat a = draw();
          p.reals = {a};
          p.cx = {CRat(-a, draw_nz())};
          break;
        }
        case 16:
        case 17: {
          Rat a = draw(), b = draw();
          p.reals = {a, b, -(a + b) / 2};
          break;
        }
        case 22:
        case 23: {
          Rat a = draw();
          p.reals = {a};
          p.cx = {CRat(-a, draw_nz())};
          break;
        }
        default:
          break;  // parameter-free entries
      }
      bool bounded = true;  // the documented bound covers derived parameters too
      for (const Rat& x : p.reals) bounded = bounded && abs(x) <= 10;
      for (const CRat& z : p.cx) bounded = bounded && abs(z.re) <= 10 && abs(z.im) <= 10;
      if (!bounded) continue;
      canonical(id, p);  // validate
      return p;
    } catch (const ClassifyError&) {
      continue;
    }
  }
  throw ClassifyError(ErrorKind::Internal,
                      "could not draw valid parameters for entry " + std::to_string(id));
}

// --- classification pipeline --------------------------------------------------

namespace {

template <class T>
ClassificationReport classify_impl(const Mat4<T>& c_in, Tetrad tetrad, double tol) {
  ClassificationReport rep;
  rep.rational_mode = std::is_same_v<T, Rat>;
  rep.input_tetrad = tetrad;
  const Mat4<T> c_given_checked = c_in;  // symmetry/trace enforced below via mixed()
  // Validate in the given frame, then do all spinor work in the null frame.
  (void)mixed(c_given_checked, tetrad, tol);
  const Mat4<T> c_null = convert_components(c_given_checked, tetrad, Tetrad::Null);
  const MixedMatrix<T> mm = mixed(c_null, Tetrad::Null, tol);
  const DepressedQuartic<T> w = char_coeffs(mm, tol);
  const QuarticInvariants<T> inv = invariants(w);
  rep.c2 = to_double(w.c2);
  rep.c3 = to_double(w.c3);
  rep.c4 = to_double(w.c4);
  if constexpr (std::is_same_v<T, Rat>) {
    rep.c2_str = w.c2.str();
    rep.c3_str = w.c3.str();
    rep.c4_str = w.c4.str();
  }
  rep.inv = {to_double(inv.I), to_double(inv.J), to_double(inv.K), to_double(inv.L),
             to_double(inv.N), to_double(inv.P), to_double(inv.Delta)};
  // Coefficient roundoff scales with the matrix, so threshold against it even
  // when the true coefficients vanish. The matrix magnitude itself (not a
  // norm bound on the spectrum) is the right reference: a larger floor starts
  // merging genuinely distinct eigenvalues.
  double scale_floor = 0.0;
  if constexpr (std::is_same_v<T, double>) scale_floor = mat_max_abs(mm.m);
  rep.pattern = classify_real(w, tol, scale_floor);
  rep.eigen = eigen_structure(mm, w, rep.pattern, tol);
  for (const auto& n : rep.eigen.notes) rep.warnings.push_back(n);

  const SpinorImage<T> img = spinor_image(c_null);
  const auto [V, Vd] = plebanski_pair(img);
  rep.pp_left = pp_type(V, tol, scale_floor);
  rep.pp_right = pp_type(Vd, tol, scale_floor);

  rep.symbol.left = rep.pp_left;
  rep.symbol.right = rep.pp_right;
  rep.symbol.v = rep.eigen.v;
  for (const auto& e : rep.eigen.entries) {
    SymbolTerm t;
    t.pair = e.pair;
    t.n = e.alg;
    t.cls = e.cls;
    t.q = e.q;
    t.re = e.re;
    t.im = e.im;
    rep.symbol.terms.push_back(t);
  }
  rep.registry_id = lookup(rep.symbol);
  if (!rep.registry_id)
    rep.warnings.push_back("assembled symbol has no registry entry: " + render_symbol(rep.symbol));

  if constexpr (std::is_same_v<T, double>) {
    // Boundary-proximity warnings for the sign quantities.
    const double s = std::max({detail::root_scale(w), scale_floor, 1e-150});
    struct Q {
      const char* name;
      double val;
      int weight;
    } qs[] = {{"Delta", rep.inv.Delta, 12}, {"I", rep.inv.I, 4}, {"J", rep.inv.J, 6},
              {"K", rep.inv.K, 3},          {"L", rep.inv.L, 2}, {"N", rep.inv.N, 4},
              {"P", rep.inv.P, 6}};
    for (const auto& q : qs) {
      const double thr = tol * std::pow(s, q.weight);
      if (q.val != 0.0 && std::abs(q.val) <= 10.0 * thr)
        rep.warnings.push_back(std::string("boundary-proximate: ") + q.name);
    }
  }
  return rep;
}

}  // namespace

ClassificationReport classify(const Mat4<Rat>& c, Tetrad tetrad, double tol) {
  return classify_impl(c, tetrad, tol);
}
ClassificationReport classify(const Mat4<double>& c, Tetrad tetrad, double tol) {
  return classify_impl(c, tetrad, tol);
}

// --- sign criteria -------------------------------------------------------------

std::pair<PPType, PPType> sigma_criteria(int id, const CanonicalParams& p) {
  switch (id) {
    case 1:
    case 2: {
      if (p.reals.size() != 4) throw ClassifyError(ErrorKind::BadInput, "need 4 reals");
      const Rat s1 = sigma1(p.reals[0], p.reals[1], p.reals[2]);
      if (s1 < 0) return {PPType::I_r, PPType::I_r};
      if (s1 > 0) return {PPType::I_c, PPType::I_c};
      throw ClassifyError(ErrorKind::BadInput, "sigma1 = 0: boundary");
    }
    case 11:
    case 12: {
      if (p.cx.size() != 2) throw ClassifyError(ErrorKind::BadInput, "need 2 complex");
      const Rat prod = p.cx[0].im * p.cx[1].im;
      if (prod < 0) return {PPType::I_c, PPType::I_r};
      if (prod > 0) return {PPType::I_r, PPType::I_c};
      throw ClassifyError(ErrorKind::BadInput, "Im Z1 * Im Z2 = 0: boundary");
    }
    case 16:
    case 17: {
      if (p.reals.size() != 3) throw ClassifyError(ErrorKind::BadInput, "need 3 reals");
      const Rat s2 = sigma2(p.reals[0], p.reals[1]);
      if (s2 > 0) return {PPType::II_r, PPType::II_r};
      if (s2 < 0) return {PPType::II_rc, PPType::II_rc};
      throw ClassifyError(ErrorKind::BadInput, "sigma2 = 0: boundary");
    }
    case 22:
    case 23: {
      if (p.cx.size() != 1) throw ClassifyError(ErrorKind::BadInput, "need 1 complex");
      if (p.cx[0].im > 0) return {PPType::II_r, PPType::II_rc};
      if (p.cx[0].im < 0) return {PPType::II_rc, PPType::II_r};
      throw ClassifyError(ErrorKind::BadInput, "Im Z = 0: boundary");
    }
    default:
      throw ClassifyError(ErrorKind::BadInput, "sign criteria do not apply to this entry");
  }
}

// --- degeneration graph ----------------------------------------------------------

const std::vector<Edge>& degeneration_edges() {
  static const std::vector<Edge> edges = [] {
    std::vector<Edge> out;
    for (const auto& e : registry())
      for (int succ : e.successors) out.push_back({e.id, succ});
    return out;
  }();
  return edges;
}

Mat4<Rat> edge_family(const Edge& e, const Rat& t) {
  const long long key = e.parent * 100 + e.target;
  switch (key) {
    case 104: return F_Ir(2, -3, 2 + t, -1 - t);
    case 203: return F_Ir(2 + t, 2 - t, 1, -5);
    case 204: return F_Ir(2, -3, 2 - t, -1 + t);
    case 205: return F_Ir(1, -5, 2 + t, 2 - t);
    case 306: return F_Ir(1, 1, -1 + t, -1 - t);
    case 309: return F_Ir(1, 1, 1 + t, -3 - t);
    case 407: return F_Ir(-1 + t, 1, 1, -1 - t);
    case 408: return F_Ir(-3 - t, 1, 1, 1 + t);
    case 409: return F_Ir(1 + t, 1, 1, -3 - t);
    case 506: return F_Ir(1 + t, 1 - t, -1, -1);
    case 508: return F_Ir(-3 - t, 1 + t, 1, 1);
    case 610: return F_Ir(t, t, -t, -t);
    case 710: return F_Ir(t, -t, t, -t);
    case 810: return F_Ir(-3 * t, t, t, t);
    case 910: return F_Ir(t, t, -3 * t, t);
    case 1213: return F_Ic(t, 2, -t, 2);
    case 1415: return F_Irc(1 + t, 1 - t, -1, 1);
    case 1618: return F_IIr(1 - t, 1 + t, -1);
    case 1718: return F_IIr(1 + t, 1 - t, -1);
    case 1619: return F_IIr(-3 + t, 1 - t, 1);
    case 1719: return F_IIr(-3 - t, 1 + t, 1);
    case 1620: return F_IIr(1 + t, -3 - t, 1);
    case 1720: return F_IIr(1 - t, -3 + t, 1);
    case 1821: return F_IIr(t, t, -t);
    case 1921: return F_IIr(-3 * t, t, t);
    case 2021: return F_IIr(t, -3 * t, t);
    case 2425: return F_IIIt(-3 * t, t);
    case 2627: return F_IIIs(-3 * t, t);
    case 2830: return F_IIIn_a(t, -t);
    case 2931: return F_IIIn_b(t, -t);
    default:
      throw ClassifyError(ErrorKind::BadInput, "not an admissible degeneration edge");
  }
}

void degeneration_check(const Edge& e, double tol) {
  const Mat4<Rat> near = edge_family(e, Rat(1, 8));
  const Mat4<Rat> limit = edge_family(e, Rat(0));
  const auto rep_near = classify(near, Tetrad::Null, tol);
  const auto rep_limit = classify(limit, Tetrad::Null, tol);
  if (!rep_near.registry_id || *rep_near.registry_id != e.parent)
    throw ClassifyError(ErrorKind::Internal,
                        "edge " + std::to_string(e.parent) + "->" + std::to_string(e.target) +
                            ": family member does not classify to the parent");
  if (!rep_limit.registry_id || *rep_limit.registry_id != e.target)
    throw ClassifyError(ErrorKind::Internal,
                        "edge " + std::to_string(e.parent) + "->" + std::to_string(e.target) +
                            ": limit does not classify to the target");
}

}  // namespace ricci
