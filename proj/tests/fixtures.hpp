#pragma once

// Shared hand-checked fixtures: canonical representatives of one entry per
// parent family, given as null-tetrad covariant components, together with
// independently computed characteristic coefficients, spinor images and
// Plebanski pairs.

#include "ricci/taxonomy.hpp"

#include <initializer_list>
#include <map>
#include <tuple>

namespace fixtures {

using ricci::Mat4;
using ricci::Rat;

inline Mat4<Rat> mat(std::initializer_list<const char*> cells) {
  Mat4<Rat> m;
  auto it = cells.begin();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = Rat(*it++);
  return m;
}

inline Mat4<double> to_f(const Mat4<Rat>& m) {
  Mat4<double> f;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) f[i][j] = ricci::to_double(m[i][j]);
  return f;
}

// Sparse spinor-image expectation: index tuple (A,B,Cd,Dd) -> value; entries
// absent from the map are zero.
using ImgMap = std::map<std::tuple<int, int, int, int>, Rat>;

struct Fixture {
  int id;                       // registry entry it classifies to
  Mat4<Rat> c;                  // null-tetrad covariant components
  Mat4<Rat> m;                  // mixed matrix C^a_b
  Rat c2, c3, c4;               // W-form x^4 + c2 x^2 - c3 x + c4
  ImgMap img;                   // nonzero spinor-image components
  std::array<Rat, 5> v, vd;     // Plebanski pair (V0..V4 each)
};

// F_Ir(1, -3, 2, 0): eigenvalues {1, -3, 2, 0}.
inline Fixture ir1() {
  Fixture f;
  f.id = 1;
  f.c = mat({"-1/2", "3/2", "0", "0", "3/2", "-1/2", "0", "0",
             "0", "0", "-3/2", "-3/2", "0", "0", "-3/2", "-3/2"});
  f.m = mat({"3/2", "-1/2", "0", "0", "-1/2", "3/2", "0", "0",
             "0", "0", "-3/2", "-3/2", "0", "0", "-3/2", "-3/2"});
  f.c2 = Rat(-7); f.c3 = Rat(-6); f.c4 = Rat(0);
  f.img = {{{0, 0, 0, 0}, Rat(-3, 4)}, {{0, 0, 1, 1}, Rat(-1, 4)},
           {{0, 1, 0, 1}, Rat(3, 4)},  {{0, 1, 1, 0}, Rat(3, 4)},
           {{1, 0, 0, 1}, Rat(3, 4)},  {{1, 0, 1, 0}, Rat(3, 4)},
           {{1, 1, 0, 0}, Rat(-1, 4)}, {{1, 1, 1, 1}, Rat(-3, 4)}};
  f.v = {Rat(3, 2), Rat(0), Rat(-13, 6), Rat(0), Rat(3, 2)};
  f.vd = f.v;
  return f;
}

// F_Ic(1, 2, -1, 1): eigenvalue pairs 1 +- 2i and -1 +- i.
inline Fixture ic12() {
  Fixture f;
  f.id = 12;
  f.c = mat({"-1", "-1", "0", "0", "-1", "1", "0", "0",
             "0", "0", "-2", "1", "0", "0", "1", "2"});
  f.m = mat({"-1", "1", "0", "0", "-1", "-1", "0", "0",
             "0", "0", "1", "2", "0", "0", "-2", "1"});
  f.c2 = Rat(3); f.c3 = Rat(-6); f.c4 = Rat(10);
  f.img = {{{0, 0, 0, 0}, Rat(1)},      {{0, 0, 1, 1}, Rat(1, 2)},
           {{0, 1, 0, 1}, Rat(-1, 2)},  {{0, 1, 1, 0}, Rat(-1, 2)},
           {{1, 0, 0, 1}, Rat(-1, 2)},  {{1, 0, 1, 0}, Rat(-1, 2)},
           {{1, 1, 0, 0}, Rat(-1, 2)},  {{1, 1, 1, 1}, Rat(-1)}};
  f.v = {Rat(4), Rat(0), Rat(-3), Rat(0), Rat(4)};
  f.vd = {Rat(-4), Rat(0), Rat(-3), Rat(0), Rat(-4)};
  return f;
}

// F_Irc(1, 3, -2, 1): eigenvalues {1, 3} and pair -2 +- i.
inline Fixture irc14() {
  Fixture f;
  f.id = 14;
  f.c = mat({"-1", "2", "0", "0", "2", "-1", "0", "0",
             "0", "0", "-1", "-2", "0", "0", "-2", "1"});
  f.m = mat({"2", "-1", "0", "0", "-1", "2", "0", "0",
             "0", "0", "-2", "1", "0", "0", "-1", "-2"});
  f.c2 = Rat(-8); f.c3 = Rat(8); f.c4 = Rat(15);
  f.img = {{{0, 0, 0, 0}, Rat(1, 2)},  {{0, 0, 1, 1}, Rat(-1, 2)},
           {{0, 1, 0, 1}, Rat(1)},     {{0, 1, 1, 0}, Rat(1)},
           {{1, 0, 0, 1}, Rat(1)},     {{1, 0, 1, 0}, Rat(1)},
           {{1, 1, 0, 0}, Rat(-1, 2)}, {{1, 1, 1, 1}, Rat(-1, 2)}};
  f.v = {Rat(-2), Rat(0), Rat(-16, 3), Rat(0), Rat(2)};
  f.vd = f.v;
  return f;
}

// F_IIr(2, -4, 1): eigenvalues {2, -4, 1 (double, defective)}.
inline Fixture iir16() {
  Fixture f;
  f.id = 16;
  f.c = mat({"3", "-1", "0", "0", "-1", "3", "0", "0",
             "0", "0", "0", "1", "0", "0", "1", "1"});
  f.m = mat({"-1", "3", "0", "0", "3", "-1", "0", "0",
             "0", "0", "1", "1", "0", "0", "0", "1"});
  f.c2 = Rat(-11); f.c3 = Rat(-18); f.c4 = Rat(-8);
  f.img = {{{0, 0, 0, 0}, Rat(1, 2)},  {{0, 0, 1, 1}, Rat(3, 2)},
           {{0, 1, 0, 1}, Rat(-1, 2)}, {{0, 1, 1, 0}, Rat(-1, 2)},
           {{1, 0, 0, 1}, Rat(-1, 2)}, {{1, 0, 1, 0}, Rat(-1, 2)},
           {{1, 1, 0, 0}, Rat(3, 2)}};
  f.v = {Rat(6), Rat(0), Rat(5, 3), Rat(0), Rat(0)};
  f.vd = f.v;
  return f;
}

// F_IIrc(-1, 2, 1): double eigenvalue 1 (defective) and pair -1 +- 2i.
inline Fixture iirc22() {
  Fixture f;
  f.id = 22;
  f.c = mat({"-2", "-1", "0", "0", "-1", "2", "0", "0",
             "0", "0", "0", "1", "0", "0", "1", "1"});
  f.m = mat({"-1", "2", "0", "0", "-2", "-1", "0", "0",
             "0", "0", "1", "1", "0", "0", "0", "1"});
  f.c2 = Rat(2); f.c3 = Rat(8); f.c4 = Rat(5);
  f.img = {{{0, 0, 0, 0}, Rat(1, 2)},  {{0, 0, 1, 1}, Rat(1)},
           {{0, 1, 0, 1}, Rat(-1, 2)}, {{0, 1, 1, 0}, Rat(-1, 2)},
           {{1, 0, 0, 1}, Rat(-1, 2)}, {{1, 0, 1, 0}, Rat(-1, 2)},
           {{1, 1, 0, 0}, Rat(-1)}};
  f.v = {Rat(4), Rat(0), Rat(-8, 3), Rat(0), Rat(0)};
  f.vd = {Rat(-4), Rat(0), Rat(-8, 3), Rat(0), Rat(0)};
  return f;
}

// F_IIIt(3, -1): triple eigenvalue -1 (one eigenvector) and 3.
inline Fixture iiit24() {
  Fixture f;
  f.id = 24;
  f.c = mat({"-2", "1", "0", "1", "1", "-2", "0", "1",
             "0", "0", "0", "-1", "1", "1", "-1", "0"});
  f.m = mat({"1", "-2", "0", "1", "-2", "1", "0", "1",
             "1", "1", "-1", "0", "0", "0", "0", "-1"});
  f.c2 = Rat(-6); f.c3 = Rat(8); f.c4 = Rat(-3);
  f.img = {{{0, 0, 0, 1}, Rat(1, 2)}, {{0, 0, 1, 0}, Rat(1, 2)},
           {{0, 0, 1, 1}, Rat(-1)},   {{0, 1, 0, 0}, Rat(1, 2)},
           {{0, 1, 0, 1}, Rat(1, 2)}, {{0, 1, 1, 0}, Rat(1, 2)},
           {{1, 0, 0, 0}, Rat(1, 2)}, {{1, 0, 0, 1}, Rat(1, 2)},
           {{1, 0, 1, 0}, Rat(1, 2)}, {{1, 1, 0, 0}, Rat(-1)}};
  f.v = {Rat(-2), Rat(-4), Rat(0), Rat(0), Rat(0)};
  f.vd = f.v;
  return f;
}

// F_IIIs(3, -1).
inline Fixture iiis26() {
  Fixture f;
  f.id = 26;
  f.c = mat({"2", "1", "0", "1", "1", "2", "0", "-1",
             "0", "0", "0", "-1", "1", "-1", "-1", "0"});
  f.m = mat({"1", "2", "0", "-1", "2", "1", "0", "1",
             "1", "-1", "-1", "0", "0", "0", "0", "-1"});
  f.c2 = Rat(-6); f.c3 = Rat(8); f.c4 = Rat(-3);
  f.img = {{{0, 0, 0, 1}, Rat(-1, 2)}, {{0, 0, 1, 0}, Rat(-1, 2)},
           {{0, 0, 1, 1}, Rat(1)},     {{0, 1, 0, 0}, Rat(1, 2)},
           {{0, 1, 0, 1}, Rat(1, 2)},  {{0, 1, 1, 0}, Rat(1, 2)},
           {{1, 0, 0, 0}, Rat(1, 2)},  {{1, 0, 0, 1}, Rat(1, 2)},
           {{1, 0, 1, 0}, Rat(1, 2)},  {{1, 1, 0, 0}, Rat(1)}};
  f.v = {Rat(-2), Rat(4), Rat(0), Rat(0), Rat(0)};
  f.vd = {Rat(-2), Rat(-4), Rat(0), Rat(0), Rat(0)};
  return f;
}

// F_IIIn_a(2, -2): two defective double eigenvalues +-2.
inline Fixture iiin28() {
  Fixture f;
  f.id = 28;
  f.c = mat({"1", "-2", "0", "0", "-2", "0", "0", "0",
             "0", "0", "0", "2", "0", "0", "2", "1"});
  f.m = mat({"-2", "0", "0", "0", "1", "-2", "0", "0",
             "0", "0", "2", "1", "0", "0", "0", "2"});
  f.c2 = Rat(-8); f.c3 = Rat(0); f.c4 = Rat(16);
  f.img = {{{0, 0, 0, 0}, Rat(1, 2)}, {{0, 1, 0, 1}, Rat(-1)},
           {{0, 1, 1, 0}, Rat(-1)},   {{1, 0, 0, 1}, Rat(-1)},
           {{1, 0, 1, 0}, Rat(-1)},   {{1, 1, 0, 0}, Rat(1, 2)}};
  f.v = {Rat(0), Rat(0), Rat(-16, 3), Rat(0), Rat(0)};
  f.vd = {Rat(2), Rat(0), Rat(-16, 3), Rat(0), Rat(0)};
  return f;
}

// F_IV_a(): quadruple eigenvalue 0 with a single eigenvector.
inline Fixture iv32() {
  Fixture f;
  f.id = 32;
  f.c = mat({"1", "0", "0", "0", "0", "0", "0", "1",
             "0", "0", "0", "0", "0", "1", "0", "0"});
  f.m = mat({"0", "0", "0", "1", "1", "0", "0", "0",
             "0", "1", "0", "0", "0", "0", "0", "0"});
  f.c2 = Rat(0); f.c3 = Rat(0); f.c4 = Rat(0);
  f.img = {{{0, 0, 0, 1}, Rat(1, 2)}, {{0, 0, 1, 0}, Rat(1, 2)},
           {{1, 1, 0, 0}, Rat(1, 2)}};
  f.v = {Rat(-2), Rat(0), Rat(0), Rat(0), Rat(0)};
  f.vd = {Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)};
  return f;
}

inline std::vector<Fixture> all() {
  return {ir1(), ic12(), irc14(), iir16(), iirc22(), iiit24(), iiis26(), iiin28(), iv32()};
}

// Orthonormal-frame components of the ir1 / iirc22 tensors (independent
// conversion checks).
inline Mat4<Rat> ir1_orth() {
  return mat({"1", "0", "0", "0", "0", "-3", "0", "0",
              "0", "0", "-2", "0", "0", "0", "0", "0"});
}
inline Mat4<Rat> iirc22_orth() {
  return mat({"-1", "0", "-2", "0", "0", "3/2", "0", "-1/2",
              "-2", "0", "1", "0", "0", "-1/2", "0", "-1/2"});
}

}  // namespace fixtures
