#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "ricci/taxonomy.hpp"

#include <map>
#include <random>
#include <set>

using namespace ricci;

TEST_CASE("registry cardinality and family counts") {
  const auto& reg = registry();
  CHECK(reg.size() == 33);
  std::map<std::string, int> counts;
  std::set<int> ids;
  std::set<std::string> codes, displays;
  for (const auto& e : reg) {
    ++counts[e.parent];
    ids.insert(e.id);
    codes.insert(e.code);
    displays.insert(e.display);
  }
  CHECK(ids.size() == 33);
  CHECK(codes.size() == 33);
  CHECK(displays.size() == 33);
  const std::map<std::string, int> want = {{"I_r", 10}, {"I_c", 3},  {"I_rc", 2},
                                           {"II_r", 6}, {"II_rc", 2}, {"III_t", 2},
                                           {"III_s", 2}, {"III_n", 4}, {"IV", 2}};
  CHECK(counts == want);
}

TEST_CASE("selected display symbols") {
  CHECK(find_entry(10)->display == "[-] x [-] [4R^nst]^4_(1)");
  CHECK(find_entry(16)->display == "[II]_rc x [II]_rc [2R1^n-R2^s-R3^t]^3_(211)");
  CHECK(find_entry(12)->display == "[I]_r x [I]_c [Z1-Z1~-Z2-Z2~]^4_(1111)");
  CHECK(find_entry(32)->display == "[N]_r x [III]_r [4R^n]^1_(4)");
  CHECK(find_entry_by_code("II_r.3") == find_entry(18));
  CHECK(find_entry_by_code("nope") == nullptr);
  CHECK(find_entry(0) == nullptr);
}

TEST_CASE("render/parse round trip for every entry") {
  for (const auto& e : registry()) {
    RicciTypeSymbol s;
    s.left = e.left;
    s.right = e.right;
    s.terms = e.terms;
    s.v = e.v;
    const auto parsed = parse_symbol(render_symbol(s));
    REQUIRE(parsed.has_value());
    CHECK(lookup(*parsed) == e.id);
  }
}

TEST_CASE("parse_symbol rejects malformed symbols") {
  CHECK_FALSE(parse_symbol("").has_value());
  CHECK_FALSE(parse_symbol("[I]_r x [I]_r").has_value());
  CHECK_FALSE(parse_symbol("[I]_r x [I]_r [R1^s-R2^q]^4_(11)").has_value());  // bad class
  CHECK_FALSE(parse_symbol("[I]_r x [I]_r [Z1-Z2~]^4_(11)").has_value());     // mismatched pair
  CHECK_FALSE(parse_symbol("[I]_r x [I]_r [R^s]^4_(12)").has_value());        // extra q digit
  CHECK_FALSE(parse_symbol("[X]_r x [I]_r [R^s]^4_(1)").has_value());         // unknown pp name
}

TEST_CASE("canonical representatives classify to their own entry") {
  std::mt19937_64 rng(7);
  for (const auto& e : registry()) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto params = random_params(e.id, rng);
      const auto c = canonical(e.id, params);
      const auto r = classify(c, Tetrad::Null);
      REQUIRE(r.registry_id.has_value());
      CHECK(*r.registry_id == e.id);
      // the rendered symbol (eigenvalues in display order) is structurally the
      // registry template
      const auto parsed = parse_symbol(render_symbol(r.symbol));
      REQUIRE(parsed.has_value());
      CHECK(lookup(*parsed) == e.id);
    }
  }
}

TEST_CASE("classification of the hand-checked fixtures") {
  for (const auto& f : fixtures::all()) {
    const auto r = classify(f.c, Tetrad::Null);
    REQUIRE(r.registry_id.has_value());
    CHECK(*r.registry_id == f.id);
    // float mode agrees
    const auto rf = classify(fixtures::to_f(f.c), Tetrad::Null);
    REQUIRE(rf.registry_id.has_value());
    CHECK(*rf.registry_id == f.id);
    CHECK_FALSE(rf.rational_mode);
  }
  const auto z = classify(zero_mat<Rat>(), Tetrad::Null);
  REQUIRE(z.registry_id.has_value());
  CHECK(*z.registry_id == 10);
}

TEST_CASE("classification is frame covariant on the fixtures") {
  for (const auto& f : fixtures::all()) {
    const auto orth = convert_components(f.c, Tetrad::Null, Tetrad::Orthonormal);
    const auto r = classify(orth, Tetrad::Orthonormal);
    REQUIRE(r.registry_id.has_value());
    CHECK(*r.registry_id == f.id);
  }
}

TEST_CASE("canonical parameter validation") {
  auto expect_kind = [](int id, const CanonicalParams& p, ErrorKind want) {
    try {
      canonical(id, p);
      FAIL("expected ClassifyError for entry ", id);
    } catch (const ClassifyError& e) {
      CHECK(e.kind() == want);
    }
  };
  // arity
  expect_kind(1, {{Rat(1)}, {}}, ErrorKind::ConstraintViolation);
  expect_kind(10, {{Rat(1)}, {}}, ErrorKind::ConstraintViolation);
  // linear constraint violations
  expect_kind(1, {{Rat(1), Rat(2), Rat(3), Rat(4)}, {}}, ErrorKind::ConstraintViolation);
  expect_kind(16, {{Rat(1), Rat(2), Rat(3)}, {}}, ErrorKind::ConstraintViolation);
  expect_kind(22, {{Rat(1)}, {CRat(Rat(1), Rat(1))}}, ErrorKind::ConstraintViolation);
  // degeneracies: coincident eigenvalues / vanishing moduli
  expect_kind(1, {{Rat(1), Rat(1), Rat(2), Rat(-4)}, {}}, ErrorKind::DegeneracyViolation);
  expect_kind(6, {{Rat(0), Rat(0)}, {}}, ErrorKind::DegeneracyViolation);
  expect_kind(13, {{}, {CRat(Rat(0), Rat(0))}}, ErrorKind::DegeneracyViolation);
  // wrong sign region
  expect_kind(22, {{Rat(1)}, {CRat(Rat(-1), Rat(-2))}}, ErrorKind::DegeneracyViolation);
  expect_kind(23, {{Rat(1)}, {CRat(Rat(-1), Rat(2))}}, ErrorKind::DegeneracyViolation);
  // unknown id
  expect_kind(99, {}, ErrorKind::BadInput);
}

TEST_CASE("sigma sign criteria agree with the computed Petrov-Penrose pair") {
  std::mt19937_64 rng(99);
  for (int id : {1, 2, 11, 12, 16, 17, 22, 23}) {
    for (int rep = 0; rep < 10; ++rep) {
      const auto params = random_params(id, rng);
      const auto predicted = sigma_criteria(id, params);
      const auto r = classify(canonical(id, params), Tetrad::Null);
      CHECK(r.pp_left == predicted.first);
      CHECK(r.pp_right == predicted.second);
    }
  }
}

TEST_CASE("degeneration graph closure") {
  const auto& edges = degeneration_edges();
  CHECK(edges.size() == 30);
  // edge list matches the per-entry successor lists exactly
  std::set<std::pair<int, int>> from_edges, from_succ;
  for (const auto& e : edges) from_edges.insert({e.parent, e.target});
  for (const auto& e : registry())
    for (int s : e.successors) from_succ.insert({e.id, s});
  CHECK(from_edges == from_succ);
  for (const auto& e : edges) {
    CHECK_NOTHROW(degeneration_check(e));
  }
}

TEST_CASE("edge families land in the parent away from the limit") {
  for (const auto& e : degeneration_edges()) {
    const auto r = classify(edge_family(e, Rat(1, 8)), Tetrad::Null);
    REQUIRE(r.registry_id.has_value());
    CHECK(*r.registry_id == e.parent);
    const auto r0 = classify(edge_family(e, Rat(0)), Tetrad::Null);
    REQUIRE(r0.registry_id.has_value());
    CHECK(*r0.registry_id == e.target);
  }
}

TEST_CASE("the mirrored double-pair limit lies outside the registry") {
  // The family F_Ic(t, 2, -t, -2) realizes entry 11 for t != 0; its t -> 0
  // limit is a doubled conjugate pair whose Plebanski pair is ([D]_c, [D]_r),
  // the mirror of entry 13 ([D]_r, [D]_c), and no entry matches it.
  CanonicalParams p;
  p.cx = {CRat(Rat(1, 4), Rat(2)), CRat(Rat(-1, 4), Rat(-2))};
  const auto r1 = classify(canonical(11, p), Tetrad::Null);
  REQUIRE(r1.registry_id.has_value());
  CHECK(*r1.registry_id == 11);

  Mat4<Rat> limit = zero_mat<Rat>();
  limit[2][2] = Rat(-2);
  limit[3][3] = Rat(2);
  limit[0][0] = Rat(2);
  limit[1][1] = Rat(-2);
  const auto r0 = classify(limit, Tetrad::Null);
  CHECK(r0.pattern == RootPattern::Zx2Zbx2);
  CHECK(r0.pp_left == PPType::D_c);
  CHECK(r0.pp_right == PPType::D_r);
  CHECK_FALSE(r0.registry_id.has_value());
}

TEST_CASE("boundary-proximate float classifications carry warnings") {
  // perturb a defective fixture slightly: still classifies, and flags the
  // nearby invariant boundary
  auto cf = fixtures::to_f(fixtures::iir16().c);
  cf[0][0] += 1e-11;
  cf[1][1] += 1e-11;
  cf[2][2] -= 2e-11;
  const auto r = classify(cf, Tetrad::Null);
  CHECK_FALSE(r.warnings.empty());
}

TEST_CASE("random_params always yields valid parameters") {
  std::mt19937_64 rng(3);
  for (const auto& e : registry()) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto params = random_params(e.id, rng);
      CHECK_NOTHROW(canonical(e.id, params));
      for (const auto& x : params.reals) CHECK(abs(x) <= 10);
      for (const auto& z : params.cx) {
        CHECK(abs(z.re) <= 10);
        CHECK(abs(z.im) <= 10);
      }
    }
  }
}
