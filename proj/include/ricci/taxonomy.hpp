#pragma once

// The 33-type registry for traceless Ricci tensors in neutral signature:
// type symbols, canonical generators, the classification pipeline, the
// sigma/Im sign criteria and the degeneration (limit) graph.

#include "ricci/plebanski.hpp"
#include "ricci/spectral.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ricci {

// One eigenvalue term of a type symbol. For registry templates the numeric
// value fields are unused; matching is structural.
struct SymbolTerm {
  bool pair = false;       // conjugate pair Z, Z~
  int n = 1;               // multiplicity (per member for pairs)
  CausalClass cls = CausalClass::N;  // real terms only
  int q = 1;               // minimal-polynomial exponent
  double re = 0.0, im = 0.0;         // display/sorting values
};

struct RicciTypeSymbol {
  PPType left = PPType::Zero, right = PPType::Zero;
  std::vector<SymbolTerm> terms;  // pairs first, then descending (n, value)
  int v = 0;
};

std::string render_symbol(const RicciTypeSymbol& s);
std::optional<RicciTypeSymbol> parse_symbol(const std::string& text);

struct TypeRegistryEntry {
  int id = 0;
  std::string code;        // e.g. "I_r.1", "IV.a"
  std::string parent;      // one of I_r, I_c, I_rc, II_r, II_rc, III_t, III_s, III_n, IV
  PPType left = PPType::Zero, right = PPType::Zero;
  std::vector<SymbolTerm> terms;
  int v = 0;
  std::string display;     // rendered template symbol
  std::vector<int> successors;  // admissible degeneration targets
  std::string params_doc;  // meaning of CanonicalParams for this entry
};

const std::vector<TypeRegistryEntry>& registry();
const TypeRegistryEntry* find_entry(int id);
const TypeRegistryEntry* find_entry_by_code(const std::string& code);

// Structural match of an assembled symbol against the registry.
std::optional<int> lookup(const RicciTypeSymbol& s);

struct CanonicalParams {
  std::vector<Rat> reals;
  std::vector<CRat> cx;
};

// Canonical generator (null-tetrad covariant components). Throws
// ConstraintViolation / DegeneracyViolation for invalid parameters.
Mat4<Rat> canonical(int id, const CanonicalParams& params);

// Random valid parameter draw (all magnitudes <= 10).
CanonicalParams random_params(int id, std::mt19937_64& rng);

struct ClassificationReport {
  bool rational_mode = true;
  Tetrad input_tetrad = Tetrad::Null;
  std::string c2_str, c3_str, c4_str;  // characteristic W-form coefficients
  double c2 = 0, c3 = 0, c4 = 0;
  QuarticInvariants<double> inv;
  RootPattern pattern = RootPattern::Rx4;
  EigenReport eigen;
  PPType pp_left = PPType::Zero, pp_right = PPType::Zero;
  RicciTypeSymbol symbol;
  std::optional<int> registry_id;
  std::vector<std::string> warnings;
};

ClassificationReport classify(const Mat4<Rat>& c, Tetrad tetrad, double tol = 1e-9);
ClassificationReport classify(const Mat4<double>& c, Tetrad tetrad, double tol = 1e-9);

// Sign criteria predicting the PP pair from canonical parameters, applicable
// to the nondegenerate I_r, I_c, II_r, II_rc entries (ids 1/2, 11/12, 16/17,
// 22/23).
std::pair<PPType, PPType> sigma_criteria(int id, const CanonicalParams& params);

struct Edge {
  int parent = 0, target = 0;
};

// All admissible degeneration limits between registry entries.
const std::vector<Edge>& degeneration_edges();

// One-parameter family realizing an edge: t != 0 lies in the parent type,
// t = 0 is the limit tensor.
Mat4<Rat> edge_family(const Edge& e, const Rat& t);

// Verifies the edge: classify(family(1/8)) == parent, classify(family(0)) ==
// target. Throws ClassifyError on failure.
void degeneration_check(const Edge& e, double tol = 1e-9);

}  // namespace ricci
