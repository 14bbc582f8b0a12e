// Command-line front end: classify tensors, generate canonical
// representatives, export the type registry, and run self-tests.
//
// Exit codes: 0 success, 2 invalid input (validation failure),
// 3 internal inconsistency (including classifications outside the registry).

#include "ricci/io.hpp"
#include "ricci/roots_oracle.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using namespace ricci;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitInternal = 3;

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Internal:
    case ErrorKind::InconsistentPattern:
    case ErrorKind::NoAnnihilation:
    case ErrorKind::UnknownSymbol:
      return kExitInternal;
    default:
      return kExitValidation;
  }
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream f(path);
  if (!f) throw ClassifyError(ErrorKind::BadInput, "cannot open '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

// Parameter string: semicolon- or comma-separated tokens. A real parameter is
// an integer or fraction ("-3", "1/2"); a complex one is "(re,im)".
CanonicalParams parse_params(const std::string& text) {
  CanonicalParams p;
  std::string cur;
  int depth = 0;
  std::vector<std::string> toks;
  for (char c : text) {
    if ((c == ',' || c == ';') && depth == 0) {
      if (!cur.empty()) toks.push_back(cur);
      cur.clear();
      continue;
    }
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (!isspace(static_cast<unsigned char>(c))) cur += c;
  }
  if (!cur.empty()) toks.push_back(cur);
  if (depth != 0) throw ClassifyError(ErrorKind::BadInput, "unbalanced parentheses in --params");
  for (const auto& t : toks) {
    if (t.front() == '(') {
      if (t.back() != ')')
        throw ClassifyError(ErrorKind::BadInput, "malformed complex parameter '" + t + "'");
      const std::string inner = t.substr(1, t.size() - 2);
      const auto comma = inner.find(',');
      if (comma == std::string::npos)
        throw ClassifyError(ErrorKind::BadInput, "complex parameter needs '(re,im)': '" + t + "'");
      auto re = parse_rational(inner.substr(0, comma));
      auto im = parse_rational(inner.substr(comma + 1));
      if (!re || !im)
        throw ClassifyError(ErrorKind::BadInput, "cannot parse complex parameter '" + t + "'");
      p.cx.emplace_back(*re, *im);
    } else {
      auto r = parse_rational(t);
      if (!r) throw ClassifyError(ErrorKind::BadInput, "cannot parse parameter '" + t + "'");
      p.reals.push_back(*r);
    }
  }
  return p;
}

const TypeRegistryEntry* resolve_type(const std::string& spec) {
  if (!spec.empty() && std::all_of(spec.begin(), spec.end(),
                                   [](char c) { return isdigit(static_cast<unsigned char>(c)); })) {
    if (const auto* e = find_entry(std::stoi(spec))) return e;
  }
  if (const auto* e = find_entry_by_code(spec)) return e;
  throw ClassifyError(ErrorKind::BadInput, "unknown type '" + spec + "' (use an id 1..33 or a code like II_r.3)");
}

int run_classify(const std::string& input, const std::string& tetrad_opt, double tol,
                 const std::string& format) {
  std::optional<Tetrad> tet;
  if (tetrad_opt == "null") tet = Tetrad::Null;
  else if (tetrad_opt == "orthonormal") tet = Tetrad::Orthonormal;
  else if (!tetrad_opt.empty())
    throw ClassifyError(ErrorKind::BadInput, "--tetrad must be 'null' or 'orthonormal'");
  const TensorDocument doc = parse_tensor_document(read_input(input), tet);
  const ClassificationReport rep = doc.rational ? classify(doc.m_rat, doc.tetrad, tol)
                                                : classify(doc.m_f, doc.tetrad, tol);
  std::cout << (format == "text" ? report_to_text(rep) : report_to_json(rep));
  if (!rep.registry_id) {
    std::cerr << "error: classification does not match any registry entry\n";
    return kExitInternal;
  }
  return kExitOk;
}

int run_generate(const std::string& type_spec, const std::string& params_str, uint64_t seed,
                 const std::string& format) {
  const TypeRegistryEntry* entry = resolve_type(type_spec);
  CanonicalParams params;
  if (!params_str.empty()) {
    params = parse_params(params_str);
  } else {
    std::mt19937_64 rng(seed);
    params = random_params(entry->id, rng);
  }
  const Mat4<Rat> c = canonical(entry->id, params);
  // Verify before emitting: the representative must classify back to the entry.
  const ClassificationReport rep = classify(c, Tetrad::Null, 1e-9);
  if (!rep.registry_id || *rep.registry_id != entry->id)
    throw ClassifyError(ErrorKind::Internal,
                        "generated representative does not classify to type " + entry->code);
  std::ostringstream comps;
  comps << "[";
  for (int i = 0; i < 4; ++i) {
    comps << (i ? ",\n   " : "");
    comps << "[";
    for (int k = 0; k < 4; ++k) comps << (k ? ", " : "") << "\"" << c[i][k].str() << "\"";
    comps << "]";
  }
  comps << "]";
  if (format == "text") {
    std::cout << "type #" << entry->id << " (" << entry->code << ")  " << entry->display << "\n";
    std::cout << "tetrad: null\ncomponents:\n  " << comps.str() << "\n";
  } else {
    std::cout << "{\n  \"tetrad\": \"null\",\n  \"type\": \"" << entry->code
              << "\",\n  \"components\":\n  " << comps.str() << "\n}\n";
  }
  return kExitOk;
}

int run_registry(const std::string& format) {
  if (format == "text") {
    for (const auto& e : registry()) {
      std::cout << "#" << e.id << "\t" << e.code << "\t" << e.display << "\n";
    }
  } else {
    std::cout << registry_to_json();
  }
  return kExitOk;
}

// --- selftest ----------------------------------------------------------------

int run_selftest(bool full, uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(seed);
  int checks = 0;
  auto fail = [&](const std::string& msg) -> int {
    std::cerr << "selftest FAILED after " << checks << " checks: " << msg << "\n";
    return kExitInternal;
  };

  // 1. Every registry entry round-trips through its canonical representative.
  for (const auto& e : registry()) {
    try {
      const auto params = random_params(e.id, rng);
      const auto c = canonical(e.id, params);
      const auto rep = classify(c, Tetrad::Null, 1e-9);
      if (!rep.registry_id || *rep.registry_id != e.id)
        return fail("canonical representative of " + e.code + " classifies to " +
                    (rep.registry_id ? find_entry(*rep.registry_id)->code : "none"));
      const auto parsed = parse_symbol(render_symbol(rep.symbol));
      if (!parsed || lookup(*parsed) != rep.registry_id)
        return fail("symbol render/parse round trip failed for " + e.code);
      ++checks;
    } catch (const ClassifyError& err) {
      return fail(e.code + ": " + err.what());
    }
  }

  // 2. Every admissible degeneration edge is realized by its family.
  for (const auto& edge : degeneration_edges()) {
    try {
      degeneration_check(edge);
      ++checks;
    } catch (const ClassifyError& err) {
      return fail(err.what());
    }
  }

  // 3. Randomized fuzz: random types, random parameters; exact and float
  //    classification agree, and the float root pattern matches the numeric
  //    root-clustering oracle whenever the oracle is confident.
  const int iters = full ? 100000 : 1500;
  std::uniform_int_distribution<int> pick(1, 33);
  for (int it = 0; it < iters; ++it) {
    const int id = pick(rng);
    try {
      const auto params = random_params(id, rng);
      const auto c = canonical(id, params);
      const auto rep = classify(c, Tetrad::Null, 1e-9);
      if (!rep.registry_id || *rep.registry_id != id)
        return fail("fuzz: type " + std::to_string(id) + " misclassified");
      Mat4<double> cf;
      for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) cf[i][k] = to_double(c[i][k]);
      const auto repf = classify(cf, Tetrad::Null, 1e-9);
      if (!repf.registry_id || *repf.registry_id != id)
        return fail("fuzz: type " + std::to_string(id) + " misclassified in float mode");
      const auto oracle = oracle_pattern(DepressedQuartic<double>{repf.c2, repf.c3, repf.c4}, 1e-6);
      if (oracle.high_confidence && oracle.pattern != repf.pattern)
        return fail("fuzz: float pattern disagrees with the root-clustering oracle");
      ++checks;
    } catch (const ClassifyError& err) {
      return fail("fuzz type " + std::to_string(id) + ": " + err.what());
    }
  }

  const auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "selftest OK: " << checks << " checks in " << dt << " s\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algebraic classification of traceless Ricci tensors in neutral signature"};
  app.require_subcommand(1);

  std::string input, tetrad_opt, format = "json", type_spec, params_str;
  double tol = 1e-9;
  uint64_t seed = 0;
  bool quick = false, full = false;

  auto* cls = app.add_subcommand("classify", "Classify a tensor given as JSON");
  cls->add_option("input", input, "input file (default: stdin)");
  cls->add_option("--tetrad", tetrad_opt, "frame of the components: null | orthonormal");
  cls->add_option("--tol", tol, "float-mode tolerance (default 1e-9)");
  cls->add_option("--format", format, "output format: json | text");

  auto* gen = app.add_subcommand("generate", "Emit a canonical representative of a type");
  gen->add_option("--type", type_spec, "registry id (1..33) or code (e.g. II_r.3)")->required();
  gen->add_option("--params", params_str,
                  "parameters: reals like '1,-3/2', complex like '(re,im)'; random if omitted");
  gen->add_option("--seed", seed, "seed for the random parameter draw");
  gen->add_option("--format", format, "output format: json | text");

  auto* reg = app.add_subcommand("registry", "Export the 33-type registry");
  reg->add_option("--format", format, "output format: json | text");

  auto* st = app.add_subcommand("selftest", "Run internal consistency checks");
  st->add_flag("--quick", quick, "small randomized sample (default)");
  st->add_flag("--full", full, "large randomized sample");
  st->add_option("--seed", seed, "fuzz seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(cls)) return run_classify(input, tetrad_opt, tol, format);
    if (app.got_subcommand(gen)) return run_generate(type_spec, params_str, seed, format);
    if (app.got_subcommand(reg)) return run_registry(format);
    if (app.got_subcommand(st)) return run_selftest(full, seed);
  } catch (const ClassifyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
