#include "shortsl2/cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "shortsl2/errors.hpp"
#include "shortsl2/isotypic.hpp"
#include "shortsl2/lie.hpp"
#include "shortsl2/models.hpp"
#include "shortsl2/rootsys.hpp"
#include "shortsl2/serialize.hpp"
#include "shortsl2/sympjordan.hpp"

namespace shortsl2 {

using nlohmann::json;

namespace {

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedInput:
      return 2;
    case ErrorKind::InvalidParameters:
    case ErrorKind::InvalidType:
      return 3;
    default:
      return 1;  // a structural axiom or check failed
  }
}

// Jacobi is checked in full up to this dimension; larger algebras use the
// sampled mode unless --mode full is forced.
constexpr std::size_t kFullJacobiLimit = 80;
constexpr std::size_t kSampledTriples = 10000;

struct CheckOutcome {
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

std::string triple_text(const LieAlgebra& algebra,
                        const std::array<std::size_t, 3>& t) {
  std::ostringstream os;
  os << "(" << t[0] << ", " << t[1] << ", " << t[2] << ") = ("
     << algebra.labels()[t[0]] << ", " << algebra.labels()[t[1]] << ", "
     << algebra.labels()[t[2]] << ")";
  return os.str();
}

CheckOutcome run_jacobi(const LieAlgebra& algebra, const std::string& mode,
                        std::uint64_t seed) {
  const bool full =
      mode == "full" || (mode == "auto" && algebra.dim() <= kFullJacobiLimit);
  JacobiReport rep = full ? verify_jacobi_full(algebra)
                          : verify_jacobi_sampled(algebra, kSampledTriples, seed);
  CheckOutcome out{"jacobi", rep.passed, ""};
  std::ostringstream os;
  if (rep.passed) {
    os << rep.checked << (full ? " basis triples (full)" : " sampled triples");
  } else {
    os << "violated on triple " << triple_text(algebra, *rep.violation);
  }
  out.detail = os.str();
  return out;
}

CheckOutcome run_killing(const LieAlgebra& algebra) {
  ExactMatrix k = killing_form(algebra);
  const std::size_t r = rank(k);
  CheckOutcome out{"killing", r == algebra.dim(), ""};
  std::ostringstream os;
  if (out.passed)
    os << "nondegenerate (rank " << r << ")";
  else
    os << "degenerate: rank " << r << " < " << algebra.dim();
  out.detail = os.str();
  return out;
}

CheckOutcome run_simple(const LieAlgebra& algebra, std::uint64_t seed) {
  Rng rng(seed);
  ExactMatrix k = killing_form(algebra);
  if (rank(k) != algebra.dim())
    return {"simple", false, "Killing form is degenerate"};
  const bool ok = is_simple(algebra, rng);
  return {"simple", ok,
          ok ? "single simple summand (adjoint commutant dimension 1)"
             : "adjoint commutant has dimension > 1"};
  }

// ---- subcommand drivers ----------------------------------------------------

int cmd_build(const std::string& model, const std::string& structure_file,
              const std::string& out_file, const std::string& triple_out,
              std::ostream& out) {
  LieJordanStructure s = model.empty()
                             ? structure_from_json(read_json_file(structure_file))
                             : catalog_structure(parse_model_name(model));
  LieAlgebra algebra = build_lie_algebra(s);
  write_text_file(out_file, canonical_text(lie_to_json(algebra)));
  out << "wrote lie-v1 (dim " << algebra.dim() << ") to " << out_file << "\n";
  if (!triple_out.empty()) {
    Sl2Triple t = unit_triple(algebra, s);
    write_text_file(triple_out, canonical_text(triple_to_json(t)));
    out << "wrote canonical triple to " << triple_out << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& file, const std::string& checks_csv,
               const std::string& mode, std::uint64_t seed, bool json_out,
               std::ostream& out) {
  LieAlgebra algebra = lie_from_json(read_json_file(file));
  std::vector<CheckOutcome> outcomes;
  for (const std::string& c : split_list(checks_csv)) {
    if (c == "jacobi")
      outcomes.push_back(run_jacobi(algebra, mode, seed));
    else if (c == "killing")
      outcomes.push_back(run_killing(algebra));
    else if (c == "simple")
      outcomes.push_back(run_simple(algebra, seed));
    else
      throw Error(ErrorKind::InvalidParameters,
                  "unknown check \"" + c +
                      "\" (expected jacobi, killing or simple)");
  }
  bool all = true;
  for (const auto& o : outcomes) all = all && o.passed;

  if (json_out) {
    json rep;
    rep["dim"] = algebra.dim();
    rep["passed"] = all;
    json cs = json::array();
    for (const auto& o : outcomes) {
      json c;
      c["name"] = o.name;
      c["passed"] = o.passed;
      c["detail"] = o.detail;
      cs.push_back(std::move(c));
    }
    rep["checks"] = std::move(cs);
    out << canonical_text(rep);
  } else {
    out << "algebra dim " << algebra.dim() << " (" << file << ")\n";
    for (const auto& o : outcomes)
      out << "check " << o.name << ": " << (o.passed ? "pass" : "FAIL") << " — "
          << o.detail << "\n";
    out << "verdict: " << (all ? "pass" : "FAIL") << "\n";
  }
  return all ? 0 : 1;
}

int cmd_classify(const std::string& type_str, std::size_t rank_v,
                 std::size_t trials, std::uint64_t seed,
                 const std::string& out_file, bool json_out, std::ostream& out) {
  SimpleType type = parse_simple_type(type_str);
  ClassifyOptions opts;
  opts.trials = trials;
  opts.seed = seed;
  std::vector<ClassificationRow> rows = classify(type, rank_v, opts);
  json payload = classification_to_json(rows);
  if (!out_file.empty()) write_text_file(out_file, canonical_text(payload));

  if (json_out) {
    out << canonical_text(payload);
    return 0;
  }
  out << simple_type_name(type) << rank_v << ": " << rows.size()
      << " candidate marking(s)\n";
  std::size_t existing = 0;
  for (std::size_t idx = 0; idx < rows.size(); ++idx) {
    const auto& r = rows[idx];
    out << "  [" << idx << "] marking (";
    for (std::size_t k = 0; k < r.marking.p.size(); ++k)
      out << (k ? "," : "") << r.marking.p[k];
    out << "): ";
    if (r.exists) {
      ++existing;
      out << "exists, dims (g0, J1, J2) = (" << r.g0_dim << ", " << r.j1_dim
          << ", " << r.j2_dim << "), dim g2 = " << r.g2_dim;
    } else {
      out << "does not exist";
    }
    if (r.equivalent_to)
      out << " [same as row " << *r.equivalent_to << " under a diagram symmetry]";
    if (r.note) out << " [note: " << *r.note << "]";
    out << "\n";
  }
  out << existing << " structure(s) exist\n";
  if (!out_file.empty()) out << "wrote cls-v1 to " << out_file << "\n";
  return 0;
}

int cmd_decompose(const std::string& file, const std::string& triple_file,
                  const std::string& out_file, std::ostream& out) {
  LieAlgebra algebra = lie_from_json(read_json_file(file));
  Sl2Triple t = triple_from_json(read_json_file(triple_file), algebra.dim());
  LieJordanStructure s = extract(algebra, t);
  write_text_file(out_file, canonical_text(structure_to_json(s)));
  out << "wrote ljs-v1 (dim J1 " << s.space.dim << ", dim J2 "
      << s.j2_basis.size() << ", dim g0 " << s.g0_basis.size() << ") to "
      << out_file << "\n";
  return 0;
}

int cmd_models(bool json_out, std::ostream& out) {
  const auto catalog = model_catalog();
  if (json_out) {
    json payload;
    json names = json::array();
    for (const auto& sp : catalog) names.push_back(model_name(sp));
    payload["catalog"] = std::move(names);
    json fams = json::array();
    auto fam = [&](const char* pattern, const char* constraints, const char* ambient) {
      json f;
      f["pattern"] = pattern;
      f["constraints"] = constraints;
      f["ambient"] = ambient;
      fams.push_back(std::move(f));
    };
    fam("maximal:n", "n >= 1", "so_{4n+1}");
    fam("sl:n:i", "i >= 1 and 2i < n", "sl_n");
    fam("so-odd:n:i", "i even, 2 <= i <= n", "so_{2n+1}");
    fam("so-even:n:i", "i even, 2 <= i <= n-2", "so_{2n}");
    fam("so-even-spin:n", "n odd, n >= 3", "so_{2n}");
    fam("sp:n:i", "1 <= i < n", "sp_{2n}");
    payload["families"] = std::move(fams);
    out << canonical_text(payload);
    return 0;
  }
  out << "model families (name pattern, parameter constraints, ambient algebra):\n"
      << "  maximal:n        n >= 1                  so_{4n+1}\n"
      << "  sl:n:i           i >= 1 and 2i < n       sl_n\n"
      << "  so-odd:n:i       i even, 2 <= i <= n     so_{2n+1}\n"
      << "  so-even:n:i      i even, 2 <= i <= n-2   so_{2n}\n"
      << "  so-even-spin:n   n odd, n >= 3           so_{2n}\n"
      << "  sp:n:i           1 <= i < n              sp_{2n}\n"
      << "catalog models:\n";
  for (const auto& sp : catalog) out << "  " << model_name(sp) << "\n";
  return 0;
}

int cmd_export(const std::string& model, const std::string& structure_file,
               const std::string& to, const std::string& out_file,
               std::ostream& out) {
  LieJordanStructure s = model.empty()
                             ? structure_from_json(read_json_file(structure_file))
                             : catalog_structure(parse_model_name(model));
  if (to == "ljs") {
    write_text_file(out_file, canonical_text(structure_to_json(s)));
    out << "wrote ljs-v1 (dim J1 " << s.space.dim << ") to " << out_file << "\n";
  } else {
    LieAlgebra algebra = build_lie_algebra(s);
    write_text_file(out_file, canonical_text(lie_to_json(algebra)));
    out << "wrote lie-v1 (dim " << algebra.dim() << ") to " << out_file << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact-arithmetic toolkit for graded Lie algebras built from "
               "symplectic Lie-Jordan structures"};
  app.require_subcommand(1);
  bool json_out = false;
  app.add_flag("--json", json_out, "emit machine-readable JSON reports");

  // build
  std::string b_model, b_structure, b_out, b_triple_out;
  auto* b = app.add_subcommand("build",
                               "build the graded Lie algebra of a model or "
                               "ljs-v1 structure and write lie-v1 JSON");
  b->add_option("--model", b_model, "catalog model name (see `models --list`)");
  b->add_option("--structure", b_structure, "ljs-v1 input file");
  b->add_option("--out", b_out, "lie-v1 output file")->required();
  b->add_option("--triple-out", b_triple_out,
                "also write the canonical sl2 triple of the built algebra");

  // verify
  std::string v_file, v_checks = "jacobi,killing,simple", v_mode = "auto";
  std::uint64_t v_seed = kDefaultSeed;
  auto* v = app.add_subcommand("verify", "check axioms of a lie-v1 file");
  v->add_option("file", v_file, "lie-v1 input file")->required();
  v->add_option("--checks", v_checks,
                "comma-separated subset of jacobi,killing,simple");
  v->add_option("--mode", v_mode, "jacobi mode: auto, full or sampled")
      ->check(CLI::IsMember({"auto", "full", "sampled"}));
  v->add_option("--seed", v_seed, "seed for sampled checks (default 42)");
  v->add_flag("--json", json_out, "emit the report as JSON");

  // classify
  std::string c_type, c_out;
  std::size_t c_rank = 0, c_trials = 20;
  std::uint64_t c_seed = kDefaultSeed;
  auto* c = app.add_subcommand(
      "classify", "classify short structures on a simple type by marking");
  c->add_option("--type", c_type, "simple type letter A..G")->required();
  c->add_option("--rank", c_rank, "rank of the simple type")->required();
  c->add_option("--trials", c_trials, "random trials for the rank decision (default 20)");
  c->add_option("--seed", c_seed, "seed for the rank decision (default 42)");
  c->add_option("--out", c_out, "write the table as cls-v1 JSON");
  c->add_flag("--json", json_out, "print the cls-v1 table instead of text");

  // decompose
  std::string d_file, d_triple, d_out;
  auto* d = app.add_subcommand(
      "decompose", "extract the ljs-v1 structure of a lie-v1 file via a triple");
  d->add_option("file", d_file, "lie-v1 input file")->required();
  d->add_option("--triple", d_triple, "sl2 triple file {\"e\",\"h\",\"f\"}")
      ->required();
  d->add_option("--out", d_out, "ljs-v1 output file")->required();

  // models
  bool m_list = false;
  auto* m = app.add_subcommand("models", "show the model catalog");
  m->add_flag("--list", m_list, "list families, constraints and catalog names");
  m->add_flag("--json", json_out, "emit the catalog as JSON");

  // export
  std::string e_model, e_structure, e_to, e_out;
  auto* e = app.add_subcommand(
      "export", "convert a model or ljs-v1 structure to lie-v1 or ljs-v1");
  e->add_option("--model", e_model, "catalog model name");
  e->add_option("--structure", e_structure, "ljs-v1 input file");
  e->add_option("--to", e_to, "target format: lie or ljs")
      ->required()
      ->check(CLI::IsMember({"lie", "ljs"}));
  e->add_option("--out", e_out, "output file")->required();

  std::vector<const char*> argv;
  argv.push_back("shortsl2");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& help) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& pe) {
    err << "error: " << pe.what() << "\n";
    return 3;
  }

  try {
    if (b->parsed()) {
      if (b_model.empty() == b_structure.empty())
        throw Error(ErrorKind::InvalidParameters,
                    "specify exactly one of --model or --structure");
      return cmd_build(b_model, b_structure, b_out, b_triple_out, out);
    }
    if (v->parsed()) return cmd_verify(v_file, v_checks, v_mode, v_seed, json_out, out);
    if (c->parsed())
      return cmd_classify(c_type, c_rank, c_trials, c_seed, c_out, json_out, out);
    if (d->parsed()) return cmd_decompose(d_file, d_triple, d_out, out);
    if (m->parsed()) return cmd_models(json_out, out);
    if (e->parsed()) {
      if (e_model.empty() == e_structure.empty())
        throw Error(ErrorKind::InvalidParameters,
                    "specify exactly one of --model or --structure");
      return cmd_export(e_model, e_structure, e_to, e_out, out);
    }
  } catch (const Error& ex) {
    err << "error (" << error_kind_name(ex.kind()) << "): " << ex.what() << "\n";
    return exit_code_for(ex.kind());
  }
  err << "error: no subcommand given\n";
  return 3;
}

int run_cli(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace shortsl2
