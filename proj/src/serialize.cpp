#include "shortsl2/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "shortsl2/errors.hpp"
#include "shortsl2/rational.hpp"

namespace shortsl2 {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::MalformedInput, what);
}

const json& need(const json& j, const char* key, const char* context) {
  if (!j.is_object())
    malformed(std::string(context) + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end())
    malformed(std::string(context) + " is missing key \"" + key + "\"");
  return *it;
}

std::size_t need_uint(const json& j, const char* key, const char* context) {
  const json& v = need(j, key, context);
  if (!v.is_number_unsigned())
    malformed(std::string(context) + " key \"" + key +
              "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

const json& need_array(const json& j, const char* key, const char* context) {
  const json& v = need(j, key, context);
  if (!v.is_array())
    malformed(std::string(context) + " key \"" + key + "\" must be an array");
  return v;
}

json rat_vec_to_json(const Vec& v) {
  json out = json::array();
  for (const Rational& r : v) out.push_back(rat_to_string(r));
  return out;
}

Vec rat_vec_from_json(const json& j, std::size_t len, const std::string& what) {
  if (!j.is_array() || j.size() != len)
    malformed(what + " must be an array of " + std::to_string(len) +
              " rational strings");
  Vec out;
  out.reserve(len);
  for (const json& e : j) {
    if (!e.is_string()) malformed(what + " has a non-string entry");
    out.push_back(rat_from_string(e.get<std::string>()));
  }
  return out;
}

json matrix_to_json(const ExactMatrix& m) { return rat_vec_to_json(m.to_flat()); }

ExactMatrix matrix_from_json(const json& j, std::size_t dim, const std::string& what) {
  return ExactMatrix::from_flat(dim, dim, rat_vec_from_json(j, dim * dim, what));
}

json triple_vec_json(const Vec& e, const Vec& f, const Vec& h) {
  json out;
  out["e"] = rat_vec_to_json(e);
  out["f"] = rat_vec_to_json(f);
  out["h"] = rat_vec_to_json(h);
  return out;
}

}  // namespace

std::string canonical_text(const json& j) { return j.dump(2) + "\n"; }

json lie_to_json(const LieAlgebra& algebra) {
  json out;
  out["dim"] = algebra.dim();
  out["labels"] = algebra.labels();
  json brackets = json::array();
  for (const auto& [key, terms] : algebra.brackets()) {
    if (terms.empty()) continue;
    json row;
    row["i"] = key.first;
    row["j"] = key.second;
    json ts = json::array();
    for (const auto& [k, c] : terms) ts.push_back(json::array({k, rat_to_string(c)}));
    row["terms"] = ts;
    brackets.push_back(std::move(row));
  }
  out["brackets"] = std::move(brackets);
  return out;
}

LieAlgebra lie_from_json(const json& j) {
  const std::size_t dim = need_uint(j, "dim", "a lie-v1 payload");
  if (dim == 0) malformed("a lie-v1 payload must have positive \"dim\"");

  const json& jlabels = need_array(j, "labels", "a lie-v1 payload");
  if (jlabels.size() != dim)
    malformed("\"labels\" must list exactly \"dim\" strings");
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (const json& l : jlabels) {
    if (!l.is_string()) malformed("\"labels\" has a non-string entry");
    labels.push_back(l.get<std::string>());
  }

  const json& jbrackets = need_array(j, "brackets", "a lie-v1 payload");
  BracketMap brackets;
  for (const json& row : jbrackets) {
    const std::size_t i = need_uint(row, "i", "a bracket row");
    const std::size_t jj = need_uint(row, "j", "a bracket row");
    if (i >= jj || jj >= dim)
      malformed("bracket row (" + std::to_string(i) + ", " + std::to_string(jj) +
                ") must satisfy i < j < dim");
    const json& jterms = need_array(row, "terms", "a bracket row");
    TermList terms;
    for (const json& t : jterms) {
      if (!t.is_array() || t.size() != 2 || !t[0].is_number_unsigned() ||
          !t[1].is_string())
        malformed("bracket terms must be [index, \"rational\"] pairs");
      const std::size_t k = t[0].get<std::size_t>();
      if (k >= dim) malformed("bracket term index " + std::to_string(k) +
                              " is out of range");
      terms.emplace_back(k, rat_from_string(t[1].get<std::string>()));
    }
    if (!brackets.emplace(std::make_pair(i, jj), std::move(terms)).second)
      malformed("duplicate bracket row (" + std::to_string(i) + ", " +
                std::to_string(jj) + ")");
  }
  return LieAlgebra(dim, std::move(labels), std::move(brackets));
}

json structure_to_json(const LieJordanStructure& s) {
  json out;
  out["dim_j1"] = s.space.dim;
  out["omega"] = matrix_to_json(s.space.omega);
  json j2 = json::array();
  for (const ExactMatrix& m : s.j2_basis) j2.push_back(matrix_to_json(m));
  out["j2_basis"] = std::move(j2);
  json g0 = json::array();
  for (const ExactMatrix& m : s.g0_basis) g0.push_back(matrix_to_json(m));
  out["g0_basis"] = std::move(g0);
  out["unit"] = rat_vec_to_json(s.unit);

  // Canonical order: (i, j) ascending over all pairs i <= j.
  std::vector<const Delta0Entry*> entries;
  entries.reserve(s.delta0.size());
  for (const auto& e : s.delta0) entries.push_back(&e);
  std::sort(entries.begin(), entries.end(),
            [](const Delta0Entry* a, const Delta0Entry* b) {
              return std::make_pair(a->i, a->j) < std::make_pair(b->i, b->j);
            });
  json d0 = json::array();
  for (const Delta0Entry* e : entries) {
    json row;
    row["i"] = e->i;
    row["j"] = e->j;
    row["value"] = rat_vec_to_json(e->value);
    d0.push_back(std::move(row));
  }
  out["delta0"] = std::move(d0);
  return out;
}

LieJordanStructure structure_from_json(const json& j) {
  const std::size_t dim = need_uint(j, "dim_j1", "an ljs-v1 payload");
  if (dim == 0) malformed("an ljs-v1 payload must have positive \"dim_j1\"");

  ExactMatrix omega = matrix_from_json(need(j, "omega", "an ljs-v1 payload"),
                                       dim, "\"omega\"");

  auto matrices = [&](const char* key) {
    const json& arr = need_array(j, key, "an ljs-v1 payload");
    std::vector<ExactMatrix> out;
    out.reserve(arr.size());
    std::size_t idx = 0;
    for (const json& m : arr)
      out.push_back(matrix_from_json(
          m, dim, "\"" + std::string(key) + "\"[" + std::to_string(idx++) + "]"));
    return out;
  };
  std::vector<ExactMatrix> j2 = matrices("j2_basis");
  std::vector<ExactMatrix> g0 = matrices("g0_basis");
  Vec unit = rat_vec_from_json(need(j, "unit", "an ljs-v1 payload"),
                               j2.size(), "\"unit\"");

  const json& jd0 = need_array(j, "delta0", "an ljs-v1 payload");
  std::vector<Delta0Entry> delta0;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::size_t value_len = 0;
  bool first = true;
  for (const json& row : jd0) {
    Delta0Entry e;
    e.i = need_uint(row, "i", "a delta0 row");
    e.j = need_uint(row, "j", "a delta0 row");
    if (e.i > e.j || e.j >= dim)
      malformed("delta0 row (" + std::to_string(e.i) + ", " + std::to_string(e.j) +
                ") must satisfy i <= j < dim_j1");
    if (!seen.emplace(e.i, e.j).second)
      malformed("duplicate delta0 row (" + std::to_string(e.i) + ", " +
                std::to_string(e.j) + ")");
    const json& v = need(row, "value", "a delta0 row");
    if (!v.is_array()) malformed("a delta0 \"value\" must be an array");
    if (first) {
      value_len = v.size();
      first = false;
    } else if (v.size() != value_len) {
      malformed("delta0 values must all have the same length");
    }
    e.value = rat_vec_from_json(v, v.size(), "a delta0 \"value\"");
    delta0.push_back(std::move(e));
  }
  if (seen.size() != dim * (dim + 1) / 2)
    malformed("delta0 must cover every pair i <= j exactly once");
  std::sort(delta0.begin(), delta0.end(), [](const Delta0Entry& a, const Delta0Entry& b) {
    return std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j);
  });

  return LieJordanStructure{SymplecticSpace(dim, std::move(omega)), std::move(j2),
                            std::move(g0), std::move(unit), std::move(delta0)};
}

json triple_to_json(const Sl2Triple& t) { return triple_vec_json(t.e, t.f, t.h); }

Sl2Triple triple_from_json(const json& j, std::size_t dim) {
  Sl2Triple t;
  t.e = rat_vec_from_json(need(j, "e", "a triple payload"), dim, "\"e\"");
  t.f = rat_vec_from_json(need(j, "f", "a triple payload"), dim, "\"f\"");
  t.h = rat_vec_from_json(need(j, "h", "a triple payload"), dim, "\"h\"");
  return t;
}

json classification_to_json(const std::vector<ClassificationRow>& rows) {
  json arr = json::array();
  for (const ClassificationRow& row : rows) {
    json r;
    r["marking"] = row.marking.p;
    r["exists"] = row.exists;
    r["dims"] = json::array({row.g0_dim, row.j1_dim, row.j2_dim});
    r["g2_dim"] = row.g2_dim;
    if (row.equivalent_to) r["equivalent_to"] = *row.equivalent_to;
    if (row.witness)
      r["witness"] = triple_vec_json(row.witness->e, row.witness->f, row.witness->h);
    if (row.note) r["note"] = *row.note;
    arr.push_back(std::move(r));
  }
  return arr;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read file \"" + path + "\"");
  json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded())
    malformed("file \"" + path + "\" is not valid JSON");
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidParameters,
                        "cannot write file \"" + path + "\"");
  out << text;
  if (!out) throw Error(ErrorKind::InvalidParameters,
                        "writing file \"" + path + "\" failed");
}

}  // namespace shortsl2
