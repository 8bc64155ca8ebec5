#include "shortsl2/models.hpp"

#include <charconv>
#include <map>
#include <utility>

#include "shortsl2/errors.hpp"
#include "shortsl2/isotypic.hpp"

namespace shortsl2 {
namespace {

// Sparse N x N matrices over positions (row, col), both 0-based. Every
// ambient basis element has at most two entries, so commutators stay tiny.
using Pos = std::pair<std::size_t, std::size_t>;
using PosMap = std::map<Pos, Rational>;

void add_entry(PosMap& m, std::size_t r, std::size_t c, const Rational& v) {
  if (v == 0) return;
  auto [it, inserted] = m.try_emplace({r, c}, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) m.erase(it);
  }
}

PosMap mul(const PosMap& a, const PosMap& b) {
  PosMap out;
  for (const auto& [p, va] : a)
    for (const auto& [q, vb] : b)
      if (p.second == q.first) add_entry(out, p.first, q.second, va * vb);
  return out;
}

PosMap commutator_map(const PosMap& a, const PosMap& b) {
  PosMap out = mul(a, b);
  for (const auto& [q, v] : mul(b, a)) add_entry(out, q.first, q.second, -v);
  return out;
}

// A basis of a matrix Lie algebra in which every off-diagonal-orbit position
// belongs to exactly one basis element; the special linear family adds a
// tail of tridiagonal trace-zero elements covering the diagonal.
struct MatrixBasisSet {
  std::size_t size = 0;  // matrices are size x size
  bool has_diag_tail = false;
  std::vector<std::string> labels;
  std::vector<PosMap> elements;
  // position -> (owning basis index, that element's coefficient there)
  std::map<Pos, std::pair<std::size_t, Rational>> rep;
  std::size_t diag_first = 0;  // index of the first diagonal-tail element

  void add_element(std::string label, PosMap entries) {
    const std::size_t idx = elements.size();
    for (const auto& [p, v] : entries) rep.emplace(p, std::make_pair(idx, v));
    labels.push_back(std::move(label));
    elements.push_back(std::move(entries));
  }

  // Exact coordinates of a sparse matrix over the basis; throws
  // InvalidStructure when the matrix lies outside the span.
  Vec decompose(PosMap m, const char* what) const {
    Vec out(elements.size(), Rational(0));
    bool progress = true;
    while (progress) {
      progress = false;
      for (auto it = m.begin(); it != m.end(); ++it) {
        if (has_diag_tail && it->first.first == it->first.second) continue;
        auto r = rep.find(it->first);
        if (r == rep.end())
          throw Error(ErrorKind::InvalidStructure,
                      std::string("internal: ") + what +
                          " has support outside the ambient basis");
        const Rational c = it->second / r->second.second;
        out[r->second.first] += c;
        for (const auto& [p, v] : elements[r->second.first])
          add_entry(m, p.first, p.second, -c * v);
        progress = true;
        break;
      }
    }
    if (!m.empty()) {
      // Only the diagonal of a trace-zero matrix may remain; the tridiagonal
      // tail covers it through prefix sums.
      Vec diag(size, Rational(0));
      Rational total(0);
      for (const auto& [p, v] : m) {
        if (p.first != p.second)
          throw Error(ErrorKind::InvalidStructure,
                      std::string("internal: ") + what +
                          " has support outside the ambient basis");
        diag[p.first] = v;
        total += v;
      }
      if (!has_diag_tail || total != 0)
        throw Error(ErrorKind::InvalidStructure,
                    std::string("internal: ") + what +
                        " has support outside the ambient basis");
      Rational prefix(0);
      for (std::size_t k = 0; k + 1 < size; ++k) {
        prefix += diag[k];
        out[diag_first + k] = prefix;
      }
    }
    return out;
  }

  ExactMatrix dense(std::size_t idx) const {
    ExactMatrix m(size, size);
    for (const auto& [p, v] : elements[idx]) m.at(p.first, p.second) = v;
    return m;
  }
};

std::string pos_label(const char* tag, std::size_t a, std::size_t b) {
  return std::string(tag) + ":" + std::to_string(a + 1) + "," + std::to_string(b + 1);
}

// Matrices skew-symmetric about the side diagonal: one element per position
// strictly above it, pairing (a, b) with -1 at the mirrored position.
MatrixBasisSet so_basis(std::size_t n) {
  MatrixBasisSet bs;
  bs.size = n;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; a + b + 2 <= n; ++b) {
      PosMap el;
      el[{a, b}] = 1;
      el[{n - 1 - b, n - 1 - a}] = -1;
      bs.add_element(pos_label("X", a, b), std::move(el));
    }
  return bs;
}

// The symplectic algebra of the split skew form whose Gram matrix is the
// signed side diagonal: paired positions above the side diagonal plus the
// free side-diagonal positions themselves.
MatrixBasisSet sp_basis(std::size_t half) {
  MatrixBasisSet bs;
  const std::size_t n = 2 * half;
  bs.size = n;
  auto eps = [half](std::size_t k) { return k < half ? 1 : -1; };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; a + b + 1 <= n; ++b) {
      PosMap el;
      el[{a, b}] = 1;
      if (a + b + 2 <= n) el[{n - 1 - b, n - 1 - a}] = -eps(a) * eps(b);
      bs.add_element(pos_label("Y", a, b), std::move(el));
    }
  return bs;
}

// Trace-zero matrices: the off-diagonal units plus the tridiagonal tail
// H_k = E_kk - E_{k+1,k+1}.
MatrixBasisSet sl_basis(std::size_t n) {
  MatrixBasisSet bs;
  bs.size = n;
  bs.has_diag_tail = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      PosMap el;
      el[{a, b}] = 1;
      bs.add_element(pos_label("E", a, b), std::move(el));
    }
  bs.diag_first = bs.elements.size();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    PosMap el;
    el[{k, k}] = 1;
    el[{k + 1, k + 1}] = -1;
    bs.labels.push_back("H:" + std::to_string(k + 1));
    bs.elements.push_back(std::move(el));
  }
  return bs;
}

struct TripleMats {
  PosMap e, h, f;
};

// The distinguished triple: h = diag(1 x i, 0 x (N-2i), -1 x i), e the
// upper-right i x i corner and f the lower-left one. The orthogonal families
// need the sign-split corner diag(1 x i/2, -1 x i/2) to stay inside the
// algebra; the special linear and symplectic families use the plain
// identity corner.
TripleMats corner_triple(std::size_t n, std::size_t i, bool sign_split) {
  TripleMats t;
  for (std::size_t j = 0; j < i; ++j) {
    const Rational sigma = (sign_split && 2 * j >= i) ? -1 : 1;
    t.h[{j, j}] = 1;
    t.h[{n - i + j, n - i + j}] = -1;
    t.e[{j, n - i + j}] = sigma;
    t.f[{n - i + j, j}] = sigma;
  }
  return t;
}

const char* family_token(ModelFamily f) {
  switch (f) {
    case ModelFamily::Maximal: return "maximal";
    case ModelFamily::Sl: return "sl";
    case ModelFamily::SoOdd: return "so-odd";
    case ModelFamily::SoEvenVector: return "so-even";
    case ModelFamily::SoEvenSpin: return "so-even-spin";
    case ModelFamily::Sp: return "sp";
  }
  return "?";
}

bool family_uses_i(ModelFamily f) {
  return f == ModelFamily::Sl || f == ModelFamily::SoOdd ||
         f == ModelFamily::SoEvenVector || f == ModelFamily::Sp;
}

std::size_t parse_size(const std::string& s, const std::string& name) {
  std::size_t value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || s.empty())
    throw Error(ErrorKind::InvalidParameters,
                "model name '" + name + "' has a non-numeric parameter '" + s + "'");
  return value;
}

}  // namespace

void check_model(const ModelSpec& spec) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::InvalidParameters,
                "invalid parameters for family '" +
                    std::string(family_token(spec.family)) + "': " + why);
  };
  if (!family_uses_i(spec.family) && spec.i != 0)
    fail("parameter i is not accepted by this family");
  switch (spec.family) {
    case ModelFamily::Maximal:
      if (spec.n < 1) fail("n must be at least 1");
      break;
    case ModelFamily::Sl:
      if (spec.i < 1) fail("i must be at least 1");
      if (2 * spec.i >= spec.n) fail("2i must be smaller than n");
      break;
    case ModelFamily::SoOdd:
      if (spec.i < 2 || spec.i % 2 != 0) fail("i must be even and at least 2");
      if (spec.i > spec.n) fail("i must not exceed n");
      break;
    case ModelFamily::SoEvenVector:
      if (spec.i < 2 || spec.i % 2 != 0) fail("i must be even and at least 2");
      if (spec.i + 2 > spec.n) fail("i must not exceed n-2");
      break;
    case ModelFamily::SoEvenSpin:
      if (spec.n < 3 || spec.n % 2 == 0) fail("n must be odd and at least 3");
      break;
    case ModelFamily::Sp:
      if (spec.i < 1) fail("i must be at least 1");
      if (spec.i >= spec.n) fail("i must be smaller than n");
      break;
  }
}

ModelSpec parse_model_name(const std::string& name) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = name.find(':', start);
    if (colon == std::string::npos) {
      parts.push_back(name.substr(start));
      break;
    }
    parts.push_back(name.substr(start, colon - start));
    start = colon + 1;
  }
  static const std::map<std::string, ModelFamily> kFamilies = {
      {"maximal", ModelFamily::Maximal},
      {"sl", ModelFamily::Sl},
      {"so-odd", ModelFamily::SoOdd},
      {"so-even", ModelFamily::SoEvenVector},
      {"so-even-spin", ModelFamily::SoEvenSpin},
      {"sp", ModelFamily::Sp},
  };
  auto it = kFamilies.find(parts[0]);
  if (it == kFamilies.end())
    throw Error(ErrorKind::InvalidParameters,
                "unknown model family in '" + name +
                    "' (expected maximal:n, sl:n:i, so-odd:n:i, so-even:n:i, "
                    "so-even-spin:n or sp:n:i)");
  ModelSpec spec;
  spec.family = it->second;
  const std::size_t expected = family_uses_i(spec.family) ? 3 : 2;
  if (parts.size() != expected)
    throw Error(ErrorKind::InvalidParameters,
                "model name '" + name + "' needs " + std::to_string(expected - 1) +
                    " numeric parameter(s) after the family");
  spec.n = parse_size(parts[1], name);
  if (expected == 3) spec.i = parse_size(parts[2], name);
  check_model(spec);
  return spec;
}

std::string model_name(const ModelSpec& spec) {
  std::string out = family_token(spec.family);
  out += ":" + std::to_string(spec.n);
  if (family_uses_i(spec.family)) out += ":" + std::to_string(spec.i);
  return out;
}

std::vector<ModelSpec> model_catalog() {
  std::vector<ModelSpec> out;
  for (std::size_t n = 1; n <= 3; ++n) out.push_back({ModelFamily::Maximal, n, 0});
  out.push_back({ModelFamily::Sl, 4, 1});
  for (std::size_t n = 5; n <= 7; ++n)
    for (std::size_t i = 1; i <= 2; ++i) out.push_back({ModelFamily::Sl, n, i});
  for (std::size_t n = 3; n <= 5; ++n) out.push_back({ModelFamily::SoOdd, n, 2});
  for (std::size_t n = 4; n <= 6; ++n) out.push_back({ModelFamily::SoEvenVector, n, 2});
  out.push_back({ModelFamily::SoEvenSpin, 3, 0});
  out.push_back({ModelFamily::SoEvenSpin, 5, 0});
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t i = 1; i < n; ++i) out.push_back({ModelFamily::Sp, n, i});
  return out;
}

ExactMatrix AmbientModel::matrix_of(const Vec& coords) const {
  ExactMatrix out(matrix_size, matrix_size);
  for (std::size_t k = 0; k < coords.size() && k < basis.size(); ++k)
    if (coords[k] != 0) out = out.add(basis[k].scaled(coords[k]));
  return out;
}

AmbientModel ambient_algebra(const ModelSpec& spec) {
  check_model(spec);
  MatrixBasisSet bs;
  TripleMats tm;
  switch (spec.family) {
    case ModelFamily::Maximal:
      bs = so_basis(4 * spec.n + 1);
      tm = corner_triple(bs.size, 2 * spec.n, true);
      break;
    case ModelFamily::Sl:
      bs = sl_basis(spec.n);
      tm = corner_triple(bs.size, spec.i, false);
      break;
    case ModelFamily::SoOdd:
      bs = so_basis(2 * spec.n + 1);
      tm = corner_triple(bs.size, spec.i, true);
      break;
    case ModelFamily::SoEvenVector:
      bs = so_basis(2 * spec.n);
      tm = corner_triple(bs.size, spec.i, true);
      break;
    case ModelFamily::SoEvenSpin:
      bs = so_basis(2 * spec.n);
      tm = corner_triple(bs.size, spec.n - 1, true);
      break;
    case ModelFamily::Sp:
      bs = sp_basis(spec.n);
      tm = corner_triple(bs.size, spec.i, false);
      break;
  }

  const std::size_t dim = bs.elements.size();
  BracketMap brackets;
  for (std::size_t p = 0; p < dim; ++p)
    for (std::size_t q = p + 1; q < dim; ++q) {
      PosMap cm = commutator_map(bs.elements[p], bs.elements[q]);
      if (cm.empty()) continue;
      Vec coords = bs.decompose(std::move(cm), "a basis commutator");
      TermList terms;
      for (std::size_t k = 0; k < dim; ++k)
        if (coords[k] != 0) terms.emplace_back(k, coords[k]);
      if (!terms.empty()) brackets.emplace(std::make_pair(p, q), std::move(terms));
    }

  Sl2Triple triple{bs.decompose(tm.e, "the triple element e"),
                   bs.decompose(tm.h, "the triple element h"),
                   bs.decompose(tm.f, "the triple element f")};

  std::vector<ExactMatrix> dense;
  dense.reserve(dim);
  for (std::size_t k = 0; k < dim; ++k) dense.push_back(bs.dense(k));

  AmbientModel out{LieAlgebra(dim, std::move(bs.labels), std::move(brackets)),
                   std::move(triple), bs.size, std::move(dense)};
  if (!is_sl2_triple(out.algebra, out.triple))
    throw Error(ErrorKind::InvalidStructure,
                "internal: the catalog triple is not an exact sl2 triple");
  return out;
}

LieJordanStructure catalog_structure(const ModelSpec& spec) {
  AmbientModel amb = ambient_algebra(spec);
  return extract(amb.algebra, amb.triple);
}

OracleReport oracle_check(const ModelSpec& spec, const LieJordanStructure& s) {
  AmbientModel amb = ambient_algebra(spec);
  IsotypicData data = decompose(amb.algebra, amb.triple);
  if (s.g0_basis.size() != data.m0 || s.space.dim != data.m1 ||
      s.j2_basis.size() != data.m2)
    throw Error(ErrorKind::InvalidParameters,
                "structure component dimensions do not match the ambient model");

  const std::size_t m0 = data.m0, n1 = data.m1, n2 = data.m2;
  LieAlgebra built = build_lie_algebra(s);
  const std::size_t dim = built.dim();

  // Basis correspondence from the rebuilt graded algebra to the ambient one:
  // trivial component, level-1 basis v_k and u_k = [f, v_k], then the level-2
  // basis w_k with its sl2 orbit [w_k, f] and -1/2 [[w_k, f], f].
  std::vector<Vec> psi(dim);
  for (std::size_t m = 0; m < m0; ++m) psi[m] = data.g0_component[m];
  for (std::size_t k = 0; k < n1; ++k) {
    psi[m0 + k] = data.g1_component[k];
    psi[m0 + n1 + k] = amb.algebra.bracket(amb.triple.f, data.g1_component[k]);
  }
  for (std::size_t k = 0; k < n2; ++k) {
    psi[m0 + 2 * n1 + k] = data.g2_component[k];
    psi[m0 + 2 * n1 + n2 + k] =
        amb.algebra.bracket(data.g2_component[k], amb.triple.f);
    psi[m0 + 2 * n1 + 2 * n2 + k] = vec_scaled(
        amb.algebra.bracket(psi[m0 + 2 * n1 + n2 + k], amb.triple.f),
        Rational(-1, 2));
  }

  OracleReport report;
  report.pairs_checked = dim * (dim - 1) / 2;
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a + 1; b < dim; ++b) {
      Vec lhs(dim, Rational(0));
      for (const auto& [k, c] : built.bracket_basis(a, b))
        vec_add_scaled(lhs, c, psi[k]);
      if (lhs != amb.algebra.bracket(psi[a], psi[b]))
        report.mismatches.emplace_back(a, b);
    }
  report.match = report.mismatches.empty();
  return report;
}

OracleReport oracle_check(const ModelSpec& spec) {
  return oracle_check(spec, catalog_structure(spec));
}

}  // namespace shortsl2
