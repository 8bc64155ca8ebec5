#include "shortsl2/rootsys.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "shortsl2/errors.hpp"
#include "shortsl2/isotypic.hpp"

namespace shortsl2 {

namespace {

Rational norm2(const Vec& v) { return vec_dot(v, v); }

Integer int_of(const Rational& r, const char* what) {
  if (boost::multiprecision::denominator(r) != 1)
    throw Error(ErrorKind::InvalidStructure,
                std::string("internal: non-integer ") + what + ": " + rat_to_string(r));
  return boost::multiprecision::numerator(r);
}

// Ambient simple roots in the conventional orthonormal-coordinate
// realizations, before reordering the nodes.
std::vector<Vec> ambient_simple_roots(SimpleType type, std::size_t rank) {
  auto eps = [](std::size_t dim, std::size_t i) {
    Vec v(dim, Rational(0));
    v[i] = 1;
    return v;
  };
  std::vector<Vec> roots;
  switch (type) {
    case SimpleType::A: {
      const std::size_t d = rank + 1;
      for (std::size_t i = 0; i < rank; ++i)
        roots.push_back(vec_sub(eps(d, i), eps(d, i + 1)));
      break;
    }
    case SimpleType::B: {
      for (std::size_t i = 0; i + 1 < rank; ++i)
        roots.push_back(vec_sub(eps(rank, i), eps(rank, i + 1)));
      roots.push_back(eps(rank, rank - 1));
      break;
    }
    case SimpleType::C: {
      for (std::size_t i = 0; i + 1 < rank; ++i)
        roots.push_back(vec_sub(eps(rank, i), eps(rank, i + 1)));
      roots.push_back(vec_scaled(eps(rank, rank - 1), Rational(2)));
      break;
    }
    case SimpleType::D: {
      for (std::size_t i = 0; i + 1 < rank; ++i)
        roots.push_back(vec_sub(eps(rank, i), eps(rank, i + 1)));
      roots.push_back(vec_add(eps(rank, rank - 2), eps(rank, rank - 1)));
      break;
    }
    case SimpleType::G: {
      roots.push_back(vec_sub(eps(3, 0), eps(3, 1)));
      Vec a2 = vec_scaled(eps(3, 0), Rational(-2));
      a2 = vec_add(a2, eps(3, 1));
      a2 = vec_add(a2, eps(3, 2));
      roots.push_back(a2);
      break;
    }
    case SimpleType::F: {
      roots.push_back(vec_sub(eps(4, 1), eps(4, 2)));
      roots.push_back(vec_sub(eps(4, 2), eps(4, 3)));
      roots.push_back(eps(4, 3));
      Vec a4(4, Rational(-1, 2));
      a4[0] = Rational(1, 2);
      roots.push_back(a4);
      break;
    }
    case SimpleType::E: {
      Vec a1(8, Rational(-1, 2));
      a1[0] = Rational(1, 2);
      a1[7] = Rational(1, 2);
      roots.push_back(a1);
      roots.push_back(vec_add(eps(8, 0), eps(8, 1)));
      for (std::size_t k = 3; k <= rank; ++k)
        roots.push_back(vec_sub(eps(8, k - 2), eps(8, k - 3)));
      break;
    }
  }
  return roots;
}

// Node order used for quoting highest-root coefficients, as a permutation of
// the conventional order above: node i of ours is entry perm[i] of the
// conventional list.
std::vector<std::size_t> node_permutation(SimpleType type, std::size_t rank) {
  switch (type) {
    case SimpleType::F:
      return {3, 2, 1, 0};
    case SimpleType::E:
      if (rank == 6) return {0, 2, 3, 4, 5, 1};
      if (rank == 7) return {6, 5, 4, 3, 2, 0, 1};
      return {7, 6, 5, 4, 3, 2, 0, 1};
    default: {
      std::vector<std::size_t> id(rank);
      for (std::size_t i = 0; i < rank; ++i) id[i] = i;
      return id;
    }
  }
}

void check_type(SimpleType type, std::size_t rank) {
  bool ok = false;
  switch (type) {
    case SimpleType::A: ok = rank >= 1; break;
    case SimpleType::B: ok = rank >= 2; break;
    case SimpleType::C: ok = rank >= 2; break;
    case SimpleType::D: ok = rank >= 3; break;
    case SimpleType::E: ok = rank >= 6 && rank <= 8; break;
    case SimpleType::F: ok = rank == 4; break;
    case SimpleType::G: ok = rank == 2; break;
  }
  if (!ok)
    throw Error(ErrorKind::InvalidType, simple_type_name(type) + std::to_string(rank) +
                                            " is not a simple type");
}

}  // namespace

SimpleType parse_simple_type(const std::string& s) {
  if (s.size() == 1) {
    char c = s[0];
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    switch (c) {
      case 'A': return SimpleType::A;
      case 'B': return SimpleType::B;
      case 'C': return SimpleType::C;
      case 'D': return SimpleType::D;
      case 'E': return SimpleType::E;
      case 'F': return SimpleType::F;
      case 'G': return SimpleType::G;
      default: break;
    }
  }
  throw Error(ErrorKind::InvalidType, "unknown simple type \"" + s + "\"");
}

std::string simple_type_name(SimpleType t) {
  switch (t) {
    case SimpleType::A: return "A";
    case SimpleType::B: return "B";
    case SimpleType::C: return "C";
    case SimpleType::D: return "D";
    case SimpleType::E: return "E";
    case SimpleType::F: return "F";
    case SimpleType::G: return "G";
  }
  return "?";
}

RootSystem build_root_system(SimpleType type, std::size_t rank) {
  check_type(type, rank);
  std::vector<Vec> conventional = ambient_simple_roots(type, rank);
  std::vector<std::size_t> perm = node_permutation(type, rank);
  std::vector<Vec> simple(rank);
  for (std::size_t i = 0; i < rank; ++i) simple[i] = conventional[perm[i]];

  ExactMatrix cartan(rank, rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      cartan.at(i, j) = Rational(2) * vec_dot(simple[i], simple[j]) / norm2(simple[j]);

  // Close the positive system upward by heights, deciding alpha + alpha_i by
  // the root-string count: the string through alpha in direction alpha_i has
  // d - u = <alpha, alpha_i^v> with d the known descent count.
  std::map<std::vector<int>, Vec> roots;
  std::vector<std::vector<int>> frontier;
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<int> c(rank, 0);
    c[i] = 1;
    roots.emplace(c, simple[i]);
    frontier.push_back(c);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& c : frontier) {
      const Vec& eps = roots.at(c);
      for (std::size_t i = 0; i < rank; ++i) {
        std::vector<int> cand = c;
        cand[i] += 1;
        if (roots.count(cand)) continue;
        int d = 0;
        std::vector<int> down = c;
        while (true) {
          down[i] -= 1;
          bool nonneg = true;
          for (int x : down)
            if (x < 0) nonneg = false;
          if (!nonneg || !roots.count(down)) break;
          ++d;
        }
        Rational pairing = Rational(2) * vec_dot(eps, simple[i]) / norm2(simple[i]);
        if (Rational(d) - pairing >= 1) {
          roots.emplace(cand, vec_add(eps, simple[i]));
          next.push_back(cand);
        }
      }
    }
    frontier = std::move(next);
  }

  RootSystem rs{type, rank, std::move(simple), std::move(cartan), {}, {}, {}};
  for (const auto& [c, eps] : roots) {
    rs.positive_roots.push_back(c);
    rs.positive_epsilon.push_back(eps);
  }
  std::vector<std::size_t> order(rs.positive_roots.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto height = [&](std::size_t i) {
    int h = 0;
    for (int x : rs.positive_roots[i]) h += x;
    return h;
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return rs.positive_roots[a] < rs.positive_roots[b];
  });
  std::vector<std::vector<int>> sorted_roots;
  std::vector<Vec> sorted_eps;
  for (std::size_t i : order) {
    sorted_roots.push_back(rs.positive_roots[i]);
    sorted_eps.push_back(rs.positive_epsilon[i]);
  }
  rs.positive_roots = std::move(sorted_roots);
  rs.positive_epsilon = std::move(sorted_eps);
  rs.highest_root = rs.positive_roots.back();
  return rs;
}

namespace {

// Structure-constant table for the positive-pair brackets, built by the
// extraspecial-pair method: for each sum root the minimal decomposition gets
// the positive sign, every other special pair follows from the two Jacobi
// identities on four roots summing to zero.
class ChevalleyTable {
 public:
  explicit ChevalleyTable(const RootSystem& rs) : rs_(rs) {
    const std::size_t np = rs.positive_roots.size();
    for (std::size_t i = 0; i < np; ++i) index_.emplace(rs.positive_roots[i], i);
    n_.assign(np, std::vector<Rational>(np, Rational(0)));

    for (std::size_t g = 0; g < np; ++g) {
      if (height(g) < 2) continue;
      // Extraspecial pair: minimal first component in root order.
      std::size_t a1 = np, b1 = np;
      for (std::size_t a = 0; a < np; ++a) {
        auto b = complement(g, a);
        if (b) {
          a1 = a;
          b1 = *b;
          break;
        }
      }
      if (a1 == np)
        throw Error(ErrorKind::InvalidStructure,
                    "internal: positive root without a two-root decomposition");
      n_[a1][b1] = Rational(down_string(b1, a1) + 1);
      n_[b1][a1] = -n_[a1][b1];

      for (std::size_t a = a1 + 1; a < np; ++a) {
        auto bo = complement(g, a);
        if (!bo) continue;
        std::size_t b = *bo;
        if (a >= b) continue;  // each unordered pair once
        // (alpha1, beta1, -alpha, -beta) sum to zero; expand the four-root
        // Jacobi relation and solve for N_{alpha,beta}.
        Rational acc(0);
        Rational t1a = mixed(b1, a), t1b = mixed(a1, b);
        if (t1a != 0 && t1b != 0)
          acc += t1a * t1b / diff_norm2(b1, a);
        Rational t2a = mixed(a1, a), t2b = mixed(b1, b);
        if (t2a != 0 && t2b != 0)
          acc -= t2a * t2b / diff_norm2(a1, a);
        Rational val = norm2(rs_.positive_epsilon[g]) * acc / n_[a1][b1];
        int_of(val, "structure constant");
        n_[a][b] = val;
        n_[b][a] = -val;
      }
    }
  }

  // N_{alpha_a, alpha_b} for positive roots (0 when the sum is not a root).
  const Rational& pos_pair(std::size_t a, std::size_t b) const { return n_[a][b]; }

  // N_{alpha_a, -alpha_b} for distinct positive roots.
  Rational mixed(std::size_t a, std::size_t b) const {
    std::vector<int> diff(rs_.rank);
    bool pos = true, neg = true;
    for (std::size_t k = 0; k < rs_.rank; ++k) {
      diff[k] = rs_.positive_roots[a][k] - rs_.positive_roots[b][k];
      if (diff[k] > 0) neg = false;
      if (diff[k] < 0) pos = false;
    }
    if (pos) {
      auto it = index_.find(diff);
      if (it == index_.end()) return Rational(0);
      std::size_t rho = it->second;
      return -norm2(rs_.positive_epsilon[rho]) * n_[b][rho] /
             norm2(rs_.positive_epsilon[a]);
    }
    if (neg) {
      for (int& x : diff) x = -x;
      auto it = index_.find(diff);
      if (it == index_.end()) return Rational(0);
      std::size_t rho = it->second;
      return norm2(rs_.positive_epsilon[rho]) * n_[rho][a] /
             norm2(rs_.positive_epsilon[b]);
    }
    return Rational(0);
  }

  std::optional<std::size_t> root_index(const std::vector<int>& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  int height(std::size_t g) const {
    int h = 0;
    for (int x : rs_.positive_roots[g]) h += x;
    return h;
  }

  std::optional<std::size_t> complement(std::size_t g, std::size_t a) const {
    std::vector<int> c(rs_.rank);
    for (std::size_t k = 0; k < rs_.rank; ++k) {
      c[k] = rs_.positive_roots[g][k] - rs_.positive_roots[a][k];
      if (c[k] < 0) return std::nullopt;
    }
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Largest m with beta - m*alpha still a root (of either sign).
  int down_string(std::size_t b, std::size_t a) const {
    int m = 0;
    std::vector<int> c = rs_.positive_roots[b];
    while (true) {
      bool nonneg = true, nonpos = true;
      for (std::size_t k = 0; k < rs_.rank; ++k) {
        c[k] -= rs_.positive_roots[a][k];
        if (c[k] < 0) nonneg = false;
        if (c[k] > 0) nonpos = false;
      }
      if (nonneg && index_.count(c)) {
        ++m;
        continue;
      }
      if (nonpos) {
        std::vector<int> neg(rs_.rank);
        for (std::size_t k = 0; k < rs_.rank; ++k) neg[k] = -c[k];
        if (index_.count(neg)) {
          ++m;
          continue;
        }
      }
      break;
    }
    return m;
  }

  Rational diff_norm2(std::size_t a, std::size_t b) const {
    return norm2(vec_sub(rs_.positive_epsilon[a], rs_.positive_epsilon[b]));
  }

  const RootSystem& rs_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<std::vector<Rational>> n_;
};

std::string root_label(char sign, const std::vector<int>& c) {
  std::string s = "e:";
  s += sign;
  s += ':';
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(c[k]);
  }
  return s;
}

}  // namespace

LieAlgebra chevalley_algebra(const RootSystem& rs) {
  const std::size_t r = rs.rank;
  const std::size_t np = rs.positive_roots.size();
  const std::size_t dim = r + 2 * np;
  ChevalleyTable table(rs);

  // <alpha, alpha_i^v> for the positive root with index g.
  auto weight = [&](std::size_t g, std::size_t i) {
    Rational w(0);
    for (std::size_t k = 0; k < r; ++k)
      w += Rational(rs.positive_roots[g][k]) * rs.cartan_matrix.at(k, i);
    return w;
  };

  BracketMap brackets;
  auto add_term = [&](std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
    if (c == 0) return;
    brackets[{i, j}].push_back({k, c});
  };

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t g = 0; g < np; ++g) {
      Rational w = weight(g, i);
      add_term(i, r + g, r + g, w);
      add_term(i, r + np + g, r + np + g, -w);
    }

  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = a + 1; b < np; ++b) {
      std::vector<int> sum(r);
      for (std::size_t k = 0; k < r; ++k)
        sum[k] = rs.positive_roots[a][k] + rs.positive_roots[b][k];
      auto g = table.root_index(sum);
      if (!g) continue;
      int_of(table.pos_pair(a, b), "structure constant");
      add_term(r + a, r + b, r + *g, table.pos_pair(a, b));
      add_term(r + np + a, r + np + b, r + np + *g, -table.pos_pair(a, b));
    }

  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = 0; b < np; ++b) {
      if (a == b) {
        // [e_alpha, e_-alpha] = the coroot, integer over the h_i.
        Rational na = norm2(rs.positive_epsilon[a]);
        for (std::size_t i = 0; i < r; ++i) {
          Rational c = Rational(rs.positive_roots[a][i]) *
                       norm2(rs.simple_roots[i]) / na;
          int_of(c, "coroot coefficient");
          add_term(r + a, r + np + a, i, c);
        }
        continue;
      }
      Rational c = table.mixed(a, b);
      if (c == 0) continue;
      int_of(c, "structure constant");
      std::vector<int> diff(r);
      bool pos = true;
      for (std::size_t k = 0; k < r; ++k) {
        diff[k] = rs.positive_roots[a][k] - rs.positive_roots[b][k];
        if (diff[k] < 0) pos = false;
      }
      if (pos) {
        add_term(r + a, r + np + b, r + *table.root_index(diff), c);
      } else {
        for (int& x : diff) x = -x;
        add_term(r + a, r + np + b, r + np + *table.root_index(diff), c);
      }
    }

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < r; ++i) labels.push_back("h:" + std::to_string(i + 1));
  for (std::size_t g = 0; g < np; ++g) labels.push_back(root_label('+', rs.positive_roots[g]));
  for (std::size_t g = 0; g < np; ++g) labels.push_back(root_label('-', rs.positive_roots[g]));
  return LieAlgebra(dim, std::move(labels), std::move(brackets));
}

int marking_value(const Marking& m, const std::vector<int>& coeffs) {
  int v = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) v += m.p[i] * coeffs[i];
  return v;
}

std::vector<Marking> enumerate_markings(const RootSystem& rs) {
  const std::size_t r = rs.rank;
  std::vector<Marking> candidates;
  for (std::size_t i = 0; i < r; ++i) {
    if (rs.highest_root[i] == 2) {
      Marking m{std::vector<int>(r, 0)};
      m.p[i] = 1;
      candidates.push_back(std::move(m));
    } else if (rs.highest_root[i] == 1) {
      Marking m{std::vector<int>(r, 0)};
      m.p[i] = 2;
      candidates.push_back(std::move(m));
    }
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (rs.highest_root[i] == 1 && rs.highest_root[j] == 1) {
        Marking m{std::vector<int>(r, 0)};
        m.p[i] = m.p[j] = 1;
        candidates.push_back(std::move(m));
      }

  std::vector<Marking> out;
  for (auto& m : candidates) {
    bool has_one = false;
    for (const auto& c : rs.positive_roots)
      if (marking_value(m, c) == 1) {
        has_one = true;
        break;
      }
    if (has_one) out.push_back(std::move(m));
  }
  return out;
}

Vec marking_element(const RootSystem& rs, const Marking& m) {
  if (m.p.size() != rs.rank)
    throw Error(ErrorKind::InvalidParameters, "marking length does not match the rank");
  Vec p(rs.rank);
  for (std::size_t i = 0; i < rs.rank; ++i) p[i] = Rational(m.p[i]);
  auto c = solve(rs.cartan_matrix, p);
  if (!c)
    throw Error(ErrorKind::InvalidStructure, "internal: Cartan matrix is singular");
  Vec h(rs.rank + 2 * rs.positive_roots.size(), Rational(0));
  for (std::size_t i = 0; i < rs.rank; ++i) h[i] = (*c)[i];
  return h;
}

std::vector<std::vector<std::size_t>> diagram_automorphisms(const RootSystem& rs) {
  const std::size_t r = rs.rank;
  std::vector<std::vector<std::size_t>> result;
  std::vector<std::size_t> perm(r, r);
  std::vector<bool> used(r, false);

  auto consistent = [&](std::size_t pos, std::size_t cand) {
    if (rs.cartan_matrix.at(cand, cand) != rs.cartan_matrix.at(pos, pos)) return false;
    for (std::size_t k = 0; k < pos; ++k) {
      if (rs.cartan_matrix.at(perm[k], cand) != rs.cartan_matrix.at(k, pos)) return false;
      if (rs.cartan_matrix.at(cand, perm[k]) != rs.cartan_matrix.at(pos, k)) return false;
    }
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == r) {
      result.push_back(perm);
      return;
    }
    for (std::size_t cand = 0; cand < r; ++cand) {
      if (used[cand] || !consistent(pos, cand)) continue;
      perm[pos] = cand;
      used[cand] = true;
      self(self, pos + 1);
      used[cand] = false;
    }
  };
  recurse(recurse, 0);
  return result;
}

G2ModuleInfo g2_module_info(const RootSystem& rs, const Marking& m) {
  G2ModuleInfo info{0, {}};
  for (const auto& c : rs.positive_roots)
    if (marking_value(m, c) == 2) ++info.g2_dim;
  for (std::size_t j = 0; j < rs.rank; ++j) {
    if (m.p[j] != 0) continue;
    Rational pr(0);
    for (std::size_t k = 0; k < rs.rank; ++k)
      pr += Rational(rs.highest_root[k]) * rs.cartan_matrix.at(k, j);
    info.pairings.push_back({j, static_cast<int>(int_of(pr, "Cartan pairing"))});
  }
  return info;
}

namespace {

struct MarkingLevels {
  std::vector<std::size_t> g2_idx;    // basis indices of the +2 level
  std::vector<std::size_t> gm2_idx;   // basis indices of the -2 level
  std::vector<std::size_t> g0_idx;    // Cartan plus value-0 root vectors
  std::vector<Vec> g0_tilde;          // Killing-orthogonal complement of h in g0
};

MarkingLevels marking_levels(const LieAlgebra& algebra, const RootSystem& rs,
                             const Marking& m) {
  const std::size_t r = rs.rank;
  const std::size_t np = rs.positive_roots.size();
  const std::size_t dim = algebra.dim();
  MarkingLevels lv;
  for (std::size_t i = 0; i < r; ++i) lv.g0_idx.push_back(i);
  for (std::size_t g = 0; g < np; ++g) {
    int v = marking_value(m, rs.positive_roots[g]);
    if (v == 2) {
      lv.g2_idx.push_back(r + g);
      lv.gm2_idx.push_back(r + np + g);
    } else if (v == 0) {
      lv.g0_idx.push_back(r + g);
      lv.g0_idx.push_back(r + np + g);
    }
  }

  // K(h_i, h) = sum over roots of alpha(h_i) * alpha(h); value-0 root vectors
  // are Killing-orthogonal to the Cartan already.
  ExactMatrix pairs(1, r);
  for (std::size_t i = 0; i < r; ++i) {
    Rational acc(0);
    for (std::size_t g = 0; g < np; ++g) {
      Rational wi(0);
      for (std::size_t k = 0; k < r; ++k)
        wi += Rational(rs.positive_roots[g][k]) * rs.cartan_matrix.at(k, i);
      acc += Rational(2) * wi * Rational(marking_value(m, rs.positive_roots[g]));
    }
    pairs.at(0, i) = acc;
  }
  for (const Vec& combo : kernel(pairs)) {
    Vec v(dim, Rational(0));
    for (std::size_t i = 0; i < r; ++i) v[i] = combo[i];
    lv.g0_tilde.push_back(v);
  }
  for (std::size_t g = 0; g < np; ++g)
    if (marking_value(m, rs.positive_roots[g]) == 0) {
      Vec v(dim, Rational(0));
      v[r + g] = 1;
      lv.g0_tilde.push_back(v);
      Vec w(dim, Rational(0));
      w[r + np + g] = 1;
      lv.g0_tilde.push_back(w);
    }
  return lv;
}

Vec random_level_vector(Rng& rng, std::size_t dim, const std::vector<std::size_t>& idx) {
  while (true) {
    Vec v(dim, Rational(0));
    bool nonzero = false;
    for (std::size_t i : idx) {
      int c = rng.int_in(-10, 10);
      if (c != 0) nonzero = true;
      v[i] = Rational(c);
    }
    if (nonzero) return v;
  }
}

}  // namespace

Sl2Decision sl2_exists(const LieAlgebra& algebra, const RootSystem& rs, const Marking& m,
                       std::size_t trials, Rng& rng) {
  if (m.p.size() != rs.rank)
    throw Error(ErrorKind::InvalidParameters, "marking length does not match the rank");
  int total = 0;
  for (std::size_t i = 0; i < rs.rank; ++i) {
    if (m.p[i] < 0)
      throw Error(ErrorKind::InvalidParameters, "marking entries must be nonnegative");
    total += m.p[i] * rs.highest_root[i];
  }
  if (total != 2)
    throw Error(ErrorKind::InvalidParameters,
                "marking does not put the highest root at value 2");
  if (trials == 0)
    throw Error(ErrorKind::InvalidParameters, "trials must be positive");

  const std::size_t dim = algebra.dim();
  Vec h = marking_element(rs, m);
  MarkingLevels lv = marking_levels(algebra, rs, m);
  const std::size_t m2 = lv.g2_idx.size();

  std::size_t max_rank = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Vec e = random_level_vector(rng, dim, lv.g2_idx);
    ExactMatrix map(m2, lv.g0_tilde.size());
    for (std::size_t c = 0; c < lv.g0_tilde.size(); ++c) {
      Vec br = algebra.bracket(lv.g0_tilde[c], e);
      for (std::size_t rrow = 0; rrow < m2; ++rrow) map.at(rrow, c) = br[lv.g2_idx[rrow]];
    }
    max_rank = std::max(max_rank, rank(map));
  }
  bool exists = max_rank < m2;

  auto attempt_witness = [&](std::size_t count) -> std::optional<Sl2Triple> {
    for (std::size_t t = 0; t < count; ++t) {
      Vec e = random_level_vector(rng, dim, lv.g2_idx);
      ExactMatrix eqs(dim, lv.gm2_idx.size());
      for (std::size_t c = 0; c < lv.gm2_idx.size(); ++c) {
        Vec basis_vec(dim, Rational(0));
        basis_vec[lv.gm2_idx[c]] = 1;
        Vec br = algebra.bracket(e, basis_vec);
        for (std::size_t rrow = 0; rrow < dim; ++rrow) eqs.at(rrow, c) = br[rrow];
      }
      auto sol = solve(eqs, h);
      if (!sol) continue;
      Vec f(dim, Rational(0));
      for (std::size_t c = 0; c < lv.gm2_idx.size(); ++c) f[lv.gm2_idx[c]] = (*sol)[c];
      Sl2Triple candidate{e, h, f};
      if (is_sl2_triple(algebra, candidate)) return candidate;
    }
    return std::nullopt;
  };

  Sl2Decision decision{exists, max_rank, std::nullopt};
  if (exists) {
    decision.witness = attempt_witness(trials);
    if (!decision.witness)
      throw Error(ErrorKind::WitnessNotFound,
                  "decision says the structure exists, but no witness materialized after " +
                      std::to_string(trials) + " trials");
  } else {
    if (attempt_witness(100))
      throw Error(ErrorKind::InvalidStructure,
                  "internal: rank decision said no structure, but a witness materialized");
  }
  return decision;
}

namespace {

// dim of the center of the centralizer of the witness triple inside the
// 0 level, streamed as rank constraints with early exit.
std::size_t g0_center_dimension(const LieAlgebra& algebra, const MarkingLevels& lv,
                                const Sl2Triple& t, std::size_t expected_dim) {
  const std::size_t dim = algebra.dim();
  const std::size_t n0 = lv.g0_idx.size();

  ExactMatrix stacked(2 * dim, n0);
  for (std::size_t c = 0; c < n0; ++c) {
    Vec basis_vec(dim, Rational(0));
    basis_vec[lv.g0_idx[c]] = 1;
    Vec be = algebra.bracket(t.e, basis_vec);
    Vec bf = algebra.bracket(t.f, basis_vec);
    for (std::size_t rrow = 0; rrow < dim; ++rrow) {
      stacked.at(rrow, c) = be[rrow];
      stacked.at(dim + rrow, c) = bf[rrow];
    }
  }
  std::vector<Vec> combos = kernel(stacked);
  if (combos.size() != expected_dim)
    throw Error(ErrorKind::InvalidStructure,
                "internal: centralizer dimension does not match the grading counts");
  std::vector<Vec> basis;
  basis.reserve(combos.size());
  for (const Vec& x : combos) {
    Vec v(dim, Rational(0));
    for (std::size_t c = 0; c < n0; ++c)
      if (x[c] != 0) v[lv.g0_idx[c]] += x[c];
    basis.push_back(v);
  }

  const std::size_t m0 = basis.size();
  IncrementalRref inc(m0);
  for (std::size_t m = 0; m < m0 && inc.rank() < m0; ++m) {
    std::vector<Vec> brs;
    brs.reserve(m0);
    for (std::size_t k = 0; k < m0; ++k) brs.push_back(algebra.bracket(basis[k], basis[m]));
    for (std::size_t rrow = 0; rrow < dim && inc.rank() < m0; ++rrow) {
      Vec row(m0);
      bool nonzero = false;
      for (std::size_t k = 0; k < m0; ++k) {
        row[k] = brs[k][rrow];
        if (row[k] != 0) nonzero = true;
      }
      if (nonzero) inc.add(std::move(row));
    }
  }
  return m0 - inc.rank();
}

}  // namespace

std::vector<ClassificationRow> classify(SimpleType type, std::size_t rank,
                                        const ClassifyOptions& options) {
  RootSystem rs = build_root_system(type, rank);
  LieAlgebra algebra = chevalley_algebra(rs);
  std::vector<Marking> markings = enumerate_markings(rs);
  std::vector<std::vector<std::size_t>> autos = diagram_automorphisms(rs);
  Rng rng(options.seed);

  std::vector<ClassificationRow> rows;
  for (const Marking& m : markings) {
    ClassificationRow row;
    row.marking = m;
    std::size_t n0 = 0, n1 = 0, n2 = 0;
    for (const auto& c : rs.positive_roots) {
      int v = marking_value(m, c);
      if (v == 0) ++n0;
      else if (v == 1) ++n1;
      else if (v == 2) ++n2;
    }
    row.g0_dim = rank + 2 * n0 - n2;
    row.j1_dim = n1;
    row.j2_dim = n2;
    row.g2_dim = n2;

    Sl2Decision decision = sl2_exists(algebra, rs, m, options.trials, rng);
    row.exists = decision.exists;
    row.witness = decision.witness;

    for (const auto& sigma : autos) {
      bool identity = true;
      for (std::size_t i = 0; i < rank; ++i)
        if (sigma[i] != i) identity = false;
      if (identity) continue;
      Marking q{std::vector<int>(rank, 0)};
      for (std::size_t i = 0; i < rank; ++i) q.p[sigma[i]] = m.p[i];
      for (std::size_t earlier = 0; earlier < rows.size(); ++earlier)
        if (rows[earlier].marking.p == q.p) {
          if (!row.equivalent_to || *row.equivalent_to > earlier)
            row.equivalent_to = earlier;
          break;
        }
    }

    if (row.exists) {
      MarkingLevels lv = marking_levels(algebra, rs, m);
      std::size_t center =
          g0_center_dimension(algebra, lv, *row.witness, row.g0_dim);
      if (center > 0)
        row.note = "g0 contains a " + std::to_string(center) +
                   "-dimensional center; its semisimple part has dimension " +
                   std::to_string(row.g0_dim - center);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace shortsl2
