#include "rootsys.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace fseries {

WeightMultiset multiset_union(const WeightMultiset& a, const WeightMultiset& b) {
  WeightMultiset r = a;
  for (const auto& [w, m] : b) r[w] += m;
  return r;
}

WeightMultiset multiset_difference(const WeightMultiset& a, const WeightMultiset& b) {
  WeightMultiset r = a;
  for (const auto& [w, m] : b) {
    auto it = r.find(w);
    const Int have = (it == r.end()) ? Int(0) : it->second;
    if (have < m)
      throw engine_error("NonContainment",
                         "multiset difference negative at weight " + weight_str(w) +
                             " (have " + have.str() + ", removing " + m.str() + ")");
    if (have == m)
      r.erase(it);
    else
      it->second = have - m;
  }
  return r;
}

Weight multiset_half_sum(const WeightMultiset& f, std::size_t dim) {
  Weight s(dim, Rat(0));
  for (const auto& [w, m] : f)
    for (std::size_t i = 0; i < dim; ++i) s[i] += Rat(m) * w[i];
  for (auto& x : s) x /= 2;
  return s;
}

Int multiset_total(const WeightMultiset& f) {
  Int t = 0;
  for (const auto& [w, m] : f) t += m;
  return t;
}

WeightMultiset multiset_negate(const WeightMultiset& f) {
  WeightMultiset r;
  for (const auto& [w, m] : f) {
    Weight neg(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
    r[neg] = m;
  }
  return r;
}

Weight weight_add(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Weight weight_sub(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Weight weight_scale(const Rat& c, const Weight& a) {
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool weight_is_zero(const Weight& a) {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

std::string weight_str(const Weight& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += rat_str(a[i]);
  }
  return s + ")";
}

Rat RootSystem::pairing(const Weight& v, const Weight& w) const {
  return rat_dot(v, form, w);
}

Rat RootSystem::norm_sq(const Weight& v) const { return pairing(v, v); }

Rat RootSystem::coroot_pairing(const Weight& v, std::size_t i) const {
  Rat acc = 0;
  for (std::size_t j = 0; j < rank; ++j) acc += v[j] * Rat(cartan[j][i]);
  return acc;
}

Weight RootSystem::reflect(std::size_t i, const Weight& v) const {
  Weight r = v;
  r[i] -= coroot_pairing(v, i);
  return r;
}

Weight RootSystem::rho() const {
  Weight s(rank, Rat(0));
  for (const Weight& a : positive_roots)
    for (std::size_t i = 0; i < rank; ++i) s[i] += a[i];
  for (auto& x : s) x /= 2;
  return s;
}

bool RootSystem::is_dominant(const Weight& v, std::size_t* bad) const {
  for (std::size_t i = 0; i < rank; ++i)
    if (coroot_pairing(v, i) < 0) {
      if (bad) *bad = i;
      return false;
    }
  return true;
}

bool RootSystem::is_integral(const Weight& v, std::size_t* bad) const {
  for (std::size_t i = 0; i < rank; ++i) {
    const Rat p = coroot_pairing(v, i);
    if (denominator(p) != 1) {
      if (bad) *bad = i;
      return false;
    }
  }
  return true;
}

Weight RootSystem::dominant_representative(const Weight& v) const {
  Weight w = v;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i < rank; ++i)
      if (coroot_pairing(w, i) < 0) {
        w = reflect(i, w);
        moved = true;
      }
  }
  return w;
}

namespace {

Rat weight_height(const Weight& v) {
  Rat h = 0;
  for (const Rat& x : v) h += x;
  return h;
}

bool root_order(const Weight& a, const Weight& b) {
  const Rat ha = weight_height(a), hb = weight_height(b);
  if (ha != hb) return ha < hb;
  return b < a;  // ties: larger first coordinate first, so a1 precedes a2
}

}  // namespace

RootSystem build_root_system(const std::vector<std::vector<Int>>& cartan) {
  const std::size_t n = cartan.size();
  if (n == 0) throw engine_error("BadCartan", "empty Cartan matrix");
  for (const auto& row : cartan)
    if (row.size() != n) throw engine_error("BadCartan", "Cartan matrix not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan[i][i] != 2)
      throw engine_error("BadCartan", "diagonal entry at " + std::to_string(i) + " is not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan[i][j] > 0)
        throw engine_error("BadCartan", "positive off-diagonal entry at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
        throw engine_error("BadCartan", "zero pattern not symmetric at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }

  RootSystem rs;
  rs.rank = n;
  rs.cartan = cartan;

  // symmetrize: propagate d along the Coxeter graph, then verify globally
  RatVec d(n, Rat(0));
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (std::size_t seed = 0; seed < n; ++seed) {
    if (comp[seed] >= 0) continue;
    comp[seed] = ncomp;
    d[seed] = 1;
    std::deque<std::size_t> bfs{seed};
    std::vector<int> members{static_cast<int>(seed)};
    while (!bfs.empty()) {
      const std::size_t i = bfs.front();
      bfs.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || cartan[i][j] == 0 || comp[j] >= 0) continue;
        comp[j] = ncomp;
        d[j] = d[i] * Rat(cartan[j][i]) / Rat(cartan[i][j]);
        members.push_back(static_cast<int>(j));
        bfs.push_back(j);
      }
    }
    Rat dmax = 0;
    for (int m : members) dmax = std::max(dmax, d[m]);
    for (int m : members) d[m] /= dmax;  // long roots get (a,a) = 2
    rs.components.push_back(members);
    ++ncomp;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (Rat(cartan[i][j]) * d[j] != Rat(cartan[j][i]) * d[i])
        throw engine_error("NotSymmetrizable", "no symmetrizer: entries (" + std::to_string(i) +
                                                   "," + std::to_string(j) + ") conflict");
  rs.half_norms = d;
  rs.form.assign(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rs.form[i][j] = Rat(cartan[i][j]) * d[j];

  int bad_minor = 0;
  if (!is_positive_definite(rs.form, &bad_minor))
    throw engine_error("NotFiniteType",
                       "symmetrized form is not positive definite: leading principal minor " +
                           std::to_string(bad_minor) + " is not positive");

  rs.simple_roots.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    rs.simple_roots[i].assign(n, Rat(0));
    rs.simple_roots[i][i] = 1;
  }

  // positive roots by reflection closure
  std::set<Weight> pos(rs.simple_roots.begin(), rs.simple_roots.end());
  std::deque<Weight> queue(rs.simple_roots.begin(), rs.simple_roots.end());
  while (!queue.empty()) {
    const Weight v = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      Weight w = rs.reflect(i, v);
      bool nonneg = true;
      for (const Rat& x : w)
        if (x < 0) {
          nonneg = false;
          break;
        }
      if (nonneg && pos.insert(w).second) queue.push_back(w);
    }
  }
  rs.positive_roots.assign(pos.begin(), pos.end());
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), root_order);
  return rs;
}

namespace {

std::vector<std::vector<Int>> simple_type_cartan(char letter, int n) {
  auto chain = [](int m) {
    std::vector<std::vector<Int>> a(m, std::vector<Int>(m, Int(0)));
    for (int i = 0; i < m; ++i) {
      a[i][i] = 2;
      if (i + 1 < m) {
        a[i][i + 1] = -1;
        a[i + 1][i] = -1;
      }
    }
    return a;
  };
  switch (letter) {
    case 'A':
      if (n < 1) throw engine_error("BadType", "A requires rank >= 1");
      return chain(n);
    case 'B': {
      if (n < 2) throw engine_error("BadType", "B requires rank >= 2");
      auto a = chain(n);
      a[n - 2][n - 1] = -2;
      return a;
    }
    case 'C': {
      if (n < 2) throw engine_error("BadType", "C requires rank >= 2");
      auto a = chain(n);
      a[n - 1][n - 2] = -2;
      return a;
    }
    case 'D': {
      if (n < 3) throw engine_error("BadType", "D requires rank >= 3");
      auto a = chain(n - 1);
      for (auto& row : a) row.push_back(0);
      a.push_back(std::vector<Int>(n, Int(0)));
      a[n - 1][n - 1] = 2;
      a[n - 3][n - 1] = -1;
      a[n - 1][n - 3] = -1;
      a[n - 2][n - 1] = 0;
      a[n - 1][n - 2] = 0;
      return a;
    }
    case 'E': {
      if (n < 6 || n > 8) throw engine_error("BadType", "E requires rank 6, 7 or 8");
      // chain 1-3-4-5-...-n with node 2 hanging off node 4 (1-based labels)
      std::vector<std::vector<Int>> a(n, std::vector<Int>(n, Int(0)));
      for (int i = 0; i < n; ++i) a[i][i] = 2;
      auto link = [&a](int i, int j) {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
      };
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      return a;
    }
    case 'F': {
      if (n != 4) throw engine_error("BadType", "F requires rank 4");
      auto a = chain(4);
      a[1][2] = -2;
      return a;
    }
    case 'G': {
      if (n != 2) throw engine_error("BadType", "G requires rank 2");
      return {{Int(2), Int(-3)}, {Int(-1), Int(2)}};
    }
    default:
      throw engine_error("BadType", std::string("unknown type letter '") + letter + "'");
  }
}

std::size_t positive_count_of(char letter, int n) {
  switch (letter) {
    case 'A':
      return static_cast<std::size_t>(n) * (n + 1) / 2;
    case 'B':
    case 'C':
      return static_cast<std::size_t>(n) * n;
    case 'D':
      return static_cast<std::size_t>(n) * (n - 1);
    case 'E':
      return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case 'F':
      return 24;
    case 'G':
      return 6;
  }
  return 0;
}

}  // namespace

std::vector<std::vector<Int>> cartan_of_type(const std::string& type) {
  std::vector<std::vector<Int>> a;
  std::stringstream ss(type);
  std::string piece;
  bool any = false;
  while (std::getline(ss, piece, 'x')) {
    if (piece.size() < 2 || !std::isalpha(static_cast<unsigned char>(piece[0])))
      throw engine_error("BadType", "cannot parse type '" + type + "'");
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(piece[0])));
    int n = 0;
    for (std::size_t i = 1; i < piece.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(piece[i])))
        throw engine_error("BadType", "cannot parse type '" + type + "'");
      n = n * 10 + (piece[i] - '0');
    }
    const auto block = simple_type_cartan(letter, n);
    const std::size_t off = a.size();
    for (auto& row : a) row.resize(off + block.size(), Int(0));
    for (const auto& brow : block) {
      std::vector<Int> row(off, Int(0));
      row.insert(row.end(), brow.begin(), brow.end());
      a.push_back(std::move(row));
    }
    any = true;
  }
  if (!any) throw engine_error("BadType", "empty type string");
  return a;
}

RootSystem root_system_of_type(const std::string& type) {
  RootSystem rs = build_root_system(cartan_of_type(type));
  // recompute the expected positive-root count for a cross-check
  std::size_t expect = 0;
  std::stringstream ss(type);
  std::string piece;
  while (std::getline(ss, piece, 'x')) {
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(piece[0])));
    int n = 0;
    for (std::size_t i = 1; i < piece.size(); ++i) n = n * 10 + (piece[i] - '0');
    expect += positive_count_of(letter, n);
  }
  if (rs.positive_roots.size() != expect)
    throw engine_error("Internal", "positive root count for " + type + " is " +
                                       std::to_string(rs.positive_roots.size()) + ", expected " +
                                       std::to_string(expect));
  return rs;
}

std::vector<WeylElement> weyl_group(const RootSystem& rs, std::size_t cap) {
  const std::size_t n = rs.rank;
  std::vector<RatMat> gens(n);
  for (std::size_t i = 0; i < n; ++i) {
    gens[i] = rat_identity(n);
    for (std::size_t j = 0; j < n; ++j) gens[i][i][j] -= Rat(rs.cartan[j][i]);
  }
  auto flat = [n](const RatMat& m) {
    RatVec f;
    f.reserve(n * n);
    for (const auto& row : m) f.insert(f.end(), row.begin(), row.end());
    return f;
  };
  std::vector<WeylElement> out;
  std::map<RatVec, std::size_t> seen;
  out.push_back(WeylElement{{}, rat_identity(n)});
  seen.emplace(flat(out[0].matrix), 0);
  for (std::size_t head = 0; head < out.size(); ++head) {
    const WeylElement cur = out[head];
    for (std::size_t i = 0; i < n; ++i) {
      WeylElement next;
      next.matrix = rat_mul(cur.matrix, gens[i]);
      const RatVec key = flat(next.matrix);
      if (seen.count(key)) continue;
      next.word = cur.word;
      next.word.push_back(static_cast<int>(i));
      if (out.size() >= cap)
        throw engine_error("WeylCapExceeded",
                           "Weyl group enumeration exceeded the cap of " + std::to_string(cap) +
                               " elements");
      seen.emplace(key, out.size());
      out.push_back(std::move(next));
    }
  }
  return out;
}

namespace {

void require_dominant_integral(const RootSystem& rs, const Weight& lambda) {
  std::size_t bad = 0;
  if (!rs.is_integral(lambda, &bad))
    throw engine_error("NotIntegral", "coroot pairing with simple root " + std::to_string(bad) +
                                          " is " + rat_str(rs.coroot_pairing(lambda, bad)) +
                                          ", not an integer");
  if (!rs.is_dominant(lambda, &bad))
    throw engine_error("NotDominant", "coroot pairing with simple root " + std::to_string(bad) +
                                          " is " + rat_str(rs.coroot_pairing(lambda, bad)) +
                                          ", negative");
}

}  // namespace

Int weyl_dim(const RootSystem& rs, const Weight& lambda) {
  require_dominant_integral(rs, lambda);
  const Weight rho = rs.rho();
  const Weight shifted = weight_add(lambda, rho);
  Rat dim = 1;
  for (const Weight& a : rs.positive_roots) dim *= rs.pairing(shifted, a) / rs.pairing(rho, a);
  if (denominator(dim) != 1 || dim <= 0)
    throw engine_error("Internal", "Weyl dimension came out as " + rat_str(dim));
  return numerator(dim);
}

WeightMultiset freudenthal_dominant(const RootSystem& rs, const Weight& lambda) {
  require_dominant_integral(rs, lambda);
  const std::size_t n = rs.rank;
  const Rat lam2 = rs.norm_sq(lambda);

  // box bound: if lambda - sum c_i a_i is a dominant weight of V(lambda) then
  // |c_i| = |(v, f_i)| <= ||v|| ||f_i|| with v in the 2||lambda|| ball and
  // f_i the form-dual basis of the simple roots
  const auto form_inv_opt = rat_inverse(rs.form);
  const RatMat& form_inv = *form_inv_opt;  // form is positive definite
  std::vector<Int> box(n);
  for (std::size_t i = 0; i < n; ++i)
    box[i] = isqrt_floor(rat_floor(4 * lam2 * form_inv[i][i]));

  // weight differences lie in the root lattice, so c is an integer vector
  std::vector<std::pair<Int, Weight>> candidates;  // (depth, weight)
  std::vector<Int> c(n, Int(0));
  while (true) {
    Weight mu = lambda;
    Int depth = 0;
    for (std::size_t i = 0; i < n; ++i) {
      mu[i] -= Rat(c[i]);
      depth += c[i];
    }
    if (rs.is_dominant(mu) && rs.norm_sq(mu) <= lam2) candidates.emplace_back(depth, mu);
    std::size_t pos = 0;
    while (pos < n && c[pos] == box[pos]) {
      c[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
    ++c[pos];
  }
  std::sort(candidates.begin(), candidates.end());

  const Weight rho = rs.rho();
  const Rat top = rs.norm_sq(weight_add(lambda, rho));
  WeightMultiset mult;
  for (const auto& [depth, mu] : candidates) {
    if (depth == 0) {
      mult[mu] = 1;
      continue;
    }
    const Rat denom = top - rs.norm_sq(weight_add(mu, rho));
    Rat acc = 0;
    for (const Weight& a : rs.positive_roots) {
      Weight v = weight_add(mu, a);
      while (rs.norm_sq(v) <= lam2) {
        const auto it = mult.find(rs.dominant_representative(v));
        if (it != mult.end()) acc += Rat(it->second) * rs.pairing(v, a);
        v = weight_add(v, a);
      }
    }
    const Rat m = 2 * acc / denom;
    if (denominator(m) != 1 || m < 0)
      throw engine_error("Internal",
                         "Freudenthal multiplicity at " + weight_str(mu) + " is " + rat_str(m));
    if (m > 0) mult[mu] = numerator(m);
  }
  return mult;
}

WeightMultiset freudenthal_character(const RootSystem& rs, const Weight& lambda) {
  WeightMultiset full;
  for (const auto& [mu, m] : freudenthal_dominant(rs, lambda)) {
    std::set<Weight> orbit{mu};
    std::deque<Weight> queue{mu};
    while (!queue.empty()) {
      const Weight v = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < rs.rank; ++i) {
        Weight w = rs.reflect(i, v);
        if (orbit.insert(w).second) queue.push_back(w);
      }
    }
    for (const Weight& v : orbit) full[v] = m;
  }
  return full;
}

Int freudenthal_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& weight) {
  const WeightMultiset mult = freudenthal_dominant(rs, lambda);
  const auto it = mult.find(rs.dominant_representative(weight));
  return it == mult.end() ? Int(0) : it->second;
}

}  // namespace fseries
