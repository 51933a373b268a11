#include "schurlab/groups.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

namespace schurlab {

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// (a*b)(i) = a(b(i))
std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

int fact_i(int n) {
  int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void compute_classes(FiniteGroup& G, std::vector<int>& mult, int order,
                     std::vector<int>& inv, std::vector<std::vector<int>>& classes,
                     std::vector<int>& class_of) {
  inv.assign(order, -1);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (mult[a * order + b] == 0) inv[a] = b;
  class_of.assign(order, -1);
  for (int g = 0; g < order; ++g) {
    if (class_of[g] >= 0) continue;
    std::set<int> orbit;
    for (int x = 0; x < order; ++x)
      orbit.insert(mult[mult[x * order + g] * order + inv[x]]);
    const int id = static_cast<int>(classes.size());
    classes.emplace_back(orbit.begin(), orbit.end());
    for (int e : orbit) class_of[e] = id;
  }
  (void)G;
}

}  // namespace

Partition cycle_type_of_permutation(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  std::vector<int> cycles;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = perm[j];
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.begin(), cycles.end(), std::greater<int>());
  return Partition(cycles);
}

FiniteGroup make_group(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("group spec must be family:param, got " + spec);
  const std::string family = spec.substr(0, colon);
  const int p = std::stoi(spec.substr(colon + 1));

  FiniteGroup G;
  G.name_ = spec;
  G.param_ = p;

  if (family == "cyclic") {
    if (p < 1 || p > 48) throw std::invalid_argument("cyclic:N requires 1 <= N <= 48");
    G.family_ = Family::Cyclic;
    G.order_ = p;
    G.mult_.resize(p * p);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) G.mult_[a * p + b] = (a + b) % p;
  } else if (family == "dihedral") {
    if (p < 1 || 2 * p > 48) throw std::invalid_argument("dihedral:N requires 2N <= 48");
    G.family_ = Family::Dihedral;
    const int n = 2 * p;
    G.order_ = n;
    G.mult_.resize(n * n);
    // element t*N + j is s^t r^j; s r^j s = r^{-j}
    for (int t1 = 0; t1 < 2; ++t1)
      for (int j1 = 0; j1 < p; ++j1)
        for (int t2 = 0; t2 < 2; ++t2)
          for (int j2 = 0; j2 < p; ++j2) {
            const int t = t1 ^ t2;
            const int j = (t2 == 0) ? (j1 + j2) % p : ((j2 - j1) % p + p) % p;
            G.mult_[(t1 * p + j1) * n + (t2 * p + j2)] = t * p + j;
          }
  } else if (family == "sym") {
    if (p < 1 || p > 4) throw std::invalid_argument("sym:n requires 1 <= n <= 4");
    G.family_ = Family::Sym;
    const auto perms = all_permutations(p);
    const int n = static_cast<int>(perms.size());
    G.order_ = n;
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n; ++i) index[perms[i]] = i;
    G.mult_.resize(n * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        G.mult_[a * n + b] = index[compose(perms[a], perms[b])];
  } else if (family == "wreath_s2") {
    if (p < 1 || 2 * fact_i(p) * fact_i(p) > 72)
      throw std::invalid_argument("wreath_s2:n order cap 72 exceeded");
    G.family_ = Family::WreathS2;
    const auto perms = all_permutations(p);
    const int f = static_cast<int>(perms.size());
    const int n = 2 * f * f;
    G.order_ = n;
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < f; ++i) index[perms[i]] = i;
    G.mult_.resize(n * n);
    // element eps*f^2 + ia*f + ib is ((a,b), eps);
    // ((a,b),e)*((c,d),e') = ((a,b) . swap^e (c,d), e xor e')
    for (int e1 = 0; e1 < 2; ++e1)
      for (int ia = 0; ia < f; ++ia)
        for (int ib = 0; ib < f; ++ib)
          for (int e2 = 0; e2 < 2; ++e2)
            for (int ic = 0; ic < f; ++ic)
              for (int id = 0; id < f; ++id) {
                const int c = (e1 == 0) ? ic : id;
                const int d = (e1 == 0) ? id : ic;
                const int ra = index[compose(perms[ia], perms[c])];
                const int rb = index[compose(perms[ib], perms[d])];
                const int lhs = e1 * f * f + ia * f + ib;
                const int rhs = e2 * f * f + ic * f + id;
                G.mult_[lhs * n + rhs] = (e1 ^ e2) * f * f + ra * f + rb;
              }
  } else {
    throw std::invalid_argument("unsupported group family: " + family);
  }

  compute_classes(G, G.mult_, G.order_, G.inv_, G.classes_, G.class_of_);
  return G;
}

Subgroup subgroup_from_generators(const FiniteGroup& G, const std::vector<int>& gens) {
  std::set<int> elems{0};
  std::vector<int> frontier{0};
  for (int g : gens)
    if (elems.insert(g).second) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (int b : elems) {
        for (int c : {G.mult(a, b), G.mult(b, a), G.inv(a)})
          if (elems.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  Subgroup H;
  H.elements.assign(elems.begin(), elems.end());
  return H;
}

std::vector<Subgroup> subgroups(const FiniteGroup& G) {
  if (G.order() > 48) throw std::invalid_argument("subgroups: |G| > 48");
  std::set<std::vector<int>> found;
  found.insert({0});
  bool grew = true;
  while (grew) {
    grew = false;
    const auto snapshot = found;
    for (const auto& S : snapshot) {
      for (int g = 1; g < G.order(); ++g) {
        if (std::binary_search(S.begin(), S.end(), g)) continue;
        std::vector<int> gens = S;
        gens.push_back(g);
        const Subgroup H = subgroup_from_generators(G, gens);
        if (found.insert(H.elements).second) grew = true;
      }
    }
  }
  std::vector<Subgroup> out;
  for (const auto& e : found) out.push_back(Subgroup{e});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return std::pair(a.order(), a.elements) < std::pair(b.order(), b.elements);
  });
  return out;
}

namespace {

std::vector<int> parse_cycles(const std::string& s, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') throw std::invalid_argument("bad cycle notation: " + s);
    std::vector<int> cyc;
    ++i;
    while (i < s.size() && s[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw std::invalid_argument("bad cycle notation: " + s);
      const int pt = s[i] - '1';  // points are 1-based single digits
      if (pt < 0 || pt >= n) throw std::invalid_argument("cycle point out of range: " + s);
      cyc.push_back(pt);
      ++i;
    }
    if (i == s.size()) throw std::invalid_argument("unterminated cycle: " + s);
    ++i;
    for (std::size_t j = 0; j < cyc.size(); ++j)
      perm[cyc[j]] = cyc[(j + 1) % cyc.size()];
  }
  return perm;
}

int find_sym_element(const FiniteGroup& G, const std::vector<int>& perm) {
  const auto perms = all_permutations(G.param());
  for (int i = 0; i < static_cast<int>(perms.size()); ++i)
    if (perms[i] == perm) return i;
  throw std::logic_error("permutation not found");
}

}  // namespace

Subgroup parse_subgroup(const FiniteGroup& G, const std::string& spec) {
  if (spec == "trivial") return Subgroup{{0}};
  if (spec == "full") {
    Subgroup H;
    for (int g = 0; g < G.order(); ++g) H.elements.push_back(g);
    return H;
  }
  if (spec.rfind("reflection:", 0) == 0) {
    if (G.family() != Family::Dihedral)
      throw std::invalid_argument("reflection:j only applies to dihedral groups");
    const int j = std::stoi(spec.substr(11));
    if (j < 0 || j >= G.param()) throw std::invalid_argument("reflection index out of range");
    return subgroup_from_generators(G, {G.param() + j});
  }
  if (spec.rfind("gen:", 0) == 0) {
    const std::string body = spec.substr(4);
    std::vector<int> gens;
    if (!body.empty() && body[0] == '(') {
      if (G.family() != Family::Sym)
        throw std::invalid_argument("cycle notation only applies to sym groups");
      gens.push_back(find_sym_element(G, parse_cycles(body, G.param())));
    } else {
      std::size_t pos = 0;
      while (pos < body.size()) {
        const auto comma = body.find(',', pos);
        const std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        const int g = std::stoi(tok);
        if (g < 0 || g >= G.order()) throw std::invalid_argument("generator index out of range");
        gens.push_back(g);
        pos = comma == std::string::npos ? body.size() : comma + 1;
      }
    }
    return subgroup_from_generators(G, gens);
  }
  throw std::invalid_argument("unsupported subgroup spec: " + spec);
}

namespace {

CharacterTable cyclic_table(const FiniteGroup& G) {
  const int N = G.order();
  CharacterTable t;
  for (int j = 0; j < N; ++j) {
    t.labels.push_back("chi" + std::to_string(j));
    t.dims.push_back(1);
    std::vector<Complex> row(G.classes().size());
    for (std::size_t c = 0; c < G.classes().size(); ++c) {
      const int m = G.classes()[c][0];
      const double ang = 2.0 * std::numbers::pi * j * m / N;
      row[c] = Complex(std::cos(ang), std::sin(ang));
    }
    t.chars.push_back(std::move(row));
  }
  t.d_max = 1;
  return t;
}

CharacterTable dihedral_table(const FiniteGroup& G) {
  const int N = G.param();
  CharacterTable t;
  auto decode = [&](int g) { return std::pair(g / N, g % N); };  // (t, j): s^t r^j
  auto add = [&](const std::string& label, int dim, auto chi) {
    t.labels.push_back(label);
    t.dims.push_back(dim);
    std::vector<Complex> row(G.classes().size());
    for (std::size_t c = 0; c < G.classes().size(); ++c) {
      auto [tt, jj] = decode(G.classes()[c][0]);
      row[c] = chi(tt, jj);
    }
    t.chars.push_back(std::move(row));
  };
  add("triv", 1, [](int, int) { return Complex(1, 0); });
  add("sgn", 1, [](int tt, int) { return Complex(tt == 0 ? 1 : -1, 0); });
  if (N % 2 == 0) {
    add("alt", 1, [](int, int jj) { return Complex(jj % 2 == 0 ? 1 : -1, 0); });
    add("alt_sgn", 1, [](int tt, int jj) {
      const int s = (jj % 2 == 0 ? 1 : -1) * (tt == 0 ? 1 : -1);
      return Complex(s, 0);
    });
  }
  const int two_dim_count = (N % 2 == 0) ? N / 2 - 1 : (N - 1) / 2;
  for (int h = 1; h <= two_dim_count; ++h) {
    add("rot" + std::to_string(h), 2, [h, N](int tt, int jj) {
      if (tt == 1) return Complex(0, 0);
      return Complex(2.0 * std::cos(2.0 * std::numbers::pi * h * jj / N), 0);
    });
  }
  t.d_max = two_dim_count > 0 ? 2 : 1;
  return t;
}

CharacterTable sym_table(const FiniteGroup& G) {
  const int n = G.param();
  const auto perms = all_permutations(n);
  CharacterTable t;
  std::vector<Partition> class_types;
  for (const auto& cls : G.classes())
    class_types.push_back(cycle_type_of_permutation(perms[cls[0]]));
  for (const Partition& lambda : enumerate_partitions(n)) {
    t.labels.push_back(lambda.to_string());
    t.dims.push_back(static_cast<int>(dim_sym_irrep(lambda)));
    std::vector<Complex> row(G.classes().size());
    for (std::size_t c = 0; c < G.classes().size(); ++c)
      row[c] = Complex(static_cast<double>(character(lambda, class_types[c])), 0);
    t.chars.push_back(std::move(row));
  }
  t.d_max = *std::max_element(t.dims.begin(), t.dims.end());
  return t;
}

CharacterTable wreath_table(const FiniteGroup& G) {
  const int n = G.param();
  const auto perms = all_permutations(n);
  const int f = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < f; ++i) index[perms[i]] = i;
  // decode g -> ((a,b), eps)
  auto decode = [&](int g) {
    const int eps = g / (f * f);
    const int ia = (g % (f * f)) / f;
    const int ib = g % f;
    return std::tuple(ia, ib, eps);
  };
  const auto irreps_n = enumerate_partitions(n);
  auto chi_n = [&](const Partition& p, int elem) {
    return static_cast<double>(character(p, cycle_type_of_permutation(perms[elem])));
  };
  CharacterTable t;
  auto add = [&](const std::string& label, int dim, auto chi) {
    t.labels.push_back(label);
    t.dims.push_back(dim);
    std::vector<Complex> row(G.classes().size());
    for (std::size_t c = 0; c < G.classes().size(); ++c) {
      auto [ia, ib, eps] = decode(G.classes()[c][0]);
      row[c] = Complex(chi(ia, ib, eps), 0);
    }
    t.chars.push_back(std::move(row));
  };
  for (std::size_t i = 0; i < irreps_n.size(); ++i) {
    const Partition& p = irreps_n[i];
    const int dp = static_cast<int>(dim_sym_irrep(p));
    // diagonal pair {p,p}: two extensions of V_p x V_p to the wreath product
    for (int sign : {1, -1}) {
      add(p.to_string() + (sign > 0 ? "+" : "-"), dp * dp,
          [&, sign](int ia, int ib, int eps) {
            if (eps == 0) return chi_n(p, ia) * chi_n(p, ib);
            const int ab = index[compose(perms[ia], perms[ib])];
            return sign * chi_n(p, ab);
          });
    }
    // off-diagonal pairs {p,q}, q != p: induced irrep of dim 2 dp dq
    for (std::size_t j = i + 1; j < irreps_n.size(); ++j) {
      const Partition& q = irreps_n[j];
      const int dq = static_cast<int>(dim_sym_irrep(q));
      add("{" + p.to_string() + "," + q.to_string() + "}", 2 * dp * dq,
          [&](int ia, int ib, int eps) {
            if (eps == 1) return 0.0;
            return chi_n(p, ia) * chi_n(q, ib) + chi_n(p, ib) * chi_n(q, ia);
          });
    }
  }
  t.d_max = *std::max_element(t.dims.begin(), t.dims.end());
  return t;
}

}  // namespace

CharacterTable character_table(const FiniteGroup& G) {
  CharacterTable t;
  switch (G.family()) {
    case Family::Cyclic:
      t = cyclic_table(G);
      break;
    case Family::Dihedral:
      t = dihedral_table(G);
      break;
    case Family::Sym:
      t = sym_table(G);
      break;
    case Family::WreathS2:
      t = wreath_table(G);
      break;
  }
  long long sq = 0;
  for (int d : t.dims) sq += static_cast<long long>(d) * d;
  if (sq != G.order()) throw std::logic_error("character table: sum of dims^2 != |G|");
  return t;
}

Matrix regular_rep(const FiniteGroup& G, Side side, int g) {
  const int n = G.order();
  Matrix M = Matrix::Zero(n, n);
  for (int x = 0; x < n; ++x) {
    const int y = (side == Side::Right) ? G.mult(x, G.inv(g)) : G.mult(g, x);
    M(y, x) = 1.0;
  }
  return M;
}

Matrix isotypic_projector(const FiniteGroup& G, const CharacterTable& table, int sigma) {
  const int n = G.order();
  Matrix P = Matrix::Zero(n, n);
  for (int g = 0; g < n; ++g) {
    const Complex chi = table.chars[sigma][G.class_of(g)];
    P += std::conj(chi) * regular_rep(G, Side::Left, g);
  }
  P *= static_cast<double>(table.dims[sigma]) / n;
  return P;
}

Matrix hidden_subgroup_state(const FiniteGroup& G, const Subgroup& H) {
  const int n = G.order();
  Matrix rho = Matrix::Zero(n, n);
  for (int h : H.elements) rho += regular_rep(G, Side::Right, h);
  rho /= n;
  return rho;
}

double fourier_probability(const FiniteGroup& G, const CharacterTable& table,
                           const Subgroup& H, int sigma) {
  Complex sum = 0;
  for (int h : H.elements) sum += std::conj(table.chars[sigma][G.class_of(h)]);
  return table.dims[sigma] * sum.real() / G.order();
}

}  // namespace schurlab
