#include "syzygy/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "syzygy/algebra.hpp"
#include "syzygy/matrix.hpp"

namespace syz {

namespace {

Exponents unit(int e, int v) {
  Exponents m(static_cast<std::size_t>(e), 0);
  m[v] = 1;
  return m;
}

Exponents add(const Exponents& a, const Exponents& b) {
  Exponents out = a;
  for (std::size_t v = 0; v < out.size(); ++v) out[v] += b[v];
  return out;
}

std::string join(const std::vector<int>& xs, char sep) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? std::string(1, sep) : "") + std::to_string(xs[k]);
  return out;
}

IdealDescription make_ideal(std::uint32_t p, int e, std::vector<Polynomial> gens, std::string name,
                            std::vector<std::string> names = {}) {
  IdealDescription out;
  out.field = FieldSpec(p);
  out.variables = names.empty() ? default_variable_names(e) : std::move(names);
  out.generators = std::move(gens);
  out.metadata.name = std::move(name);
  return out;
}

/// Binomial quadrics z_a z_b - z_c z_d spanning the degree-2 part of the
/// toric ideal of the parametrization.
std::vector<Polynomial> toric_quadrics(const std::vector<Exponents>& param) {
  int e = static_cast<int>(param.size());
  std::map<Exponents, std::vector<Exponents>> fibres;
  for (int a = 0; a < e; ++a)
    for (int b = a; b < e; ++b) fibres[add(param[a], param[b])].push_back(add(unit(e, a), unit(e, b)));
  // Deterministic order: by the lex-largest quadric of each fibre.
  std::vector<std::vector<Exponents>> groups;
  for (auto& [img, qs] : fibres)
    if (qs.size() > 1) {
      std::sort(qs.begin(), qs.end(), std::greater<>());
      groups.push_back(qs);
    }
  std::sort(groups.begin(), groups.end(),
            [](const auto& x, const auto& y) { return x.front() > y.front(); });
  std::vector<Polynomial> out;
  for (const auto& qs : groups)
    for (std::size_t k = 1; k < qs.size(); ++k)
      out.push_back(Polynomial(e, {Term{1, qs[0]}, Term{-1, qs[k]}}));
  return out;
}

}  // namespace

// --- graphs ---------------------------------------------------------------

std::uint32_t edge_mask(const Graph& g) {
  std::uint32_t mask = 0;
  for (auto [a, b] : g.edges) {
    if (a > b) std::swap(a, b);
    int bit = 0;
    for (int x = 0; x < a; ++x) bit += g.vertices - 1 - x;
    bit += b - a - 1;
    mask |= std::uint32_t{1} << bit;
  }
  return mask;
}

Graph graph_from_mask(int vertices, std::uint32_t mask) {
  Graph g{vertices, {}};
  int bit = 0;
  for (int a = 0; a < vertices; ++a)
    for (int b = a + 1; b < vertices; ++b, ++bit)
      if (mask >> bit & 1) g.edges.emplace_back(a, b);
  return g;
}

std::uint32_t canonical_form(const Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.vertices));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = ~std::uint32_t{0};
  do {
    Graph h{g.vertices, {}};
    for (auto [a, b] : g.edges) h.edges.emplace_back(perm[a], perm[b]);
    best = std::min(best, edge_mask(h));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Graph> all_graphs(int vertices) {
  if (vertices < 0 || vertices > 6) throw std::invalid_argument("all_graphs supports at most 6 vertices");
  int pairs = vertices * (vertices - 1) / 2;
  std::set<std::uint32_t> seen;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask)
    seen.insert(canonical_form(graph_from_mask(vertices, mask)));
  std::vector<Graph> out;
  for (auto m : seen) out.push_back(graph_from_mask(vertices, m));
  return out;
}

int independence_number(const Graph& g) {
  int best = 0;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << g.vertices); ++s) {
    bool ok = true;
    for (auto [a, b] : g.edges)
      if ((s >> a & 1) && (s >> b & 1)) ok = false;
    if (ok) best = std::max(best, std::popcount(s));
  }
  return best;
}

CorpusEntry edge_ideal(const Graph& g, std::uint32_t characteristic) {
  if (g.vertices < 1 || g.vertices > 7) throw std::invalid_argument("edge_ideal supports 1..7 vertices");
  std::vector<Polynomial> gens;
  std::vector<int> flat;
  for (auto [a, b] : g.edges) {
    if (a == b || a < 0 || b < 0 || a >= g.vertices || b >= g.vertices)
      throw std::invalid_argument("edge_ideal: bad edge");
    gens.push_back(Polynomial::monomial(add(unit(g.vertices, a), unit(g.vertices, b))));
    flat.push_back(std::min(a, b));
    flat.push_back(std::max(a, b));
  }
  CorpusEntry out;
  out.ideal = make_ideal(characteristic, g.vertices, std::move(gens),
                         "edge_ideal(v=" + std::to_string(g.vertices) + ";" + join(flat, ',') + ")");
  out.ideal.metadata.dim = independence_number(g);
  out.ideal.metadata.koszul = true;
  if (!g.edges.empty())
    out.expected.push_back({ExpectedFact::Kind::t_value, 1, 0, 2, "elementary"});
  return out;
}

// --- toric families -------------------------------------------------------

std::vector<std::size_t> toric_hilbert_function(const std::vector<Exponents>& param, int D) {
  std::vector<std::size_t> out;
  if (param.empty()) return out;
  std::set<Exponents> level{Exponents(param[0].size(), 0)};
  for (int d = 0; d <= D; ++d) {
    out.push_back(level.size());
    std::set<Exponents> next;
    for (const auto& m : level)
      for (const auto& p : param) next.insert(add(m, p));
    level = std::move(next);
  }
  return out;
}

CorpusEntry veronese_presentation(int q, int n, std::uint32_t characteristic, int max_generators) {
  if (q < 1 || n < 1) throw std::invalid_argument("veronese: q and n must be positive");
  int base = q * n;
  std::uint64_t count = binomial(base + q - 1, q);
  if (count > static_cast<std::uint64_t>(max_generators))
    throw std::invalid_argument("veronese(" + std::to_string(q) + "," + std::to_string(n) + ") needs " +
                                std::to_string(count) + " generators, above the limit " +
                                std::to_string(max_generators));
  CorpusEntry out;
  out.parametrization = monomial_basis(base, q);
  int e = static_cast<int>(out.parametrization.size());
  out.ideal = make_ideal(characteristic, e, toric_quadrics(out.parametrization),
                         "veronese(q=" + std::to_string(q) + ",n=" + std::to_string(n) + ")");
  auto& m = out.ideal.metadata;
  m.dim = base;
  m.cohen_macaulay = true;
  m.koszul = true;
  m.regularity = (q - 1) * n;
  out.expected.push_back({ExpectedFact::Kind::regularity, 0, 0, (q - 1) * n, "published"});
  if (!out.ideal.generators.empty())
    out.expected.push_back({ExpectedFact::Kind::t_value, 1, 0, 2, "elementary"});
  return out;
}

CorpusEntry segre_presentation(const std::vector<int>& dims, std::uint32_t characteristic, int max_generators) {
  if (dims.size() < 2) throw std::invalid_argument("segre: need at least two factors");
  long long count = 1;
  int base = 0;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("segre: factor dimensions must be positive");
    count *= d + 1;
    base += d + 1;
  }
  if (count > max_generators)
    throw std::invalid_argument("segre(" + join(dims, ',') + ") needs " + std::to_string(count) +
                                " generators, above the limit " + std::to_string(max_generators));
  // Variables indexed by tuples (a_1..a_s), first factor most significant.
  CorpusEntry out;
  std::vector<int> idx(dims.size(), 0);
  while (true) {
    Exponents m(static_cast<std::size_t>(base), 0);
    int off = 0;
    for (std::size_t f = 0; f < dims.size(); ++f) {
      m[off + idx[f]] = 1;
      off += dims[f] + 1;
    }
    out.parametrization.push_back(m);
    int f = static_cast<int>(dims.size()) - 1;
    while (f >= 0 && idx[f] == dims[f]) idx[f--] = 0;
    if (f < 0) break;
    ++idx[f];
  }
  int e = static_cast<int>(out.parametrization.size());
  out.ideal = make_ideal(characteristic, e, toric_quadrics(out.parametrization), "segre(" + join(dims, ',') + ")");
  auto& meta = out.ideal.metadata;
  meta.dim = std::accumulate(dims.begin(), dims.end(), 0) + 1;
  meta.cohen_macaulay = true;
  meta.koszul = true;
  if (dims == std::vector<int>{1, 1, 1}) {
    // h-vector (1, 4, 1); Gorenstein of codimension 4.
    meta.regularity = 2;
    for (auto [i, j, b] : std::vector<std::tuple<int, int, int>>{
             {0, 0, 1}, {1, 2, 9}, {2, 3, 16}, {3, 4, 9}, {4, 6, 1}})
      out.expected.push_back({ExpectedFact::Kind::betti, i, j, b, "derived"});
    for (int d = 0; d <= 6; ++d)
      out.expected.push_back({ExpectedFact::Kind::hilbert, d, 0, (d + 1) * (d + 1) * (d + 1), "published"});
  }
  if (dims.size() == 2 && (dims[0] == 1 || dims[1] == 1)) meta.regularity = 1;  // rational normal scroll
  if (!out.ideal.generators.empty())
    out.expected.push_back({ExpectedFact::Kind::t_value, 1, 0, 2, "elementary"});
  return out;
}

// --- random families ------------------------------------------------------

CorpusEntry generic_quadrics(int e, int c, std::uint64_t seed, std::uint32_t characteristic) {
  if (characteristic == 0) throw std::invalid_argument("generic_quadrics needs a prime field");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coeff(0, characteristic - 1);
  auto monos = monomial_basis(e, 2);
  std::vector<Polynomial> gens;
  for (int g = 0; g < c; ++g) {
    std::vector<Term> terms;
    for (const auto& m : monos) terms.push_back(Term{mpq_class(coeff(rng)), m});
    gens.emplace_back(e, std::move(terms));
  }
  CorpusEntry out;
  out.ideal = make_ideal(characteristic, e, std::move(gens),
                         "generic_quadrics(e=" + std::to_string(e) + ",c=" + std::to_string(c) + ")");
  out.ideal.metadata.seed = seed;
  out.ideal.metadata.dim = std::max(0, e - c);
  if (c <= e) {
    out.ideal.metadata.cohen_macaulay = true;
    for (int i = 0; i <= c; ++i)
      out.expected.push_back({ExpectedFact::Kind::betti, i, 2 * i, static_cast<long long>(binomial(c, i)), "elementary"});
  } else {
    out.ideal.metadata.cohen_macaulay = true;  // Artinian
  }
  if (c == e + 1) out.expected.push_back({ExpectedFact::Kind::t_value, 2, 0, e / 2 + 2, "published"});
  return out;
}

CorpusEntry apolarity_gorenstein(std::uint64_t seed, std::uint32_t characteristic, int e) {
  if (characteristic == 0 || characteristic == 2)
    throw std::invalid_argument("apolarity_gorenstein needs an odd prime field");
  PrimeField k(characteristic);
  auto cubics = monomial_basis(e, 3);
  auto quads = monomial_basis(e, 2);
  for (int attempt = 0; attempt <= 3; ++attempt) {
    std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    std::mt19937_64 rng(s);
    std::uniform_int_distribution<std::uint32_t> coeff(0, characteristic - 1);
    std::vector<PrimeField::Element> f;
    for (std::size_t m = 0; m < cubics.size(); ++m) f.push_back(coeff(rng));
    // Contraction pairing: x^a o y^b = y^(b-a) when a <= b.
    Matrix<PrimeField> cat(k, static_cast<std::size_t>(e), quads.size());
    for (std::size_t qi = 0; qi < quads.size(); ++qi)
      for (std::size_t ci = 0; ci < cubics.size(); ++ci) {
        Exponents rest = cubics[ci];
        bool divides = true;
        for (int v = 0; v < e; ++v) {
          rest[v] -= quads[qi][v];
          if (rest[v] < 0) divides = false;
        }
        if (!divides) continue;
        std::size_t row = monomial_rank(rest);
        cat(row, qi) = k.add(cat(row, qi), f[ci]);
      }
    auto ker = kernel_basis(cat);
    std::vector<Polynomial> gens;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
      std::vector<Term> terms;
      for (std::size_t qi = 0; qi < quads.size(); ++qi)
        if (!k.is_zero(ker(qi, c))) terms.push_back(Term{k.to_rational(ker(qi, c)), quads[qi]});
      gens.emplace_back(e, std::move(terms));
    }
    QuotientAlgebra<PrimeField> a(k, e, gens);
    auto hf = a.hilbert_function(4);
    std::vector<std::size_t> want{1, static_cast<std::size_t>(e), static_cast<std::size_t>(e), 1, 0};
    if (hf != want) continue;
    CorpusEntry out;
    out.ideal = make_ideal(characteristic, e, std::move(gens), "apolarity_gorenstein(e=" + std::to_string(e) + ")");
    out.ideal.metadata.seed = s;
    out.ideal.metadata.dim = 0;
    out.ideal.metadata.cohen_macaulay = true;
    out.ideal.metadata.koszul = true;
    out.reseeds = attempt;
    for (int d = 0; d <= 4; ++d)
      out.expected.push_back({ExpectedFact::Kind::hilbert, d, 0, static_cast<long long>(want[d]), "published"});
    if (e == 5)
      for (auto [i, j, b] : std::vector<std::tuple<int, int, int>>{
               {0, 0, 1}, {1, 2, 10}, {2, 3, 16}, {3, 5, 16}, {4, 6, 10}, {5, 8, 1}})
        out.expected.push_back({ExpectedFact::Kind::betti, i, j, b, "published"});
    return out;
  }
  throw std::runtime_error("apolarity_gorenstein: no generic cubic found after 3 reseeds from seed " +
                           std::to_string(seed));
}

// --- small fixed families -------------------------------------------------

CorpusEntry complete_intersection_quadrics(int c, int e, std::uint32_t characteristic) {
  if (c < 0 || c > e) throw std::invalid_argument("complete_intersection_quadrics needs 0 <= c <= e");
  std::vector<Polynomial> gens;
  for (int v = 0; v < c; ++v) {
    Exponents m(static_cast<std::size_t>(e), 0);
    m[v] = 2;
    gens.push_back(Polynomial::monomial(m));
  }
  CorpusEntry out;
  out.ideal = make_ideal(characteristic, e, std::move(gens),
                         "complete_intersection(c=" + std::to_string(c) + ",e=" + std::to_string(e) + ")");
  out.ideal.metadata.dim = e - c;
  out.ideal.metadata.cohen_macaulay = true;
  out.ideal.metadata.koszul = true;
  out.ideal.metadata.regularity = c;
  for (int a = 0; a <= c; ++a) {
    out.expected.push_back({ExpectedFact::Kind::t_value, a, 0, 2 * a, "published"});
    out.expected.push_back({ExpectedFact::Kind::betti, a, 2 * a, static_cast<long long>(binomial(c, a)), "elementary"});
  }
  return out;
}

CorpusEntry grassmannian_plucker(int n, std::uint32_t characteristic) {
  if (n != 4 && n != 5) throw std::invalid_argument("grassmannian_plucker supports n = 4, 5");
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      pairs.emplace_back(a, b);
      names.push_back("p" + std::to_string(a + 1) + std::to_string(b + 1));
    }
  int e = static_cast<int>(pairs.size());
  auto var = [&](int a, int b) {
    return static_cast<int>(std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) - pairs.begin());
  };
  auto quad = [&](int u, int v) { return add(unit(e, u), unit(e, v)); };
  std::vector<Polynomial> gens;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
          gens.push_back(Polynomial(e, {Term{1, quad(var(i, j), var(k, l))}, Term{-1, quad(var(i, k), var(j, l))},
                                        Term{1, quad(var(i, l), var(j, k))}}));
  CorpusEntry out;
  out.ideal = make_ideal(characteristic, e, std::move(gens), "grassmannian(2," + std::to_string(n) + ")", names);
  out.ideal.metadata.dim = 2 * n - 3;
  out.ideal.metadata.cohen_macaulay = true;
  out.ideal.metadata.koszul = true;
  out.ideal.metadata.regularity = n - 3;
  out.expected.push_back({ExpectedFact::Kind::t_value, 1, 0, 2, "elementary"});
  return out;
}

CorpusEntry polynomial_ring(int e, std::uint32_t characteristic) {
  CorpusEntry out;
  out.ideal = make_ideal(characteristic, e, {}, "polynomial_ring(e=" + std::to_string(e) + ")");
  out.ideal.metadata.dim = e;
  out.ideal.metadata.cohen_macaulay = true;
  out.ideal.metadata.koszul = true;
  out.ideal.metadata.regularity = 0;
  return out;
}

CorpusEntry power_hypersurface(int e, int d, std::uint32_t characteristic) {
  Exponents m(static_cast<std::size_t>(e), 0);
  m[0] = d;
  CorpusEntry out;
  out.ideal = make_ideal(characteristic, e, {Polynomial::monomial(m)},
                         "power_hypersurface(e=" + std::to_string(e) + ",d=" + std::to_string(d) + ")");
  out.ideal.metadata.dim = e - 1;
  out.ideal.metadata.cohen_macaulay = true;
  out.ideal.metadata.koszul = d <= 2;
  out.ideal.metadata.regularity = d - 1;
  out.expected.push_back({ExpectedFact::Kind::t_value, 1, 0, d, "elementary"});
  return out;
}

std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> out;
  out.push_back(polynomial_ring(3));
  out.push_back(power_hypersurface(2, 2));
  out.push_back(power_hypersurface(2, 3));
  out.push_back(complete_intersection_quadrics(1, 2));
  out.push_back(complete_intersection_quadrics(2, 2));
  out.push_back(complete_intersection_quadrics(3, 3));
  out.push_back(edge_ideal(Graph{3, {{0, 1}, {1, 2}}}));
  out.push_back(edge_ideal(Graph{3, {{0, 1}, {0, 2}, {1, 2}}}));
  out.push_back(edge_ideal(Graph{4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}}));
  out.push_back(edge_ideal(Graph{5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}}));
  out.push_back(generic_quadrics(3, 2, 1));
  out.push_back(generic_quadrics(4, 5, 1));
  out.push_back(apolarity_gorenstein(1));
  out.push_back(veronese_presentation(2, 1));
  out.push_back(veronese_presentation(2, 2));
  out.push_back(segre_presentation({1, 1}));
  out.push_back(segre_presentation({2, 1}));
  out.push_back(segre_presentation({1, 1, 1}, kGenericPrime));
  out.push_back(grassmannian_plucker(4));
  out.push_back(grassmannian_plucker(5));
  return out;
}

CorpusEntry generate_family(const std::string& family, const std::vector<int>& params, std::uint64_t seed,
                            std::optional<std::uint32_t> characteristic) {
  auto need = [&](std::size_t n) {
    if (params.size() < n)
      throw std::invalid_argument("family " + family + " needs " + std::to_string(n) + " parameters");
  };
  std::uint32_t p0 = characteristic.value_or(0);
  std::uint32_t pg = characteristic.value_or(kGenericPrime);
  if (family == "edge") {
    need(1);
    if (params.size() % 2 != 1) throw std::invalid_argument("edge: expected vertex count then edge pairs");
    Graph g{params[0], {}};
    for (std::size_t k = 1; k + 1 < params.size(); k += 2) g.edges.emplace_back(params[k], params[k + 1]);
    return edge_ideal(g, p0);
  }
  if (family == "veronese") {
    need(2);
    return veronese_presentation(params[0], params[1], p0);
  }
  if (family == "segre") {
    need(2);
    return segre_presentation(params, p0);
  }
  if (family == "generic") {
    need(2);
    return generic_quadrics(params[0], params[1], seed, pg);
  }
  if (family == "gorenstein") return apolarity_gorenstein(seed, pg, params.empty() ? 5 : params[0]);
  if (family == "ci") {
    need(2);
    return complete_intersection_quadrics(params[0], params[1], p0);
  }
  if (family == "grassmannian") {
    need(1);
    return grassmannian_plucker(params[0], p0);
  }
  if (family == "polynomial") {
    need(1);
    return polynomial_ring(params[0], p0);
  }
  if (family == "power") {
    need(2);
    return power_hypersurface(params[0], params[1], p0);
  }
  throw std::invalid_argument("unknown family \"" + family + "\"");
}

}  // namespace syz
