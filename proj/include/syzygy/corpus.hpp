#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syzygy/ideal.hpp"

namespace syz {

/// An invariant value the construction is known to have. `source` is one of
/// "published" (stated in the literature for this family), "elementary"
/// (immediate from the construction) or "derived" (checked by hand or by an
/// independent computation).
struct ExpectedFact {
  enum class Kind { betti, t_value, hilbert, regularity };
  Kind kind;
  int i = 0;  // homological degree, or degree for hilbert
  int j = 0;  // internal degree for betti
  long long value = 0;
  std::string source;
};

struct CorpusEntry {
  IdealDescription ideal;
  std::vector<ExpectedFact> expected;
  /// For toric families: variable v maps to the monomial parametrization[v].
  std::vector<Exponents> parametrization;
  int reseeds = 0;
};

struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based, first < second
};

/// Edge bitmask over pairs (a<b) in the order (0,1),(0,2),..,(1,2),...
std::uint32_t edge_mask(const Graph& g);
Graph graph_from_mask(int vertices, std::uint32_t mask);
/// Smallest edge mask over all vertex relabelings.
std::uint32_t canonical_form(const Graph& g);
/// One representative per isomorphism class, v <= 6, ordered by canonical mask.
std::vector<Graph> all_graphs(int vertices);
int independence_number(const Graph& g);

CorpusEntry edge_ideal(const Graph& g, std::uint32_t characteristic = 0);
CorpusEntry veronese_presentation(int q, int n, std::uint32_t characteristic = 0,
                                  int max_generators = 15);
CorpusEntry segre_presentation(const std::vector<int>& dims, std::uint32_t characteristic = 0,
                               int max_generators = 12);
CorpusEntry generic_quadrics(int e, int c, std::uint64_t seed,
                             std::uint32_t characteristic = kGenericPrime);
/// Artinian Gorenstein algebra with h-vector (1, e, e, 1): the quadrics of the
/// annihilator of a random cubic form. Reseeds (seed+1, ...) up to 3 times when
/// the Hilbert function comes out wrong.
CorpusEntry apolarity_gorenstein(std::uint64_t seed, std::uint32_t characteristic = kGenericPrime,
                                 int e = 5);
CorpusEntry complete_intersection_quadrics(int c, int e, std::uint32_t characteristic = 0);
/// Plucker relations of G(2, n), n in {4, 5}.
CorpusEntry grassmannian_plucker(int n, std::uint32_t characteristic = 0);
CorpusEntry polynomial_ring(int e, std::uint32_t characteristic = 0);
/// k[x_1..x_e]/(x_1^d).
CorpusEntry power_hypersurface(int e, int d, std::uint32_t characteristic = 0);

/// Hilbert function of the toric algebra spanned by the monomials: number of
/// distinct products of d of them.
std::vector<std::size_t> toric_hilbert_function(const std::vector<Exponents>& parametrization, int D);

/// The built-in corpus used by the audit suite.
std::vector<CorpusEntry> builtin_corpus();

/// Family dispatcher for the command line: "edge", "veronese", "segre",
/// "generic", "gorenstein", "ci", "grassmannian", "polynomial", "power".
CorpusEntry generate_family(const std::string& family, const std::vector<int>& params,
                            std::uint64_t seed, std::optional<std::uint32_t> characteristic);

}  // namespace syz
