#pragma once

#include <map>
#include <string>
#include <vector>

#include "c5/graph.hpp"
#include "c5/linalg.hpp"
#include "c5/rational.hpp"

namespace c5 {

// A type is a fully labeled triangle-free graph; distinct labelings are
// distinct types.
struct Type {
    Graph sigma;
    int k() const { return sigma.n; }
};

// A flag: a triangle-free graph with an ordered tuple of distinct root
// vertices. The induced labeled graph on the roots is its type.
struct Flag {
    Graph graph;
    std::vector<int> roots;
};

// Labeled graph induced on the tuple, in tuple order.
Graph tuple_pattern(const Graph& g, const std::vector<int>& tuple);
Graph type_of(const Flag& f);

// All labeled triangle-free graphs on k vertices, each exactly once.
std::vector<Type> enumerate_types(int k);

// One canonically labeled representative per isomorphism class.
std::vector<Type> representative_types(int k);

// Sorted canonical representatives of all triangle-free isomorphism
// classes on n vertices (the index set of level-n expansions).
std::vector<Graph> flag_universe(int n);
std::vector<std::string> flag_universe_g6(int n);

// One representative per flag-isomorphism class of triangle-free flags on
// m vertices with type t, sorted by canonical flag encoding.
std::vector<Flag> enumerate_flags(const Type& t, int m);

// Map from each F in the level's universe to a rational coefficient.
struct DensityVector {
    int level = 0;
    std::map<std::string, Rational> entries;  // canonical g6 -> value

    const Rational& at(const std::string& g6) const { return entries.at(g6); }
};

// c_F = (number of |H|-subsets of F inducing H) / C(level, |H|), so that
// d(H) = sum_F c_F d(F) in every graphon.
DensityVector expansion_coefficients(const Graph& h, int level);

// Probability that a uniformly random ordered split of V(F) minus theta
// into parts of sizes |f1|-k, |f2|-k induces f1 and f2 as flags rooted at
// theta. f1 and f2 must share a type and theta must induce it in F.
Rational pair_density(const Flag& f1, const Flag& f2, const Graph& f,
                      const std::vector<int>& theta);

struct FlagBasis {
    Type type;
    std::vector<Flag> flags;
};

// Entry (i,j) is the average over all injective k-tuples theta of V(f) of
// pair_density(flags[i], flags[j], f, theta), where tuples not inducing
// the type contribute zero. This is the level-|f| expansion weight of the
// unlabeled product d(flags[i]) d(flags[j]).
QMatrix pair_average_matrix(const FlagBasis& basis, const Graph& f);

// Level-l expansion of the unlabeled square term [[x^T M x]]: entry for F
// is sum_{i,j} M[i][j] * pair_average_matrix(basis, F)[i][j]. Requires all
// flags of size (l + k)/2 with l = k (mod 2).
DensityVector sos_coefficients(const FlagBasis& basis, const QMatrix& m, int level);

}  // namespace c5
