#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "alcove/root_system.hpp"

namespace alcove {

/// Opaque element handle: the canonical serialized form of a model element.
using Element = std::string;

/// Operator oracle for one realization of a highest-weight crystal.
/// lower = F~_p, raise = E~_p; colors p run over 1..n-1.
struct CrystalOracle {
    int n = 0;
    std::function<Weight(const Element&)> weight;
    std::function<std::optional<Element>(const Element&, int)> lower;
    std::function<std::optional<Element>(const Element&, int)> raise;
};

/// Finite crystal graph.  Elements are stored in BFS discovery order with
/// colors visited in increasing order, so the layout is deterministic;
/// element 0 is the highest-weight element.
struct CrystalGraph {
    int n = 0;
    std::vector<Element> elements;
    std::vector<Weight> weights;  // normalized (last coordinate 0)
    std::map<std::pair<int, int>, int> f_edges;  // (element, color) -> element
    std::map<std::pair<int, int>, int> e_edges;
    std::unordered_map<Element, int> index;
    int highest = 0;

    std::optional<int> lower(int b, int p) const;
    std::optional<int> raise(int b, int p) const;
    int eps(int b, int p) const;   // counts E~_p-steps by walking edges
    int phi(int b, int p) const;   // counts F~_p-steps by walking edges
    int raise_max(int b, int p) const;
    size_t num_edges() const { return f_edges.size(); }
};

/// N-tuple of string data, indexed flat and by pairs via the i_A order.
struct StringDatum {
    int n = 0;
    std::vector<int> d;

    int at(Root gamma) const { return d.at(iA_index(n, gamma)); }
    int at(int i, int j) const { return at(Root{i, j}); }
    auto operator<=>(const StringDatum&) const = default;
};

/// BFS closure of the seed under all F~_p.  The seed must be highest weight
/// (all raises undefined).  Throws std::runtime_error naming the violated
/// crystal axiom if the oracle is inconsistent.
CrystalGraph generate_crystal(const Element& seed, const CrystalOracle& ops);

StringDatum string_datum(const CrystalGraph& g, int b, const Word& word);

/// The unique element with the given string datum, or nullopt.
std::optional<int> element_from_string_datum(const CrystalGraph& g, const Word& word,
                                             const StringDatum& d);

struct AxiomViolation {
    std::string axiom;
    Element witness;
    int color = 0;
};

struct AxiomReport {
    std::vector<AxiomViolation> items;
    bool ok() const { return items.empty(); }
};

AxiomReport verify_crystal_axioms(const CrystalGraph& g);

/// The unique crystal isomorphism g1 -> g2 as an index map, matched via
/// i_A-string data.  Throws std::runtime_error("not isomorphic") on mismatch.
std::vector<int> unique_isomorphism(const CrystalGraph& g1, const CrystalGraph& g2);

/// Sorted multiset of normalized weights.
std::vector<Weight> character(const CrystalGraph& g);

std::string to_dot(const CrystalGraph& g);
std::string to_json(const CrystalGraph& g);

}  // namespace alcove
