#include "alcove/crystal.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace alcove {

std::optional<int> CrystalGraph::lower(int b, int p) const {
    auto it = f_edges.find({b, p});
    if (it == f_edges.end()) return std::nullopt;
    return it->second;
}

std::optional<int> CrystalGraph::raise(int b, int p) const {
    auto it = e_edges.find({b, p});
    if (it == e_edges.end()) return std::nullopt;
    return it->second;
}

int CrystalGraph::eps(int b, int p) const {
    int k = 0;
    for (auto cur = raise(b, p); cur; cur = raise(*cur, p)) {
        b = *cur;
        ++k;
    }
    return k;
}

int CrystalGraph::phi(int b, int p) const {
    int k = 0;
    for (auto cur = lower(b, p); cur; cur = lower(*cur, p)) {
        b = *cur;
        ++k;
    }
    return k;
}

int CrystalGraph::raise_max(int b, int p) const {
    for (auto cur = raise(b, p); cur; cur = raise(b, p)) b = *cur;
    return b;
}

CrystalGraph generate_crystal(const Element& seed, const CrystalOracle& ops) {
    CrystalGraph g;
    g.n = ops.n;
    for (int p = 1; p < ops.n; ++p)
        if (ops.raise(seed, p))
            throw std::runtime_error("axiom: seed is not highest weight (color " +
                                     std::to_string(p) + ")");
    g.elements.push_back(seed);
    g.weights.push_back(normalize_weight(ops.weight(seed)));
    g.index[seed] = 0;
    g.highest = 0;

    std::deque<int> queue{0};
    while (!queue.empty()) {
        int b = queue.front();
        queue.pop_front();
        const Element elem = g.elements[b];
        for (int p = 1; p < ops.n; ++p) {
            auto down = ops.lower(elem, p);
            if (!down) continue;
            auto back = ops.raise(*down, p);
            if (!back || *back != elem)
                throw std::runtime_error("axiom (1): E~_" + std::to_string(p) +
                                         " does not invert F~ at " + elem);
            int target;
            auto it = g.index.find(*down);
            if (it == g.index.end()) {
                target = static_cast<int>(g.elements.size());
                g.elements.push_back(*down);
                g.weights.push_back(normalize_weight(ops.weight(*down)));
                g.index[*down] = target;
                queue.push_back(target);
            } else {
                target = it->second;
            }
            Weight expected = normalize_weight(
                sub(ops.weight(elem), root_vector(ops.n, Root{p, p + 1})));
            if (g.weights[target] != expected)
                throw std::runtime_error("axiom (2): weight not decremented by alpha_" +
                                         std::to_string(p) + " at " + elem);
            g.f_edges[{b, p}] = target;
            g.e_edges[{target, p}] = b;
        }
    }

    auto report = verify_crystal_axioms(g);
    if (!report.ok())
        throw std::runtime_error("axiom: " + report.items.front().axiom + " at " +
                                 report.items.front().witness);
    return g;
}

AxiomReport verify_crystal_axioms(const CrystalGraph& g) {
    AxiomReport rep;
    // axiom (1): f_edges and e_edges are mutually inverse partial bijections
    for (const auto& [key, to] : g.f_edges) {
        auto it = g.e_edges.find({to, key.second});
        if (it == g.e_edges.end() || it->second != key.first)
            rep.items.push_back({"axiom (1): F/E not mutually inverse",
                                 g.elements[key.first], key.second});
    }
    for (const auto& [key, to] : g.e_edges) {
        auto it = g.f_edges.find({to, key.second});
        if (it == g.f_edges.end() || it->second != key.first)
            rep.items.push_back({"axiom (1): E/F not mutually inverse",
                                 g.elements[key.first], key.second});
    }
    // axiom (2): weights decrement along F-edges
    for (const auto& [key, to] : g.f_edges) {
        Weight expected = normalize_weight(
            sub(g.weights[key.first], root_vector(g.n, Root{key.second, key.second + 1})));
        if (g.weights[to] != expected)
            rep.items.push_back({"axiom (2): weight mismatch along F-edge",
                                 g.elements[key.first], key.second});
    }
    // axiom (3): phi = eps + (wt, alpha_p)
    for (int b = 0; b < static_cast<int>(g.elements.size()); ++b)
        for (int p = 1; p < g.n; ++p)
            if (g.phi(b, p) != g.eps(b, p) + pairing(g.weights[b], Root{p, p + 1}))
                rep.items.push_back({"axiom (3): phi != eps + (wt, alpha)",
                                     g.elements[b], p});
    // unique highest-weight element, everything reachable from it
    int highest_count = 0;
    for (int b = 0; b < static_cast<int>(g.elements.size()); ++b) {
        bool top = true;
        for (int p = 1; p < g.n; ++p)
            if (g.raise(b, p)) top = false;
        if (top) ++highest_count;
    }
    if (highest_count != 1)
        rep.items.push_back({"highest weight element not unique",
                             g.elements.empty() ? Element{} : g.elements[0], 0});
    return rep;
}

StringDatum string_datum(const CrystalGraph& g, int b, const Word& word) {
    StringDatum s;
    s.n = g.n;
    s.d.reserve(word.size());
    int cur = b;
    for (int p : word) {
        s.d.push_back(g.eps(cur, p));
        cur = g.raise_max(cur, p);
    }
    return s;
}

std::optional<int> element_from_string_datum(const CrystalGraph& g, const Word& word,
                                             const StringDatum& d) {
    int cur = g.highest;
    for (int k = static_cast<int>(word.size()) - 1; k >= 0; --k) {
        for (int step = 0; step < d.d[k]; ++step) {
            auto next = g.lower(cur, word[k]);
            if (!next) return std::nullopt;
            cur = *next;
        }
    }
    if (string_datum(g, cur, word).d != d.d) return std::nullopt;
    return cur;
}

std::vector<int> unique_isomorphism(const CrystalGraph& g1, const CrystalGraph& g2) {
    if (g1.n != g2.n || g1.elements.size() != g2.elements.size())
        throw std::runtime_error("not isomorphic");
    const Word word = iA_word(g1.n);
    std::map<std::vector<int>, int> by_string;
    for (int b = 0; b < static_cast<int>(g2.elements.size()); ++b)
        by_string[string_datum(g2, b, word).d] = b;
    std::vector<int> out(g1.elements.size());
    for (int b = 0; b < static_cast<int>(g1.elements.size()); ++b) {
        auto it = by_string.find(string_datum(g1, b, word).d);
        if (it == by_string.end()) throw std::runtime_error("not isomorphic");
        out[b] = it->second;
        if (!weights_equal(g1.weights[b], g2.weights[it->second]))
            throw std::runtime_error("not isomorphic");
    }
    return out;
}

std::vector<Weight> character(const CrystalGraph& g) {
    std::vector<Weight> ws = g.weights;
    std::sort(ws.begin(), ws.end());
    return ws;
}

std::string to_dot(const CrystalGraph& g) {
    std::ostringstream os;
    os << "digraph crystal {\n";
    for (const auto& e : g.elements) os << "  \"" << e << "\";\n";
    for (const auto& [key, to] : g.f_edges)
        os << "  \"" << g.elements[key.first] << "\" -> \"" << g.elements[to]
           << "\" [label=\"" << key.second << "\"];\n";
    os << "}\n";
    os << "// nodes=" << g.elements.size() << " edges=" << g.num_edges() << "\n";
    return os.str();
}

std::string to_json(const CrystalGraph& g) {
    nlohmann::ordered_json j;
    const Word word = iA_word(g.n);
    j["elements"] = nlohmann::ordered_json::array();
    for (int b = 0; b < static_cast<int>(g.elements.size()); ++b) {
        nlohmann::ordered_json el;
        el["id"] = g.elements[b];
        el["weight"] = g.weights[b];
        el["string_datum"] = string_datum(g, b, word).d;
        j["elements"].push_back(el);
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [key, to] : g.f_edges) {
        nlohmann::ordered_json e;
        e["from"] = g.elements[key.first];
        e["to"] = g.elements[to];
        e["color"] = key.second;
        j["edges"].push_back(e);
    }
    return j.dump(2);
}

}  // namespace alcove
