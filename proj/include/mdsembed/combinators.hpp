// combinators.hpp -- code-building combinators: the McNeish product, the
// generalized Cartesian product, dimension extension for distance-2 MDS
// codes, and the switching calculus (replace an MDS subcode, force a chosen
// point in).
//
// Products land on the flattened alphabet: a pair (x, y) of an outer symbol
// of order q1 and an inner symbol of order q2 becomes q2*index(x) + index(y),
// indices taken in each code's own per-coordinate alphabet.

#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "mdsembed/code.hpp"

namespace mdsembed {

struct Subcube {
    std::vector<std::vector<Symbol>> sets;  // per coordinate, sorted unique

    bool contains(const Word& w) const {
        if (w.size() != sets.size()) return false;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (!alphabet_has(sets[i], w[i])) return false;
        return true;
    }
};

inline Subcube make_subcube(std::vector<std::vector<Symbol>> sets) {
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty()) throw std::invalid_argument("make_subcube: empty coordinate set");
    }
    return Subcube{std::move(sets)};
}

/// Per-coordinate symbols used by the words of c.
inline Subcube spanning_subcube(const ExplicitCode& c) {
    std::vector<std::vector<Symbol>> sets(static_cast<std::size_t>(c.dim));
    for (const auto& w : c.words)
        for (std::size_t i = 0; i < w.size(); ++i) sets[i].push_back(w[i]);
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty()) throw std::invalid_argument("spanning_subcube: empty code");
    }
    return Subcube{std::move(sets)};
}

/// C ∩ subcube, re-homed on the subcube's alphabets.
inline ExplicitCode intersect_subcube(const ExplicitCode& c, const Subcube& sub) {
    if (sub.sets.size() != static_cast<std::size_t>(c.dim))
        throw std::invalid_argument("intersect_subcube: dimension mismatch");
    std::vector<Word> words;
    for (const auto& w : c.words)
        if (sub.contains(w)) words.push_back(w);
    return make_code(c.dim, sub.sets, std::move(words));
}

inline Symbol pair_flatten(std::size_t q2, std::size_t outer_index, std::size_t inner_index) {
    return static_cast<Symbol>(q2 * outer_index + inner_index);
}

inline std::pair<std::size_t, std::size_t> pair_split(std::size_t q2, Symbol s) {
    auto u = static_cast<std::size_t>(s);
    return {u / q2, u % q2};
}

/// Generalized Cartesian product: the inner code may vary with the outer
/// word's symbol at key_coord.  All inner codes must share one order q2;
/// the result is MDS(t, d, q1*q2) on the canonical flattened alphabet.
inline ExplicitCode generalized_product(const ExplicitCode& outer, int key_coord,
                                        const std::map<Symbol, ExplicitCode>& inner, int t) {
    if (key_coord < 0 || key_coord >= outer.dim) throw std::invalid_argument("generalized_product: bad key coordinate");
    auto q1 = outer.uniform_order();
    if (!q1) throw std::invalid_argument("generalized_product: outer code has non-uniform alphabets");
    if (!is_mds(outer, t)) throw std::invalid_argument("generalized_product: outer code is not MDS");
    std::optional<std::size_t> q2;
    for (const auto& [key, code] : inner) {
        if (code.dim != outer.dim) throw std::invalid_argument("generalized_product: dimension mismatch");
        auto q = code.uniform_order();
        if (!q) throw std::invalid_argument("generalized_product: inner code has non-uniform alphabets");
        if (q2 && *q2 != *q) throw std::invalid_argument("generalized_product: inner codes disagree on order");
        q2 = q;
        if (!is_mds(code, t))
            throw std::invalid_argument("generalized_product: inner code for key " + std::to_string(key) +
                                        " is not MDS");
    }
    if (!q2) throw std::invalid_argument("generalized_product: no inner codes");

    std::vector<Word> words;
    for (const auto& x : outer.words) {
        auto it = inner.find(x[static_cast<std::size_t>(key_coord)]);
        if (it == inner.end())
            throw std::invalid_argument("generalized_product: no inner code for key symbol " +
                                        std::to_string(x[static_cast<std::size_t>(key_coord)]));
        const ExplicitCode& u = it->second;
        for (const auto& y : u.words) {
            Word w(static_cast<std::size_t>(outer.dim));
            for (int i = 0; i < outer.dim; ++i) {
                auto oi = alphabet_index(outer.alphabets[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(i)]);
                auto ii = alphabet_index(u.alphabets[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(i)]);
                w[static_cast<std::size_t>(i)] = pair_flatten(*q2, oi, ii);
            }
            words.push_back(std::move(w));
        }
    }
    return make_canonical_code(outer.dim, *q1 * *q2, std::move(words));
}

/// McNeish product: the inner code does not depend on the outer word.
inline ExplicitCode mcneish_product(const ExplicitCode& m1, const ExplicitCode& m2, int t) {
    if (m1.dim != m2.dim) throw std::invalid_argument("mcneish_product: dimension mismatch");
    std::map<Symbol, ExplicitCode> inner;
    auto q1 = m1.uniform_order();
    if (!q1) throw std::invalid_argument("mcneish_product: non-uniform alphabets");
    for (Symbol s : m1.alphabets[0]) inner.emplace(s, m2);  // keyed on coordinate 0, constant map
    return generalized_product(m1, 0, inner, t);
}

/// Prop.-3 style extension: a distance-2 MDS code over the canonical cube
/// {0..q-1}^d grows one coordinate, the new last coordinate selecting a
/// cyclic shift of the old last coordinate.  The retract at new value a0 is
/// the input code itself.
inline ExplicitCode extend_dimension(const ExplicitCode& m, Symbol a0) {
    auto q_opt = m.uniform_order();
    if (!q_opt) throw std::invalid_argument("extend_dimension: non-uniform alphabets");
    const auto q = static_cast<Symbol>(*q_opt);
    if (!m.canonical(*q_opt))
        throw std::invalid_argument("extend_dimension: symbols must be the canonical range 0..q-1");
    if (a0 < 0 || a0 >= q) throw std::invalid_argument("extend_dimension: shift anchor out of range");
    if (!is_mds(m, 1)) throw std::invalid_argument("extend_dimension: input is not MDS with t = 1");
    std::vector<Word> words;
    words.reserve(m.size() * *q_opt);
    for (Symbol a = 0; a < q; ++a) {
        for (const auto& w : m.words) {
            Word e = w;
            e[static_cast<std::size_t>(m.dim - 1)] = (w[static_cast<std::size_t>(m.dim - 1)] + a - a0 + q) % q;
            e.push_back(a);
            words.push_back(std::move(e));
        }
    }
    return make_canonical_code(m.dim + 1, *q_opt, std::move(words));
}

/// Verified switching: C1 must be exactly C ∩ subcube and MDS on it; C2 must
/// be MDS on the same subcube with the same distance.  Returns (C \ C1) ∪ C2.
inline ExplicitCode switch_subcode(const ExplicitCode& c, const ExplicitCode& c1, const ExplicitCode& c2, int t) {
    if (c1.dim != c.dim || c2.dim != c.dim) throw std::invalid_argument("switch_subcode: dimension mismatch");
    if (c1.words.empty()) throw std::invalid_argument("switch_subcode: empty subcode");
    for (const auto& w : c1.words)
        if (!c.contains(w)) throw std::invalid_argument("switch_subcode: C1 word " + word_str(w) + " not in C");
    Subcube sub = spanning_subcube(c1);
    ExplicitCode inter = intersect_subcube(c, sub);
    if (inter.words != c1.words)
        throw std::invalid_argument("switch_subcode: C1 is not the full intersection of C with its subcube");
    ExplicitCode c1_on_sub = make_code(c.dim, sub.sets, c1.words);
    if (!is_mds(c1_on_sub, t)) throw std::invalid_argument("switch_subcode: C1 is not an MDS subcode");
    ExplicitCode c2_on_sub = make_code(c.dim, sub.sets, c2.words);  // throws if C2 leaves the subcube
    if (!is_mds(c2_on_sub, t)) throw std::invalid_argument("switch_subcode: C2 is not MDS on the subcube");

    std::vector<Word> words;
    words.reserve(c.size() - c1.size() + c2.size());
    for (const auto& w : c.words)
        if (!c1.contains(w)) words.push_back(w);
    for (const auto& w : c2.words) words.push_back(w);
    return make_code(c.dim, c.alphabets, std::move(words), c.declared_distance);
}

/// Relabel one coordinate of a code's words by an arbitrary symbol map
/// (symbols without an entry pass through).
inline ExplicitCode permute_coordinate_symbols(const ExplicitCode& c, int coord, const std::map<Symbol, Symbol>& perm) {
    if (coord < 0 || coord >= c.dim) throw std::invalid_argument("permute_coordinate_symbols: bad coordinate");
    std::vector<Word> words = c.words;
    for (auto& w : words) {
        auto it = perm.find(w[static_cast<std::size_t>(coord)]);
        if (it != perm.end()) w[static_cast<std::size_t>(coord)] = it->second;
    }
    return make_code(c.dim, c.alphabets, std::move(words), c.declared_distance);
}

/// Cor.-6 made constructive for distance 2: find the unique v in C1 = C ∩ sub
/// agreeing with u off the last coordinate, transpose the two last-coordinate
/// symbols u_d and v_d inside C1, and switch.  The result contains u.
inline ExplicitCode force_point_latin(const ExplicitCode& c, const Subcube& sub, const Word& u) {
    if (!sub.contains(u)) throw std::invalid_argument("force_point_latin: target " + word_str(u) + " outside subcube");
    if (!is_mds(c, 1)) throw std::invalid_argument("force_point_latin: C is not MDS with t = 1");
    ExplicitCode c1 = intersect_subcube(c, sub);
    if (!is_mds(c1, 1)) throw std::invalid_argument("force_point_latin: C ∩ subcube is not an MDS subcode");

    const auto last = static_cast<std::size_t>(c.dim - 1);
    const Word* v = nullptr;
    for (const auto& w : c1.words) {
        bool agrees = true;
        for (std::size_t i = 0; i < last; ++i) agrees = agrees && w[i] == u[i];
        if (agrees) {
            if (v) throw std::logic_error("force_point_latin: line meets the subcode twice");
            v = &w;
        }
    }
    if (!v) throw std::logic_error("force_point_latin: line misses the subcode");
    if ((*v)[last] == u[last]) return c;  // u already present

    std::map<Symbol, Symbol> transposition{{u[last], (*v)[last]}, {(*v)[last], u[last]}};
    ExplicitCode c1_named = make_code(c.dim, c.alphabets, c1.words);
    ExplicitCode c2 = permute_coordinate_symbols(c1_named, c.dim - 1, transposition);
    return switch_subcode(c, c1_named, c2, 1);
}

}  // namespace mdsembed
