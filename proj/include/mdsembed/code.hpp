// code.hpp -- words, explicit codes, the Hamming metric, retracts and
// projections, and the brute-force MDS verifier that everything else in the
// library is tested against.
//
// An MDS(t,d,q) code meets every t-dimensional axis-aligned plane exactly
// once; equivalently it is a distance-(t+1) code attaining the Singleton
// bound |C| = q^(d-t).  Symbols are opaque integers scoped per coordinate;
// uniform alphabet size is only required where the MDS definition needs it.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdsembed/rng.hpp"

namespace mdsembed {

using Symbol = std::int64_t;
using Word = std::vector<Symbol>;

inline std::string word_str(const Word& w) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ")";
    return os.str();
}

/// Number of coordinates where x and y differ.
inline int hamming_distance(const Word& x, const Word& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("hamming_distance: length mismatch " + std::to_string(x.size()) + " vs " +
                                    std::to_string(y.size()));
    int d = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) ++d;
    return d;
}

struct ExplicitCode {
    int dim = 0;                                  // word length d
    std::vector<std::vector<Symbol>> alphabets;   // per coordinate, sorted unique
    std::vector<Word> words;                      // sorted lexicographically, unique
    std::optional<int> declared_distance;

    bool contains(const Word& w) const { return std::binary_search(words.begin(), words.end(), w); }

    std::size_t size() const { return words.size(); }

    /// Alphabet size q when all coordinates agree, otherwise nullopt.
    std::optional<std::size_t> uniform_order() const {
        if (alphabets.empty()) return std::nullopt;
        std::size_t q = alphabets[0].size();
        for (const auto& a : alphabets)
            if (a.size() != q) return std::nullopt;
        return q;
    }

    /// True when every alphabet is exactly {0,...,q-1}.
    bool canonical(std::size_t q) const {
        for (const auto& a : alphabets) {
            if (a.size() != q) return false;
            for (std::size_t s = 0; s < q; ++s)
                if (a[s] != static_cast<Symbol>(s)) return false;
        }
        return true;
    }

    bool operator==(const ExplicitCode&) const = default;
};

inline bool alphabet_has(const std::vector<Symbol>& alphabet, Symbol s) {
    return std::binary_search(alphabet.begin(), alphabet.end(), s);
}

/// Position of s in a sorted alphabet; throws if absent.
inline std::size_t alphabet_index(const std::vector<Symbol>& alphabet, Symbol s) {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), s);
    if (it == alphabet.end() || *it != s)
        throw std::invalid_argument("symbol " + std::to_string(s) + " not in alphabet");
    return static_cast<std::size_t>(it - alphabet.begin());
}

/// Validating constructor: canonicalizes alphabets and word order, rejects
/// duplicate words, out-of-alphabet symbols, and a declared distance the
/// word set does not meet.
inline ExplicitCode make_code(int dim, std::vector<std::vector<Symbol>> alphabets, std::vector<Word> words,
                              std::optional<int> declared_distance = std::nullopt) {
    if (dim < 1) throw std::invalid_argument("make_code: dimension must be >= 1");
    if (alphabets.size() != static_cast<std::size_t>(dim))
        throw std::invalid_argument("make_code: expected " + std::to_string(dim) + " alphabets, got " +
                                    std::to_string(alphabets.size()));
    for (auto& a : alphabets) {
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw std::invalid_argument("make_code: duplicate symbol in alphabet");
    }
    for (const auto& w : words) {
        if (w.size() != static_cast<std::size_t>(dim))
            throw std::invalid_argument("make_code: word " + word_str(w) + " has length " + std::to_string(w.size()) +
                                        ", expected " + std::to_string(dim));
        for (int i = 0; i < dim; ++i)
            if (!alphabet_has(alphabets[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i)]))
                throw std::invalid_argument("make_code: word " + word_str(w) + " has out-of-alphabet symbol at coordinate " +
                                            std::to_string(i));
    }
    std::sort(words.begin(), words.end());
    if (std::adjacent_find(words.begin(), words.end()) != words.end())
        throw std::invalid_argument("make_code: duplicate word");
    if (declared_distance) {
        if (*declared_distance < 1) throw std::invalid_argument("make_code: declared distance must be positive");
        for (std::size_t i = 0; i < words.size(); ++i)
            for (std::size_t j = i + 1; j < words.size(); ++j)
                if (hamming_distance(words[i], words[j]) < *declared_distance)
                    throw std::invalid_argument("make_code: words " + word_str(words[i]) + " and " + word_str(words[j]) +
                                                " violate declared distance " + std::to_string(*declared_distance));
    }
    return ExplicitCode{dim, std::move(alphabets), std::move(words), declared_distance};
}

/// Code over the canonical cube {0..q-1}^d.
inline ExplicitCode make_canonical_code(int dim, std::size_t q, std::vector<Word> words,
                                        std::optional<int> declared_distance = std::nullopt) {
    std::vector<Symbol> a(q);
    for (std::size_t s = 0; s < q; ++s) a[s] = static_cast<Symbol>(s);
    return make_code(dim, std::vector<std::vector<Symbol>>(static_cast<std::size_t>(dim), a), std::move(words),
                     declared_distance);
}

/// Minimum pairwise Hamming distance; requires at least two words.
inline int code_distance(const ExplicitCode& c) {
    if (c.size() < 2) throw std::domain_error("code_distance: undefined for fewer than 2 words");
    int best = c.dim + 1;
    for (std::size_t i = 0; i < c.words.size(); ++i)
        for (std::size_t j = i + 1; j < c.words.size(); ++j)
            best = std::min(best, hamming_distance(c.words[i], c.words[j]));
    return best;
}

struct AxisPlane {
    // free coordinates are the complement of the fixed ones
    std::vector<std::pair<int, Symbol>> fixed;  // sorted by coordinate

    std::string str() const {
        std::ostringstream os;
        os << "{";
        for (std::size_t i = 0; i < fixed.size(); ++i)
            os << (i ? ", " : "") << "x" << fixed[i].first << "=" << fixed[i].second;
        os << "}";
        return os.str();
    }
};

inline bool word_on_plane(const Word& w, const AxisPlane& plane) {
    for (auto [i, s] : plane.fixed)
        if (w.at(static_cast<std::size_t>(i)) != s) return false;
    return true;
}

struct PlaneWitness {
    AxisPlane plane;
    int hits = 0;
};

struct MdsOptions {
    std::uint64_t exhaustive_limit = 1000000;       // refuse exhaustive scans past this many planes per direction
    std::optional<std::uint64_t> sample_budget;     // sampled planes instead of the exhaustive scan
    std::uint64_t seed = 0;
};

struct MdsReport {
    bool ok = false;
    bool exhaustive = true;
    std::uint64_t expected_size = 0;    // q^(d-t), 0 when it overflows
    bool singleton_ok = false;
    std::uint64_t planes_checked = 0;
    std::optional<PlaneWitness> witness;
    std::string note;

    explicit operator bool() const { return ok; }
};

namespace detail {

// q^e with an overflow flag (uint64 range)
inline std::optional<std::uint64_t> checked_pow(std::uint64_t q, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (q != 0 && r > UINT64_MAX / q) return std::nullopt;
        r *= q;
    }
    return r;
}

// lexicographic size-k subsets of {0..d-1}
inline bool next_combination(std::vector<int>& idx, int d) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[static_cast<std::size_t>(i)] < d - (k - i)) {
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// Exhaustive (or, by explicit request, sampled) check that every
/// t-dimensional axis-aligned plane meets the code exactly once.  The report
/// carries the Singleton count |C| = q^(d-t) and, on failure, a witness
/// plane with its hit count.
inline MdsReport is_mds(const ExplicitCode& c, int t, const MdsOptions& opt = {}) {
    if (t < 0 || t >= c.dim) throw std::invalid_argument("is_mds: need 0 <= t < d");
    auto q_opt = c.uniform_order();
    if (!q_opt) throw std::invalid_argument("is_mds: non-uniform alphabet sizes");
    const std::uint64_t q = *q_opt;
    const int fixed_count = c.dim - t;

    MdsReport rep;
    auto expected = detail::checked_pow(q, fixed_count);
    rep.expected_size = expected.value_or(0);
    rep.singleton_ok = expected && c.size() == *expected;

    if (q == 0) {  // empty alphabets: only the empty code, MDS vacuously fails the count unless d-t = 0
        rep.ok = rep.singleton_ok && c.size() == 0;
        rep.note = "empty alphabet";
        return rep;
    }

    const bool sampled = opt.sample_budget.has_value();
    if (!sampled && (!expected || *expected > opt.exhaustive_limit))
        throw std::invalid_argument("is_mds: plane count q^(d-t) exceeds exhaustive limit " +
                                    std::to_string(opt.exhaustive_limit) + "; pass an explicit sample budget");

    if (sampled) {
        rep.exhaustive = false;
        rep.note = "sampled " + std::to_string(*opt.sample_budget) + " planes, seed " + std::to_string(opt.seed);
        Rng rng(opt.seed);
        for (std::uint64_t it = 0; it < *opt.sample_budget; ++it) {
            // random fixed-coordinate set, then random values
            std::vector<int> coords(static_cast<std::size_t>(c.dim));
            for (int i = 0; i < c.dim; ++i) coords[static_cast<std::size_t>(i)] = i;
            for (int i = 0; i < fixed_count; ++i) {
                std::size_t j = static_cast<std::size_t>(i) + rng.index(static_cast<std::size_t>(c.dim - i));
                std::swap(coords[static_cast<std::size_t>(i)], coords[j]);
            }
            AxisPlane plane;
            for (int i = 0; i < fixed_count; ++i) {
                int coord = coords[static_cast<std::size_t>(i)];
                const auto& a = c.alphabets[static_cast<std::size_t>(coord)];
                plane.fixed.emplace_back(coord, a[rng.index(a.size())]);
            }
            std::sort(plane.fixed.begin(), plane.fixed.end());
            int hits = 0;
            for (const auto& w : c.words)
                if (word_on_plane(w, plane)) ++hits;
            ++rep.planes_checked;
            if (hits != 1) {
                rep.witness = PlaneWitness{plane, hits};
                rep.ok = false;
                return rep;
            }
        }
        rep.ok = rep.singleton_ok;
        if (!rep.singleton_ok) rep.note += "; Singleton count failed";
        return rep;
    }

    // Exhaustive: for each direction, bucket words by their values on the
    // fixed coordinates.  Every bucket must hold exactly one word and the
    // bucket count must be q^(d-t); together that is |C∩Γ| = 1 for all Γ.
    std::vector<int> fixed_coords(static_cast<std::size_t>(fixed_count));
    for (int i = 0; i < fixed_count; ++i) fixed_coords[static_cast<std::size_t>(i)] = i;
    do {
        std::map<std::vector<Symbol>, int> buckets;
        for (const auto& w : c.words) {
            std::vector<Symbol> key(static_cast<std::size_t>(fixed_count));
            for (int i = 0; i < fixed_count; ++i)
                key[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(fixed_coords[static_cast<std::size_t>(i)])];
            ++buckets[key];
        }
        rep.planes_checked += *expected;
        for (const auto& [key, count] : buckets) {
            if (count > 1) {
                AxisPlane plane;
                for (int i = 0; i < fixed_count; ++i)
                    plane.fixed.emplace_back(fixed_coords[static_cast<std::size_t>(i)], key[static_cast<std::size_t>(i)]);
                rep.witness = PlaneWitness{plane, count};
                rep.ok = false;
                return rep;
            }
        }
        if (buckets.size() != *expected) {
            // every bucket is a singleton, so some plane is empty; locate the
            // lexicographically first one for the witness
            std::vector<std::size_t> odo(static_cast<std::size_t>(fixed_count), 0);
            while (true) {
                std::vector<Symbol> key(static_cast<std::size_t>(fixed_count));
                for (int i = 0; i < fixed_count; ++i)
                    key[static_cast<std::size_t>(i)] =
                        c.alphabets[static_cast<std::size_t>(fixed_coords[static_cast<std::size_t>(i)])]
                                   [odo[static_cast<std::size_t>(i)]];
                if (!buckets.count(key)) {
                    AxisPlane plane;
                    for (int i = 0; i < fixed_count; ++i)
                        plane.fixed.emplace_back(fixed_coords[static_cast<std::size_t>(i)],
                                                 key[static_cast<std::size_t>(i)]);
                    rep.witness = PlaneWitness{plane, 0};
                    rep.ok = false;
                    return rep;
                }
                int pos = fixed_count - 1;
                while (pos >= 0 && ++odo[static_cast<std::size_t>(pos)] == q) odo[static_cast<std::size_t>(pos--)] = 0;
                if (pos < 0) break;
            }
            throw std::logic_error("is_mds: bucket count mismatch without an empty plane");
        }
    } while (detail::next_combination(fixed_coords, c.dim));

    rep.ok = true;
    return rep;
}

/// Words with x_i = a, coordinate i deleted.
inline ExplicitCode retract(const ExplicitCode& c, int i, Symbol a) {
    if (i < 0 || i >= c.dim) throw std::invalid_argument("retract: coordinate out of range");
    if (!alphabet_has(c.alphabets[static_cast<std::size_t>(i)], a))
        throw std::invalid_argument("retract: value " + std::to_string(a) + " not in alphabet of coordinate " +
                                    std::to_string(i));
    std::vector<std::vector<Symbol>> alphabets;
    for (int j = 0; j < c.dim; ++j)
        if (j != i) alphabets.push_back(c.alphabets[static_cast<std::size_t>(j)]);
    std::vector<Word> words;
    for (const auto& w : c.words) {
        if (w[static_cast<std::size_t>(i)] != a) continue;
        Word r;
        for (int j = 0; j < c.dim; ++j)
            if (j != i) r.push_back(w[static_cast<std::size_t>(j)]);
        words.push_back(std::move(r));
    }
    return make_code(c.dim - 1, std::move(alphabets), std::move(words));
}

/// Words with x_i = a, coordinate i kept (C^i_a of the subcode machinery).
inline ExplicitCode embedded_retract(const ExplicitCode& c, int i, Symbol a) {
    if (i < 0 || i >= c.dim) throw std::invalid_argument("embedded_retract: coordinate out of range");
    std::vector<Word> words;
    for (const auto& w : c.words)
        if (w[static_cast<std::size_t>(i)] == a) words.push_back(w);
    return make_code(c.dim, c.alphabets, std::move(words));
}

/// Coordinate i deleted, duplicates collapsed.
inline ExplicitCode projection(const ExplicitCode& c, int i) {
    if (i < 0 || i >= c.dim) throw std::invalid_argument("projection: coordinate out of range");
    std::vector<std::vector<Symbol>> alphabets;
    for (int j = 0; j < c.dim; ++j)
        if (j != i) alphabets.push_back(c.alphabets[static_cast<std::size_t>(j)]);
    std::vector<Word> words;
    for (const auto& w : c.words) {
        Word r;
        for (int j = 0; j < c.dim; ++j)
            if (j != i) r.push_back(w[static_cast<std::size_t>(j)]);
        words.push_back(std::move(r));
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return make_code(c.dim - 1, std::move(alphabets), std::move(words));
}

}  // namespace mdsembed
