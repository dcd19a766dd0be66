// fixtures.hpp -- the worked-example tables: the partial square C3, the base
// square A, the blocks Ua/Ub/Uc, the order-9 squares L1..L5, and the four
// recorded switchings taking L1 to L5.

#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdsembed/code.hpp"
#include "mdsembed/combinators.hpp"

namespace mdsembed::fixtures {

using Table = std::vector<std::vector<Symbol>>;

/// (row, col, entry) triples of a square table; row/col alphabets are
/// canonical, the entry alphabet is the sorted set of entries appearing.
inline ExplicitCode square_to_code(const Table& table) {
    const auto rows = table.size();
    if (rows == 0) throw std::invalid_argument("square_to_code: empty table");
    const auto cols = table[0].size();
    std::vector<Symbol> row_a, col_a, ent_a;
    for (std::size_t r = 0; r < rows; ++r) row_a.push_back(static_cast<Symbol>(r));
    for (std::size_t c = 0; c < cols; ++c) col_a.push_back(static_cast<Symbol>(c));
    std::vector<Word> words;
    for (std::size_t r = 0; r < rows; ++r) {
        if (table[r].size() != cols) throw std::invalid_argument("square_to_code: ragged table");
        for (std::size_t c = 0; c < cols; ++c) {
            words.push_back({static_cast<Symbol>(r), static_cast<Symbol>(c), table[r][c]});
            ent_a.push_back(table[r][c]);
        }
    }
    std::sort(ent_a.begin(), ent_a.end());
    ent_a.erase(std::unique(ent_a.begin(), ent_a.end()), ent_a.end());
    return make_code(3, {row_a, col_a, ent_a}, std::move(words));
}

/// The six filled cells of the order-3 partial square (entries already named
/// in the order-9 symbol space).
inline ExplicitCode c3_code() {
    return make_code(3, {{0, 1, 2}, {0, 1, 2}, {0, 3, 6}},
                     {{0, 0, 0}, {0, 1, 3}, {0, 2, 6}, {1, 0, 3}, {1, 2, 0}, {2, 1, 6}});
}

inline const std::vector<Word>& c3_cells() {
    static const std::vector<Word> cells{{0, 0, 0}, {0, 1, 3}, {0, 2, 6}, {1, 0, 3}, {1, 2, 0}, {2, 1, 6}};
    return cells;
}

// base square A over {a,b,c} -> {0,1,2}
inline ExplicitCode square_a() { return square_to_code({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}); }

inline ExplicitCode square_ua() { return square_to_code({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}); }
inline ExplicitCode square_ub() { return square_to_code({{4, 3, 5}, {3, 5, 4}, {5, 4, 3}}); }
inline ExplicitCode square_uc() { return square_to_code({{8, 7, 6}, {6, 8, 7}, {7, 6, 8}}); }

inline const Table& l1_table() {
    static const Table t{{0, 1, 2, 4, 3, 5, 8, 7, 6}, {1, 2, 0, 3, 5, 4, 6, 8, 7}, {2, 0, 1, 5, 4, 3, 7, 6, 8},
                         {4, 3, 5, 8, 7, 6, 0, 1, 2}, {3, 5, 4, 6, 8, 7, 1, 2, 0}, {5, 4, 3, 7, 6, 8, 2, 0, 1},
                         {8, 7, 6, 0, 1, 2, 4, 3, 5}, {6, 8, 7, 1, 2, 0, 3, 5, 4}, {7, 6, 8, 2, 0, 1, 5, 4, 3}};
    return t;
}

inline const Table& l2_table() {
    static const Table t{{0, 3, 2, 4, 7, 5, 8, 1, 6}, {1, 2, 0, 3, 5, 4, 6, 8, 7}, {2, 0, 1, 5, 4, 3, 7, 6, 8},
                         {4, 7, 5, 8, 1, 6, 0, 3, 2}, {3, 5, 4, 6, 8, 7, 1, 2, 0}, {5, 4, 3, 7, 6, 8, 2, 0, 1},
                         {8, 1, 6, 0, 3, 2, 4, 7, 5}, {6, 8, 7, 1, 2, 0, 3, 5, 4}, {7, 6, 8, 2, 0, 1, 5, 4, 3}};
    return t;
}

inline const Table& l3_table() {
    static const Table t{{0, 3, 2, 4, 7, 5, 8, 1, 6}, {3, 2, 0, 6, 5, 4, 1, 8, 7}, {2, 0, 1, 5, 4, 3, 7, 6, 8},
                         {4, 7, 5, 8, 1, 6, 0, 3, 2}, {1, 5, 4, 3, 8, 7, 6, 2, 0}, {5, 4, 3, 7, 6, 8, 2, 0, 1},
                         {8, 1, 6, 0, 3, 2, 4, 7, 5}, {6, 8, 7, 1, 2, 0, 3, 5, 4}, {7, 6, 8, 2, 0, 1, 5, 4, 3}};
    return t;
}

inline const Table& l4_table() {
    static const Table t{{0, 3, 6, 4, 7, 2, 8, 1, 5}, {3, 2, 0, 6, 5, 4, 1, 8, 7}, {2, 0, 1, 5, 4, 3, 7, 6, 8},
                         {4, 7, 2, 8, 1, 5, 0, 3, 6}, {1, 5, 4, 3, 8, 7, 6, 2, 0}, {5, 4, 3, 7, 6, 8, 2, 0, 1},
                         {8, 1, 5, 0, 3, 6, 4, 7, 2}, {6, 8, 7, 1, 2, 0, 3, 5, 4}, {7, 6, 8, 2, 0, 1, 5, 4, 3}};
    return t;
}

inline const Table& l5_table() {
    static const Table t{{0, 3, 6, 4, 7, 2, 8, 1, 5}, {3, 2, 0, 6, 5, 4, 1, 8, 7}, {2, 6, 1, 5, 0, 3, 7, 4, 8},
                         {4, 7, 2, 8, 1, 5, 0, 3, 6}, {1, 5, 4, 3, 8, 7, 6, 2, 0}, {5, 4, 3, 7, 6, 8, 2, 0, 1},
                         {8, 1, 5, 0, 3, 6, 4, 7, 2}, {6, 8, 7, 1, 2, 0, 3, 5, 4}, {7, 0, 8, 2, 4, 1, 5, 6, 3}};
    return t;
}

inline ExplicitCode square_l(int index) {
    switch (index) {
        case 1: return square_to_code(l1_table());
        case 2: return square_to_code(l2_table());
        case 3: return square_to_code(l3_table());
        case 4: return square_to_code(l4_table());
        case 5: return square_to_code(l5_table());
        default: throw std::invalid_argument("square_l: index must be 1..5");
    }
}

/// One recorded switching of the worked example: the subcube (row, column
/// and symbol sets) plus how the replacement is built from the removed
/// subcode -- either a 3-cycle on the symbol coordinate or a swap of two
/// subcube rows.
struct RecordedSwitch {
    std::vector<Symbol> rows, cols, syms;
    enum class Kind { symbol_cycle, row_swap } kind;
    std::array<Symbol, 3> cycle{};     // s0 -> s1 -> s2 -> s0
    std::array<Symbol, 2> swapped{};   // row pair

    Subcube subcube() const { return make_subcube({rows, cols, syms}); }
};

inline const std::vector<RecordedSwitch>& paper_switches() {
    static const std::vector<RecordedSwitch> sw{
        {{0, 3, 6}, {1, 4, 7}, {1, 3, 7}, RecordedSwitch::Kind::symbol_cycle, {1, 3, 7}, {}},
        {{1, 4, 7}, {0, 3, 6}, {1, 3, 6}, RecordedSwitch::Kind::row_swap, {}, {1, 4}},
        {{0, 3, 6}, {2, 5, 8}, {2, 5, 6}, RecordedSwitch::Kind::symbol_cycle, {2, 6, 5}, {}},
        {{2, 5, 8}, {1, 4, 7}, {0, 4, 6}, RecordedSwitch::Kind::row_swap, {}, {2, 8}},
    };
    return sw;
}

/// The four target cells the switchings force in, in switch order.
inline const std::vector<Word>& paper_targets() {
    static const std::vector<Word> t{{0, 1, 3}, {1, 0, 3}, {0, 2, 6}, {2, 1, 6}};
    return t;
}

inline ExplicitCode apply_recorded_switch(const ExplicitCode& c, const RecordedSwitch& sw) {
    ExplicitCode c1 = make_code(c.dim, c.alphabets, intersect_subcube(c, sw.subcube()).words);
    std::map<Symbol, Symbol> perm;
    int coord;
    if (sw.kind == RecordedSwitch::Kind::symbol_cycle) {
        coord = 2;
        perm = {{sw.cycle[0], sw.cycle[1]}, {sw.cycle[1], sw.cycle[2]}, {sw.cycle[2], sw.cycle[0]}};
    } else {
        coord = 0;
        perm = {{sw.swapped[0], sw.swapped[1]}, {sw.swapped[1], sw.swapped[0]}};
    }
    ExplicitCode c2 = permute_coordinate_symbols(c1, coord, perm);
    return switch_subcode(c, c1, c2, 1);
}

}  // namespace mdsembed::fixtures
