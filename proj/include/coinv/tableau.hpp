#pragma once

#include "coinv/partition.hpp"

#include <functional>
#include <span>
#include <vector>

namespace coinv {

/// A filling of a Young diagram, stored row by row (top row first).
/// Whether it is standard or semistandard is checked by the predicates
/// below; enumeration functions only ever produce valid ones.
struct Tableau {
    std::vector<std::vector<int>> rows;

    Partition shape() const;
    int size() const;

    /// Rows read left to right, bottom row first.
    std::vector<int> reading_word() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;
};

bool is_standard(const Tableau& t);

/// Rows weakly increase, columns strictly increase, and entry i occurs
/// content[i-1] times.
bool is_semistandard(const Tableau& t, const Partition& content);

/// Visits every semistandard tableau of the given shape and content, in
/// lexicographic order of the top-to-bottom row concatenation. Throws
/// std::invalid_argument if |shape| != |content|.
void for_each_ssyt(const Partition& shape, const Partition& content,
                   const std::function<void(const Tableau&)>& visit);

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Partition& content);

/// Standard tableaux are the semistandard ones of content (1^n).
std::vector<Tableau> enumerate_syt(const Partition& shape);
void for_each_syt(const Partition& shape, const std::function<void(const Tableau&)>& visit);

/// Sum of the j such that j+1 sits in a strictly lower row than j.
/// Throws std::invalid_argument if t is not standard.
int major_index(const Tableau& t);

/// Lascoux-Schutzenberger charge. Standard subwords are extracted by
/// scanning right to left cyclically for 1, 2, ...; the index increases
/// by one exactly when r+1 sits to the right of r. Throws
/// std::invalid_argument if the letter multiplicities are not a partition.
int charge(std::span<const int> word);

} // namespace coinv
