#include "coinv/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace coinv {

Partition Tableau::shape() const
{
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows)
        parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

int Tableau::size() const
{
    int total = 0;
    for (const auto& row : rows)
        total += static_cast<int>(row.size());
    return total;
}

std::vector<int> Tableau::reading_word() const
{
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(size()));
    for (auto row = rows.rbegin(); row != rows.rend(); ++row)
        word.insert(word.end(), row->begin(), row->end());
    return word;
}

namespace {

bool rows_and_columns_ok(const Tableau& t, bool strict_rows)
{
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        if (row.empty() || (r > 0 && row.size() > t.rows[r - 1].size()))
            return false;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1)
                return false;
            if (c > 0 && (strict_rows ? row[c] <= row[c - 1] : row[c] < row[c - 1]))
                return false;
            if (r > 0 && row[c] <= t.rows[r - 1][c])
                return false;
        }
    }
    return true;
}

} // namespace

bool is_standard(const Tableau& t)
{
    if (!rows_and_columns_ok(t, true))
        return false;
    const int n = t.size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const auto& row : t.rows)
        for (int v : row) {
            if (v > n || seen[v])
                return false;
            seen[v] = true;
        }
    return true;
}

bool is_semistandard(const Tableau& t, const Partition& content)
{
    if (!rows_and_columns_ok(t, false))
        return false;
    std::vector<int> counts(static_cast<std::size_t>(content.length()), 0);
    for (const auto& row : t.rows)
        for (int v : row) {
            if (v > content.length())
                return false;
            ++counts[v - 1];
        }
    return counts == content.parts();
}

namespace {

struct SsytFiller {
    const Partition& shape;
    Partition column_heights;
    std::vector<int> remaining;
    Tableau tableau;
    const std::function<void(const Tableau&)>& visit;

    SsytFiller(const Partition& s, const Partition& content, const std::function<void(const Tableau&)>& v)
        : shape(s), column_heights(conjugate(s)), remaining(content.parts()), visit(v)
    {
        for (int len : shape.parts())
            tableau.rows.emplace_back(static_cast<std::size_t>(len), 0);
    }

    void fill(int r, int c)
    {
        if (r == shape.length()) {
            visit(tableau);
            return;
        }
        const int next_r = c + 1 == shape.part(r) ? r + 1 : r;
        const int next_c = c + 1 == shape.part(r) ? 0 : c + 1;

        int low = 1;
        if (c > 0)
            low = tableau.rows[r][c - 1];
        if (r > 0)
            low = std::max(low, tableau.rows[r - 1][c] + 1);
        const int letters = static_cast<int>(remaining.size());
        // Cells below (r, c) in this column need strictly larger letters.
        const int high = letters - (column_heights.part(c) - r - 1);
        for (int v = low; v <= high; ++v) {
            if (remaining[v - 1] == 0)
                continue;
            --remaining[v - 1];
            tableau.rows[r][c] = v;
            fill(next_r, next_c);
            ++remaining[v - 1];
        }
        tableau.rows[r][c] = 0;
    }
};

} // namespace

void for_each_ssyt(const Partition& shape, const Partition& content,
                   const std::function<void(const Tableau&)>& visit)
{
    if (shape.size() != content.size())
        throw std::invalid_argument("for_each_ssyt: shape " + shape.to_string() +
                                    " and content " + content.to_string() + " differ in size");
    SsytFiller filler(shape, content, visit);
    filler.fill(0, 0);
}

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Partition& content)
{
    std::vector<Tableau> out;
    for_each_ssyt(shape, content, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

void for_each_syt(const Partition& shape, const std::function<void(const Tableau&)>& visit)
{
    for_each_ssyt(shape, Partition(std::vector<int>(static_cast<std::size_t>(shape.size()), 1)), visit);
}

std::vector<Tableau> enumerate_syt(const Partition& shape)
{
    std::vector<Tableau> out;
    for_each_syt(shape, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

int major_index(const Tableau& t)
{
    if (!is_standard(t))
        throw std::invalid_argument("major_index: tableau is not standard");
    std::vector<int> row_of(static_cast<std::size_t>(t.size()) + 1, 0);
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (int v : t.rows[r])
            row_of[v] = static_cast<int>(r);
    int maj = 0;
    for (int j = 1; j < t.size(); ++j)
        if (row_of[j + 1] > row_of[j])
            maj += j;
    return maj;
}

int charge(std::span<const int> word)
{
    int letters = 0;
    for (int v : word) {
        if (v < 1)
            throw std::invalid_argument("charge: letters must be positive");
        letters = std::max(letters, v);
    }
    std::vector<int> counts(static_cast<std::size_t>(letters), 0);
    for (int v : word)
        ++counts[v - 1];
    for (std::size_t i = 1; i < counts.size(); ++i)
        if (counts[i] > counts[i - 1])
            throw std::invalid_argument("charge: word content is not a partition");

    const auto length = static_cast<int>(word.size());
    std::vector<bool> used(word.size(), false);
    int left = length;
    int total = 0;
    while (left > 0) {
        // The remaining content is still a partition, so the standard subword
        // uses exactly the letters 1..top.
        int top = 0;
        while (top < letters && counts[top] > 0)
            ++top;

        int position = length;
        int index = 0;
        for (int letter = 1; letter <= top; ++letter) {
            int found = -1;
            for (int p = position - 1; p >= 0; --p)
                if (!used[p] && word[p] == letter) {
                    found = p;
                    break;
                }
            if (found < 0) {
                for (int p = length - 1; p > position; --p)
                    if (!used[p] && word[p] == letter) {
                        found = p;
                        break;
                    }
                if (letter > 1)
                    ++index;
            }
            total += index;
            used[found] = true;
            --counts[letter - 1];
            --left;
            position = found;
        }
    }
    return total;
}

} // namespace coinv
