#include "coinv/partition.hpp"

#include <charconv>
#include <stdexcept>

namespace coinv {

Integer factorial(unsigned n)
{
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(std::string_view text)
{
    std::vector<int> parts;
    if (text.empty())
        return Partition{};
    std::size_t pos = 0;
    for (;;) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view field =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int value = 0;
        const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || end != field.data() + field.size())
            throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        generate(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n)
{
    if (n < 0)
        throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    generate(n, n, prefix, out);
    return out;
}

Partition conjugate(const Partition& lambda)
{
    std::vector<int> parts(lambda.part(0), 0);
    for (int row : lambda.parts())
        for (int c = 0; c < row; ++c)
            ++parts[c];
    return Partition(std::move(parts));
}

std::vector<int> hook_lengths(const Partition& lambda)
{
    const Partition transpose = conjugate(lambda);
    std::vector<int> hooks;
    hooks.reserve(lambda.size());
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda.part(r); ++c)
            hooks.push_back((lambda.part(r) - c - 1) + (transpose.part(c) - r - 1) + 1);
    return hooks;
}

Integer centralizer_size(const Partition& rho)
{
    Integer z = 1;
    std::size_t i = 0;
    const auto& parts = rho.parts();
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        const auto multiplicity = static_cast<unsigned>(j - i);
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]), multiplicity);
        z *= power * factorial(multiplicity);
        i = j;
    }
    return z;
}

Integer class_size(const Partition& rho)
{
    return factorial(static_cast<unsigned>(rho.size())) / centralizer_size(rho);
}

int n_stat(const Partition& lambda)
{
    int total = 0;
    for (int r = 0; r < lambda.length(); ++r)
        total += r * lambda.part(r);
    return total;
}

Integer syt_count(const Partition& lambda)
{
    Integer denominator = 1;
    for (int h : hook_lengths(lambda))
        denominator *= h;
    return factorial(static_cast<unsigned>(lambda.size())) / denominator;
}

int class_sign(const Partition& rho)
{
    return (rho.size() - rho.length()) % 2 == 0 ? 1 : -1;
}

bool dominates(const Partition& lambda, const Partition& mu)
{
    if (lambda.size() != mu.size())
        return false;
    int a = 0;
    int b = 0;
    const int rows = std::max(lambda.length(), mu.length());
    for (int i = 0; i < rows; ++i) {
        a += lambda.part(i);
        b += mu.part(i);
        if (a < b)
            return false;
    }
    return true;
}

PartitionIndex::PartitionIndex(const std::vector<Partition>& order)
{
    for (std::size_t i = 0; i < order.size(); ++i)
        index_.emplace(order[i], i);
}

std::size_t PartitionIndex::at(const Partition& p) const
{
    const auto it = index_.find(p);
    if (it == index_.end())
        throw std::out_of_range("partition " + p.to_string() + " not in index");
    return it->second;
}

} // namespace coinv
