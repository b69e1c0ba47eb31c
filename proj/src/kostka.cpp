#include "skewrec/kostka.hpp"

#include <algorithm>
#include <stdexcept>

#include "fill.hpp"

namespace skewrec {

namespace {

bool weight_fits(const SkewShape& shape, const IntVector& w)
{
    if (std::any_of(w.begin(), w.end(), [](int x) { return x < 0; }))
        throw std::invalid_argument("kostka: weight " + to_string(w) + " has a negative entry");
    return w.size() > 0 && w.total() == shape.boxes();
}

}  // namespace

Integer kostka(const SkewShape& shape, const IntVector& w)
{
    if (shape.boxes() == 0)
        return w.total() == 0 ? 1 : 0;
    if (!weight_fits(shape, w))
        return 0;
    detail::ColumnFiller filler(shape, static_cast<int>(w.size()));
    detail::WeightBudget budget(w);
    long long count = 0;
    auto leaf = [&] { ++count; };
    filler.run(1, leaf, budget);
    return count;
}

std::optional<Tableau> first_tableau_with_weight(const SkewShape& shape, const IntVector& w)
{
    const int n = std::max<int>(1, static_cast<int>(w.size()));
    if (shape.boxes() == 0)
        return w.total() == 0 ? std::optional<Tableau>(Tableau(shape, n, std::vector<std::vector<int>>(shape.rows())))
                              : std::nullopt;
    if (!weight_fits(shape, w))
        return std::nullopt;
    // Fillings arrive in canonical order only after sorting, so keep the least.
    detail::ColumnFiller filler(shape, n);
    detail::WeightBudget budget(w);
    std::vector<Tableau> found;
    auto leaf = [&] { found.emplace_back(shape, n, filler.rows()); };
    filler.run(1, leaf, budget);
    if (found.empty())
        return std::nullopt;
    detail::sort_canonical(found);
    return found.front();
}

std::map<Partition, Integer> schur_in_m_basis(const SkewShape& shape, int n)
{
    if (n < 1)
        throw std::invalid_argument("schur_in_m_basis: n must be positive");
    std::map<Partition, Integer> out;
    for (const auto& p : partitions_of(shape.boxes(), static_cast<std::size_t>(n))) {
        Integer k = kostka(shape, IntVector::from_partition(p, static_cast<std::size_t>(n)));
        if (k != 0)
            out.emplace(p, k);
    }
    return out;
}

Tableau stretch_positivity_check(const SkewShape& shape, const IntVector& w, int k)
{
    if (k < 1)
        throw std::invalid_argument("stretch_positivity_check: k must be positive");
    auto witness = first_tableau_with_weight(shape, w);
    if (!witness)
        throw std::invalid_argument("stretch_positivity_check: no tableau of shape " + to_string(shape.outer()) +
                                    "/" + to_string(shape.inner()) + " has weight " + to_string(w));
    Tableau power = *witness;
    for (int i = 1; i < k; ++i)
        power = insert(power, *witness);
    return power;
}

}  // namespace skewrec
