#include "skewrec/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace skewrec {

namespace {

void strip_trailing_zeros(std::vector<int>& v)
{
    while (!v.empty() && v.back() == 0)
        v.pop_back();
}

bool is_weakly_decreasing(const std::vector<int>& v)
{
    return std::is_sorted(v.begin(), v.end(), std::greater<>{});
}

std::vector<int> parse_list(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']')
            throw std::invalid_argument("unbalanced brackets in '" + std::string(text) + "'");
        text = trim(text.substr(1, text.size() - 2));
    }
    std::vector<int> out;
    if (text.empty())
        return out;
    while (true) {
        auto comma = text.find(',');
        auto item = trim(text.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
            throw std::invalid_argument("not an integer: '" + std::string(item) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

template <class F>
void for_each_partition(int remaining, int max_part, std::size_t max_len, std::vector<int>& prefix, F&& f)
{
    if (remaining == 0) {
        f(Partition(prefix));
        return;
    }
    if (prefix.size() == max_len)
        return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        for_each_partition(remaining - part, part, max_len, prefix, f);
        prefix.pop_back();
    }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    if (std::any_of(parts_.begin(), parts_.end(), [](int x) { return x < 0; }))
        throw std::invalid_argument("partition has a negative part");
    if (!is_weakly_decreasing(parts_))
        throw std::invalid_argument("partition is not weakly decreasing");
    strip_trailing_zeros(parts_);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::size() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::padded(std::size_t len) const
{
    std::vector<int> out(std::max(len, parts_.size()), 0);
    std::copy(parts_.begin(), parts_.end(), out.begin());
    out.resize(len);
    return out;
}

IntVector IntVector::from_partition(const Partition& p, std::size_t n)
{
    if (p.length() > n)
        throw std::invalid_argument("partition " + to_string(p) + " is longer than " + std::to_string(n));
    return IntVector(p.padded(n));
}

long long IntVector::total() const noexcept
{
    return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

bool contains(const Partition& a, const Partition& b) noexcept
{
    std::size_t len = std::max(a.length(), b.length());
    for (std::size_t i = 0; i < len; ++i)
        if (a[i] < b[i])
            return false;
    return true;
}

bool dominates(const IntVector& a, const IntVector& b)
{
    if (!is_weakly_decreasing(a.entries()) || !is_weakly_decreasing(b.entries()))
        throw std::invalid_argument("dominates: arguments must be sorted decreasingly");
    if (a.total() != b.total())
        return false;
    long long sa = 0;
    long long sb = 0;
    std::size_t len = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb)
            return false;
    }
    return true;
}

IntVector sort_decreasing(const IntVector& w)
{
    std::vector<int> v = w.entries();
    if (std::any_of(v.begin(), v.end(), [](int x) { return x < 0; }))
        throw std::invalid_argument("sort_decreasing: negative entry in " + to_string(w));
    std::sort(v.begin(), v.end(), std::greater<>{});
    return IntVector(std::move(v));
}

Partition add(const Partition& a, const Partition& b)
{
    std::size_t len = std::max(a.length(), b.length());
    std::vector<int> out(len);
    for (std::size_t i = 0; i < len; ++i)
        out[i] = a[i] + b[i];
    return Partition(std::move(out));
}

Partition scale(int k, const Partition& a)
{
    if (k < 0)
        throw std::invalid_argument("scale: negative factor");
    std::vector<int> out = a.parts();
    for (int& x : out)
        x *= k;
    return Partition(std::move(out));
}

IntVector subtract(const Partition& a, const Partition& b)
{
    std::size_t len = std::max(a.length(), b.length());
    std::vector<int> out(len);
    for (std::size_t i = 0; i < len; ++i)
        out[i] = a[i] - b[i];
    return IntVector(std::move(out));
}

IntVector add(const IntVector& a, const IntVector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("add: length mismatch");
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return IntVector(std::move(out));
}

IntVector scale(int k, const IntVector& a)
{
    std::vector<int> out = a.entries();
    for (int& x : out)
        x *= k;
    return IntVector(std::move(out));
}

StretchCondition stretch_condition(const Partition& kappa, const Partition& lambda,
                                   const Partition& mu, const Partition& nu)
{
    if (!contains(mu, nu))
        throw std::invalid_argument("stretch_condition: mu must contain nu");
    std::size_t len = std::max({kappa.length(), lambda.length(), mu.length(), nu.length()});
    int k = 1;
    for (std::size_t i = 0; i < len; ++i) {
        int need = lambda[i] - kappa[i];
        if (need <= 0)
            continue;
        int gain = mu[i] - nu[i];
        if (gain == 0)
            return {std::nullopt, i};
        k = std::max(k, (need + gain - 1) / gain);
    }
    return {k, std::nullopt};
}

std::string to_string(const Partition& p)
{
    return to_string(IntVector(p.parts()));
}

std::string to_string(const IntVector& v)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(v[i]);
    }
    out += ']';
    return out;
}

Partition parse_partition(std::string_view text)
{
    return Partition(parse_list(text));
}

IntVector parse_int_vector(std::string_view text)
{
    return IntVector(parse_list(text));
}

std::vector<Partition> partitions_of(int m, std::size_t max_len)
{
    std::vector<Partition> out;
    std::vector<int> prefix;
    for_each_partition(m, m, max_len, prefix, [&](Partition p) { out.push_back(std::move(p)); });
    return out;
}

std::vector<Partition> subpartitions(const Partition& outer)
{
    std::vector<Partition> out;
    std::vector<int> cur(outer.length());
    std::function<void(std::size_t)> rec = [&](std::size_t row) {
        if (row == cur.size()) {
            out.emplace_back(cur);
            return;
        }
        int cap = row == 0 ? outer[0] : std::min(outer[row], cur[row - 1]);
        for (int v = cap; v >= 0; --v) {
            cur[row] = v;
            rec(row + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<Partition> partitions_in_box(std::size_t rows, int cols)
{
    return subpartitions(Partition(std::vector<int>(rows, cols)));
}

}  // namespace skewrec
