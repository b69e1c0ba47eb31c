#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace skewrec {

/// Weakly decreasing sequence of nonnegative integers. Trailing zeros are
/// stripped on construction, and reads past the end return 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept;  ///< |lambda|, the sum of the parts
    const std::vector<int>& parts() const noexcept { return parts_; }

    /// Parts padded with zeros to exactly `len` entries.
    std::vector<int> padded(std::size_t len) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Fixed-length integer vector: weights, exponent vectors and differences
/// such as mu - nu, which need not be partitions.
class IntVector {
public:
    IntVector() = default;
    explicit IntVector(std::vector<int> entries) : entries_(std::move(entries)) {}
    IntVector(std::initializer_list<int> entries) : entries_(entries) {}
    IntVector(std::size_t n, int value) : entries_(n, value) {}

    /// `p` padded with zeros to length n; throws if p is longer than n.
    static IntVector from_partition(const Partition& p, std::size_t n);

    std::size_t size() const noexcept { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    int& operator[](std::size_t i) { return entries_[i]; }
    long long total() const noexcept;
    const std::vector<int>& entries() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    friend bool operator==(const IntVector&, const IntVector&) = default;
    friend auto operator<=>(const IntVector&, const IntVector&) = default;

private:
    std::vector<int> entries_;
};

/// Inclusion order: a_i >= b_i for all i.
bool contains(const Partition& a, const Partition& b) noexcept;

/// Domination order on decreasing vectors. Both inputs must already be
/// weakly decreasing (std::invalid_argument otherwise). Unequal totals
/// compare false.
bool dominates(const IntVector& a, const IntVector& b);

/// Entries rearranged in weakly decreasing order. Negative entries are rejected.
IntVector sort_decreasing(const IntVector& w);

Partition add(const Partition& a, const Partition& b);
Partition scale(int k, const Partition& a);
IntVector subtract(const Partition& a, const Partition& b);
IntVector add(const IntVector& a, const IntVector& b);
IntVector scale(int k, const IntVector& a);

struct StretchCondition {
    std::optional<int> k;                          ///< least k >= 1, when one exists
    std::optional<std::size_t> violating_row;      ///< 0-based row blocking every k
    explicit operator bool() const noexcept { return k.has_value(); }
};

/// Least k >= 1 with k(mu_i - nu_i) >= lambda_i - kappa_i for every row,
/// i.e. the first stretch at which (kappa + k mu)/(lambda + k nu) is a
/// valid skew shape. Requires mu to contain nu.
StretchCondition stretch_condition(const Partition& kappa, const Partition& lambda,
                                   const Partition& mu, const Partition& nu);

/// Text form "[5,4,3,1]"; the empty partition is "[]".
std::string to_string(const Partition& p);
std::string to_string(const IntVector& v);

/// Parses "[5,4,3,1]", "5,4,3,1" or "[]". Zero parts are allowed and stripped.
Partition parse_partition(std::string_view text);
IntVector parse_int_vector(std::string_view text);

/// All partitions of m with at most `max_len` parts, in reverse lex order.
std::vector<Partition> partitions_of(int m, std::size_t max_len);

/// All partitions contained in `outer`, in reverse lex order.
std::vector<Partition> subpartitions(const Partition& outer);

/// All partitions fitting in a rows x cols box.
std::vector<Partition> partitions_in_box(std::size_t rows, int cols);

}  // namespace skewrec
