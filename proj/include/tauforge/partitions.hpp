#pragma once

#include <string>
#include <vector>

#include "tauforge/schur.hpp"

namespace tauforge {

/// Weakly decreasing list of positive parts; may be empty.
class Partition {
public:
    Partition() = default;
    /// Throws InvalidInput unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    /// Parses "2,1" (or "" / "()" for the empty partition).
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }
    /// 1-based part, zero past the end.
    int operator[](int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// (lambda_1, lambda_2 - 1, ..., lambda_m - m + 1) followed by every integer <= -m.
struct VSequence {
    std::vector<int> head;
    int tail_start = 0;

    bool contains(int v) const;
};

VSequence v_sequence(const Partition& lambda);

/// True iff V_lambda - n is contained in V_lambda. Throws for n < 2.
bool is_n_periodic(const Partition& lambda, int n);

/// Every partition of every size up to max_size, ordered by (size, parts ascending).
std::vector<Partition> enumerate_partitions(int max_size);

/// n-periodic partitions with |lambda| <= max_size in the same order.
std::vector<Partition> enumerate_n_periodic(int n, int max_size);

inline constexpr int kMaxEnumerationSize = 30;

/// Expected shift length for column j (1-based): lambda_j + m - j.
std::size_t shift_length(const Partition& lambda, int j);

/// Overwrites the constrained shift entries so that s_{lambda_j - j - lambda_i + i}(C[j]) = 0 for j < i.
/// Throws if some C[j] does not have length lambda_j + m - j.
std::vector<ShiftVector> canonicalize_shifts(const Partition& lambda, const std::vector<ShiftVector>& C);

/// mask[j-1][k-1] is true when entry c_{k,j} is overwritten by canonicalize_shifts.
std::vector<std::vector<bool>> constrained_entries(const Partition& lambda);

/// Number of entries left untouched by canonicalize_shifts.
int free_parameter_count(const Partition& lambda);

} // namespace tauforge
