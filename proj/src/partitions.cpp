#include "tauforge/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "tauforge/error.hpp"

namespace tauforge {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw InvalidInput("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidInput("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    if (text.empty() || text == "()") return Partition();
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.size() > 6 || !std::all_of(item.begin(), item.end(), ::isdigit))
            throw InvalidInput("malformed partition '" + text + "'");
        parts.push_back(std::stoi(item));
    }
    if (!text.empty() && text.back() == ',') throw InvalidInput("malformed partition '" + text + "'");
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
    if (parts_.empty()) return "()";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) out += (i ? "," : "") + std::to_string(parts_[i]);
    return out;
}

bool VSequence::contains(int v) const {
    return v <= tail_start || std::find(head.begin(), head.end(), v) != head.end();
}

VSequence v_sequence(const Partition& lambda) {
    VSequence v;
    const int m = lambda.length();
    for (int i = 1; i <= m; ++i) v.head.push_back(lambda[i] - i + 1);
    v.tail_start = -m;
    return v;
}

bool is_n_periodic(const Partition& lambda, int n) {
    if (n < 2) throw InvalidInput("periodicity needs n >= 2");
    VSequence v = v_sequence(lambda);
    // The tail is closed under -n by itself, so only head values need checking.
    for (int x : v.head)
        if (!v.contains(x - n)) return false;
    return true;
}

std::vector<Partition> enumerate_partitions(int max_size) {
    if (max_size < 0) throw InvalidInput("max_size must be nonnegative");
    if (max_size > kMaxEnumerationSize) throw InvalidInput("max_size must be at most 30");
    std::vector<Partition> out;
    std::vector<int> cur;
    for (int size = 0; size <= max_size; ++size) {
        std::vector<Partition> level;
        std::function<void(int, int)> rec = [&](int left, int cap) {
            if (left == 0) {
                level.emplace_back(cur);
                return;
            }
            for (int p = std::min(left, cap); p >= 1; --p) {
                cur.push_back(p);
                rec(left - p, p);
                cur.pop_back();
            }
        };
        rec(size, size);
        std::sort(level.begin(), level.end());
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<Partition> enumerate_n_periodic(int n, int max_size) {
    if (n < 2) throw InvalidInput("periodicity needs n >= 2");
    std::vector<Partition> out;
    for (auto& p : enumerate_partitions(max_size))
        if (is_n_periodic(p, n)) out.push_back(std::move(p));
    return out;
}

std::size_t shift_length(const Partition& lambda, int j) {
    return static_cast<std::size_t>(lambda[j] + lambda.length() - j);
}

std::vector<std::vector<bool>> constrained_entries(const Partition& lambda) {
    const int m = lambda.length();
    std::vector<std::vector<bool>> mask;
    for (int j = 1; j <= m; ++j) {
        mask.emplace_back(shift_length(lambda, j), false);
        for (int i = j + 1; i <= m; ++i) {
            int idx = lambda[j] - j - lambda[i] + i;
            mask.back()[static_cast<std::size_t>(idx - 1)] = true;
        }
    }
    return mask;
}

std::vector<ShiftVector> canonicalize_shifts(const Partition& lambda, const std::vector<ShiftVector>& C) {
    const int m = lambda.length();
    if (static_cast<int>(C.size()) != m) throw InvalidInput("need one shift vector per part");
    for (int j = 1; j <= m; ++j)
        if (C[static_cast<std::size_t>(j - 1)].size() != shift_length(lambda, j))
            throw InvalidInput("shift vector " + std::to_string(j) + " must have length " +
                               std::to_string(shift_length(lambda, j)));
    std::vector<ShiftVector> out = C;
    for (int j = 1; j <= m; ++j) {
        auto& c = out[static_cast<std::size_t>(j - 1)].entries;
        // Constraint indices lambda_j - j - lambda_i + i grow strictly with i.
        for (int i = j + 1; i <= m; ++i) {
            int idx = lambda[j] - j - lambda[i] + i;
            std::vector<Rational> prefix(c.begin(), c.begin() + idx);
            prefix[static_cast<std::size_t>(idx - 1)] = Rational(0);
            c[static_cast<std::size_t>(idx - 1)] = -schur_constant(idx, ShiftVector(std::move(prefix)));
        }
    }
    return out;
}

int free_parameter_count(const Partition& lambda) {
    int count = 0;
    for (const auto& row : constrained_entries(lambda))
        for (bool b : row) count += b ? 0 : 1;
    return count;
}

} // namespace tauforge
