#pragma once

// Nonempty proper subset S of {1..n} together with its complement, and the
// enumeration order used by every subset search: |S| ascending, then
// lexicographic.

#include <cstdint>
#include <string>
#include <vector>

#include "tensorloc/errors.hpp"

namespace tloc {

class SubsetPartition {
public:
    // members: 1-based indices.
    SubsetPartition(int n, std::vector<int> members) : n_(n), in_s_(n, false) {
        if (n < 2) throw InvalidPartition("partition requires n >= 2");
        for (int i : members) {
            if (i < 1 || i > n) throw InvalidPartition("partition index outside 1..n");
            if (in_s_[i - 1]) throw InvalidPartition("duplicate partition index");
            in_s_[i - 1] = true;
        }
        for (int i = 0; i < n; ++i) (in_s_[i] ? members_ : complement_).push_back(i);
        if (members_.empty() || complement_.empty())
            throw InvalidPartition("S must be nonempty and proper");
    }

    int n() const { return n_; }
    bool contains(int i0) const { return in_s_[i0]; }  // 0-based query
    const std::vector<int>& members() const { return members_; }        // 0-based
    const std::vector<int>& complement() const { return complement_; }  // 0-based

    SubsetPartition complemented() const {
        std::vector<int> comp1;
        for (int i : complement_) comp1.push_back(i + 1);
        return SubsetPartition(n_, comp1);
    }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t k = 0; k < members_.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(members_[k] + 1);
        }
        return s + "}";
    }

private:
    int n_;
    std::vector<bool> in_s_;
    std::vector<int> members_;
    std::vector<int> complement_;
};

// All nonempty proper subsets of {1..n}, |S| ascending then lexicographic.
inline std::vector<SubsetPartition> enumerate_partitions(int n) {
    std::vector<SubsetPartition> out;
    for (int size = 1; size < n; ++size) {
        std::vector<int> pick(size);
        for (int k = 0; k < size; ++k) pick[k] = k + 1;
        while (true) {
            out.emplace_back(n, pick);
            int k = size - 1;
            while (k >= 0 && pick[k] == n - (size - 1 - k)) --k;
            if (k < 0) break;
            ++pick[k];
            for (int j = k + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return out;
}

}  // namespace tloc
