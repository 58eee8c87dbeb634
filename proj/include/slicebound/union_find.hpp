#pragma once

#include <numeric>
#include <vector>

namespace slicebound {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)), rank_(static_cast<std::size_t>(n), 0), sets_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        --sets_;
        return true;
    }

    int set_count() const { return sets_; }
    int size() const { return static_cast<int>(parent_.size()); }

    // Dense class ids 0..set_count()-1, numbered by smallest member.
    std::vector<int> labels() {
        std::vector<int> root_label(parent_.size(), -1);
        std::vector<int> out(parent_.size());
        int next = 0;
        for (int i = 0; i < size(); ++i) {
            int r = find(i);
            if (root_label[r] < 0) root_label[r] = next++;
            out[i] = root_label[r];
        }
        return out;
    }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
    int sets_;
};

}  // namespace slicebound
