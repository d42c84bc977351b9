#pragma once

#include <numeric>
#include <vector>

namespace mpx {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), size_(n, 1), count_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        int root = x;
        while (root != parent_[root]) root = parent_[root];
        while (x != root) {
            int next = parent_[x];
            parent_[x] = root;
            x = next;
        }
        return root;
    }

    void unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return;
        if (size_[ra] < size_[rb]) std::swap(ra, rb);
        parent_[rb] = ra;
        size_[ra] += size_[rb];
        --count_;
    }

    bool connected(int a, int b) { return find(a) == find(b); }
    int count() const { return count_; }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    int count_;
};

}  // namespace mpx
