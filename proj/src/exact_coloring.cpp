#include "hexspan/exact_coloring.hpp"

#include <cstddef>

namespace hexspan {

namespace {

class Dsatur {
public:
    Dsatur(const std::vector<std::vector<int>>& adj, int budget, long long node_limit)
        : adj_(adj),
          n_(static_cast<int>(adj.size())),
          budget_(budget),
          node_limit_(node_limit),
          color_(adj.size(), -1),
          seen_(adj.size() * static_cast<std::size_t>(budget > 0 ? budget : 1), 0),
          saturation_(adj.size(), 0),
          free_degree_(adj.size(), 0)
    {
        for (int v = 0; v < n_; ++v)
            free_degree_[static_cast<std::size_t>(v)] = static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
    }

    SolveResult run()
    {
        SolveResult out;
        if (n_ == 0) {
            out.status = SolveStatus::colorable;
            return out;
        }
        if (budget_ <= 0) {
            out.status = SolveStatus::not_colorable;
            return out;
        }
        const int verdict = search(0, 0);
        out.nodes = nodes_;
        if (verdict > 0) {
            out.status = SolveStatus::colorable;
            out.colors = color_;
        } else {
            out.status = verdict == 0 ? SolveStatus::not_colorable : SolveStatus::node_limit;
        }
        return out;
    }

private:
    const std::vector<std::vector<int>>& adj_;
    int n_;
    int budget_;
    long long node_limit_;
    long long nodes_ = 0;
    std::vector<int> color_;
    std::vector<int> seen_;  // seen_[v * budget + c]: neighbours of v with colour c
    std::vector<int> saturation_;
    std::vector<int> free_degree_;

    int& seen(int v, int c) { return seen_[static_cast<std::size_t>(v) * static_cast<std::size_t>(budget_) + static_cast<std::size_t>(c)]; }

    void assign(int v, int c)
    {
        color_[static_cast<std::size_t>(v)] = c;
        for (int w : adj_[static_cast<std::size_t>(v)]) {
            if (seen(w, c)++ == 0)
                ++saturation_[static_cast<std::size_t>(w)];
            --free_degree_[static_cast<std::size_t>(w)];
        }
    }

    void unassign(int v, int c)
    {
        for (int w : adj_[static_cast<std::size_t>(v)]) {
            if (--seen(w, c) == 0)
                --saturation_[static_cast<std::size_t>(w)];
            ++free_degree_[static_cast<std::size_t>(w)];
        }
        color_[static_cast<std::size_t>(v)] = -1;
    }

    int pick() const
    {
        int best = -1;
        for (int v = 0; v < n_; ++v) {
            if (color_[static_cast<std::size_t>(v)] >= 0)
                continue;
            if (best < 0)
                best = v;
            else if (saturation_[static_cast<std::size_t>(v)] > saturation_[static_cast<std::size_t>(best)] ||
                     (saturation_[static_cast<std::size_t>(v)] == saturation_[static_cast<std::size_t>(best)] &&
                      free_degree_[static_cast<std::size_t>(v)] > free_degree_[static_cast<std::size_t>(best)]))
                best = v;
        }
        return best;
    }

    // 1 = coloured, 0 = exhausted, -1 = node limit
    int search(int placed, int used)
    {
        if (placed == n_)
            return 1;
        if (++nodes_ > node_limit_)
            return -1;
        const int v = pick();
        const int top = used < budget_ ? used + 1 : budget_;
        for (int c = 0; c < top; ++c) {
            if (seen(v, c) != 0)
                continue;
            assign(v, c);
            const int verdict = search(placed + 1, c + 1 > used ? c + 1 : used);
            if (verdict != 0)
                return verdict;
            unassign(v, c);
        }
        return 0;
    }
};

} // namespace

SolveResult color_exact(const std::vector<std::vector<int>>& adjacency, int budget, long long node_limit)
{
    return Dsatur(adjacency, budget, node_limit).run();
}

} // namespace hexspan
