#include "hexspan/far_subset.hpp"

#include "hexspan/errors.hpp"

#include <bit>
#include <cstdint>

namespace hexspan {

namespace {

using Word = std::uint64_t;

class Bits {
public:
    explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= Word{1} << (i % 64); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    bool empty() const
    {
        for (Word w : words_)
            if (w)
                return false;
        return true;
    }
    std::size_t count() const
    {
        std::size_t c = 0;
        for (Word w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    // Smallest set position.
    std::size_t first() const
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k])
                return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
        return words_.size() * 64;
    }
    void reset(std::size_t i) { words_[i / 64] &= ~(Word{1} << (i % 64)); }
    Bits intersect(const Bits& other) const
    {
        Bits out(0);
        out.words_.resize(words_.size());
        for (std::size_t k = 0; k < words_.size(); ++k)
            out.words_[k] = words_[k] & other.words_[k];
        return out;
    }

private:
    std::vector<Word> words_;
};

struct Search {
    std::vector<Bits> far;
    std::vector<std::size_t> current;
    std::vector<std::size_t> best;

    void expand(Bits candidates)
    {
        if (candidates.empty()) {
            if (current.size() > best.size())
                best = current;
            return;
        }
        while (!candidates.empty()) {
            if (current.size() + candidates.count() <= best.size())
                return;
            const std::size_t v = candidates.first();
            candidates.reset(v);
            current.push_back(v);
            expand(candidates.intersect(far[v]));
            current.pop_back();
        }
        if (current.size() > best.size())
            best = current;
    }
};

} // namespace

std::vector<std::size_t> max_far_subset(std::span<const Vertex> points, int min_distance)
{
    const std::size_t n = points.size();
    if (n == 0)
        return {};
    Search search;
    search.far.assign(n, Bits(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (distance_closed(points[a], points[b]) >= min_distance) {
                search.far[a].set(b);
                search.far[b].set(a);
            }
    Bits all(n);
    for (std::size_t a = 0; a < n; ++a)
        all.set(a);
    search.expand(all);
    return search.best;
}

std::vector<std::size_t> max_far_subset_exhaustive(std::span<const Vertex> points, int min_distance)
{
    const std::size_t n = points.size();
    if (n > 20)
        throw GuardError("exhaustive subset scan refuses " + std::to_string(n) + " points (limit 20)");
    std::vector<std::uint32_t> far(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && distance_bfs(points[a], points[b]) >= min_distance)
                far[a] |= 1U << b;
    std::uint32_t best = 0;
    int best_size = 0;
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        const int size = std::popcount(mask);
        if (size <= best_size)
            continue;
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            if ((mask >> a) & 1U)
                ok = (mask & ~far[a] & ~(1U << a)) == 0;
        if (ok) {
            best = mask;
            best_size = size;
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < n; ++a)
        if ((best >> a) & 1U)
            out.push_back(a);
    return out;
}

} // namespace hexspan
