#include "hexspan/lattice.hpp"

#include "hexspan/errors.hpp"

#include <cstdlib>
#include <utility>

namespace hexspan {

namespace {

int floor_div(int a, int b)
{
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

int floor_mod(int a, int b) { return a - floor_div(a, b) * b; }

int ceil_div(int a, int b) { return -floor_div(-a, b); }

} // namespace

Sublattice Sublattice::from_basis(Translation t1, Translation t2)
{
    // Row reduction on the first coordinate (Euclid on rows).
    long long r1[2] = {t1.di, t1.dj};
    long long r2[2] = {t2.di, t2.dj};
    while (r2[0] != 0) {
        const long long q = r1[0] / r2[0];
        const long long n0 = r1[0] - q * r2[0];
        const long long n1 = r1[1] - q * r2[1];
        r1[0] = r2[0];
        r1[1] = r2[1];
        r2[0] = n0;
        r2[1] = n1;
    }
    if (r1[0] == 0 || r2[1] == 0)
        throw RangeError("basis", "translation vectors are linearly dependent");
    if (r1[0] < 0) {
        r1[0] = -r1[0];
        r1[1] = -r1[1];
    }
    const long long c = std::llabs(r2[1]);
    long long b = r1[1] % c;
    if (b < 0)
        b += c;
    return Sublattice(static_cast<int>(r1[0]), static_cast<int>(b), static_cast<int>(c));
}

Sublattice Sublattice::from_hnf(int a, int b, int c)
{
    if (a <= 0 || c <= 0 || b < 0 || b >= c)
        throw RangeError("basis", "not a Hermite normal form: need a > 0, c > 0, 0 <= b < c");
    return Sublattice(a, b, c);
}

bool Sublattice::contains(Translation t) const
{
    const Vertex r = reduce(Vertex{t.di, t.dj});
    return r.i == 0 && r.j == 0;
}

Vertex Sublattice::reduce(Vertex v) const
{
    const int k = floor_div(v.i, a_);
    const int i = v.i - k * a_;
    const int j = floor_mod(v.j - k * b_, c_);
    return {i, j};
}

std::vector<Vertex> Sublattice::representatives() const
{
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(index()));
    for (int x = 0; x < a_; ++x)
        for (int y = 0; y < c_; ++y)
            out.push_back({x, y});
    return out;
}

std::vector<Translation> Sublattice::vectors_near(Translation offset, int bound) const
{
    std::vector<Translation> out;
    // x * a + offset.di in [-bound, bound]
    const int x_lo = ceil_div(-bound - offset.di, a_);
    const int x_hi = floor_div(bound - offset.di, a_);
    for (int x = x_lo; x <= x_hi; ++x) {
        const int base = x * b_ + offset.dj;
        const int y_lo = ceil_div(-bound - base, c_);
        const int y_hi = floor_div(bound - base, c_);
        for (int y = y_lo; y <= y_hi; ++y)
            out.push_back({x * a_, x * b_ + y * c_});
    }
    return out;
}

std::vector<Sublattice> even_sublattices(int n)
{
    std::vector<Sublattice> out;
    if (n <= 0 || (n & 1))
        return out;
    for (int a = 1; a <= n; ++a) {
        if (n % a)
            continue;
        const int c = n / a;
        if (c & 1)
            continue;
        for (int b = 0; b < c; ++b)
            if (((a + b) & 1) == 0)
                out.push_back(Sublattice::from_hnf(a, b, c));
    }
    return out;
}

} // namespace hexspan
