#pragma once

#include "hexspan/grid.hpp"

#include <vector>

namespace hexspan {

// A full-rank sublattice of Z^2 in Hermite normal form: rows (a, b) and
// (0, c) with a > 0, c > 0 and 0 <= b < c. The index [Z^2 : L] is a * c and
// the fundamental domain is the box [0, a) x [0, c).
class Sublattice {
public:
    // Throws RangeError when the two vectors are linearly dependent.
    static Sublattice from_basis(Translation t1, Translation t2);
    static Sublattice from_hnf(int a, int b, int c);

    int a() const { return a_; }
    int b() const { return b_; }
    int c() const { return c_; }
    Translation t1() const { return {a_, b_}; }
    Translation t2() const { return {0, c_}; }
    int index() const { return a_ * c_; }

    // Both basis vectors have even coordinate sum, so every element is a
    // handedness-preserving translation.
    bool within_even_lattice() const { return ((a_ + b_) & 1) == 0 && (c_ & 1) == 0; }

    bool contains(Translation t) const;

    // Canonical representative of v + L inside the fundamental domain.
    Vertex reduce(Vertex v) const;
    // Position of a canonical representative in representatives().
    int rep_index(Vertex rep) const { return rep.i * c_ + rep.j; }
    std::vector<Vertex> representatives() const;

    // Lattice vectors t with |offset + t| <= bound in both coordinates.
    std::vector<Translation> vectors_near(Translation offset, int bound) const;

    friend bool operator==(const Sublattice&, const Sublattice&) = default;

private:
    Sublattice(int a, int b, int c) : a_(a), b_(b), c_(c) {}

    int a_;
    int b_;
    int c_;
};

// Sublattices of the even lattice with index n, in lexicographic (a, b, c) order.
std::vector<Sublattice> even_sublattices(int n);

} // namespace hexspan
