#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "torix/arith.hpp"

namespace torix {

/// Returns v divided by the gcd of its entries. Throws on the zero vector.
IntVector primitive(std::span<const Int> v);

bool is_primitive(std::span<const Int> v);

/// Rank of a list of integer vectors of length n.
std::size_t span_rank(const std::vector<IntVector>& vectors, std::size_t n);

/// H-description of a rational polyhedral cone:
/// { x : <a, x> >= 0 for a in inequalities, <e, x> = 0 for e in equations }.
struct HalfspaceCone {
    std::size_t ambient = 0;
    std::vector<IntVector> inequalities;
    std::vector<IntVector> equations;

    bool contains(std::span<const Int> x) const;
    bool contains(std::span<const Rational> x) const;
    /// Strictly inside all inequalities (still on the equations).
    bool contains_relative_interior(std::span<const Int> x) const;
};

/// A cone generated by finitely many integer vectors, with its facets and
/// face lattice expressed as subsets of the generators (bitmasks over the
/// generator positions).
struct GeneratedCone {
    std::vector<IntVector> generators;
    std::size_t dim = 0;
    HalfspaceCone halfspaces;
    std::vector<std::uint64_t> facets;
    std::vector<std::uint64_t> faces; // includes the empty face and the cone itself
    bool pointed = false;
    /// Generator i is extreme iff {i} is a face.
    std::vector<bool> extreme;
};

GeneratedCone describe_cone(const std::vector<IntVector>& generators, std::size_t ambient);

/// Primitive extreme rays of a pointed cone given in H-description.
/// Returns an empty list for the zero cone.
std::vector<IntVector> extreme_rays(const HalfspaceCone& cone);

} // namespace torix
