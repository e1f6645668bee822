#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "torix/arith.hpp"
#include "torix/linalg.hpp"
#include "torix/polyhedral.hpp"

namespace torix {

using LatticeVector = IntVector;

/// A cone of a fan, named by the sorted set of its ray indices.
class Cone {
public:
    Cone() = default;
    Cone(std::initializer_list<std::size_t> rays);
    explicit Cone(std::vector<std::size_t> rays);

    const std::vector<std::size_t>& rays() const { return rays_; }
    std::size_t size() const { return rays_.size(); }
    bool empty() const { return rays_.empty(); }
    std::uint64_t mask() const { return mask_; }

    bool contains_ray(std::size_t i) const { return (mask_ >> i) & 1U; }
    bool is_face_of(const Cone& other) const { return (mask_ & ~other.mask_) == 0; }

    friend bool operator==(const Cone& a, const Cone& b) { return a.mask_ == b.mask_; }
    friend std::strong_ordering operator<=>(const Cone& a, const Cone& b) {
        return a.rays_ <=> b.rays_;
    }

    std::string str() const;

private:
    std::vector<std::size_t> rays_;
    std::uint64_t mask_ = 0;
};

Cone cone_from_mask(std::uint64_t mask);

/// Fan in N = Z^n. Immutable after construction: faces of every maximal cone
/// and their H-descriptions are computed eagerly. A Fan may violate the fan
/// axioms; validate_fan() reports violations and Fan::checked() rejects them.
class Fan {
public:
    Fan(std::size_t rank, std::vector<LatticeVector> rays, std::vector<Cone> max_cones);

    /// Constructs and validates; throws InputError (DegenerateFanError for
    /// rays that do not span) listing every diagnostic.
    static Fan checked(std::size_t rank, std::vector<LatticeVector> rays, std::vector<Cone> max_cones);

    std::size_t rank() const { return rank_; }
    std::size_t ray_count() const { return rays_.size(); }
    const std::vector<LatticeVector>& rays() const { return rays_; }
    const LatticeVector& ray(std::size_t i) const { return rays_[i]; }

    const std::vector<Cone>& max_cones() const { return max_cones_; }
    /// Every cone of the fan, including the zero cone, sorted by (dim, rays).
    const std::vector<Cone>& cones() const { return cones_; }

    std::size_t dim(const Cone& c) const;
    bool contains_cone(const Cone& c) const;
    std::vector<std::size_t> max_cones_containing(const Cone& c) const;

    const GeneratedCone& max_cone_geometry(std::size_t i) const { return geometry_[i]; }

    /// Index of some maximal cone containing the point, or npos.
    std::size_t locate(std::span<const Rational> point) const;
    std::size_t locate(std::span<const Int> point) const;

    /// d x n matrix whose rows are the ray generators.
    IntMatrix ray_matrix() const;

    friend bool operator==(const Fan& a, const Fan& b) {
        return a.rank_ == b.rank_ && a.rays_ == b.rays_ && a.max_cones_ == b.max_cones_;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::size_t rank_;
    std::vector<LatticeVector> rays_;
    std::vector<Cone> max_cones_;
    std::vector<Cone> cones_;
    std::vector<std::size_t> cone_dims_;
    std::vector<GeneratedCone> geometry_;
};

struct Wall {
    Cone tau;
    std::size_t sigma1; // index into max_cones()
    std::size_t sigma2;
};

/// One message per violated fan axiom; empty for a valid fan.
std::vector<std::string> validate_fan(const Fan& fan);

bool is_simplicial(const Fan& fan);

/// Lattice index of each maximal cone (1 means its rays extend to a basis).
std::vector<Int> cone_indices(const Fan& fan);
bool is_smooth(const Fan& fan);
bool is_smooth_cone(const Fan& fan, const Cone& c);

bool is_complete(const Fan& fan);

/// Walls in lexicographic order of their ray sets. Throws InputError when
/// some (n-1)-cone does not lie in exactly two maximal cones.
std::vector<Wall> walls(const Fan& fan);

/// Fan of the orbit closure V(tau) in N / N_tau.
struct StarFan {
    Fan fan;
    /// (n - dim tau) x n integer matrix realizing N -> N / N_tau.
    IntMatrix projection;
    /// star ray index -> ray index in the parent fan
    std::vector<std::size_t> parent_ray;
};

StarFan star_fan(const Fan& fan, const Cone& tau);

struct Subdivision {
    Fan fan;
    std::size_t new_ray;
};

/// Star subdivision at the barycentric ray of a smooth cone (toric blow-up
/// of V(sigma)). The new ray is appended after the existing ones.
Subdivision star_subdivision(const Fan& fan, const Cone& sigma);

/// Smooth, complete, with exactly n + 1 rays.
bool is_projective_space(const Fan& fan);

} // namespace torix
