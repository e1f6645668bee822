#include "torix/fan.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "torix/errors.hpp"

namespace torix {

Cone::Cone(std::initializer_list<std::size_t> rays) : Cone(std::vector<std::size_t>(rays)) {}

Cone::Cone(std::vector<std::size_t> rays) : rays_(std::move(rays)) {
    std::sort(rays_.begin(), rays_.end());
    rays_.erase(std::unique(rays_.begin(), rays_.end()), rays_.end());
    for (auto r : rays_) {
        if (r >= 64)
            throw InputError("ray index " + std::to_string(r) + " exceeds the supported 64 rays");
        mask_ |= std::uint64_t{1} << r;
    }
}

std::string Cone::str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < rays_.size(); ++i)
        os << (i ? "," : "") << rays_[i];
    os << '}';
    return os.str();
}

Cone cone_from_mask(std::uint64_t mask) {
    std::vector<std::size_t> rays;
    for (std::size_t i = 0; mask; ++i, mask >>= 1)
        if (mask & 1U)
            rays.push_back(i);
    return Cone(std::move(rays));
}

Fan::Fan(std::size_t rank, std::vector<LatticeVector> rays, std::vector<Cone> max_cones)
    : rank_(rank), rays_(std::move(rays)) {
    if (rank_ == 0)
        throw InputError("fan rank must be at least 1");
    if (rays_.size() > 64)
        throw InputError("at most 64 rays are supported");
    for (std::size_t i = 0; i < rays_.size(); ++i)
        if (rays_[i].size() != rank_)
            throw InputError("ray " + std::to_string(i) + " has " + std::to_string(rays_[i].size()) +
                             " coordinates, expected " + std::to_string(rank_));
    for (const auto& c : max_cones)
        for (auto r : c.rays())
            if (r >= rays_.size())
                throw InputError("cone " + c.str() + " references ray " + std::to_string(r) +
                                 " but only " + std::to_string(rays_.size()) + " rays exist");

    std::sort(max_cones.begin(), max_cones.end());
    max_cones.erase(std::unique(max_cones.begin(), max_cones.end()), max_cones.end());
    for (const auto& c : max_cones) {
        bool dominated = std::any_of(max_cones.begin(), max_cones.end(),
                                     [&](const Cone& o) { return !(o == c) && c.is_face_of(o); });
        if (!dominated)
            max_cones_.push_back(c);
    }

    std::set<Cone> all;
    all.insert(Cone{});
    for (const auto& c : max_cones_) {
        std::vector<IntVector> gens;
        for (auto r : c.rays())
            gens.push_back(rays_[r]);
        GeneratedCone g = describe_cone(gens, rank_);
        for (auto local : g.faces) {
            std::vector<std::size_t> face;
            for (std::size_t k = 0; k < c.size(); ++k)
                if ((local >> k) & 1U)
                    face.push_back(c.rays()[k]);
            all.insert(Cone(std::move(face)));
        }
        geometry_.push_back(std::move(g));
    }
    std::vector<std::pair<std::size_t, Cone>> keyed;
    for (const auto& c : all) {
        std::vector<IntVector> gens;
        for (auto r : c.rays())
            gens.push_back(rays_[r]);
        keyed.emplace_back(span_rank(gens, rank_), c);
    }
    std::sort(keyed.begin(), keyed.end());
    for (auto& [d, c] : keyed) {
        cones_.push_back(c);
        cone_dims_.push_back(d);
    }
}

Fan Fan::checked(std::size_t rank, std::vector<LatticeVector> rays, std::vector<Cone> max_cones) {
    Fan fan(rank, std::move(rays), std::move(max_cones));
    auto diags = validate_fan(fan);
    if (diags.empty())
        return fan;
    std::string msg = "invalid fan:";
    bool degenerate = false;
    for (const auto& d : diags) {
        msg += "\n  " + d;
        degenerate |= d.find("degenerate") != std::string::npos;
    }
    if (degenerate)
        throw DegenerateFanError(msg);
    throw InputError(msg);
}

std::size_t Fan::dim(const Cone& c) const {
    for (std::size_t i = 0; i < cones_.size(); ++i)
        if (cones_[i] == c)
            return cone_dims_[i];
    std::vector<IntVector> gens;
    for (auto r : c.rays())
        gens.push_back(rays_[r]);
    return span_rank(gens, rank_);
}

bool Fan::contains_cone(const Cone& c) const {
    return std::find(cones_.begin(), cones_.end(), c) != cones_.end();
}

std::vector<std::size_t> Fan::max_cones_containing(const Cone& c) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < max_cones_.size(); ++i)
        if (c.is_face_of(max_cones_[i]))
            out.push_back(i);
    return out;
}

std::size_t Fan::locate(std::span<const Rational> point) const {
    for (std::size_t i = 0; i < geometry_.size(); ++i)
        if (geometry_[i].halfspaces.contains(point))
            return i;
    return npos;
}

std::size_t Fan::locate(std::span<const Int> point) const {
    for (std::size_t i = 0; i < geometry_.size(); ++i)
        if (geometry_[i].halfspaces.contains(point))
            return i;
    return npos;
}

IntMatrix Fan::ray_matrix() const {
    IntMatrix m(rays_.size(), rank_);
    for (std::size_t i = 0; i < rays_.size(); ++i)
        for (std::size_t j = 0; j < rank_; ++j)
            m(i, j) = rays_[i][j];
    return m;
}

std::vector<std::string> validate_fan(const Fan& fan) {
    std::vector<std::string> diags;
    const auto& rays = fan.rays();
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (!is_primitive(rays[i]))
            diags.push_back("ray " + std::to_string(i) + " not primitive");
        for (std::size_t j = 0; j < i; ++j)
            if (rays[i] == rays[j])
                diags.push_back("rays " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
    }
    std::size_t span = span_rank(rays, fan.rank());
    if (span < fan.rank())
        diags.push_back("degenerate fan: rays span a space of dimension " + std::to_string(span) +
                        " < " + std::to_string(fan.rank()) + "; quotient by their span first");

    const auto& mc = fan.max_cones();
    for (std::size_t i = 0; i < mc.size(); ++i) {
        const auto& g = fan.max_cone_geometry(i);
        if (!g.pointed)
            diags.push_back("cone " + mc[i].str() + " not strongly convex");
        for (std::size_t k = 0; k < mc[i].size(); ++k)
            if (g.pointed && !g.extreme[k])
                diags.push_back("ray " + std::to_string(mc[i].rays()[k]) + " of cone " + mc[i].str() +
                                " is not an extreme ray");
    }
    for (std::size_t i = 0; i < mc.size(); ++i)
        for (std::size_t j = i + 1; j < mc.size(); ++j) {
            const auto& gi = fan.max_cone_geometry(i);
            const auto& gj = fan.max_cone_geometry(j);
            if (!gi.pointed || !gj.pointed)
                continue;
            std::uint64_t common = mc[i].mask() & mc[j].mask();
            Cone shared = cone_from_mask(common);
            bool ok = true;
            // the shared ray set must be a face of both cones
            for (std::size_t side = 0; side < 2 && ok; ++side) {
                const Cone& c = side ? mc[j] : mc[i];
                const auto& g = side ? gj : gi;
                std::uint64_t local = 0;
                for (std::size_t k = 0; k < c.size(); ++k)
                    if (shared.contains_ray(c.rays()[k]))
                        local |= std::uint64_t{1} << k;
                ok = std::find(g.faces.begin(), g.faces.end(), local) != g.faces.end();
            }
            // and the geometric intersection must be generated by it
            if (ok) {
                HalfspaceCone meet = gi.halfspaces;
                meet.inequalities.insert(meet.inequalities.end(), gj.halfspaces.inequalities.begin(),
                                         gj.halfspaces.inequalities.end());
                meet.equations.insert(meet.equations.end(), gj.halfspaces.equations.begin(),
                                      gj.halfspaces.equations.end());
                for (const auto& r : extreme_rays(meet)) {
                    bool known = false;
                    for (auto s : shared.rays())
                        known |= rays[s] == r;
                    if (!known) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok)
                diags.push_back("cones " + mc[i].str() + " and " + mc[j].str() +
                                " intersect in a set that is not a common face");
        }
    return diags;
}

bool is_simplicial(const Fan& fan) {
    for (const auto& c : fan.max_cones())
        if (fan.dim(c) != c.size())
            return false;
    return true;
}

namespace {

Int lattice_index(const Fan& fan, const Cone& c) {
    if (c.empty())
        return 1;
    IntMatrix m(c.size(), fan.rank());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < fan.rank(); ++j)
            m(i, j) = fan.ray(c.rays()[i])[j];
    SmithForm sf = smith(m);
    Int idx = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        Int s = i < sf.invariants.size() ? sf.invariants[i] : 0;
        if (s == 0)
            return 0;
        idx = checked_mul(idx, s);
    }
    return idx;
}

} // namespace

std::vector<Int> cone_indices(const Fan& fan) {
    std::vector<Int> out;
    for (const auto& c : fan.max_cones())
        out.push_back(lattice_index(fan, c));
    return out;
}

bool is_smooth_cone(const Fan& fan, const Cone& c) { return lattice_index(fan, c) == 1; }

bool is_smooth(const Fan& fan) {
    auto idx = cone_indices(fan);
    return std::all_of(idx.begin(), idx.end(), [](Int i) { return i == 1; });
}

bool is_complete(const Fan& fan) {
    const std::size_t n = fan.rank();
    const auto& mc = fan.max_cones();
    if (mc.empty())
        return false;
    for (const auto& c : mc)
        if (fan.dim(c) != n)
            return false;
    // every codimension-one cone in exactly two maximal cones
    std::vector<std::vector<std::size_t>> adjacency(mc.size());
    for (const auto& c : fan.cones()) {
        if (fan.dim(c) != n - 1)
            continue;
        auto owners = fan.max_cones_containing(c);
        if (owners.size() != 2)
            return false;
        adjacency[owners[0]].push_back(owners[1]);
        adjacency[owners[1]].push_back(owners[0]);
    }
    std::vector<bool> seen(mc.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : adjacency[v])
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != mc.size())
        return false;
    // randomized cross-check: every sampled point lies in some maximal cone
    std::mt19937_64 rng(0x746f726978ULL);
    IntVector p(n);
    for (int s = 0; s < 1000; ++s) {
        for (auto& x : p)
            x = static_cast<Int>(rng() % 2001) - 1000;
        if (fan.locate(std::span<const Int>(p)) == Fan::npos)
            return false;
    }
    return true;
}

std::vector<Wall> walls(const Fan& fan) {
    std::vector<Wall> out;
    const std::size_t n = fan.rank();
    for (const auto& c : fan.cones()) {
        if (fan.dim(c) != n - 1)
            continue;
        auto owners = fan.max_cones_containing(c);
        if (owners.size() != 2)
            throw InputError("fan not complete: cone " + c.str() + " lies in " +
                             std::to_string(owners.size()) + " maximal cones");
        out.push_back(Wall{c, owners[0], owners[1]});
    }
    return out;
}

StarFan star_fan(const Fan& fan, const Cone& tau) {
    if (!fan.contains_cone(tau))
        throw InputError("cone " + tau.str() + " is not in the fan");
    const std::size_t n = fan.rank();
    const std::size_t k = fan.dim(tau);
    if (k >= n)
        throw InputError("star fan of a full-dimensional cone is a point");

    IntMatrix cols(n, tau.size());
    for (std::size_t j = 0; j < tau.size(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            cols(i, j) = fan.ray(tau.rays()[j])[i];
    HermiteForm hf = row_hermite(cols);
    IntMatrix proj(n - k, n);
    for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            proj(i - k, j) = hf.transform(i, j);

    std::vector<std::size_t> owners = fan.max_cones_containing(tau);
    std::uint64_t star_mask = 0;
    for (auto o : owners)
        star_mask |= fan.max_cones()[o].mask();
    star_mask &= ~tau.mask();

    std::vector<std::size_t> parent;
    std::map<std::size_t, std::size_t> index_of;
    std::vector<LatticeVector> rays;
    for (std::size_t r = 0; r < fan.ray_count(); ++r) {
        if (!((star_mask >> r) & 1U))
            continue;
        index_of[r] = parent.size();
        parent.push_back(r);
        rays.push_back(primitive(multiply(proj, fan.ray(r))));
    }
    std::vector<Cone> cones;
    for (auto o : owners) {
        std::vector<std::size_t> idx;
        for (auto r : fan.max_cones()[o].rays())
            if (!tau.contains_ray(r))
                idx.push_back(index_of.at(r));
        cones.emplace_back(std::move(idx));
    }
    return StarFan{Fan(n - k, std::move(rays), std::move(cones)), std::move(proj), std::move(parent)};
}

Subdivision star_subdivision(const Fan& fan, const Cone& sigma) {
    if (!fan.contains_cone(sigma))
        throw InputError("cone " + sigma.str() + " is not in the fan");
    if (fan.dim(sigma) < 2)
        throw InputError("star subdivision needs a cone of dimension >= 2");
    if (!is_smooth_cone(fan, sigma))
        throw InputError("cone " + sigma.str() + " is not smooth");
    for (auto o : fan.max_cones_containing(sigma))
        if (!is_smooth_cone(fan, fan.max_cones()[o]))
            throw InputError("maximal cone " + fan.max_cones()[o].str() + " containing " + sigma.str() +
                             " is not smooth");

    IntVector sum(fan.rank(), 0);
    for (auto r : sigma.rays())
        for (std::size_t j = 0; j < fan.rank(); ++j)
            sum[j] = checked_add(sum[j], fan.ray(r)[j]);
    std::vector<LatticeVector> rays = fan.rays();
    const std::size_t fresh = rays.size();
    rays.push_back(primitive(sum));

    std::vector<Cone> cones;
    for (const auto& c : fan.max_cones()) {
        if (!sigma.is_face_of(c)) {
            cones.push_back(c);
            continue;
        }
        for (auto drop : sigma.rays()) {
            std::vector<std::size_t> idx;
            for (auto r : c.rays())
                if (r != drop)
                    idx.push_back(r);
            idx.push_back(fresh);
            cones.emplace_back(std::move(idx));
        }
    }
    return Subdivision{Fan(fan.rank(), std::move(rays), std::move(cones)), fresh};
}

bool is_projective_space(const Fan& fan) {
    return fan.ray_count() == fan.rank() + 1 && is_smooth(fan) && is_complete(fan);
}

} // namespace torix
