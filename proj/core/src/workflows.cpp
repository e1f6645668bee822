#include "torix/workflows.hpp"

#include <cstdio>

#include <json.hpp>

#include "torix/corpus.hpp"
#include "torix/divisors.hpp"
#include "torix/errors.hpp"
#include "torix/intersection.hpp"
#include "torix/io.hpp"
#include "torix/positivity.hpp"

namespace torix {

bool orbit_closures_meet(const Fan& fan, const Cone& a, const Cone& b) {
    const std::uint64_t both = a.mask() | b.mask();
    for (const Cone& m : fan.max_cones())
        if ((both & ~m.mask()) == 0)
            return true;
    return false;
}

namespace {

std::size_t h0_on_orbit(const Fan& fan, const WeilDivisor& l, const Cone& tau) {
    if (fan.dim(tau) == fan.rank())
        return 1;
    Restriction r = restrict_to_orbit(fan, QDivisor(l), tau);
    return lattice_points(polytope(r.star.fan, r.divisor)).size();
}

} // namespace

SurjectivityReport run_surjectivity(const Fan& fan, const WeilDivisor& l, const std::vector<Cone>& targets) {
    if (!is_smooth(fan) || !is_complete(fan))
        throw InputError("surjectivity: the fan must be smooth and complete");
    if (l.size() != fan.ray_count())
        throw InputError("surjectivity: divisor size does not match the fan");
    if (!is_ample(fan, l))
        throw InputError("surjectivity: L = " + l.str() + " is not ample");
    for (const Cone& t : targets)
        if (t.empty() || !fan.contains_cone(t))
            throw InputError("surjectivity: target " + t.str() + " is not a nonzero cone of the fan");
    for (std::size_t i = 0; i < targets.size(); ++i)
        for (std::size_t j = i + 1; j < targets.size(); ++j)
            if (orbit_closures_meet(fan, targets[i], targets[j]))
                throw InputError("surjectivity: targets " + targets[i].str() + " and " + targets[j].str() +
                                 " have meeting orbit closures");

    Fan current = fan;
    std::vector<std::size_t> exceptional;
    for (const Cone& t : targets) {
        if (t.size() == 1) {
            exceptional.push_back(t.rays().front());
            continue;
        }
        Subdivision s = star_subdivision(current, t);
        current = std::move(s.fan);
        exceptional.push_back(s.new_ray);
    }

    WeilDivisor pulled = pullback(fan, QDivisor(l), current).to_weil();
    WeilDivisor twisted = pulled;
    for (std::size_t e : exceptional)
        twisted.coeffs[e] -= 1;

    SurjectivityReport rep{current, exceptional, pulled, twisted, cohomology_table(current, twisted, {Engine::Simplicial}), 0, {}, false};
    rep.h0_l = lattice_points(polytope(fan, QDivisor(l))).size();
    for (const Cone& t : targets)
        rep.h0_targets.push_back(h0_on_orbit(fan, l, t));
    rep.surjective = rep.table.h.size() > 1 && rep.table.h[1] == 0;

    // 0 -> H^0(pi^*L - E) -> H^0(L) -> sum H^0(L|V(tau_i)) -> H^1(pi^*L - E) -> H^1(pi^*L) = 0
    long long lhs = static_cast<long long>(rep.table.h[0]);
    long long rhs = static_cast<long long>(rep.h0_l) + static_cast<long long>(rep.table.h[1]);
    for (std::size_t h : rep.h0_targets)
        rhs -= static_cast<long long>(h);
    if (lhs != rhs)
        throw TheoremViolation("surjectivity: restriction sequence does not balance (h0 " + std::to_string(lhs) +
                               " vs " + std::to_string(rhs) + ")");
    return rep;
}

std::vector<CorpusFile> run_corpus(std::uint64_t seed, std::size_t count, std::size_t dim, std::size_t steps) {
    if (dim < 1 || dim > 4)
        throw InputError("corpus: dimension must be in 1..4");
    std::vector<CorpusFile> out;
    nlohmann::ordered_json manifest;
    manifest["seed"] = seed;
    manifest["count"] = count;
    manifest["dim"] = dim;
    manifest["steps"] = steps;
    manifest["fans"] = nlohmann::ordered_json::array();
    std::size_t k = 0;
    for (const CorpusEntry& e : generate_corpus(seed, count, dim, steps)) {
        char prefix[16];
        std::snprintf(prefix, sizeof prefix, "%03zu", k++);
        std::string path = std::string(prefix) + "-" + e.name + ".json";
        out.push_back({path, emit_fan(e.fan)});
        nlohmann::ordered_json item;
        item["file"] = path;
        item["name"] = e.name;
        item["provenance"] = e.provenance;
        item["rays"] = e.fan.ray_count();
        item["max_cones"] = e.fan.max_cones().size();
        manifest["fans"].push_back(std::move(item));
    }
    out.push_back({"manifest.json", manifest.dump(2) + "\n"});
    return out;
}

} // namespace torix
