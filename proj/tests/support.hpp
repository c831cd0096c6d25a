#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "kunzsg/engine.hpp"
#include "kunzsg/semigroup.hpp"

namespace testing {

using kunzsg::Int;
using kunzsg::KunzVector;

inline KunzVector kv(int m, std::vector<Int> c) { return KunzVector(m, std::move(c)); }

inline KunzVector of_gens(std::vector<Int> g) { return kunzsg::from_generators(g).kunz(); }

inline std::vector<std::vector<Int>> gens_of(const std::vector<KunzVector>& fs)
{
    std::vector<std::vector<Int>> out;
    for (const auto& f : fs) out.push_back(kunzsg::minimal_generators(f));
    return out;
}

inline std::set<std::vector<KunzVector>> as_sets(const std::vector<kunzsg::Decomposition>& ds)
{
    std::set<std::vector<KunzVector>> out;
    for (auto d : ds) {
        std::sort(d.factors.begin(), d.factors.end());
        out.insert(d.factors);
    }
    return out;
}

}  // namespace testing
