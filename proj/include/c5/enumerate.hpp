#pragma once

#include <functional>
#include <string>
#include <vector>

#include "c5/graph.hpp"

namespace c5 {

// Exhaustive isomorph-free generation of triangle-free graphs by canonical
// augmentation: each graph is grown by one vertex attached to an
// independent set, extension sets are taken up to Aut of the parent, and a
// child survives only if the new vertex lies in the canonical deletion
// orbit. Visits one representative per isomorphism class on exactly n
// vertices and returns the class count. The visitor streams; nothing is
// stored.
long enumerate_triangle_free(int n, const std::function<void(const Graph&)>& visit);

struct Census {
    int n = 0;
    long total = 0;
    long max_c5 = 0;
    std::vector<std::string> winners;  // canonical graph6, sorted
};

// Full scan of the class list for n, tracking the maximum 5-cycle count
// and every graph achieving it.
Census extremal_c5(int n);

}  // namespace c5
