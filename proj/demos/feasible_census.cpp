// Prints the feasible two-block parameter sets up to a given group order,
// with their special-type tags.

#include <cstdio>
#include <cstdlib>

#include "sds/sds.hpp"

int main(int argc, char** argv) {
    const int v_max = argc > 1 ? std::atoi(argv[1]) : 20;
    const auto sets = sds::enumerate_feasible(v_max);
    for (const sds::ParameterSet& p : sets) {
        const sds::TypeTags tags = sds::classify(p);
        std::printf("%-14s n=%-3d%s%s%s\n", sds::render_params(p).c_str(), p.order(),
                    tags.d_optimal ? " d-optimal" : "",
                    tags.periodic_pair ? " periodic-pair" : "",
                    tags.equal_blocks ? " equal-blocks" : "");
    }
    std::printf("%zu feasible parameter sets with v <= %d\n", sets.size(), v_max);
    return 0;
}
