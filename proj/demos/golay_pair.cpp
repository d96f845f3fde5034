// Converts a complementary pair of +/- sequences into a difference family,
// verifies it, and prints the canonical form.

#include <cstdio>

#include "sds/sds.hpp"

int main() {
    sds::SequencePair pair{
        sds::parse_sequence("++-+-+--++"),
        sds::parse_sequence("++-+++++--"),
    };

    sds::Family family = sds::sequences_to_sds(pair);
    sds::VerificationReport report = sds::verify_sds(family);
    std::printf("family:       %s\n", sds::render_family(family).c_str());
    std::printf("parameters:   %s  (n = %d)\n",
                sds::render_params(*report.parameters).c_str(),
                report.parameters->order());

    sds::NormalFormResult nf = sds::normal_form(family);
    std::printf("normal form:  %s\n", sds::render_family(nf.representative).c_str());

    sds::CorrelationProfile sum = sds::pacf_sum(pair);
    std::printf("pacf sum:    ");
    for (long long x : sum.values) std::printf(" %lld", x);
    std::printf("\n");
    return 0;
}
