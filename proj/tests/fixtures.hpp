#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <slicebound/slicebound.hpp>

namespace fixtures {

// Knot Atlas diagrams.
inline constexpr const char* kTrefoilPd = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
inline constexpr const char* kFigureEightPd = "X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]";

inline slicebound::Diagram braid(const char* text) { return slicebound::braid_closure(slicebound::parse_braid(text)); }
inline slicebound::Diagram pd(const char* text) { return slicebound::diagram_from_pd_text(text); }

inline slicebound::Diagram positive_trefoil() { return braid("2: [1,1,1]"); }
inline slicebound::Diagram negative_trefoil() { return slicebound::mirror(positive_trefoil()); }
inline slicebound::Diagram unknot() { return braid("1: []"); }
inline slicebound::Diagram figure_eight() { return pd(kFigureEightPd); }

inline std::vector<slicebound::TableInput> knot_table() {
    std::ifstream in(SLICEBOUND_DATA_DIR "/knot_table.csv");
    return slicebound::read_knot_table(in);
}

/// Braid corpus matching the fuzz suite's distribution.
inline std::vector<slicebound::BraidWord> random_corpus(int count, int strands, int length, std::uint64_t seed) {
    slicebound::FuzzOptions o;
    o.count = count;
    o.max_strands = strands;
    o.max_length = length;
    o.seed = seed;
    return slicebound::fuzz_corpus(o);
}

}  // namespace fixtures
