// Deterministic synthetic dataset generators.
//
// The presets reproduce the shape statistics (transaction count, distinct
// items, average width, density profile) of the standard FIMI/SPMF benchmark
// datasets so the harness and tests run self-contained. Point FIM_DATA_DIR
// at a directory of real .dat files to use those instead.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fim/dataset.hpp"

namespace fim::datagen {

// Dense attribute-value data: every row picks exactly one value per
// attribute, so all rows share one width and the item universe is the sum of
// the per-attribute value counts. Dominant values make high-support items.
HorizontalDb make_attribute_db(std::size_t rows, std::span<const int> values_per_attribute,
                               double dominance_lo, double dominance_hi, std::uint64_t seed);

// Sparse market-basket data: row widths ~ Poisson(avg_width), items drawn
// from an exponential popularity profile, so item supports spread over an
// exponential distribution with mean rows*avg_width/n_items.
HorizontalDb make_basket_db(std::size_t rows, std::size_t n_items, double avg_width,
                            std::uint64_t seed);

// Recognized names: chess, mushroom, c20d10k, T10I4D100K, T40I10D100K.
HorizontalDb make_preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace fim::datagen
