#pragma once

#include "gyrobn/manifold.hpp"

#include <string>
#include <vector>

namespace gyrobn {

// JSON-lines batch file: a header object {"descriptor", "count", "seed"}
// followed by one flat row-major real array per point. Numbers are written
// with 17 significant digits so doubles round-trip bit-exactly.
//
// Vector-valued families (euclidean, stereo, klein, radius) may use CSV
// instead: a "# descriptor=...;count=...;seed=..." header line followed by
// comma-separated rows. write_batch/read_batch pick the format from the
// ".csv" extension.
struct BatchFile {
    Descriptor descriptor;
    std::uint64_t seed = 0;
    std::vector<Point> points;
};

std::string format_batch(const BatchFile& batch);
std::string format_batch_csv(const BatchFile& batch);
void write_batch(const std::string& path, const BatchFile& batch);

// Throws if a record fails the descriptor's membership predicate (unless
// validate is false) or does not match the declared shape/count.
BatchFile parse_batch(const std::string& text, bool validate = true);
BatchFile parse_batch_csv(const std::string& text, bool validate = true);
BatchFile read_batch(const std::string& path, bool validate = true);

} // namespace gyrobn
