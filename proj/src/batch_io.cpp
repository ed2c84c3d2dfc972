#include "gyrobn/batch_io.hpp"

#include "gyrobn/batchnorm.hpp"
#include "gyrobn/tolerances.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gyrobn {

namespace {

void append_double(std::string& out, double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", v);
    out += buffer;
}

bool is_vector_family(Family f) {
    return f == Family::euclidean || f == Family::stereographic || f == Family::klein ||
           f == Family::radius;
}

bool has_csv_extension(const std::string& path) {
    return path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
}

Point validated_point(std::vector<double>&& flat, const Descriptor& desc, const Manifold& manifold,
                      bool validate, std::size_t index) {
    const auto [rows, cols] = point_shape(desc);
    if (static_cast<Eigen::Index>(flat.size()) != rows * cols)
        throw std::runtime_error("batch file: record size does not match descriptor");
    Point point(rows, cols);
    std::size_t k = 0;
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) point(i, j) = flat[k++];
    if (validate && !manifold.contains(point, tol::membership))
        throw std::runtime_error("batch file: record " + std::to_string(index) +
                                 " fails the membership predicate for " + desc.str());
    return point;
}

} // namespace

std::string format_batch(const BatchFile& batch) {
    nlohmann::json header{{"descriptor", batch.descriptor.str()},
                          {"count", batch.points.size()},
                          {"seed", batch.seed}};
    std::string out = header.dump();
    out += '\n';
    for (const Point& point : batch.points) {
        out += '[';
        bool first = true;
        for (Eigen::Index i = 0; i < point.rows(); ++i) {
            for (Eigen::Index j = 0; j < point.cols(); ++j) {
                if (!first) out += ',';
                append_double(out, point(i, j));
                first = false;
            }
        }
        out += "]\n";
    }
    return out;
}

std::string format_batch_csv(const BatchFile& batch) {
    if (!is_vector_family(batch.descriptor.family))
        throw std::invalid_argument("csv batches are only defined for vector-valued families");
    std::string out = "# descriptor=" + batch.descriptor.str() +
                      ";count=" + std::to_string(batch.points.size()) +
                      ";seed=" + std::to_string(batch.seed) + "\n";
    for (const Point& point : batch.points) {
        for (Eigen::Index i = 0; i < point.rows(); ++i) {
            if (i) out += ',';
            append_double(out, point(i, 0));
        }
        out += '\n';
    }
    return out;
}

void write_batch(const std::string& path, const BatchFile& batch) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_batch: cannot open " + path);
    out << (has_csv_extension(path) ? format_batch_csv(batch) : format_batch(batch));
    if (!out) throw std::runtime_error("write_batch: failed writing " + path);
}

BatchFile parse_batch(const std::string& text, bool validate) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("batch file: missing header");

    const nlohmann::json header = nlohmann::json::parse(line);
    BatchFile batch;
    batch.descriptor = Descriptor::parse(header.at("descriptor").get<std::string>());
    batch.seed = header.at("seed").get<std::uint64_t>();
    const std::size_t count = header.at("count").get<std::size_t>();

    const auto manifold = make_manifold(batch.descriptor);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const nlohmann::json record = nlohmann::json::parse(line);
        if (!record.is_array())
            throw std::runtime_error("batch file: expected a JSON array record");
        batch.points.push_back(validated_point(record.get<std::vector<double>>(),
                                               batch.descriptor, *manifold, validate,
                                               batch.points.size()));
    }
    if (batch.points.size() != count)
        throw std::runtime_error("batch file: header count does not match record count");
    return batch;
}

BatchFile parse_batch_csv(const std::string& text, bool validate) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("# ", 0) != 0)
        throw std::runtime_error("csv batch: missing '# descriptor=...' header");

    BatchFile batch;
    std::size_t count = 0;
    std::stringstream header(line.substr(2));
    std::string field;
    while (std::getline(header, field, ';')) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = field.substr(0, eq);
        const std::string value = field.substr(eq + 1);
        if (key == "descriptor") batch.descriptor = Descriptor::parse(value);
        else if (key == "count") count = std::stoul(value);
        else if (key == "seed") batch.seed = std::stoull(value);
    }
    if (!is_vector_family(batch.descriptor.family))
        throw std::runtime_error("csv batch: descriptor is not a vector-valued family");

    const auto manifold = make_manifold(batch.descriptor);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> flat;
        std::stringstream row(line);
        while (std::getline(row, field, ',')) flat.push_back(std::stod(field));
        batch.points.push_back(validated_point(std::move(flat), batch.descriptor, *manifold,
                                               validate, batch.points.size()));
    }
    if (batch.points.size() != count)
        throw std::runtime_error("csv batch: header count does not match record count");
    return batch;
}

BatchFile read_batch(const std::string& path, bool validate) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_batch: cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return has_csv_extension(path) ? parse_batch_csv(buffer.str(), validate)
                                   : parse_batch(buffer.str(), validate);
}

} // namespace gyrobn
