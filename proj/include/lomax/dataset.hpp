#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace lomax {

/// Bad or unreadable input data (maps to exit status 3 in the CLI).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

enum class DataSource { Embedded, File };

struct Dataset {
    std::string name;
    std::vector<double> values;
    DataSource source = DataSource::Embedded;
};

/// Minority electron mobility for p-type Ga(1-x)Al(x)As at mole fraction
/// 0.25 (21 observations, NIST), in the order they were published.
const Dataset& embedded_dataset();

/// Plain text, one observation per line; '#' starts a comment, blank lines
/// are skipped. Every value must parse completely and be positive.
Dataset parse_dataset(std::istream& in, const std::string& name);
Dataset read_dataset(const std::filesystem::path& path);

/// Writes values one per line in shortest round-trip form.
void write_dataset(std::ostream& out, const std::vector<double>& values);

} // namespace lomax
